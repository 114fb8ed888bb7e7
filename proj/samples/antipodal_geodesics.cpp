// Walks every geodesic between the two boundary matchings of K_8 and
// checks the total against the closed form.

#include <iostream>

#include "matchgeo/matchgeo.hpp"

int main() {
  using namespace matchgeo;
  const auto [from, to] = boundary_pair(4);
  std::cout << "from " << format_literal(from) << "\nto   " << format_literal(to) << "\n";
  std::cout << "distance " << distance(from, to) << "\n";

  const auto paths = enumerate_geodesics(from, to);
  for (const auto& path : paths) {
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
      std::cout << (i ? " > " : "  ") << format_literal(path.steps[i]);
    }
    std::cout << "\n";
  }
  std::cout << paths.size() << " geodesics, closed form "
            << to_decimal(geodesic_count(from, to)) << "\n";
  return paths.size() == geodesic_count(from, to) ? 0 : 1;
}
