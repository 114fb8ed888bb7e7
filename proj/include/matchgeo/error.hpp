#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchgeo {

enum class ErrorKind {
  DuplicateVertex,
  VertexOutOfRange,
  WrongEdgeCount,
  MixedSizes,
  EdgeAlreadyPresent,
  SharedVertex,
  NotNonCrossing,
  ResourceLimit,
  CapExceeded,
  InvalidArgument,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::MixedSizes: return "MixedSizes";
    case ErrorKind::EdgeAlreadyPresent: return "EdgeAlreadyPresent";
    case ErrorKind::SharedVertex: return "SharedVertex";
    case ErrorKind::NotNonCrossing: return "NotNonCrossing";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI,
// tests) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matchgeo
