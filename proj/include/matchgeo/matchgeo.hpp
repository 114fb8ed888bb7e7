#pragma once

#include "matchgeo/count.hpp"
#include "matchgeo/error.hpp"
#include "matchgeo/geodesics.hpp"
#include "matchgeo/graph.hpp"
#include "matchgeo/literal.hpp"
#include "matchgeo/matching.hpp"
#include "matchgeo/metric.hpp"
#include "matchgeo/noncrossing.hpp"
