#pragma once

// Umbrella header for the acoci library.

#include "acoci/beams.hpp"
#include "acoci/benchmarks.hpp"
#include "acoci/harness.hpp"
#include "acoci/penalty.hpp"
#include "acoci/report.hpp"
#include "acoci/solver.hpp"
#include "acoci/types.hpp"
