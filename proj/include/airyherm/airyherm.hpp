#pragma once

// Umbrella header: exact rational series engine, Hermite and Gould-Hopper
// polynomial families, Airy-type kernel quadrature, and the PDE-level
// verification suites.

#include "airyherm/rational.hpp"
#include "airyherm/series.hpp"
#include "airyherm/polynomial.hpp"
#include "airyherm/hermite.hpp"
#include "airyherm/lacunary.hpp"
#include "airyherm/quadrature.hpp"
#include "airyherm/gamma.hpp"
#include "airyherm/kernels.hpp"
#include "airyherm/pde.hpp"
#include "airyherm/report.hpp"
#include "airyherm/suites.hpp"
