#pragma once

// Exact invariants of the Jacobian syzygy module of a reduced plane curve
// over the rationals: freeness and plus-one-generated classification,
// graded module tables, addition-deletion analysis along a line, and local
// singularity invariants.

#include "syzcurve/analysis.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/families.hpp"
#include "syzcurve/graded.hpp"
#include "syzcurve/incidence.hpp"
#include "syzcurve/local.hpp"
#include "syzcurve/matrix.hpp"
#include "syzcurve/modular.hpp"
#include "syzcurve/parallel.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/poly.hpp"
#include "syzcurve/rational.hpp"
#include "syzcurve/rng.hpp"
#include "syzcurve/syzygy.hpp"
#include "syzcurve/theorems.hpp"
#include "syzcurve/version.hpp"
