#pragma once
// umbrella header

#include "decimal.hpp"
#include "interval.hpp"
#include "mobius.hpp"
#include "qsqrt2.hpp"
#include "quadext.hpp"
#include "rational.hpp"
#include "real.hpp"
#include "romik.hpp"
#include "spectra.hpp"
#include "triples.hpp"
#include "gaps.hpp"
#include "hallray.hpp"
#include "hausdim.hpp"
#include "circle.hpp"
#include "expr.hpp"
#include "report.hpp"
#include "acceptance.hpp"
