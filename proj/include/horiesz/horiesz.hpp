#pragma once
// Umbrella header.

#include "horiesz/core.hpp"
#include "horiesz/ops.hpp"
#include "horiesz/parallel.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/quadrature.hpp"
#include "horiesz/report.hpp"
#include "horiesz/riesz.hpp"
#include "horiesz/sequence.hpp"
#include "horiesz/transform.hpp"
#include "horiesz/trig_poly.hpp"
#include "horiesz/verify.hpp"
