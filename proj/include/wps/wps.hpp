#pragma once

// Exact combinatorial invariants of weighted projective spaces and stacks:
// weight normalization, toric fans, divisor class and Picard groups, twisted
// sheaf cohomology dimensions, and the two-row Cech double complex whose
// E2^{0,1} page carries the Zariski-locally trivial Brauer classes.

#include "wps/abelian.hpp"
#include "wps/cech.hpp"
#include "wps/cohomology.hpp"
#include "wps/divisors.hpp"
#include "wps/fan.hpp"
#include "wps/homology.hpp"
#include "wps/int_matrix.hpp"
#include "wps/int_types.hpp"
#include "wps/linear_solve.hpp"
#include "wps/report.hpp"
#include "wps/smith.hpp"
#include "wps/sweep.hpp"
#include "wps/weights.hpp"
