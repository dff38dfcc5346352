#pragma once

#include "pathideal/covers.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

// Alexander dual of a nonzero squarefree ideal: generated by x_C over the
// minimal vertex covers C of the complex whose facets are the generator
// supports. An involution on squarefree ideals.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// Maximum total degree among the minimal generators; ideal must be nonzero.
long long deg_max(const MonomialIdeal& ideal);

// Checks deg_max(alexander_dual(path_ideal(n,t))) against the closed form
// 2p (q < t) / 2p+1 (q = t) for n = (t+1)p + q, 0 <= q <= t.
bool verify_deg_formula(int n, int t);
// The closed-form value itself.
long long deg_formula_value(int n, int t);

}  // namespace pathideal
