#include "pathideal/alexander.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathideal {

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("alexander_dual: zero ideal");
    if (!ideal.is_squarefree())
        throw std::invalid_argument("alexander_dual: ideal is not squarefree");
    CoverFamily covers = minimal_covers(support_complex(ideal));
    std::vector<Monomial> gens;
    gens.reserve(covers.covers.size());
    for (const auto& c : covers.covers) gens.push_back(c.monomial());
    return MonomialIdeal::from_generators(ideal.ambient(), std::move(gens));
}

long long deg_max(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("deg_max: zero ideal");
    return ideal.max_generator_degree();
}

long long deg_formula_value(int n, int t) {
    int p = n / (t + 1), q = n % (t + 1);
    return q == t ? 2 * p + 1 : 2 * p;
}

bool verify_deg_formula(int n, int t) {
    if (t < 1 || t > n) throw std::invalid_argument("verify_deg_formula: need 1 <= t <= n");
    return deg_max(alexander_dual(path_ideal(n, t))) == deg_formula_value(n, t);
}

}  // namespace pathideal
