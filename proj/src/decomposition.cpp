#include "pathideal/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "pathideal/alexander.hpp"

namespace pathideal {

namespace {

std::string ideal_key(const MonomialIdeal& ideal) {
    std::string key;
    key.reserve(ideal.generators().size() * static_cast<size_t>(ideal.ambient() + 1));
    // one byte per exponent below 254; larger ones as 254 plus four raw
    // bytes; 255 only ever terminates a row
    for (const auto& g : ideal.generators()) {
        for (int e : g.exponents()) {
            unsigned v = static_cast<unsigned>(e);
            if (v < 254) {
                key.push_back(static_cast<char>(v));
            } else {
                key.push_back(static_cast<char>(254));
                for (int shift = 0; shift < 32; shift += 8)
                    key.push_back(static_cast<char>((v >> shift) & 0xffu));
            }
        }
        key.push_back(static_cast<char>(255));
    }
    return key;
}

bool all_pure_powers(const MonomialIdeal& ideal) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [](const Monomial& g) { return g.is_pure_power(); });
}

void decompose_all(const MonomialIdeal& root, std::vector<MonomialIdeal>& leaves) {
    std::unordered_set<std::string> visited;
    std::vector<MonomialIdeal> work = {root};
    while (!work.empty()) {
        MonomialIdeal cur = std::move(work.back());
        work.pop_back();
        if (!visited.insert(ideal_key(cur)).second) continue;
        if (all_pure_powers(cur)) {
            leaves.push_back(std::move(cur));
            continue;
        }
        // first mixed generator in the fixed order, split at its lowest variable
        const Monomial* pivot = nullptr;
        for (const auto& g : cur.generators())
            if (!g.is_pure_power()) {
                pivot = &g;
                break;
            }
        int var = pivot->support().front();
        Monomial u = Monomial::variable(cur.ambient(), var, pivot->exponent(var));
        Monomial v = pivot->colon_by(u);
        std::vector<Monomial> with_u = cur.generators();
        with_u.push_back(std::move(u));
        std::vector<Monomial> with_v = cur.generators();
        with_v.push_back(std::move(v));
        work.push_back(MonomialIdeal::from_generators(cur.ambient(), std::move(with_u)));
        work.push_back(MonomialIdeal::from_generators(cur.ambient(), std::move(with_v)));
    }
}

// Exponent bound vector of an irreducible (pure-power) ideal: entry 0 means
// the variable is unconstrained.
std::vector<int> power_profile(const MonomialIdeal& component) {
    std::vector<int> profile(static_cast<size_t>(component.ambient()), 0);
    for (const auto& g : component.generators()) {
        int var = g.support().front();
        profile[static_cast<size_t>(var - 1)] = g.exponent(var);
    }
    return profile;
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("irreducible_decomposition: zero ideal");
    if (ideal.is_unit()) throw std::invalid_argument("irreducible_decomposition: unit ideal");

    std::vector<MonomialIdeal> leaves;
    decompose_all(ideal, leaves);

    // dedup; order components by their generator lists in the fixed order
    std::sort(leaves.begin(), leaves.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        const auto& ga = a.generators();
        const auto& gb = b.generators();
        for (size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
            if (ga[i] != gb[i]) return canonical_less(ga[i], gb[i]);
        }
        return ga.size() < gb.size();
    });
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

    // Irredundancy: Q_i is superfluous iff the intersection of the others
    // sits inside Q_i. Tested with the componentwise-maximal monomial
    // outside Q_i (exponent a_k - 1 on the support, unbounded elsewhere):
    // Q_i stays exactly when that witness lies in every other component.
    std::vector<std::vector<int>> profiles;
    profiles.reserve(leaves.size());
    for (const auto& q : leaves) profiles.push_back(power_profile(q));
    const int big = 1 << 28;
    std::vector<char> active(leaves.size(), 1);
    auto witness_in = [&](const std::vector<int>& witness, const std::vector<int>& profile) {
        for (size_t k = 0; k < witness.size(); ++k)
            if (profile[k] > 0 && witness[k] >= profile[k]) return true;
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < leaves.size(); ++i) {
            if (!active[i]) continue;
            std::vector<int> witness(profiles[i].size());
            for (size_t k = 0; k < witness.size(); ++k)
                witness[k] = profiles[i][k] > 0 ? profiles[i][k] - 1 : big;
            bool redundant = false;
            for (size_t j = 0; j < leaves.size() && !redundant; ++j) {
                if (j == i || !active[j]) continue;
                if (!witness_in(witness, profiles[j])) redundant = true;
            }
            if (redundant) {
                active[i] = 0;
                changed = true;
            }
        }
    }
    std::vector<MonomialIdeal> out;
    for (size_t i = 0; i < leaves.size(); ++i)
        if (active[i]) out.push_back(leaves[i]);
    return out;
}

CoverFamily associated_primes(const MonomialIdeal& ideal) {
    std::vector<std::vector<int>> supports;
    for (const auto& q : irreducible_decomposition(ideal)) supports.push_back(q.support());
    return make_cover_family(ideal.ambient(), std::move(supports));
}

bool verify_ntf(int n, int t, int s_max) {
    if (t < 1 || t > n || s_max < 1)
        throw std::invalid_argument("verify_ntf: need 1 <= t <= n and s_max >= 1");
    MonomialIdeal ideal = path_ideal(n, t);
    CoverFamily base = associated_primes(ideal);
    if (!(base == cnt_family(n, t))) return false;
    MonomialIdeal dual = alexander_dual(ideal);
    CoverFamily dual_base = associated_primes(dual);
    for (int s = 2; s <= s_max; ++s) {
        if (!(associated_primes(power(ideal, s)) == base)) return false;
        if (!(associated_primes(power(dual, s)) == dual_base)) return false;
    }
    return true;
}

BigInt local_length(const MonomialIdeal& ideal, const PrimeSupport& prime) {
    if (prime.ambient != ideal.ambient())
        throw std::invalid_argument("local_length: ambient mismatch");
    if (prime.members.empty()) throw std::invalid_argument("local_length: empty prime support");
    std::vector<Monomial> substituted;
    substituted.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        substituted.push_back(g.substituted_outside(prime.members));
    MonomialIdeal localized =
        MonomialIdeal::from_generators(ideal.ambient(), std::move(substituted));
    if (localized.is_unit() || localized.is_zero())
        throw std::invalid_argument("local_length: support is not a minimal prime of the ideal");
    // Artinian on the prime's variables: every variable needs a pure power.
    std::vector<int> bound(static_cast<size_t>(ideal.ambient()), 0);
    for (const auto& g : localized.generators())
        if (g.is_pure_power()) {
            int var = g.support().front();
            bound[static_cast<size_t>(var - 1)] = g.exponent(var);
        }
    for (int v : prime.members)
        if (bound[static_cast<size_t>(v - 1)] == 0)
            throw std::invalid_argument(
                "local_length: support is not a minimal prime of the ideal");

    // Count monomials outside the localized ideal by lattice walk; every
    // standard monomial has exponents below the pure-power bounds.
    // Membership is tested against degree buckets: a generator of the same
    // total degree can only divide by being equal, which a hash answers,
    // and only the (small) lower-degree buckets need divisibility scans.
    std::map<long long, std::vector<Monomial>> lower_buckets;
    std::unordered_set<Monomial, MonomialHash> generator_set;
    for (const auto& g : localized.generators()) {
        lower_buckets[g.degree()].push_back(g);
        generator_set.insert(g);
    }
    auto member = [&](const Monomial& m) {
        if (generator_set.count(m)) return true;
        long long dm = m.degree();
        for (const auto& [d, bucket] : lower_buckets) {
            if (d >= dm) break;
            for (const auto& g : bucket)
                if (divides(g, m)) return true;
        }
        return false;
    };
    std::unordered_set<Monomial, MonomialHash> seen;
    std::queue<Monomial> frontier;
    Monomial unit(ideal.ambient());
    if (member(unit)) return 0;
    seen.insert(unit);
    frontier.push(unit);
    BigInt count = 0;
    while (!frontier.empty()) {
        Monomial cur = frontier.front();
        frontier.pop();
        ++count;
        for (int v : prime.members) {
            if (cur.exponent(v) + 1 >= bound[static_cast<size_t>(v - 1)]) continue;
            Monomial next = cur * Monomial::variable(ideal.ambient(), v);
            if (member(next)) continue;
            if (seen.insert(next).second) frontier.push(next);
        }
    }
    return count;
}

}  // namespace pathideal
