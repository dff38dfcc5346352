#include "pathideal/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pathideal {

PrimeSupport::PrimeSupport(int ambient_in, std::vector<int> members_in)
    : ambient(ambient_in), members(std::move(members_in)) {
    if (ambient <= 0) throw std::invalid_argument("PrimeSupport: ambient must be positive");
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 1 || members[i] > ambient)
            throw std::invalid_argument("PrimeSupport: index out of range");
        if (i > 0 && members[i] <= members[i - 1])
            throw std::invalid_argument("PrimeSupport: members must be strictly increasing");
    }
}

bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
}

std::string PrimeSupport::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) os << ",";
        os << members[i];
    }
    os << "]";
    return os.str();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    if (gens.empty()) return gens;
    for (const auto& g : gens) check_same_ambient(g, gens.front());
    // Sort by degree so that divisors precede multiples, dedup, then keep a
    // generator only if no kept generator of strictly smaller degree divides
    // it (equal-degree monomials never divide each other unless equal).
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return canonical_less(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    std::vector<size_t> degree_start;  // index in kept where each degree block begins
    kept.reserve(gens.size());
    long long current_degree = -1;
    size_t lower_end = 0;  // kept generators with degree < current_degree
    for (const auto& g : gens) {
        if (g.degree() != current_degree) {
            current_degree = g.degree();
            lower_end = kept.size();
        }
        bool dominated = false;
        for (size_t i = 0; i < lower_end && !dominated; ++i)
            if (divides(kept[i], g)) dominated = true;
        if (!dominated) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return kept;
}

MonomialIdeal::MonomialIdeal(int ambient, std::vector<Monomial> minimal_sorted_gens)
    : ambient_(ambient), gens_(std::move(minimal_sorted_gens)) {}

MonomialIdeal MonomialIdeal::zero(int ambient) {
    if (ambient <= 0) throw std::invalid_argument("MonomialIdeal: ambient must be positive");
    return MonomialIdeal(ambient, {});
}

MonomialIdeal MonomialIdeal::unit_ideal(int ambient) {
    return MonomialIdeal(ambient, {Monomial::unit(ambient)});
}

MonomialIdeal MonomialIdeal::from_generators(int ambient, std::vector<Monomial> gens) {
    if (ambient <= 0) throw std::invalid_argument("MonomialIdeal: ambient must be positive");
    for (const auto& g : gens)
        if (g.ambient() != ambient)
            throw std::invalid_argument("ambient mismatch: " + std::to_string(g.ambient()) +
                                        " vs " + std::to_string(ambient));
    return MonomialIdeal(ambient, minimalize(std::move(gens)));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

long long MonomialIdeal::max_generator_degree() const {
    long long d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.ambient() != ambient_)
        throw std::invalid_argument("ambient mismatch: " + std::to_string(m.ambient()) + " vs " +
                                    std::to_string(ambient_));
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

std::vector<int> MonomialIdeal::support() const {
    std::set<int> s;
    for (const auto& g : gens_)
        for (int i : g.support()) s.insert(i);
    return {s.begin(), s.end()};
}

MonomialIdeal MonomialIdeal::radical() const {
    std::vector<Monomial> parts;
    parts.reserve(gens_.size());
    for (const auto& g : gens_) parts.push_back(g.squarefree_part());
    return from_generators(ambient_, std::move(parts));
}

MonomialIdeal MonomialIdeal::extended(int new_ambient) const {
    if (new_ambient < ambient_)
        throw std::invalid_argument("MonomialIdeal::extended: ambient can only grow");
    if (new_ambient == ambient_) return *this;
    std::vector<Monomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) {
        std::vector<int> e = g.exponents();
        e.resize(static_cast<size_t>(new_ambient), 0);
        gens.emplace_back(std::move(e));
    }
    // Minimality is preserved by padding zeros.
    return MonomialIdeal(new_ambient, std::move(gens));
}

std::string MonomialIdeal::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << "]";
    return os.str();
}

MonomialIdeal MonomialIdeal::parse(const std::string& text, int ambient) {
    size_t first = text.find_first_not_of(" \t\n\r");
    size_t last = text.find_last_not_of(" \t\n\r");
    if (first == std::string::npos || text[first] != '[' || text[last] != ']')
        throw std::invalid_argument("MonomialIdeal::parse: expected bracketed list");
    std::string body = text.substr(first + 1, last - first - 1);
    std::vector<Monomial> gens;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? body.size() - pos
                                                                        : comma - pos);
        if (piece.find_first_not_of(" \t\n\r") != std::string::npos)
            gens.push_back(Monomial::parse(piece, ambient));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_generators(ambient, std::move(gens));
}

namespace {

void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                                    std::to_string(b.ambient()));
}

}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ambient(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::from_generators(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ambient(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ambient());
    std::unordered_set<Monomial, MonomialHash> seen;
    seen.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) seen.insert(g * h);
    std::vector<Monomial> gens(seen.begin(), seen.end());
    return MonomialIdeal::from_generators(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("power: negative exponent");
    if (exponent == 0) return MonomialIdeal::unit_ideal(base.ambient());
    MonomialIdeal acc = base;
    for (int i = 1; i < exponent; ++i) acc = product(acc, base);
    return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ambient(a, b);
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ambient());
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) seen.insert(lcm(g, h));
    std::vector<Monomial> gens(seen.begin(), seen.end());
    return MonomialIdeal::from_generators(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& divisor) {
    if (divisor.ambient() != ideal.ambient())
        throw std::invalid_argument("ambient mismatch: " + std::to_string(divisor.ambient()) +
                                    " vs " + std::to_string(ideal.ambient()));
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.colon_by(divisor));
    return MonomialIdeal::from_generators(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
    check_same_ambient(ideal, divisor);
    if (divisor.is_zero()) throw std::invalid_argument("colon: divisor is the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(ideal.ambient());
    for (const auto& g : divisor.generators()) {
        MonomialIdeal piece = colon(ideal, g);
        acc = first ? piece : intersect(acc, piece);
        first = false;
    }
    return acc;
}

}  // namespace pathideal
