#pragma once

#include <string>
#include <vector>

#include "pathideal/monomial.hpp"

namespace pathideal {

// Sorted subset F of [n] standing for the monomial prime (x_i : i in F).
struct PrimeSupport {
    int ambient = 0;
    std::vector<int> members;  // strictly increasing, 1-based

    PrimeSupport() = default;
    PrimeSupport(int ambient, std::vector<int> members);

    int size() const { return static_cast<int>(members.size()); }
    Monomial monomial() const { return Monomial::from_support(ambient, members); }
    std::string str() const;  // "[1,3]"

    friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
        return a.ambient == b.ambient && a.members == b.members;
    }
    friend bool operator!=(const PrimeSupport& a, const PrimeSupport& b) { return !(a == b); }
    // Sorted by cardinality, then lexicographically by members.
    friend bool operator<(const PrimeSupport& a, const PrimeSupport& b);
};

// Monomial ideal held by its unique minimal generating set, kept sorted in
// the fixed canonical order. Empty generator list encodes the zero ideal.
// Immutable after construction; all operations are pure.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int ambient);
    static MonomialIdeal unit_ideal(int ambient);
    // Minimalizes: drops duplicates and any generator divisible by another.
    static MonomialIdeal from_generators(int ambient, std::vector<Monomial> gens);
    // Parses "[x1*x2, x2*x3]" (also accepts "[]" for the zero ideal).
    static MonomialIdeal parse(const std::string& text, int ambient);

    int ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    long long max_generator_degree() const;  // 0 for the zero ideal

    // Some generator divides m.
    bool contains(const Monomial& m) const;
    std::vector<int> support() const;
    MonomialIdeal radical() const;
    // Same generators re-read in a ring with more variables.
    MonomialIdeal extended(int new_ambient) const;

    std::string str() const;  // "[x1*x2, x2*x3]"

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    MonomialIdeal(int ambient, std::vector<Monomial> minimal_sorted_gens);
    int ambient_;
    std::vector<Monomial> gens_;
};

// Minimal generating set of the list: duplicates and divisible elements
// removed, sorted canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// power(I, 0) is the unit ideal; computed by repeated multiplication with
// minimalization after every step.
MonomialIdeal power(const MonomialIdeal& base, int exponent);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& divisor);
// Colon by an ideal: intersection of the colons by its generators; the
// divisor ideal must be nonzero.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

}  // namespace pathideal
