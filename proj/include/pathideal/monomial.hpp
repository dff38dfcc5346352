#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pathideal {

// Monomial in a polynomial ring with a fixed number of variables, stored as
// its exponent vector. Variables are 1-based in the public interface
// (x1, ..., xn); exponents are machine integers with overflow checks on
// multiplication. Immutable after construction.
class Monomial {
public:
    // The unit monomial 1 in the given ambient.
    explicit Monomial(int ambient);
    explicit Monomial(std::vector<int> exponents);

    static Monomial unit(int ambient) { return Monomial(ambient); }
    static Monomial variable(int ambient, int index, int power = 1);
    // Squarefree monomial x_F for a sorted index set F.
    static Monomial from_support(int ambient, const std::vector<int>& indices);
    // Parses the text form "x1^2*x3" ("1" for the unit).
    static Monomial parse(const std::string& text, int ambient);

    int ambient() const { return static_cast<int>(exps_.size()); }
    int exponent(int index) const;  // 1-based
    const std::vector<int>& exponents() const { return exps_; }
    long long degree() const;

    bool is_unit() const;
    bool is_squarefree() const;
    // True when at most one variable occurs (includes the unit).
    bool is_pure_power() const;
    std::vector<int> support() const;
    Monomial squarefree_part() const;
    // Restriction to the variables in `keep` (others set to exponent 0),
    // i.e. the image under substituting x_j := 1 for j outside `keep`.
    Monomial substituted_outside(const std::vector<int>& keep) const;

    // this / gcd(this, m): the generator map of a colon by m.
    Monomial colon_by(const Monomial& m) const;

    std::string str() const;

    friend bool divides(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    size_t hash() const;

private:
    std::vector<int> exps_;
};

// The fixed total order used for generator lists everywhere: exponent
// vectors compared lexicographically from the highest variable index down,
// ascending. For path ideals this lists u_1, u_2, ... in order.
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

void check_same_ambient(const Monomial& a, const Monomial& b);

}  // namespace pathideal
