#pragma once

#include <string>
#include <vector>

#include "pathideal/bigint.hpp"

namespace pathideal {

// Dense univariate polynomial in z with arbitrary-precision integer
// coefficients. Trailing zeros are trimmed; the zero polynomial has an
// empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one();
    static IntPolynomial constant(BigInt c);
    // c * z^k
    static IntPolynomial term(BigInt c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int k) const;

    BigInt evaluate(const BigInt& x) const;
    BigInt evaluate_at_one() const;

    // Multiply by z^k.
    IntPolynomial shifted(int k) const;

    // Exact division by (1 - z); throws std::logic_error if a remainder is
    // left (the remainder equals the value at z = 1).
    IntPolynomial divided_by_one_minus_z() const;

    // Coefficients e_0, e_1, ... of the expansion in powers of (1 - z):
    //   p(z) = sum_i e_i (1 - z)^i.
    std::vector<BigInt> one_minus_z_expansion() const;

    // Text form like "1 - 2*z^2 + z^3"; the zero polynomial prints as "0".
    std::string str() const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace pathideal
