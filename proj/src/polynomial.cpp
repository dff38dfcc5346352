#include "pathideal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pathideal {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::one() { return constant(1); }

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::term(BigInt c, int k) {
    if (k < 0) throw std::invalid_argument("IntPolynomial::term: negative exponent");
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, 0);
        p.coeffs_[static_cast<size_t>(k)] = std::move(c);
    }
    return p;
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt IntPolynomial::evaluate_at_one() const {
    BigInt acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("IntPolynomial::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    IntPolynomial p;
    p.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i + static_cast<size_t>(k)] = coeffs_[i];
    return p;
}

IntPolynomial IntPolynomial::divided_by_one_minus_z() const {
    // p = (1 - z) q + r with r constant; q_i = p_i + q_{i-1}, and the final
    // partial sum equals p(1), which must vanish for exactness.
    if (is_zero()) return IntPolynomial{};
    std::vector<BigInt> q(coeffs_.size(), 0);
    BigInt run = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        run += coeffs_[i];
        q[i] = run;
    }
    if (q.back() != 0)
        throw std::logic_error("IntPolynomial: division by (1 - z) left remainder " +
                               q.back().str());
    q.pop_back();
    return IntPolynomial(std::move(q));
}

std::vector<BigInt> IntPolynomial::one_minus_z_expansion() const {
    std::vector<BigInt> out;
    IntPolynomial rest = *this;
    if (rest.is_zero()) return {BigInt(0)};
    while (!rest.is_zero()) {
        BigInt e = rest.evaluate_at_one();
        out.push_back(e);
        rest -= IntPolynomial::constant(e);
        if (rest.is_zero()) break;
        rest = rest.divided_by_one_minus_z();
    }
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace pathideal
