#include "pathideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pathideal {

void check_same_ambient(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                                    std::to_string(b.ambient()));
}

Monomial::Monomial(int ambient) {
    if (ambient <= 0) throw std::invalid_argument("Monomial: ambient must be positive");
    exps_.assign(static_cast<size_t>(ambient), 0);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("Monomial: ambient must be positive");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::variable(int ambient, int index, int power) {
    Monomial m(ambient);
    if (index < 1 || index > ambient)
        throw std::invalid_argument("Monomial::variable: index out of range");
    if (power < 0) throw std::invalid_argument("Monomial::variable: negative power");
    m.exps_[static_cast<size_t>(index - 1)] = power;
    return m;
}

Monomial Monomial::from_support(int ambient, const std::vector<int>& indices) {
    Monomial m(ambient);
    for (int i : indices) {
        if (i < 1 || i > ambient)
            throw std::invalid_argument("Monomial::from_support: index out of range");
        m.exps_[static_cast<size_t>(i - 1)] = 1;
    }
    return m;
}

int Monomial::exponent(int index) const {
    if (index < 1 || index > ambient())
        throw std::invalid_argument("Monomial::exponent: index out of range");
    return exps_[static_cast<size_t>(index - 1)];
}

long long Monomial::degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::is_pure_power() const {
    int nonzero = 0;
    for (int e : exps_)
        if (e > 0) ++nonzero;
    return nonzero <= 1;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < ambient(); ++i)
        if (exps_[static_cast<size_t>(i)] > 0) s.push_back(i + 1);
    return s;
}

Monomial Monomial::squarefree_part() const {
    std::vector<int> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

Monomial Monomial::substituted_outside(const std::vector<int>& keep) const {
    std::vector<char> in_keep(exps_.size(), 0);
    for (int i : keep) {
        if (i < 1 || i > ambient())
            throw std::invalid_argument("Monomial::substituted_outside: index out of range");
        in_keep[static_cast<size_t>(i - 1)] = 1;
    }
    std::vector<int> e(exps_.size(), 0);
    for (size_t i = 0; i < exps_.size(); ++i)
        if (in_keep[i]) e[i] = exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::colon_by(const Monomial& m) const {
    check_same_ambient(*this, m);
    std::vector<int> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i] - m.exps_[i], 0);
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    for (size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] > b.exps_[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) {
        if (a.exps_[i] > std::numeric_limits<int>::max() - b.exps_[i])
            throw std::overflow_error("Monomial: exponent overflow in product");
        e[i] = a.exps_[i] + b.exps_[i];
    }
    return Monomial(std::move(e));
}

size_t Monomial::hash() const {
    // FNV-1a over the exponent stream
    size_t h = 1469598103934665603ull;
    for (int e : exps_) {
        h ^= static_cast<size_t>(static_cast<unsigned>(e)) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    check_same_ambient(a, b);
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ambient(); ++i) {
        int e = exps_[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

Monomial Monomial::parse(const std::string& text, int ambient) {
    Monomial m(ambient);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw std::invalid_argument("Monomial::parse: trailing input");
        return m;
    }
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Monomial::parse: expected number");
        return std::stoll(text.substr(start, pos - start));
    };
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != 'x') throw std::invalid_argument("Monomial::parse: expected variable");
        ++pos;
        long long idx = parse_int();
        if (idx < 1 || idx > ambient)
            throw std::invalid_argument("Monomial::parse: variable index out of range");
        long long e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = parse_int();
            if (e < 0) throw std::invalid_argument("Monomial::parse: negative exponent");
        }
        size_t slot = static_cast<size_t>(idx - 1);
        if (e > std::numeric_limits<int>::max() - m.exps_[slot])
            throw std::overflow_error("Monomial::parse: exponent overflow");
        m.exps_[slot] += static_cast<int>(e);
        any = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos != text.size() || !any) throw std::invalid_argument("Monomial::parse: malformed input");
    return m;
}

}  // namespace pathideal
