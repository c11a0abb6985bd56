#include "poly.hpp"

namespace pc {

IntPoly::IntPoly(bigint constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::x() { return monomial(1, 1); }

IntPoly IntPoly::monomial(bigint coeff, unsigned deg) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, bigint(0));
        p.c_[deg] = std::move(coeff);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), bigint(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(unsigned(i)) + o.coeff(unsigned(i));
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, bigint(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.normalize();
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bigint IntPoly::eval(const bigint& x) const {
    bigint r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        const bigint& c = c_[d];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        bigint a = abs(c);
        if (a != 1 || d == 0) s += a.str();
        if (d > 0) {
            s += "q";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

bigint binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace pc
