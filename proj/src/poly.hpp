#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace pc {

using bigint = boost::multiprecision::cpp_int;

// Polynomial in one indeterminate over the integers.  Dense coefficient
// list from degree 0 upward; the zero polynomial is the empty list.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(bigint constant);
    IntPoly(long constant) : IntPoly(bigint(constant)) {}
    explicit IntPoly(std::vector<bigint> coeffs);

    static IntPoly x();                              // the indeterminate
    static IntPoly monomial(bigint coeff, unsigned deg);

    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bigint coeff(unsigned d) const { return d < c_.size() ? c_[d] : bigint(0); }
    const std::vector<bigint>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(unsigned e) const;

    bigint eval(const bigint& x) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;                   // human readable
    std::vector<std::string> coeff_strings() const;  // degree 0 upward

private:
    void normalize();
    std::vector<bigint> c_;
};

bigint binomial(unsigned n, unsigned k);

} // namespace pc
