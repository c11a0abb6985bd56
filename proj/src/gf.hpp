#pragma once

#include <cstdint>
#include <string_view>
#include <string>
#include <vector>

#include "error.hpp"

namespace pc {

// Field element, encoded as an index in [0, q).  The base-p digits of the
// index are the coefficients of the canonical representative polynomial,
// lowest degree first.  Index 0 is the additive identity, index 1 the
// multiplicative identity.
using fe = std::uint16_t;

// GF(p^k), q = p^k <= 2^16.  Immutable after construction; safe to share
// across threads.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t k);

    // Accepts "p" or "p^k", e.g. "3" or "3^2".
    static Field parse(std::string_view spec);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }

    // Modulus polynomial coefficients, degree 0 first, monic of degree k.
    // For k = 1 this is the placeholder x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    fe zero() const { return 0; }
    fe one() const { return 1; }

    fe add(fe a, fe b) const {
        if (tables_) return add_tab_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    fe mul(fe a, fe b) const {
        if (tables_) return mul_tab_[std::size_t(a) * q_ + b];
        return mul_slow(a, b);
    }
    fe neg(fe a) const { return neg_tab_[a]; }
    fe sub(fe a, fe b) const { return add(a, neg(b)); }
    fe inv(fe a) const {
        if (a == 0) fail(errc::division_by_zero, "inv(0) in GF(" + std::to_string(q_) + ")");
        return inv_tab_[a];
    }
    bool is_zero(fe a) const { return a == 0; }

    fe pow(fe a, std::uint64_t e) const;

    // Embedding of the prime subfield; v is reduced mod p.
    fe from_int(std::int64_t v) const;

    // Element from explicit coefficients over GF(p), lowest degree first.
    fe from_coeffs(const std::vector<std::int64_t>& c) const;

    std::string to_string(fe a) const;       // "2" or "(1,2)" for k > 1
    fe parse_element(std::string_view s) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_;
    }

private:
    fe add_slow(fe a, fe b) const;
    fe mul_slow(fe a, fe b) const;
    void build_tables();

    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> modulus_;
    bool tables_ = false;
    std::vector<fe> add_tab_, mul_tab_;
    std::vector<fe> neg_tab_, inv_tab_;
};

bool is_prime(std::uint64_t n);

} // namespace pc
