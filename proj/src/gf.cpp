#include "gf.hpp"

#include <algorithm>
#include <charconv>

namespace pc {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
// Full add/mul tables are kept while q*q stays modest; above that the
// digit-wise routines are used directly.
constexpr std::uint32_t kTableLimit = 1024;

using Poly = std::vector<std::uint32_t>; // coeffs over GF(p), degree 0 first

int deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    int dm = deg(m);
    for (int da = deg(a); da >= dm; da = deg(a)) {
        // m is monic
        std::uint32_t c = a[da];
        for (int i = 0; i <= dm; ++i) {
            std::uint64_t t = std::uint64_t(c) * m[i] % p;
            a[da - dm + i] = std::uint32_t((a[da - dm + i] + p - t) % p);
        }
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(r), m, p);
}

// Trial division against every monic polynomial of degree <= deg(f)/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    int df = deg(f);
    if (df < 1) return false;
    if (df == 1) return true;
    for (int d = 1; 2 * d <= df; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = idx;
            for (int i = 0; i < d; ++i) { g[i] = std::uint32_t(t % p); t /= p; }
            Poly r = poly_mod(f, g, p);
            if (deg(r) < 0) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (k < 1) fail(errc::degree_too_large, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder)
            fail(errc::degree_too_large,
                 "field order " + std::to_string(p) + "^" + std::to_string(k) +
                     " exceeds the supported cap 2^16");
    }
    q_ = std::uint32_t(q);

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        // Lexicographically smallest monic irreducible of degree k over
        // GF(p), coefficients compared lowest degree first.
        std::uint64_t count = q_; // p^k candidates for the non-leading coeffs
        bool found = false;
        for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
            Poly f(k_ + 1, 0);
            f[k_] = 1;
            // c0 is the most significant base-p digit of idx, so the scan
            // order equals the lexicographic order on (c0, c1, ...).
            std::uint64_t rem = idx;
            std::uint64_t place = count / p_;
            for (std::uint32_t i = 0; i < k_; ++i) {
                f[i] = std::uint32_t(rem / place);
                rem %= place;
                if (place > 1) place /= p_;
            }
            if (poly_irreducible(f, p_)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) fail(errc::internal, "no irreducible modulus found"); // cannot happen
    }

    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    // neg: digit-wise p-complement
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t r = 0, place = 1, t = a;
        for (std::uint32_t i = 0; i < k_; ++i) {
            std::uint32_t d = t % p_;
            r += ((p_ - d) % p_) * place;
            t /= p_;
            place *= p_;
        }
        neg_tab_[a] = fe(r);
    }
    if (q_ <= kTableLimit) {
        build_tables();
    }
    // inv(a) = a^(q-2) in the multiplicative group
    for (std::uint32_t a = 1; a < q_; ++a) inv_tab_[a] = pow(fe(a), q_ - 2);
}

void Field::build_tables() {
    add_tab_.resize(std::size_t(q_) * q_);
    mul_tab_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_tab_[std::size_t(a) * q_ + b] = add_slow(fe(a), fe(b));
            mul_tab_[std::size_t(a) * q_ + b] = mul_slow(fe(a), fe(b));
        }
    tables_ = true;
}

fe Field::add_slow(fe a, fe b) const {
    if (k_ == 1) return fe((std::uint32_t(a) + b) % p_);
    std::uint32_t r = 0, place = 1, ta = a, tb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((ta % p_ + tb % p_) % p_) * place;
        ta /= p_;
        tb /= p_;
        place *= p_;
    }
    return fe(r);
}

fe Field::mul_slow(fe a, fe b) const {
    if (k_ == 1) return fe(std::uint64_t(a) * b % p_);
    Poly pa(k_), pb(k_);
    std::uint32_t ta = a, tb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        pa[i] = ta % p_;
        pb[i] = tb % p_;
        ta /= p_;
        tb /= p_;
    }
    Poly r = poly_mulmod(pa, pb, modulus_, p_);
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_ && i < r.size(); ++i) {
        out += r[i] * place;
        place *= p_;
    }
    return fe(out);
}

fe Field::pow(fe a, std::uint64_t e) const {
    fe r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fe Field::from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(p_);
    if (m < 0) m += p_;
    return fe(m);
}

fe Field::from_coeffs(const std::vector<std::int64_t>& c) const {
    if (c.size() > k_)
        fail(errc::parse_error, "too many coefficients for GF(" + std::to_string(q_) + ")");
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::int64_t v = i < c.size() ? c[i] % std::int64_t(p_) : 0;
        if (v < 0) v += p_;
        r += std::uint32_t(v) * place;
        place *= p_;
    }
    return fe(r);
}

std::string Field::to_string(fe a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s = "(";
    std::uint32_t t = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(t % p_);
        t /= p_;
    }
    return s + ")";
}

fe Field::parse_element(std::string_view s) const {
    auto parse_int = [](std::string_view v) -> std::int64_t {
        std::int64_t out = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size())
            fail(errc::parse_error, "bad field element '" + std::string(v) + "'");
        return out;
    };
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')')
            fail(errc::parse_error, "unbalanced tuple '" + std::string(s) + "'");
        s.remove_prefix(1);
        s.remove_suffix(1);
        std::vector<std::int64_t> c;
        while (!s.empty()) {
            auto pos = s.find(',');
            c.push_back(parse_int(s.substr(0, pos)));
            if (pos == std::string_view::npos) break;
            s.remove_prefix(pos + 1);
        }
        return from_coeffs(c);
    }
    if (k_ > 1) {
        // plain integer in an extension field: prime-subfield embedding
        return from_int(parse_int(s));
    }
    return from_int(parse_int(s));
}

Field Field::parse(std::string_view spec) {
    auto parse_u32 = [](std::string_view v) -> std::uint32_t {
        std::uint32_t out = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size())
            fail(errc::parse_error, "bad field spec '" + std::string(v) + "'");
        return out;
    };
    auto caret = spec.find('^');
    if (caret == std::string_view::npos) return Field(parse_u32(spec), 1);
    return Field(parse_u32(spec.substr(0, caret)), parse_u32(spec.substr(caret + 1)));
}

} // namespace pc
