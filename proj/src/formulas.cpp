#include "formulas.hpp"

#include "error.hpp"
#include "gf.hpp"

namespace pc {

namespace {

const IntPoly X = IntPoly::x();

IntPoly xpow(unsigned e) { return IntPoly::monomial(1, e); }

} // namespace

IntPoly poly_Dn(int n) {
    if (n < 1) fail(errc::dimension_mismatch, "poly_Dn requires n >= 1");
    unsigned un = unsigned(n);
    IntPoly prod = xpow(un * (un - 1) / 2);
    for (unsigned m = 1; m <= un; ++m) prod = prod * (xpow(m) - IntPoly(1));
    return xpow(un * un) - prod;
}

IntPoly poly_P3() { return poly_Dn(3) - xpow(2) * (X - IntPoly(1)).pow(5); }

IntPoly poly_Dn_alpha(int n) {
    if (n < 1) fail(errc::dimension_mismatch, "poly_Dn_alpha requires n >= 1");
    unsigned un = unsigned(n);
    IntPoly prod = xpow(un * (un - 1) / 2);
    for (unsigned m = 2; m <= un; ++m) prod = prod * (xpow(m) - IntPoly(1));
    return prod;
}

IntPoly poly_Vrk(int k, int r) {
    if (r < 0 || r > k)
        fail(errc::rank_out_of_range,
             "rank " + std::to_string(r) + " outside [0," + std::to_string(k) + "]");
    unsigned uk = unsigned(k), ur = unsigned(r);
    if (r == 0) return xpow(2 * uk);
    return xpow(2 * (uk - ur)) * ((xpow(ur) - IntPoly(1)) * xpow(ur - 1) + xpow(ur));
}

namespace {

struct BoundTables {
    // L[n], U[n] valid for 1 <= n <= n_max; N0[m] for 2 <= m <= n_max - 1;
    // N1[n-1] stored at index n for 4 <= n <= n_max.
    std::vector<IntPoly> L, U, N0, N1;
};

BoundTables build_tables(int n_max) {
    if (n_max < 3) n_max = 3;
    BoundTables t;
    t.L.resize(n_max + 1);
    t.U.resize(n_max + 1);
    t.N0.resize(n_max + 1);
    t.N1.resize(n_max + 1);

    t.L[1] = IntPoly(0);
    t.L[2] = IntPoly(0);
    t.U[1] = IntPoly(1);
    t.U[2] = xpow(3) + xpow(2) - X; // |P_2| = q^3 + q^2 - q
    t.L[3] = t.U[3] = poly_P3();
    t.N0[2] = IntPoly(1);

    for (int m = 3; m <= n_max; ++m) {
        IntPoly acc(1);
        for (int j = 1; j <= m - 2; ++j) {
            int d = m - j - 1; // dimension of the nonzero per-minor
            IntPoly term = IntPoly(binomial(unsigned(m), unsigned(d)) * binomial(unsigned(m), unsigned(d)));
            term = term * xpow(unsigned(2 * d * (j + 1)));
            term = term * (xpow(unsigned(d * d)) - t.L[d]);
            acc = acc + term;
        }
        t.N0[m] = acc;
    }

    for (int n = 4; n <= n_max; ++n) {
        int m = n - 1;
        unsigned e = unsigned(m * m - 1);
        IntPoly n1 = xpow(e) - (X - IntPoly(3)).pow(e);
        n1 = n1 + t.N0[n - 2] * xpow(unsigned(2 * (n - 2) + 1));
        n1 = n1 + X * t.U[n - 2] * poly_Vrk(n - 2, 1);
        t.N1[n] = n1;

        t.L[n] = (xpow(unsigned(m * m)) - t.U[m]) * xpow(unsigned(2 * m));
        t.U[n] = (xpow(unsigned(m * m)) - t.L[m]) * xpow(unsigned(2 * m)) +
                 X * t.N0[m] * poly_Vrk(m, 0) + X * n1 * poly_Vrk(m, 1) +
                 X * t.U[m] * poly_Vrk(m, 2);
    }
    return t;
}

} // namespace

std::vector<BoundSet> build_bounds(int n_max) {
    if (n_max < 4) fail(errc::dimension_mismatch, "build_bounds requires n_max >= 4");
    BoundTables t = build_tables(n_max);
    std::vector<BoundSet> out;
    for (int n = 4; n <= n_max; ++n)
        out.push_back({n, t.L[n], t.U[n], t.N0[n - 1], t.N1[n]});
    return out;
}

IntPoly bound_L(int n) {
    if (n < 1) fail(errc::dimension_mismatch, "bound_L requires n >= 1");
    return build_tables(n).L[n];
}

IntPoly bound_U(int n) {
    if (n < 1) fail(errc::dimension_mismatch, "bound_U requires n >= 1");
    return build_tables(n).U[n];
}

AsymptoticReport asymptotic_check(const IntPoly& p, int n, PolyKind kind) {
    AsymptoticReport rep;
    int top = n * n - 1;
    auto check = [&](std::initializer_list<long> expect) {
        if (p.degree() != top) {
            rep.detail = "degree " + std::to_string(p.degree()) + ", expected " + std::to_string(top);
            return false;
        }
        int d = top;
        for (long c : expect) {
            if (p.coeff(unsigned(d)) != c) {
                rep.detail = "coefficient at q^" + std::to_string(d) + " is " +
                             p.coeff(unsigned(d)).str() + ", expected " + std::to_string(c);
                return false;
            }
            --d;
        }
        return true;
    };
    switch (kind) {
    case PolyKind::lower: rep.pass = check({1, -1}); break;
    case PolyKind::upper: rep.pass = check({1, 0}); break;
    case PolyKind::det_zero: rep.pass = check({1, 1, 0, 0}); break;
    }
    if (rep.pass) rep.detail = "ok";
    return rep;
}

std::uint64_t next_odd_prime_power(std::uint64_t m) {
    if (m < 3) m = 3;
    for (std::uint64_t c = m;; ++c) {
        std::uint64_t p = 0;
        for (std::uint64_t d = 2; d * d <= c; ++d)
            if (c % d == 0) { p = d; break; }
        if (p == 0) p = c; // c itself is prime
        if (p == 2) continue;
        std::uint64_t t = c;
        while (t % p == 0) t /= p;
        if (t == 1) return c;
    }
}

namespace {

// diff(x) > 0 for all x >= j once diff and all its derivatives are
// nonnegative at j and diff(j) > 0 (Taylor expansion around j).
bool positive_beyond(const IntPoly& diff, std::uint64_t j) {
    bigint x = j;
    // Taylor shift by synthetic division: repeatedly divide by (t - j).
    std::vector<bigint> c(diff.coeffs());
    if (c.empty()) return false;
    std::vector<bigint> shifted;
    for (std::size_t round = 0; round < c.size(); ++round) {
        bigint rem = 0;
        for (std::size_t i = c.size(); i-- > round;) {
            bigint t = c[i] + rem * x;
            rem = t;
            c[i] = t;
        }
        // c[round] now holds the coefficient of (t - j)^round
        shifted.push_back(c[round]);
    }
    if (shifted[0] <= 0) return false;
    for (const auto& s : shifted)
        if (s < 0) return false;
    return true;
}

} // namespace

ThresholdRow find_threshold(int n) {
    if (n < 3 || n > 20)
        fail(errc::dimension_mismatch, "threshold table covers 3 <= n <= 20");
    if (n == 3) {
        // U_3 = |P_3| = |D_3| - q^2 (q-1)^5 < |D_3| for every q >= 2.
        return {3, 2, 3};
    }
    IntPoly diff = poly_Dn(n) - bound_U(n);
    std::uint64_t last_fail = 0;
    for (std::uint64_t j = 2;; ++j) {
        if (diff.eval(bigint(j)) <= 0) {
            last_fail = j;
        } else if ((j & (j - 1)) == 0 && positive_beyond(diff, j)) {
            // certificate: no sign failure at or beyond j; checked only at
            // power-of-two checkpoints to keep the scan cheap
            break;
        }
        if (j > 1'000'000) fail(errc::internal, "threshold scan did not converge");
    }
    std::uint64_t i = last_fail ? last_fail + 1 : 2;
    return {n, i, next_odd_prime_power(i)};
}

} // namespace pc
