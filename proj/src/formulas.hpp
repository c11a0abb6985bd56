#pragma once

#include <cstdint>
#include <vector>

#include "poly.hpp"

namespace pc {

// |D_n| = q^(n^2) - q^(n(n-1)/2) (q^n - 1)...(q - 1), as a polynomial in q.
IntPoly poly_Dn(int n);

// |P_3| = |D_3| - q^2 (q-1)^5.
IntPoly poly_P3();

// Count of matrices with a fixed nonzero determinant value:
// prod_{k=1..n} (q^n - q^(k-1)) / (q - 1).
IntPoly poly_Dn_alpha(int n);

// |V^(r)_k| = q^(2(k-r)) ((q^r - 1) q^(r-1) + q^r); q^(2k) when r = 0.
IntPoly poly_Vrk(int k, int r);

// Recursively built bound polynomials for |P_n|.
struct BoundSet {
    int n = 0;
    IntPoly L;   // lower bound for |P_n|
    IntPoly U;   // upper bound for |P_n|
    IntPoly N0;  // bound for |N^(0)_(n-1)|
    IntPoly N1;  // bound for |N^(1)_(n-1)|
};

// Bound sets for 4 <= n <= n_max (n_max >= 4).
std::vector<BoundSet> build_bounds(int n_max);

// L_n and U_n for a single n >= 1 (exact |P_n| polynomials for n <= 3).
IntPoly bound_L(int n);
IntPoly bound_U(int n);

enum class PolyKind { lower, upper, det_zero };

struct AsymptoticReport {
    bool pass = false;
    std::string detail;
};

// Checks the leading-coefficient structure: degree n^2-1 for all three
// kinds; top coefficients (1,-1) for lower, (1,0) for upper, (1,1,0,0)
// for det_zero.
AsymptoticReport asymptotic_check(const IntPoly& p, int n, PolyKind kind);

struct ThresholdRow {
    int n = 0;
    std::uint64_t i = 0; // all integer arguments j >= i satisfy U_n(j) < D_n(j)
    std::uint64_t q = 0; // least odd-characteristic prime power >= i
};

// 3 <= n <= 20; n = 3 is the exact case U_3 = |P_3| < |D_3| for every q >= 3.
ThresholdRow find_threshold(int n);

// Least prime power p^k >= m with p an odd prime.
std::uint64_t next_odd_prime_power(std::uint64_t m);

} // namespace pc
