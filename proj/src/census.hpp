#pragma once

#include <cstdint>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace pc {

constexpr std::uint64_t kDefaultBudget = 1ull << 36;

enum class PerAlgo { automatic, laplace, ryser };
enum class Stat { per, det };

struct CensusMeta {
    std::uint32_t p = 0, k = 0, q = 0;
    int n = 0;
    bigint total;
    double elapsed_ms = 0;
    int workers = 1;
};

// Exact joint (per, det) counts; counts[per * q + det].
struct JointCensus {
    CensusMeta meta;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(fe per_v, fe det_v) const { return counts[std::size_t(per_v) * meta.q + det_v]; }
    bigint zero_per() const;                  // |P_n|
    bigint zero_det() const;                  // |D_n|
    std::vector<std::uint64_t> per_hist() const;
    std::vector<std::uint64_t> det_hist() const;
};

// Counts of m-by-m matrices with per = 0, split by the rank of the
// permanental compound.
struct NrCensus {
    CensusMeta meta;
    int m = 0;
    std::vector<std::uint64_t> by_rank; // index r = 0..m
    bigint zero_per() const;            // sum over r = |P_m|
};

struct ValueClassCensus {
    CensusMeta meta;
    std::vector<std::uint64_t> det_hist, per_hist; // indexed by element
};

struct SampleEstimate {
    std::uint64_t trials = 0, hits = 0, seed = 0;
    double estimate = 0, std_error = 0;
    CensusMeta meta;
};

JointCensus census_joint(const Field& f, int n, std::uint64_t budget = kDefaultBudget,
                         int workers = 1, PerAlgo algo = PerAlgo::automatic);

NrCensus census_nr(const Field& f, int m, std::uint64_t budget = kDefaultBudget,
                   int workers = 1, PerAlgo algo = PerAlgo::automatic);

// |{(x, y) in F^k x F^k : x^tr (Id_r + 0) y = 0}| by brute force.
std::uint64_t census_vr(const Field& f, int k, int r, std::uint64_t budget = kDefaultBudget);

// Same count for an arbitrary matrix A in place of Id_r + 0.
std::uint64_t census_vr_for(const Matrix& a, std::uint64_t budget = kDefaultBudget);

// Exact |P_n| assembled from the (n-1)-level rank census and the V^(r)
// closed form; only q^((n-1)^2) matrices are enumerated.
bigint exact_pn_recursion(const Field& f, int n, std::uint64_t budget = kDefaultBudget,
                          int workers = 1, PerAlgo algo = PerAlgo::automatic);

ValueClassCensus census_value_classes(const Field& f, int n,
                                      std::uint64_t budget = kDefaultBudget, int workers = 1,
                                      PerAlgo algo = PerAlgo::automatic);

// Monte Carlo estimate of P(stat(A) = target) under i.i.d. uniform
// entries.  Single worker is bitwise reproducible for a given seed;
// multi-worker tallies are order independent.
SampleEstimate sample_prob(const Field& f, int n, Stat stat, fe target, std::uint64_t trials,
                           std::uint64_t seed, int workers = 1);

CensusMeta make_meta(const Field& f, int n);

// Throws BudgetExceeded when q^cells > budget; returns q^cells otherwise.
std::uint64_t check_budget(const Field& f, int cells, std::uint64_t budget);

} // namespace pc
