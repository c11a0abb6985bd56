#include "census.hpp"

#include "formulas.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace pc {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool use_ryser(int n, PerAlgo algo) {
    switch (algo) {
    case PerAlgo::laplace: return false;
    case PerAlgo::ryser: return true;
    case PerAlgo::automatic: break;
    }
    return n >= 4; // measured crossover, see tools bench subcommand
}

// Runs visit(worker, entries) for every vector in F^cells, split into
// contiguous index chunks per worker.  Enumeration is a base-q odometer
// with digit 0 (entry (0,0)) fastest.
template <class Visit>
void enumerate_all(const Field& f, int cells, std::uint64_t total, int workers, Visit visit) {
    const std::uint32_t q = f.order();
    if (workers < 1) workers = 1;
    auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
        std::vector<fe> digits(cells, 0);
        std::uint64_t t = lo;
        for (int i = 0; i < cells && t; ++i) {
            digits[i] = fe(t % q);
            t /= q;
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            visit(w, digits.data());
            for (int i = 0; i < cells; ++i) {
                if (++digits[i] < q) break;
                digits[i] = 0;
            }
        }
    };
    if (workers == 1) {
        run_range(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (std::uint64_t(w) < extra ? 1 : 0);
        pool.emplace_back(run_range, w, lo, hi);
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

} // namespace

std::uint64_t check_budget(const Field& f, int cells, std::uint64_t budget) {
    bigint total = 1;
    for (int i = 0; i < cells; ++i) total *= f.order();
    if (total > budget)
        fail(errc::budget_exceeded, "enumeration needs " + total.str() +
                                        " evaluations, budget is " + std::to_string(budget));
    return total.convert_to<std::uint64_t>();
}

CensusMeta make_meta(const Field& f, int n) {
    CensusMeta m;
    m.p = f.characteristic();
    m.k = f.degree();
    m.q = f.order();
    m.n = n;
    m.total = 1;
    for (int i = 0; i < n * n; ++i) m.total *= f.order();
    return m;
}

bigint JointCensus::zero_per() const {
    bigint s = 0;
    for (std::uint32_t d = 0; d < meta.q; ++d) s += counts[d];
    return s;
}

bigint JointCensus::zero_det() const {
    bigint s = 0;
    for (std::uint32_t p = 0; p < meta.q; ++p) s += counts[std::size_t(p) * meta.q];
    return s;
}

std::vector<std::uint64_t> JointCensus::per_hist() const {
    std::vector<std::uint64_t> h(meta.q, 0);
    for (std::uint32_t p = 0; p < meta.q; ++p)
        for (std::uint32_t d = 0; d < meta.q; ++d) h[p] += counts[std::size_t(p) * meta.q + d];
    return h;
}

std::vector<std::uint64_t> JointCensus::det_hist() const {
    std::vector<std::uint64_t> h(meta.q, 0);
    for (std::uint32_t p = 0; p < meta.q; ++p)
        for (std::uint32_t d = 0; d < meta.q; ++d) h[d] += counts[std::size_t(p) * meta.q + d];
    return h;
}

bigint NrCensus::zero_per() const {
    bigint s = 0;
    for (auto c : by_rank) s += c;
    return s;
}

JointCensus census_joint(const Field& f, int n, std::uint64_t budget, int workers, PerAlgo algo) {
    std::uint64_t total = check_budget(f, n * n, budget);
    auto t0 = clock_type::now();
    const std::uint32_t q = f.order();
    const bool ryser = use_ryser(n, algo);

    std::vector<std::vector<std::uint64_t>> local(workers,
                                                  std::vector<std::uint64_t>(std::size_t(q) * q, 0));
    enumerate_all(f, n * n, total, workers, [&](int w, const fe* a) {
        fe p = ryser ? per_ryser_raw(f, n, a) : per_laplace_raw(f, n, a);
        fe d = det_raw(f, n, a);
        ++local[w][std::size_t(p) * q + d];
    });

    JointCensus out;
    out.meta = make_meta(f, n);
    out.meta.workers = workers;
    out.counts.assign(std::size_t(q) * q, 0);
    for (auto& l : local)
        for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += l[i];
    out.meta.elapsed_ms = ms_since(t0);
    return out;
}

NrCensus census_nr(const Field& f, int m, std::uint64_t budget, int workers, PerAlgo algo) {
    std::uint64_t total = check_budget(f, m * m, budget);
    auto t0 = clock_type::now();
    const bool ryser = use_ryser(m, algo);

    std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(m + 1, 0));
    std::vector<std::vector<fe>> minor_buf(workers, std::vector<fe>(std::size_t(m) * m));
    std::vector<std::vector<fe>> comp_buf(workers, std::vector<fe>(std::size_t(m) * m));
    enumerate_all(f, m * m, total, workers, [&](int w, const fe* a) {
        fe p = ryser ? per_ryser_raw(f, m, a) : per_laplace_raw(f, m, a);
        if (!f.is_zero(p)) return;
        // permanental compound, entry (i,j) = per of the (i,j) minor
        fe* comp = comp_buf[w].data();
        fe* minor = minor_buf[w].data();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int idx = 0;
                for (int r = 0; r < m; ++r) {
                    if (r == i) continue;
                    for (int c = 0; c < m; ++c) {
                        if (c == j) continue;
                        minor[idx++] = a[std::size_t(r) * m + c];
                    }
                }
                comp[std::size_t(i) * m + j] =
                    m == 1 ? f.one() : per_laplace_raw(f, m - 1, minor);
            }
        int r = rank_rect(f, m, m, comp);
        ++local[w][r];
    });

    NrCensus out;
    out.meta = make_meta(f, m);
    out.meta.workers = workers;
    out.m = m;
    out.by_rank.assign(m + 1, 0);
    for (auto& l : local)
        for (int r = 0; r <= m; ++r) out.by_rank[r] += l[r];
    out.meta.elapsed_ms = ms_since(t0);
    return out;
}

std::uint64_t census_vr(const Field& f, int k, int r, std::uint64_t budget) {
    if (r < 0 || r > k)
        fail(errc::rank_out_of_range,
             "rank " + std::to_string(r) + " outside [0," + std::to_string(k) + "]");
    Matrix a(f, k);
    for (int i = 0; i < r; ++i) a.at(i, i) = f.one();
    return census_vr_for(a, budget);
}

std::uint64_t census_vr_for(const Matrix& a, std::uint64_t budget) {
    const Field& f = a.field();
    int k = a.dim();
    std::uint64_t total = check_budget(f, 2 * k, budget);
    std::uint64_t hits = 0;
    std::vector<fe> xy(std::size_t(2) * k, 0);
    const std::uint32_t q = f.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::span<const fe> x(xy.data(), std::size_t(k));
        std::span<const fe> y(xy.data() + k, std::size_t(k));
        if (bilinear_zero(x, a, y)) ++hits;
        for (int i = 0; i < 2 * k; ++i) {
            if (++xy[i] < q) break;
            xy[i] = 0;
        }
    }
    return hits;
}

bigint exact_pn_recursion(const Field& f, int n, std::uint64_t budget, int workers, PerAlgo algo) {
    if (n < 2) fail(errc::dimension_mismatch, "recursion needs n >= 2");
    int m = n - 1;
    NrCensus nr = census_nr(f, m, budget, workers, algo);
    bigint q = f.order();
    bigint p_m = nr.zero_per();
    bigint qm2 = 1;
    for (int i = 0; i < m * m; ++i) qm2 *= q;
    bigint q2m = 1;
    for (int i = 0; i < 2 * m; ++i) q2m *= q;
    bigint sum = 0;
    for (int r = 0; r <= m; ++r) {
        if (!nr.by_rank[r]) continue;
        sum += bigint(nr.by_rank[r]) * poly_Vrk(m, r).eval(q);
    }
    return (qm2 - p_m) * q2m + q * sum;
}

ValueClassCensus census_value_classes(const Field& f, int n, std::uint64_t budget, int workers,
                                      PerAlgo algo) {
    std::uint64_t total = check_budget(f, n * n, budget);
    auto t0 = clock_type::now();
    const std::uint32_t q = f.order();
    const bool ryser = use_ryser(n, algo);

    std::vector<std::vector<std::uint64_t>> ldet(workers, std::vector<std::uint64_t>(q, 0));
    std::vector<std::vector<std::uint64_t>> lper(workers, std::vector<std::uint64_t>(q, 0));
    enumerate_all(f, n * n, total, workers, [&](int w, const fe* a) {
        ++lper[w][ryser ? per_ryser_raw(f, n, a) : per_laplace_raw(f, n, a)];
        ++ldet[w][det_raw(f, n, a)];
    });

    ValueClassCensus out;
    out.meta = make_meta(f, n);
    out.meta.workers = workers;
    out.det_hist.assign(q, 0);
    out.per_hist.assign(q, 0);
    for (int w = 0; w < workers; ++w)
        for (std::uint32_t v = 0; v < q; ++v) {
            out.det_hist[v] += ldet[w][v];
            out.per_hist[v] += lper[w][v];
        }
    out.meta.elapsed_ms = ms_since(t0);
    return out;
}

SampleEstimate sample_prob(const Field& f, int n, Stat stat, fe target, std::uint64_t trials,
                           std::uint64_t seed, int workers) {
    if (trials < 1) fail(errc::precondition_violated, "trials must be >= 1");
    if (workers < 1) workers = 1;
    auto t0 = clock_type::now();
    const std::uint32_t q = f.order();
    const bool ryser = use_ryser(n, PerAlgo::automatic);

    std::vector<std::uint64_t> hits(workers, 0);
    auto run = [&](int w, std::uint64_t count) {
        std::seed_seq sseq{seed, std::uint64_t(w)};
        std::mt19937_64 rng(sseq);
        std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
        std::vector<fe> a(std::size_t(n) * n);
        for (std::uint64_t t = 0; t < count; ++t) {
            for (auto& e : a) e = fe(dist(rng));
            fe v = stat == Stat::det ? det_raw(f, n, a.data())
                                     : (ryser ? per_ryser_raw(f, n, a.data())
                                              : per_laplace_raw(f, n, a.data()));
            if (v == target) ++hits[w];
        }
    };
    if (workers == 1) {
        run(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = trials / workers, extra = trials % workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run, w, chunk + (std::uint64_t(w) < extra ? 1 : 0));
        for (auto& th : pool) th.join();
    }

    SampleEstimate out;
    out.meta = make_meta(f, n);
    out.meta.workers = workers;
    out.meta.elapsed_ms = ms_since(t0);
    out.trials = trials;
    out.seed = seed;
    for (auto h : hits) out.hits += h;
    out.estimate = double(out.hits) / double(trials);
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / double(trials));
    return out;
}

} // namespace pc
