#include "permcensus.h"

#include "census.hpp"
#include "constructions.hpp"
#include "formulas.hpp"
#include "report.hpp"

#include <chrono>
#include <cstring>
#include <random>
#include <sstream>

using namespace pc;

struct pc_field {
    Field field;
};

namespace {

thread_local std::string g_last_error;

pc_status to_status(errc c) {
    switch (c) {
    case errc::ok: return PC_OK;
    case errc::not_prime: return PC_ERR_NOT_PRIME;
    case errc::degree_too_large: return PC_ERR_DEGREE_TOO_LARGE;
    case errc::division_by_zero: return PC_ERR_DIVISION_BY_ZERO;
    case errc::dimension_mismatch: return PC_ERR_DIMENSION_MISMATCH;
    case errc::rank_out_of_range: return PC_ERR_RANK_OUT_OF_RANGE;
    case errc::budget_exceeded: return PC_ERR_BUDGET_EXCEEDED;
    case errc::precondition_violated: return PC_ERR_PRECONDITION;
    case errc::even_characteristic: return PC_ERR_EVEN_CHARACTERISTIC;
    case errc::zero_alpha: return PC_ERR_ZERO_ALPHA;
    case errc::parse_error: return PC_ERR_PARSE;
    case errc::counterexample: return PC_ERR_COUNTEREXAMPLE;
    case errc::internal: break;
    }
    return PC_ERR_INTERNAL;
}

template <class Fn>
pc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format to_format(pc_format f) {
    switch (f) {
    case PC_FORMAT_TEXT: return Format::text;
    case PC_FORMAT_CSV: return Format::csv;
    case PC_FORMAT_JSON: break;
    }
    return Format::json;
}

std::uint64_t real_budget(std::uint64_t budget) {
    return budget == PC_DEFAULT_BUDGET ? kDefaultBudget : budget;
}

} // namespace

extern "C" {

const char* pc_status_name(pc_status s) {
    switch (s) {
    case PC_OK: return "ok";
    case PC_ERR_NOT_PRIME: return "not_prime";
    case PC_ERR_DEGREE_TOO_LARGE: return "degree_too_large";
    case PC_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case PC_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case PC_ERR_RANK_OUT_OF_RANGE: return "rank_out_of_range";
    case PC_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case PC_ERR_PRECONDITION: return "precondition_violated";
    case PC_ERR_EVEN_CHARACTERISTIC: return "even_characteristic";
    case PC_ERR_ZERO_ALPHA: return "zero_alpha";
    case PC_ERR_PARSE: return "parse_error";
    case PC_ERR_COUNTEREXAMPLE: return "counterexample";
    case PC_ERR_INTERNAL: break;
    }
    return "internal_error";
}

const char* pc_last_error(void) { return g_last_error.c_str(); }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_field_create(uint32_t p, uint32_t k, pc_field** out) {
    return guarded([&] {
        *out = new pc_field{Field(p, k)};
        return PC_OK;
    });
}

pc_status pc_field_parse(const char* spec, pc_field** out) {
    return guarded([&] {
        *out = new pc_field{Field::parse(spec)};
        return PC_OK;
    });
}

void pc_field_free(pc_field* f) { delete f; }

uint32_t pc_field_order(const pc_field* f) { return f->field.order(); }
uint32_t pc_field_characteristic(const pc_field* f) { return f->field.characteristic(); }

pc_status pc_census_joint(const pc_field* f, int n, uint64_t budget, int workers,
                          pc_format fmt, char** out) {
    return guarded([&] {
        JointCensus c = census_joint(f->field, n, real_budget(budget), workers);
        *out = dup_string(report_joint(c, f->field, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_census_nr(const pc_field* f, int m, uint64_t budget, int workers, pc_format fmt,
                       char** out) {
    return guarded([&] {
        NrCensus c = census_nr(f->field, m, real_budget(budget), workers);
        *out = dup_string(report_nr(c, f->field, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_census_vr(const pc_field* f, int k, int r, uint64_t budget, char** out) {
    return guarded([&] {
        std::uint64_t c = census_vr(f->field, k, r, real_budget(budget));
        *out = dup_string(std::to_string(c));
        return PC_OK;
    });
}

pc_status pc_census_classes(const pc_field* f, int n, uint64_t budget, int workers,
                            pc_format fmt, char** out) {
    return guarded([&] {
        ValueClassCensus c = census_value_classes(f->field, n, real_budget(budget), workers);
        *out = dup_string(report_classes(c, f->field, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_pn_exact(const pc_field* f, int n, uint64_t budget, int workers, char** out) {
    return guarded([&] {
        bigint v = exact_pn_recursion(f->field, n, real_budget(budget), workers);
        *out = dup_string(v.str());
        return PC_OK;
    });
}

pc_status pc_sample_prob(const pc_field* f, int n, const char* stat, const char* target,
                         uint64_t trials, uint64_t seed, int workers, pc_format fmt,
                         char** out) {
    return guarded([&] {
        Stat st;
        std::string stat_s = stat;
        if (stat_s == "per") st = Stat::per;
        else if (stat_s == "det") st = Stat::det;
        else fail(errc::parse_error, "stat must be 'per' or 'det'");
        fe tgt = f->field.parse_element(target);
        SampleEstimate e = sample_prob(f->field, n, st, tgt, trials, seed, workers);

        // exact reference probability when a closed form or small census applies
        std::string exact;
        if (st == Stat::det && f->field.is_zero(tgt)) {
            bigint num = poly_Dn(n).eval(f->field.order());
            exact = num.str() + "/" + e.meta.total.str();
        } else if (st == Stat::det) {
            bigint num = poly_Dn_alpha(n).eval(f->field.order());
            exact = num.str() + "/" + e.meta.total.str();
        } else if (e.meta.total <= bigint(1) << 26) {
            ValueClassCensus c = census_value_classes(f->field, n, kDefaultBudget, workers);
            exact = std::to_string(c.per_hist[tgt]) + "/" + e.meta.total.str();
        }
        *out = dup_string(report_sample(e, f->field, to_format(fmt), stat_s, target, exact));
        return PC_OK;
    });
}

pc_status pc_bounds(int n, pc_format fmt, char** out) {
    return guarded([&] {
        *out = dup_string(report_bounds(n, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_thresholds(int n_min, int n_max, pc_format fmt, char** out) {
    return guarded([&] {
        if (n_min < 3 || n_max > 20 || n_min > n_max)
            fail(errc::dimension_mismatch, "threshold range must satisfy 3 <= n_min <= n_max <= 20");
        *out = dup_string(report_thresholds(n_min, n_max, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_next_odd_prime_power(uint64_t m, uint64_t* out) {
    return guarded([&] {
        *out = next_odd_prime_power(m);
        return PC_OK;
    });
}

pc_status pc_verify(const pc_field* f, const char* map, int n, const char* mode,
                    uint64_t budget_or_trials, uint64_t seed, pc_format fmt, char** out) {
    return guarded([&] {
        ConverterId id = converter_from_name(map);
        std::string mode_s = mode;
        VerifyResult res;
        if (id == ConverterId::delta) {
            res = verify_delta_family(f->field, n < 2 ? 2 : n);
        } else {
            ConverterSpec spec = converter_spec(id, f->field, n);
            VerifyMode vm;
            if (mode_s == "exhaustive") vm = VerifyMode::exhaustive;
            else if (mode_s == "random") vm = VerifyMode::random;
            else fail(errc::parse_error, "mode must be 'exhaustive' or 'random'");
            res = verify_converter(spec, f->field, vm,
                                   budget_or_trials ? budget_or_trials
                                                    : (vm == VerifyMode::exhaustive ? kDefaultBudget
                                                                                    : 10000),
                                   seed);
        }
        *out = dup_string(report_verify(res, f->field, to_format(fmt)));
        if (!res.pass) {
            g_last_error = "counterexample: " + res.counterexample;
            return PC_ERR_COUNTEREXAMPLE;
        }
        return PC_OK;
    });
}

pc_status pc_matrix_eval(const pc_field* f, const char* literal, pc_format fmt, char** out) {
    return guarded([&] {
        Matrix a = Matrix::parse(f->field, literal);
        *out = dup_string(report_matrix_eval(a, to_format(fmt)));
        return PC_OK;
    });
}

pc_status pc_bench(const pc_field* f, int n_max, int trials, char** out) {
    return guarded([&] {
        if (n_max < 2 || n_max > kMaxDim || trials < 1)
            fail(errc::precondition_violated, "bench needs 2 <= n_max <= 12 and trials >= 1");
        std::ostringstream os;
        os << "n,laplace_ns,ryser_ns\n";
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<std::uint32_t> dist(0, f->field.order() - 1);
        for (int n = 2; n <= n_max; ++n) {
            std::vector<fe> a(std::size_t(n) * n);
            double tl = 0, tr = 0;
            fe sink = 0;
            for (int t = 0; t < trials; ++t) {
                for (auto& e : a) e = fe(dist(rng));
                auto t0 = std::chrono::steady_clock::now();
                sink ^= per_laplace_raw(f->field, n, a.data());
                auto t1 = std::chrono::steady_clock::now();
                sink ^= per_ryser_raw(f->field, n, a.data());
                auto t2 = std::chrono::steady_clock::now();
                tl += std::chrono::duration<double, std::nano>(t1 - t0).count();
                tr += std::chrono::duration<double, std::nano>(t2 - t1).count();
            }
            (void)sink;
            os << n << "," << tl / trials << "," << tr / trials << "\n";
        }
        *out = dup_string(os.str());
        return PC_OK;
    });
}

} // extern "C"
