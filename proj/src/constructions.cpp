#include "constructions.hpp"

#include <chrono>
#include <random>

namespace pc {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

fe half(const Field& f) {
    if (f.characteristic() == 2)
        fail(errc::even_characteristic, "1/2 does not exist in characteristic 2");
    return f.inv(f.add(f.one(), f.one()));
}

} // namespace

Matrix polya_2x2(const Matrix& a) {
    if (a.dim() != 2) fail(errc::dimension_mismatch, "polya_2x2 requires n = 2");
    Matrix b = a;
    b.at(0, 1) = a.field().neg(a.at(0, 1));
    return b;
}

Matrix psi33(const Matrix& a) {
    if (a.dim() != 3) fail(errc::dimension_mismatch, "psi33 requires n = 3");
    if (!a.field().is_zero(a.at(2, 2)))
        fail(errc::precondition_violated, "psi33 is defined only for a33 = 0");
    Matrix b = a;
    b.at(0, 0) = a.field().neg(a.at(0, 0));
    b.at(1, 1) = a.field().neg(a.at(1, 1));
    return b;
}

Matrix ex1_converter(const Matrix& a) {
    const Field& f = a.field();
    Matrix b = Matrix::identity(f, a.dim());
    b.at(a.dim() - 1, a.dim() - 1) = per_laplace(a);
    return b;
}

Matrix ex2_exchanger(const Matrix& a, int m) {
    const Field& f = a.field();
    if (m < 2) fail(errc::dimension_mismatch, "ex2_exchanger requires m >= 2");
    if (f.characteristic() == 2) return a; // per = det already
    fe h = half(f);
    fe d = det(a), p = per_laplace(a);
    Matrix b = Matrix::identity(f, m);
    b.at(0, 0) = f.one();
    b.at(0, 1) = f.mul(h, f.sub(d, p));
    b.at(1, 0) = f.one();
    b.at(1, 1) = f.mul(h, f.add(d, p));
    return b;
}

Matrix delta_family(const Field& f, int n, fe lam, fe mu, fe alpha) {
    if (n < 2) fail(errc::dimension_mismatch, "delta_family requires n >= 2");
    if (f.is_zero(alpha)) fail(errc::zero_alpha, "delta_family requires alpha != 0");
    fe h = half(f);
    Matrix b = Matrix::identity(f, n);
    b.at(0, 0) = alpha;
    b.at(0, 1) = f.mul(h, f.sub(lam, mu));
    b.at(1, 0) = f.one();
    b.at(1, 1) = f.mul(f.mul(h, f.add(lam, mu)), f.inv(alpha));
    return b;
}

ConverterSpec converter_spec(ConverterId id, const Field& f, int n) {
    ConverterSpec s;
    switch (id) {
    case ConverterId::polya2:
        s = {"polya2", 2, false, [](const Matrix& a) { return polya_2x2(a); }, nullptr};
        break;
    case ConverterId::psi33:
        s = {"psi33", 3, false, [](const Matrix& a) { return psi33(a); },
             [](const Matrix& a) { return a.field().is_zero(a.at(2, 2)); }};
        break;
    case ConverterId::ex1:
        s = {"ex1", n, false, [](const Matrix& a) { return ex1_converter(a); }, nullptr};
        break;
    case ConverterId::ex2:
        s = {"ex2", n < 2 ? 2 : n, true,
             [n](const Matrix& a) { return ex2_exchanger(a, std::max(n, 2)); }, nullptr};
        break;
    case ConverterId::delta:
        fail(errc::precondition_violated, "delta is verified over (lam,mu,alpha) triples");
    }
    return s;
}

VerifyResult verify_converter(const ConverterSpec& spec, const Field& f, VerifyMode mode,
                              std::uint64_t budget_or_trials, std::uint64_t seed) {
    auto t0 = clock_type::now();
    VerifyResult res;
    res.name = spec.name;
    res.pass = true;
    const int n = spec.n;
    const bool char2 = f.characteristic() == 2;

    auto check_one = [&](const Matrix& a) {
        if (spec.domain && !spec.domain(a)) return true;
        Matrix b = spec.map(a);
        ++res.checked;
        if (per_laplace(a) != det(b)) return false;
        if (spec.exchange && !char2 && det(a) != per_laplace(b)) return false;
        return true;
    };

    if (mode == VerifyMode::exhaustive) {
        std::uint64_t total = check_budget(f, n * n, budget_or_trials);
        Matrix a(f, n);
        const std::uint32_t q = f.order();
        bool done = false;
        for (std::uint64_t idx = 0; idx < total && !done; ++idx) {
            if (!check_one(a)) {
                res.pass = false;
                res.counterexample = a.to_string();
                done = true;
            }
            fe* e = a.data();
            for (int i = 0; i < n * n; ++i) {
                if (++e[i] < q) break;
                e[i] = 0;
            }
        }
    } else {
        std::seed_seq sseq{seed};
        std::mt19937_64 rng(sseq);
        std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
        Matrix a(f, n);
        for (std::uint64_t t = 0; t < budget_or_trials; ++t) {
            do {
                for (int i = 0; i < n * n; ++i) a.data()[i] = fe(dist(rng));
            } while (spec.domain && !spec.domain(a));
            if (!check_one(a)) {
                res.pass = false;
                res.counterexample = a.to_string();
                break;
            }
        }
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

VerifyResult verify_delta_family(const Field& f, int n) {
    auto t0 = clock_type::now();
    VerifyResult res;
    res.name = "delta";
    res.pass = true;
    const std::uint32_t q = f.order();
    for (std::uint32_t lam = 0; lam < q && res.pass; ++lam)
        for (std::uint32_t mu = 0; mu < q && res.pass; ++mu)
            for (std::uint32_t alpha = 1; alpha < q && res.pass; ++alpha) {
                Matrix m = delta_family(f, n, fe(lam), fe(mu), fe(alpha));
                ++res.checked;
                if (per_laplace(m) != fe(lam) || det(m) != fe(mu)) {
                    res.pass = false;
                    res.counterexample = "lam=" + f.to_string(fe(lam)) + " mu=" +
                                         f.to_string(fe(mu)) + " alpha=" + f.to_string(fe(alpha));
                }
            }
    res.elapsed_ms = ms_since(t0);
    return res;
}

ConverterId converter_from_name(std::string_view name) {
    if (name == "polya2") return ConverterId::polya2;
    if (name == "psi33") return ConverterId::psi33;
    if (name == "ex1") return ConverterId::ex1;
    if (name == "ex2") return ConverterId::ex2;
    if (name == "delta") return ConverterId::delta;
    fail(errc::parse_error, "unknown converter '" + std::string(name) + "'");
}

} // namespace pc
