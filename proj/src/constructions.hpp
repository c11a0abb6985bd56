#pragma once

#include <functional>
#include <optional>
#include <string>

#include "census.hpp"
#include "matrix.hpp"

namespace pc {

// [[a11, -a12], [a21, a22]]: per A = det of the result.  n = 2 only.
Matrix polya_2x2(const Matrix& a);

// Negates entries (1,1) and (2,2); defined on the a33 = 0 slice of M_3.
Matrix psi33(const Matrix& a);

// Id_(n-1) + per(A) block diagonal; det of the result = per A.
Matrix ex1_converter(const Matrix& a);

// [[1, (det A - per A)/2], [1, (det A + per A)/2]] + Id_(m-2); swaps per
// and det.  For characteristic 2 returns A itself (per = det there).
Matrix ex2_exchanger(const Matrix& a, int m);

// [[alpha, (lam-mu)/2], [1, (lam+mu)/(2 alpha)]] + Id_(n-2): a matrix
// with per = lam, det = mu for every nonzero alpha.  Needs ch != 2.
Matrix delta_family(const Field& f, int n, fe lam, fe mu, fe alpha);

enum class ConverterId { polya2, psi33, ex1, ex2, delta };
enum class VerifyMode { exhaustive, random };

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::uint64_t checked = 0;
    std::string counterexample; // matrix literal (or triple) when !pass
    double elapsed_ms = 0;
};

// Checks a converter's defining identity per A = det Phi(A) on every
// input (exhaustive) or on sampled inputs (random).  `exchange` adds the
// second identity det A = per Phi(A).
struct ConverterSpec {
    std::string name;
    int n = 2;
    bool exchange = false;
    std::function<Matrix(const Matrix&)> map;
    std::function<bool(const Matrix&)> domain; // input filter, may be null
};

ConverterSpec converter_spec(ConverterId id, const Field& f, int n);

VerifyResult verify_converter(const ConverterSpec& spec, const Field& f, VerifyMode mode,
                              std::uint64_t budget_or_trials, std::uint64_t seed = 0);

// Checks per = lam, det = mu for all (lam, mu, alpha) triples; returns a
// failing triple description when the identity breaks.
VerifyResult verify_delta_family(const Field& f, int n);

ConverterId converter_from_name(std::string_view name);

} // namespace pc
