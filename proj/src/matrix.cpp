#include "matrix.hpp"

#include <array>
#include <bit>

namespace pc {

Matrix::Matrix(const Field& f, int n) : f_(&f), n_(n), e_(std::size_t(n) * n, 0) {
    if (n < 1 || n > kMaxDim)
        fail(errc::dimension_mismatch,
             "matrix dimension " + std::to_string(n) + " outside [1," + std::to_string(kMaxDim) + "]");
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::parse(const Field& f, std::string_view literal) {
    std::vector<std::vector<fe>> rows;
    std::size_t start = 0;
    auto parse_row = [&](std::string_view row) {
        std::vector<fe> out;
        std::size_t pos = 0;
        int depth = 0;
        std::size_t tok = 0;
        for (pos = 0; pos <= row.size(); ++pos) {
            if (pos == row.size() || (row[pos] == ',' && depth == 0)) {
                out.push_back(f.parse_element(row.substr(tok, pos - tok)));
                tok = pos + 1;
            } else if (row[pos] == '(') {
                ++depth;
            } else if (row[pos] == ')') {
                --depth;
            }
        }
        return out;
    };
    while (start <= literal.size()) {
        auto pos = literal.find(';', start);
        auto row = literal.substr(start, pos == std::string_view::npos ? pos : pos - start);
        rows.push_back(parse_row(row));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    int n = int(rows.size());
    Matrix m(f, n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n)
            fail(errc::parse_error, "matrix literal is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::minor_rc(int i, int j) const {
    Matrix m(*f_, n_ - 1);
    int r = 0;
    for (int a = 0; a < n_; ++a) {
        if (a == i) continue;
        int c = 0;
        for (int b = 0; b < n_; ++b) {
            if (b == j) continue;
            m.at(r, c++) = at(a, b);
        }
        ++r;
    }
    return m;
}

Matrix Matrix::minor_1r_c1(int r, int c) const {
    Matrix m(*f_, n_ - 2);
    int ro = 0;
    for (int a = 1; a < n_; ++a) {
        if (a == r) continue;
        int co = 0;
        for (int b = 1; b < n_; ++b) {
            if (b == c) continue;
            m.at(ro, co++) = at(a, b);
        }
        ++ro;
    }
    return m;
}

std::string Matrix::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s += ";";
        for (int j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += f_->to_string(at(i, j));
        }
    }
    return s;
}

namespace {

fe per_rec(const Field& f, int n, const fe* a, int row, std::uint32_t colmask) {
    if (row == n) return f.one();
    fe acc = f.zero();
    for (std::uint32_t m = colmask; m; m &= m - 1) {
        int j = std::countr_zero(m);
        fe aij = a[std::size_t(row) * n + j];
        if (f.is_zero(aij)) continue;
        acc = f.add(acc, f.mul(aij, per_rec(f, n, a, row + 1, colmask & ~(1u << j))));
    }
    return acc;
}

} // namespace

fe per_laplace_raw(const Field& f, int n, const fe* a) {
    return per_rec(f, n, a, 0, (1u << n) - 1);
}

fe per_ryser_raw(const Field& f, int n, const fe* a) {
    if (n == 1) return a[0];
    std::array<fe, kMaxDim> sums{};
    fe total = f.zero();
    std::uint32_t prev = 0;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t gray = s ^ (s >> 1);
        std::uint32_t delta = gray ^ prev;
        int j = std::countr_zero(delta);
        if (gray & delta) {
            for (int i = 0; i < n; ++i)
                sums[i] = f.add(sums[i], a[std::size_t(i) * n + j]);
        } else {
            for (int i = 0; i < n; ++i)
                sums[i] = f.sub(sums[i], a[std::size_t(i) * n + j]);
        }
        prev = gray;
        fe prod = sums[0];
        for (int i = 1; i < n; ++i) prod = f.mul(prod, sums[i]);
        // sign (-1)^(n - |S|) as field negation
        if ((n - std::popcount(gray)) & 1) prod = f.neg(prod);
        total = f.add(total, prod);
    }
    return total;
}

fe det_raw(const Field& f, int n, const fe* a) {
    std::array<fe, std::size_t(kMaxDim) * kMaxDim> w;
    std::copy(a, a + std::size_t(n) * n, w.begin());
    bool negate = false;
    fe prod = f.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!f.is_zero(w[std::size_t(r) * n + col])) { piv = r; break; }
        if (piv < 0) return f.zero();
        if (piv != col) {
            for (int j = col; j < n; ++j)
                std::swap(w[std::size_t(piv) * n + j], w[std::size_t(col) * n + j]);
            negate = !negate;
        }
        fe p = w[std::size_t(col) * n + col];
        prod = f.mul(prod, p);
        fe pinv = f.inv(p);
        for (int r = col + 1; r < n; ++r) {
            fe factor = w[std::size_t(r) * n + col];
            if (f.is_zero(factor)) continue;
            factor = f.mul(factor, pinv);
            for (int j = col; j < n; ++j)
                w[std::size_t(r) * n + j] =
                    f.sub(w[std::size_t(r) * n + j], f.mul(factor, w[std::size_t(col) * n + j]));
        }
    }
    return negate ? f.neg(prod) : prod;
}

fe per_laplace(const Matrix& a) { return per_laplace_raw(a.field(), a.dim(), a.data()); }
fe per_ryser(const Matrix& a) { return per_ryser_raw(a.field(), a.dim(), a.data()); }
fe det(const Matrix& a) { return det_raw(a.field(), a.dim(), a.data()); }

int rank_rect(const Field& f, int rows, int cols, const fe* data) {
    std::vector<fe> w(data, data + std::size_t(rows) * cols);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(w[std::size_t(i) * cols + col])) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(w[std::size_t(piv) * cols + j], w[std::size_t(r) * cols + j]);
        fe pinv = f.inv(w[std::size_t(r) * cols + col]);
        for (int i = r + 1; i < rows; ++i) {
            fe factor = w[std::size_t(i) * cols + col];
            if (f.is_zero(factor)) continue;
            factor = f.mul(factor, pinv);
            for (int j = col; j < cols; ++j)
                w[std::size_t(i) * cols + j] =
                    f.sub(w[std::size_t(i) * cols + j], f.mul(factor, w[std::size_t(r) * cols + j]));
        }
        ++r;
    }
    return r;
}

int rank(const Matrix& a) { return rank_rect(a.field(), a.dim(), a.dim(), a.data()); }

Matrix per_compound(const Matrix& a) {
    int n = a.dim();
    if (n < 2) fail(errc::dimension_mismatch, "per_compound requires n >= 2");
    Matrix out(a.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = per_laplace(a.minor_rc(i, j));
    return out;
}

bool bilinear_zero(std::span<const fe> x, const Matrix& a, std::span<const fe> y) {
    const Field& f = a.field();
    int n = a.dim();
    if (int(x.size()) != n || int(y.size()) != n)
        fail(errc::dimension_mismatch, "bilinear form dimension mismatch");
    fe acc = f.zero();
    for (int i = 0; i < n; ++i) {
        if (f.is_zero(x[i])) continue;
        fe row = f.zero();
        for (int j = 0; j < n; ++j) row = f.add(row, f.mul(a.at(i, j), y[j]));
        acc = f.add(acc, f.mul(x[i], row));
    }
    return f.is_zero(acc);
}

} // namespace pc
