#pragma once

#include <span>
#include <string>
#include <vector>

#include "gf.hpp"

namespace pc {

constexpr int kMaxDim = 12;

// Dense n-by-n matrix over a Field.  Entries are stored row-major.
class Matrix {
public:
    Matrix(const Field& f, int n);
    static Matrix identity(const Field& f, int n);

    // Semicolon-separated rows, comma-separated entries:
    // "1,2,0;0,1,1;2,2,1".  Extension-field entries are coefficient
    // tuples like "(1,2)".
    static Matrix parse(const Field& f, std::string_view literal);

    int dim() const { return n_; }
    const Field& field() const { return *f_; }

    fe at(int i, int j) const { return e_[std::size_t(i) * n_ + j]; }
    fe& at(int i, int j) { return e_[std::size_t(i) * n_ + j]; }

    const fe* data() const { return e_.data(); }
    fe* data() { return e_.data(); }

    // Submatrix with row i and column j deleted.
    Matrix minor_rc(int i, int j) const;

    // Deletes rows 1 and r and columns 1 and c (0-based), i.e. the
    // (n-2)-dimensional block used by the Laplace split.
    Matrix minor_1r_c1(int r, int c) const;

    bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    std::string to_string() const;

private:
    const Field* f_;
    int n_;
    std::vector<fe> e_;
};

// Permanent by Laplace expansion along the first row (O(n!)).
fe per_laplace(const Matrix& a);

// Permanent by Ryser's inclusion-exclusion with Gray-code row-sum
// updates (O(2^n n)).  The real sign (-1)^(n-|S|) becomes field negation,
// which also covers characteristic 2.
fe per_ryser(const Matrix& a);

fe det(const Matrix& a);

int rank(const Matrix& a);
int rank_rect(const Field& f, int rows, int cols, const fe* data);

// Matrix of per-minors: entry (i,j) is per(A_ij), indexed directly.
Matrix per_compound(const Matrix& a);

bool bilinear_zero(std::span<const fe> x, const Matrix& a, std::span<const fe> y);

// Raw-buffer variants used by the census inner loops (no allocation).
fe per_laplace_raw(const Field& f, int n, const fe* a);
fe per_ryser_raw(const Field& f, int n, const fe* a);
fe det_raw(const Field& f, int n, const fe* a);

} // namespace pc
