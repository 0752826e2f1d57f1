// Dense exact matrices over a FieldElement context.
#pragma once

#include "hq/field.hpp"

#include <optional>
#include <vector>

namespace hq {

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, FieldContext ctx = {});
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static ExactMatrix identity(std::size_t n, FieldContext ctx = {});
    static ExactMatrix diag(const std::vector<FieldElement>& d);
    static ExactMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows);
    static ExactMatrix from_columns(const std::vector<std::vector<FieldElement>>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    FieldContext context() const;

    FieldElement& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    const std::vector<FieldElement>& entries() const { return e_; }

    std::vector<FieldElement> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<FieldElement>& v);
    ExactMatrix transpose() const;
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    FieldElement trace() const;
    bool is_zero() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

inline bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }
ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const FieldElement& s, const ExactMatrix& m);
std::vector<FieldElement> operator*(const ExactMatrix& a, const std::vector<FieldElement>& v);

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_scale(const FieldElement& s, const ExactMatrix& m);
ExactMatrix mat_inverse(const ExactMatrix& m);
// M + s*I
ExactMatrix shift(const ExactMatrix& m, const FieldElement& s);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

// Reduced row echelon form; pivot columns are returned through pivots.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const ExactMatrix& m);
// X with A X = B, or empty if inconsistent. A must have full column rank.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

struct Subspace {
    std::size_t ambient_dim = 0;
    ExactMatrix basis;  // columns

    std::size_t dim() const { return basis.cols(); }
    std::vector<FieldElement> vec(std::size_t i) const { return basis.column(i); }
    bool contains(const std::vector<FieldElement>& v) const;
    // Reduced column echelon form of the basis; equal subspaces give equal forms.
    ExactMatrix canonical() const;
    bool same_as(const Subspace& o) const;
};

Subspace make_subspace(std::size_t ambient, const std::vector<std::vector<FieldElement>>& vecs, FieldContext ctx = {});
Subspace kernel_basis(const ExactMatrix& m);
Subspace eigenspace(const ExactMatrix& m, const FieldElement& mu);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

bool is_diagonal(const ExactMatrix& m);
bool is_tridiagonal(const ExactMatrix& m);
bool is_irreducible_tridiagonal(const ExactMatrix& m);
bool is_upper_bidiagonal(const ExactMatrix& m);
bool is_lower_bidiagonal(const ExactMatrix& m);
bool is_upper_tridiagonal(const ExactMatrix& m);
bool is_lower_tridiagonal(const ExactMatrix& m);
std::vector<FieldElement> diagonal(const ExactMatrix& m);

// P^{-1} M P
ExactMatrix change_of_basis(const ExactMatrix& m, const ExactMatrix& p);
// Matrix of M on W in W's basis; throws if W is not M-invariant.
ExactMatrix restrict(const ExactMatrix& m, const Subspace& w);

// Monic characteristic polynomial, coefficients from degree 0 up.
std::vector<FieldElement> char_poly(const ExactMatrix& m);

}  // namespace hq
