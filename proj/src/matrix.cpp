#include "hq/matrix.hpp"

#include <algorithm>

namespace hq {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldContext ctx)
    : rows_(rows), cols_(cols), e_(rows * cols, FieldElement(Rational(0), ctx)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw MatrixError("entry count does not match shape");
    context();
}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldContext ctx) {
    ExactMatrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(Rational(1), ctx);
    return m;
}

ExactMatrix ExactMatrix::diag(const std::vector<FieldElement>& d) {
    FieldContext ctx;
    for (const auto& x : d) ctx = join(ctx, x.context());
    ExactMatrix m(d.size(), d.size(), ctx);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows) {
    std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    std::vector<FieldElement> e;
    for (const auto& r : rows) {
        if (r.size() != nc) throw MatrixError("ragged rows");
        e.insert(e.end(), r.begin(), r.end());
    }
    return ExactMatrix(nr, nc, std::move(e));
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<FieldElement>>& cols, std::size_t rows) {
    ExactMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

FieldContext ExactMatrix::context() const {
    FieldContext ctx;
    for (const auto& x : e_)
        if (!x.is_rational() || !x.context().is_rational()) ctx = join(ctx, x.context());
    return ctx;
}

std::vector<FieldElement> ExactMatrix::column(std::size_t c) const {
    std::vector<FieldElement> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void ExactMatrix::set_column(std::size_t c, const std::vector<FieldElement>& v) {
    if (v.size() != rows_) throw MatrixError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw MatrixError("block out of range");
    ExactMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

FieldElement ExactMatrix::trace() const {
    FieldElement t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
ExactMatrix operator-(const ExactMatrix& a) { return FieldElement(-1) * a; }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw MatrixError("shape mismatch");
    ExactMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

ExactMatrix operator*(const FieldElement& s, const ExactMatrix& m) {
    ExactMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
    return r;
}

std::vector<FieldElement> operator*(const ExactMatrix& a, const std::vector<FieldElement>& v) {
    if (a.cols() != v.size()) throw MatrixError("shape mismatch");
    std::vector<FieldElement> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) { return a + b; }
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }
ExactMatrix mat_scale(const FieldElement& s, const ExactMatrix& m) { return s * m; }

ExactMatrix shift(const ExactMatrix& m, const FieldElement& s) {
    if (!m.square()) throw MatrixError("shift of non-square matrix");
    ExactMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += s;
    return r;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw MatrixError("shape mismatch");
    ExactMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
    ExactMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        FieldElement s = a(row, col).inv();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= s;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            FieldElement f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = piv;
    return a;
}

std::size_t rank(const ExactMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

ExactMatrix mat_inverse(const ExactMatrix& m) {
    if (!m.square()) throw MatrixError("inverse of non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(hstack(m, ExactMatrix::identity(n, m.context())), &piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw MatrixError("singular matrix");
    return r.block(0, n, n, n);
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw MatrixError("shape mismatch");
    std::size_t k = a.cols();
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(hstack(a, b), &piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] >= k) return std::nullopt;  // inconsistent
    if (piv.size() < k) throw MatrixError("solve: coefficient matrix lacks full column rank");
    return r.block(0, k, k, b.cols());
}

Subspace make_subspace(std::size_t ambient, const std::vector<std::vector<FieldElement>>& vecs, FieldContext ctx) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = vecs.empty() ? ExactMatrix(ambient, 0, ctx) : ExactMatrix::from_columns(vecs, ambient);
    if (rank(s.basis) != vecs.size()) throw MatrixError("subspace basis is linearly dependent");
    return s;
}

bool Subspace::contains(const std::vector<FieldElement>& v) const {
    ExactMatrix col(ambient_dim, 1);
    col.set_column(0, v);
    return rank(hstack(basis, col)) == dim();
}

ExactMatrix Subspace::canonical() const {
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(basis.transpose(), &piv);
    return r.block(0, 0, piv.size(), ambient_dim).transpose();
}

bool Subspace::same_as(const Subspace& o) const { return ambient_dim == o.ambient_dim && canonical() == o.canonical(); }

Subspace kernel_basis(const ExactMatrix& m) {
    std::vector<std::size_t> piv;
    ExactMatrix r = rref(m, &piv);
    std::size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<FieldElement>> vecs;
    FieldContext ctx = m.context();
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<FieldElement> v(n, FieldElement(Rational(0), ctx));
        v[f] = FieldElement(Rational(1), ctx);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        vecs.push_back(std::move(v));
    }
    Subspace s;
    s.ambient_dim = n;
    s.basis = vecs.empty() ? ExactMatrix(n, 0, ctx) : ExactMatrix::from_columns(vecs, n);
    return s;
}

Subspace eigenspace(const ExactMatrix& m, const FieldElement& mu) {
    if (!m.square()) throw MatrixError("eigenspace of non-square matrix");
    return kernel_basis(shift(m, -mu));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // x = A s = B t  <=>  [A | -B] (s,t) = 0
    if (a.dim() == 0 || b.dim() == 0) {
        Subspace z;
        z.ambient_dim = a.ambient_dim;
        z.basis = ExactMatrix(a.ambient_dim, 0);
        return z;
    }
    Subspace k = kernel_basis(hstack(a.basis, -b.basis));
    std::vector<std::vector<FieldElement>> vecs;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        auto st = k.vec(i);
        std::vector<FieldElement> s(st.begin(), st.begin() + static_cast<long>(a.dim()));
        vecs.push_back(a.basis * s);
    }
    Subspace r;
    r.ambient_dim = a.ambient_dim;
    r.basis = vecs.empty() ? ExactMatrix(a.ambient_dim, 0) : ExactMatrix::from_columns(vecs, a.ambient_dim);
    if (rank(r.basis) != r.dim()) throw MatrixError("intersection produced dependent vectors");
    return r;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    ExactMatrix all = hstack(a.basis, b.basis);
    std::vector<std::size_t> piv;
    rref(all, &piv);
    std::vector<std::vector<FieldElement>> vecs;
    for (auto p : piv) vecs.push_back(all.column(p));
    return make_subspace(a.ambient_dim, vecs);
}

namespace {
template <class Allowed>
bool pattern(const ExactMatrix& m, Allowed allowed) {
    if (!m.square()) throw MatrixError("shape predicate on non-square matrix");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero() && !allowed(static_cast<long>(c) - static_cast<long>(r))) return false;
    return true;
}
}  // namespace

bool is_diagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off == 0; });
}
bool is_tridiagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off >= -1 && off <= 1; });
}
bool is_irreducible_tridiagonal(const ExactMatrix& m) {
    if (!is_tridiagonal(m)) return false;
    for (std::size_t i = 0; i + 1 < m.rows(); ++i)
        if (m(i, i + 1).is_zero() || m(i + 1, i).is_zero()) return false;
    return true;
}
bool is_upper_bidiagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off == 0 || off == 1; });
}
bool is_lower_bidiagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off == 0 || off == -1; });
}
bool is_upper_tridiagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off >= 0 && off <= 2; });
}
bool is_lower_tridiagonal(const ExactMatrix& m) {
    return pattern(m, [](long off) { return off <= 0 && off >= -2; });
}

std::vector<FieldElement> diagonal(const ExactMatrix& m) {
    std::vector<FieldElement> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m(i, i));
    return d;
}

ExactMatrix change_of_basis(const ExactMatrix& m, const ExactMatrix& p) {
    if (!m.square() || !p.square() || m.rows() != p.rows()) throw MatrixError("shape mismatch");
    return mat_inverse(p) * m * p;
}

ExactMatrix restrict(const ExactMatrix& m, const Subspace& w) {
    if (w.dim() == 0) return ExactMatrix(0, 0);
    auto r = solve(w.basis, m * w.basis);
    if (!r) throw MatrixError("subspace is not invariant");
    return *r;
}

std::vector<FieldElement> char_poly(const ExactMatrix& m) {
    // Faddeev-LeVerrier: exact over characteristic zero.
    if (!m.square()) throw MatrixError("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    FieldContext ctx = m.context();
    std::vector<FieldElement> c(n + 1, FieldElement(Rational(0), ctx));
    c[n] = FieldElement(Rational(1), ctx);
    ExactMatrix mk(n, n, ctx);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * shift(mk, c[n - k + 1]);
        c[n - k] = -mk.trace() / FieldElement(static_cast<long>(k));
    }
    return c;
}

}  // namespace hq
