#include "hq/leonard.hpp"

#include "hq/poly.hpp"

#include <algorithm>

namespace hq {

Seq reversed(const Seq& s) { return Seq(s.rbegin(), s.rend()); }

namespace {

int sign_of(const FieldElement& x) {
    int r = sgn(x.rat()), i = sgn(x.irr());
    if (i == 0) return r;
    if (x.disc() < 0) return r != 0 ? r : i;  // no real order; any fixed total order
    if (r == 0 || r == i) return i;
    // r and i sqrt D have opposite signs
    Rational rr = x.rat() * x.rat(), ii = x.irr() * x.irr() * x.disc();
    return rr > ii ? r : i;
}

bool value_less(const FieldElement& a, const FieldElement& b) {
    if (a.disc() < 0 || b.disc() < 0) return serial_less(a, b);
    return sign_of(b - a) > 0;
}

}  // namespace

bool seq_less(const Seq& a, const Seq& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), value_less);
}

namespace {

FieldElement one_in(FieldContext ctx) { return FieldElement(Rational(1), ctx); }

bool distinct(const Seq& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) return false;
    return true;
}

// eigenvector matrix (columns) for the given eigenvalues, each eigenspace 1-dim
std::optional<ExactMatrix> eigenbasis(const ExactMatrix& m, const Seq& evs) {
    std::vector<std::vector<FieldElement>> cols;
    for (const auto& t : evs) {
        Subspace e = eigenspace(m, t);
        if (e.dim() != 1) return std::nullopt;
        cols.push_back(e.vec(0));
    }
    return ExactMatrix::from_columns(cols, m.rows());
}

// Orders the basis so that the off-diagonal support of b is a path; returns
// the vertex order or empty.
std::optional<std::vector<std::size_t>> path_order(const ExactMatrix& b) {
    std::size_t n = b.rows();
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool u = !b(i, j).is_zero(), l = !b(j, i).is_zero();
            if (u != l) return std::nullopt;
            if (u) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            }
        }
    if (n == 1) return std::vector<std::size_t>{0};
    if (edges != n - 1) return std::nullopt;
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].size() > 2 || adj[i].empty()) return std::nullopt;
        if (adj[i].size() == 1 && start == n) start = i;
    }
    if (start == n) return std::nullopt;
    std::vector<std::size_t> order{start};
    std::size_t prev = n, cur = start;
    while (order.size() < n) {
        std::size_t next = n;
        for (auto x : adj[cur])
            if (x != prev) next = x;
        if (next == n) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Standard ordering of the eigenvalues of `diag_side` (eigenbasis) such that
// `other` is irreducible tridiagonal in it.
std::optional<Seq> standard_ordering(const ExactMatrix& other, const ExactMatrix& diag_side, const Seq& spec) {
    auto p = eigenbasis(diag_side, spec);
    if (!p) return std::nullopt;
    ExactMatrix b = change_of_basis(other, *p);
    auto order = path_order(b);
    if (!order) return std::nullopt;
    Seq s;
    for (auto i : *order) s.push_back(spec[i]);
    Seq r = reversed(s);
    return seq_less(r, s) ? r : s;
}

FieldElement qpow(const FieldElement& q, long e) { return int_pow(q, e); }

}  // namespace

std::optional<Seq> multiplicity_free_spectrum(const ExactMatrix& m, const std::optional<Seq>& candidates) {
    if (!m.square()) throw MatrixError("spectrum of non-square matrix");
    std::size_t n = m.rows();
    Seq evs;
    if (candidates) {
        for (const auto& c : *candidates) {
            if (std::find(evs.begin(), evs.end(), c) != evs.end()) continue;
            std::size_t dim = eigenspace(m, c).dim();
            if (dim > 1) return std::nullopt;
            if (dim == 1) evs.push_back(c);
        }
    } else {
        auto roots = split_roots(char_poly(m));
        if (!roots) return std::nullopt;
        evs = *roots;
        if (!distinct(evs)) return std::nullopt;
        for (const auto& t : evs)
            if (eigenspace(m, t).dim() != 1) return std::nullopt;
    }
    if (evs.size() != n) return std::nullopt;
    return evs;
}

std::optional<StandardOrderings> recognize_leonard_pair(const ExactMatrix& A, const ExactMatrix& Astar,
                                                        const std::optional<Seq>& cand_A,
                                                        const std::optional<Seq>& cand_Astar) {
    if (!A.square() || !Astar.square() || A.rows() != Astar.rows() || A.rows() == 0) return std::nullopt;
    auto sa = multiplicity_free_spectrum(A, cand_A);
    auto ss = multiplicity_free_spectrum(Astar, cand_Astar);
    if (!sa || !ss) return std::nullopt;
    // A is irreducible tridiagonal in an A*-eigenbasis, and vice versa.
    auto theta_star = standard_ordering(A, Astar, *ss);
    auto theta = standard_ordering(Astar, A, *sa);
    if (!theta || !theta_star) return std::nullopt;
    return StandardOrderings{*theta, *theta_star};
}

Seq split_sequence(const LeonardPair& p, const Seq& theta, const Seq& theta_star) {
    const ExactMatrix& A = p.A;
    const ExactMatrix& As = p.Astar;
    std::size_t n = A.rows();
    if (theta.size() != n || theta_star.size() != n) throw LeonardError("ordering length mismatch");
    auto ea = eigenbasis(A, theta);
    auto es = eigenbasis(As, theta_star);
    if (!ea || !es) throw LeonardError("order not standard: eigenspace is not one-dimensional");
    std::size_t d = n - 1;
    std::vector<std::vector<FieldElement>> v;
    for (std::size_t r = 0; r <= d; ++r) {
        std::vector<std::vector<FieldElement>> lo, hi;
        for (std::size_t i = 0; i <= r; ++i) lo.push_back(es->column(i));
        for (std::size_t i = r; i <= d; ++i) hi.push_back(ea->column(i));
        Subspace u = intersect(make_subspace(n, lo), make_subspace(n, hi));
        if (u.dim() != 1) throw LeonardError("order not standard: U_r is not one-dimensional");
        if (r == 0) v.push_back(u.vec(0));
        else {
            auto next = shift(A, -theta[r - 1]) * v[r - 1];
            if (!u.contains(next)) throw LeonardError("order not standard: split vector leaves U_r");
            v.push_back(next);
        }
    }
    ExactMatrix V = ExactMatrix::from_columns(v, n);
    ExactMatrix a = change_of_basis(A, V), s = change_of_basis(As, V);
    Seq phi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement want_a = i == j ? theta[i] : (i == j + 1 ? one_in(a.context()) : FieldElement());
            if (a(i, j) != want_a) throw LeonardError("split form of A has the wrong shape");
            if (i == j && s(i, j) != theta_star[i]) throw LeonardError("split form of A* has the wrong diagonal");
            if (i != j && j != i + 1 && !s(i, j).is_zero()) throw LeonardError("split form of A* is not upper bidiagonal");
        }
    for (std::size_t r = 1; r <= d; ++r) {
        if (s(r - 1, r).is_zero()) throw LeonardError("split sequence has a zero entry");
        phi.push_back(s(r - 1, r));
    }
    return phi;
}

std::array<ParameterArray, 4> parameter_arrays(const LeonardPair& p, const StandardOrderings& ord) {
    const Seq& th = ord.theta;
    const Seq& ts = ord.theta_star;
    Seq phi = split_sequence(p, th, ts);
    Seq phi2 = split_sequence(p, reversed(th), ts);
    std::array<ParameterArray, 4> pa{
        ParameterArray{th, ts, phi, phi2},
        ParameterArray{th, reversed(ts), reversed(phi2), reversed(phi)},
        ParameterArray{reversed(th), ts, phi2, phi},
        ParameterArray{reversed(th), reversed(ts), reversed(phi), reversed(phi2)},
    };
    for (const auto& a : pa) {
        if (split_sequence(p, a.theta, a.theta_star) != a.phi) throw LeonardError("parameter array: phi mismatch");
        if (split_sequence(p, reversed(a.theta), a.theta_star) != a.phi2)
            throw LeonardError("parameter array: second split sequence mismatch");
    }
    return pa;
}

std::array<ParameterArray, 4> parameter_arrays(const LeonardPair& p) {
    auto ord = recognize_leonard_pair(p.A, p.Astar);
    if (!ord) throw LeonardError("not a Leonard pair");
    return parameter_arrays(p, *ord);
}

std::optional<FieldElement> qracah_parameter(const Seq& theta, const FieldElement& q) {
    if (theta.empty()) return std::nullopt;
    int d = static_cast<int>(theta.size()) - 1;
    if (d == 0) {
        FieldElement disc = theta[0] * theta[0] - FieldElement(4);
        if (!disc.is_rational()) return std::nullopt;
        auto s = sqrt_in_field(disc);
        if (!s) return std::nullopt;
        return (theta[0] + *s) / FieldElement(2);
    }
    FieldElement q2 = q * q, qm2 = q2.inv();
    FieldElement u = (theta[1] - theta[0] * qm2) / (q2 - qm2);
    FieldElement w = theta[0] - u;
    if (!(u * w).is_one()) return std::nullopt;
    for (int r = 0; r <= d; ++r)
        if (theta[r] != u * qpow(q, 2 * r) + w * qpow(q, -2 * r)) return std::nullopt;
    return u * qpow(q, d);
}

Seq qracah_ladder(const FieldElement& a, int d, const FieldElement& q) {
    Seq t;
    for (int r = 0; r <= d; ++r) t.push_back(a * qpow(q, 2 * r - d) + a.inv() * qpow(q, d - 2 * r));
    return t;
}

namespace {
Seq split_formula(const FieldElement& pre, const FieldElement& x, const FieldElement& y, int d, const FieldElement& q) {
    // pre q^{d+1} (q^r - q^{-r})(q^{r-d-1} - q^{d-r+1})(q^{-r} - x q^{r-d-1})(q^{-r} - y q^{r-d-1})
    Seq out;
    for (int r = 1; r <= d; ++r) {
        FieldElement t = pre * qpow(q, d + 1) * (qpow(q, r) - qpow(q, -r)) * (qpow(q, r - d - 1) - qpow(q, d - r + 1)) *
                         (qpow(q, -r) - x * qpow(q, r - d - 1)) * (qpow(q, -r) - y * qpow(q, r - d - 1));
        out.push_back(t);
    }
    return out;
}
}  // namespace

Seq huang_phi(const HuangData& h, const FieldElement& q) {
    const auto &a = h.a, &b = h.b, &c = h.c;
    return split_formula((a * b).inv(), a * b * c, a * b / c, h.d, q);
}

Seq huang_phi2(const HuangData& h, const FieldElement& q) {
    const auto &a = h.a, &b = h.b, &c = h.c;
    return split_formula(a / b, b * c / a, b / (a * c), h.d, q);
}

std::optional<HuangData> huang_data_from_array(const ParameterArray& pa, const FieldElement& q) {
    int d = static_cast<int>(pa.theta.size()) - 1;
    if (d < 0 || pa.theta_star.size() != pa.theta.size()) return std::nullopt;
    auto a = qracah_parameter(pa.theta, q);
    auto b = qracah_parameter(pa.theta_star, q);
    if (!a || !b) return std::nullopt;
    if (d == 0) return HuangData{*a, *b, one_in(a->context()), 0};
    if (pa.phi.size() != static_cast<std::size_t>(d) || pa.phi2.size() != static_cast<std::size_t>(d)) return std::nullopt;
    // phi_1 / K = q^{-2} - ab q^{-1-d} (c + 1/c) + a^2 b^2 q^{-2d}
    FieldElement ab = *a * *b;
    FieldElement K = ab.inv() * qpow(q, d + 1) * (q - q.inv()) * (qpow(q, -d) - qpow(q, d));
    FieldElement s = (qpow(q, -2) + ab * ab * qpow(q, -2 * d) - pa.phi[0] / K) / (ab * qpow(q, -1 - d));
    FieldElement disc = s * s - FieldElement(4);
    auto root = sqrt_in_field(disc);
    if (!root && !disc.is_rational()) throw LeonardError("extension required: c is not in the field of a and b");
    if (!root) {
        FieldContext ctx = join(join(a->context(), b->context()), join(s.context(), disc.context()));
        if (!ctx.is_rational()) throw LeonardError("extension required: c needs a second quadratic extension");
        Rational v = disc.rat();
        Integer D = squarefree_part(Integer(v.get_num() * v.get_den()));
        root = sqrt_in_field(disc.in(FieldContext(D.get_si())));
        if (!root) throw LeonardError("extension required");
    }
    FieldElement c = (s + *root) / FieldElement(2);
    if (c.is_zero()) return std::nullopt;
    HuangData h{*a, *b, c, d};
    if (huang_phi(h, q) != pa.phi || huang_phi2(h, q) != pa.phi2) return std::nullopt;
    return h;
}

bool check_huang_admissible(const HuangData& h, const FieldElement& q) {
    if (h.a.is_zero() || h.b.is_zero() || h.c.is_zero() || h.d < 0) return false;
    int d = h.d;
    FieldElement a2 = h.a * h.a, b2 = h.b * h.b;
    for (int e = 2 * d - 2; e >= 2 - 2 * d; e -= 2) {
        FieldElement x = qpow(q, e);
        if (a2 == x || b2 == x) return false;
    }
    const auto &a = h.a, &b = h.b, &c = h.c;
    FieldElement prods[4] = {a * b * c, b * c / a, a * c / b, a * b / c};
    for (int e = d - 1; e >= 1 - d; e -= 2) {
        FieldElement x = qpow(q, e);
        for (const auto& p : prods)
            if (p == x) return false;
    }
    return true;
}

bool huang_equivalent(const HuangData& h1, const HuangData& h2) {
    if (h1.d != h2.d) return false;
    auto match = [](const FieldElement& x, const FieldElement& y) { return x == y || x == y.inv(); };
    if (!match(h1.a, h2.a) || !match(h1.b, h2.b)) return false;
    return h1.d == 0 || match(h1.c, h2.c);
}

LeonardPair build_pair_from_huang(const HuangData& h, const FieldElement& q) {
    if (!check_huang_admissible(h, q)) throw LeonardError("inadmissible Huang data");
    Seq th = qracah_ladder(h.a, h.d, q), ts = qracah_ladder(h.b, h.d, q), phi = huang_phi(h, q);
    std::size_t n = static_cast<std::size_t>(h.d) + 1;
    FieldContext ctx = join(join(h.a.context(), h.b.context()), h.c.context());
    ExactMatrix A(n, n, ctx), As(n, n, ctx);
    for (std::size_t r = 0; r < n; ++r) {
        A(r, r) = th[r];
        As(r, r) = ts[r];
        if (r + 1 < n) {
            A(r + 1, r) = one_in(ctx);
            As(r, r + 1) = phi[r];
        }
    }
    LeonardPair p{A, As};
    auto ord = recognize_leonard_pair(A, As, th, ts);
    if (!ord) throw LeonardError("constructed matrices are not a Leonard pair");
    auto pa = parameter_arrays(p, *ord);
    auto back = huang_data_from_array(pa[0], q);
    if (!back || !huang_equivalent(*back, h)) throw LeonardError("Huang data round trip failed");
    return p;
}

std::array<FieldElement, 3> aw_scalars(const HuangData& h, const FieldElement& q) {
    FieldElement qd = qpow(q, h.d + 1) + qpow(q, -h.d - 1), den = q + q.inv();
    FieldElement A = sym(h.a), B = sym(h.b), C = sym(h.c);
    return {(qd * A + B * C) / den, (qd * B + C * A) / den, (qd * C + A * B) / den};
}

namespace {
ExactMatrix aw_lhs(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const FieldElement& q) {
    // x + (q y z - q^{-1} z y)/(q^2 - q^{-2})
    FieldElement den = (q * q - (q * q).inv()).inv();
    return x + den * (q * (y * z) - q.inv() * (z * y));
}
}  // namespace

std::array<bool, 3> aw_relations_hold(const ExactMatrix& A, const ExactMatrix& As, const ExactMatrix& Ae,
                                      const HuangData& h, const FieldElement& q) {
    auto g = aw_scalars(h, q);
    ExactMatrix I = ExactMatrix::identity(A.rows(), A.context());
    return {aw_lhs(A, As, Ae, q) == g[0] * I, aw_lhs(As, Ae, A, q) == g[1] * I, aw_lhs(Ae, A, As, q) == g[2] * I};
}

ExactMatrix askey_wilson_third(const LeonardPair& p, const HuangData& h, const FieldElement& q) {
    if (p.A.rows() != static_cast<std::size_t>(h.d) + 1) throw LeonardError("Huang data diameter mismatch");
    auto g = aw_scalars(h, q);
    const ExactMatrix& A = p.A;
    const ExactMatrix& As = p.Astar;
    FieldElement den = (q * q - (q * q).inv()).inv();
    ExactMatrix Ae = g[2] * ExactMatrix::identity(A.rows(), A.context()) - den * (q * (A * As) - q.inv() * (As * A));
    auto ok = aw_relations_hold(A, As, Ae, h, q);
    if (!ok[0] || !ok[1] || !ok[2]) throw LeonardError("Askey-Wilson relations fail");
    return Ae;
}

}  // namespace hq
