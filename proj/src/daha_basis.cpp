#include "hq/daha.hpp"

namespace hq {

namespace {

FieldElement qp(const FieldElement& q, long e) { return int_pow(q, e); }

FieldElement unit(FieldContext ctx) { return FieldElement(Rational(1), ctx); }

ExactMatrix basis_vector(std::size_t n, std::size_t i, FieldContext ctx) {
    ExactMatrix v(n, 1, ctx);
    v(i, 0) = unit(ctx);
    return v;
}

void require_type(const HqModule& m) {
    if (!m.xtype || m.mu.size() != m.dim()) throw DahaError("operation needs a module built from a type and ladder");
}

// sign e with k^2 = q^{-n-1} and k = e q^{-(n+1)/2}; 1 for DS
FieldElement type_sign(const HqModule& m) {
    const auto& k = m.params.k;
    int n = m.params.n;
    FieldElement s = qp(m.params.q, (n + 1) / 2);
    switch (*m.xtype) {
        case XType::DS: return FieldElement(1);
        case XType::DDa: return k[0] * s;
        case XType::DDb: return k[3] * s;
        case XType::SSa: return k[1] * s;
        case XType::SSb: return k[2] * s;
    }
    return FieldElement(1);
}

}  // namespace

Seq e_sequence(const HqModule& m) {
    require_type(m);
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    FieldElement one(1), K = k[0] * k[1] * k[2] * k[3];
    Seq e{unit(m.context())};
    for (int r = 1; r <= m.params.n; ++r) {
        FieldElement qr = qp(q, r), num = one, den;
        bool even = r % 2 == 0;
        switch (*m.xtype) {
            case XType::DS:
            case XType::DDa:
                den = even ? (one - qr) * (one - k[0] * k[0] * qr)
                           : (one - K * qr) * (one - k[0] * k[1] * k[2].inv() * k[3] * qr);
                break;
            case XType::DDb:
                if (even) {
                    num = -one;
                    den = k[0] * k[0] * (one - qr) * (one - k[3] * k[3] * qr);
                } else {
                    num = -(k[2] * k[2]);
                    den = (one - K * qr) * (one - k[0] * k[1].inv() * k[2] * k[3] * qr);
                }
                break;
            case XType::SSa:
                if (even) {
                    num = -one;
                    den = k[2] * k[2] * (one - qr) * (one - k[1] * k[1] * qr);
                } else {
                    num = -(k[0] * k[0]);
                    den = (one - K * qr) * (one - k[0] * k[1] * k[2] * k[3].inv() * qr);
                }
                break;
            case XType::SSb:
                den = even ? (one - qr) * (one - k[2] * k[2] * qr)
                           : (one - K * qr) * (one - k[0].inv() * k[1] * k[2] * k[3] * qr);
                break;
        }
        if (den.is_zero()) throw DahaError("e_" + std::to_string(r) + " has a zero denominator");
        e.push_back(num / den);
    }
    return e;
}

UBasis u_basis(const HqModule& m) {
    require_type(m);
    const FieldElement& q = m.params.q;
    const auto& k = m.params.k;
    int n = m.params.n;
    std::size_t N = m.dim();
    FieldContext ctx = m.context();
    Derived d = derived_elements(m);
    UBasis ub;
    ub.beta = beta_sequence(m);
    ub.e = e_sequence(m);
    Seq mu = m.mu;
    mu.push_back(ladder_value(*m.xtype, n + 1, k, q));
    FieldElement qm2 = qp(q, -2);

    std::vector<ExactMatrix> u{basis_vector(N, 0, ctx)};
    for (int r = 1; r <= n + 1; ++r) {
        FieldElement p = mu[r - 1] * mu[r];
        const ExactMatrix* Yp;
        if (p.is_one()) Yp = &d.Y;
        else if (p == qm2) Yp = &d.Yinv;
        else throw DahaError("ladder entries " + std::to_string(r - 1) + ", " + std::to_string(r) + " are not adjacent");
        u.push_back(u.back() - ub.beta[r - 1] * (*Yp * u.back()));
    }
    ub.checks.add("u_{n+1} = 0", u.back().is_zero());
    u.pop_back();
    ub.U = ExactMatrix(N, N, ctx);
    ub.Uprime = ExactMatrix(N, N, ctx);
    FieldElement acc = unit(ctx);
    for (std::size_t r = 0; r < N; ++r) {
        acc = acc * ub.e[r];
        for (std::size_t i = 0; i < N; ++i) {
            ub.U(i, r) = u[r](i, 0);
            ub.Uprime(i, r) = acc * u[r](i, 0);
        }
    }
    bool indep = rank(ub.U) == N;
    ub.checks.add("u_0..u_n linearly independent", indep);
    if (!indep) return ub;

    ExactMatrix Ui = mat_inverse(ub.U);
    ExactMatrix Yu = Ui * d.Y * ub.U, Yiu = Ui * d.Yinv * ub.U, Au = Ui * d.A * ub.U;
    ub.checks.add("Y lower tridiagonal in u-basis", is_lower_tridiagonal(Yu));
    ub.checks.add("Y^-1 lower tridiagonal in u-basis", is_lower_tridiagonal(Yiu));
    ub.checks.add("A lower tridiagonal in u-basis", is_lower_tridiagonal(Au));
    ub.checks.add("Y diagonal in u-basis matches beta table", diagonal(Yu) == predicted_y_spectrum(m));

    ExactMatrix Pi = mat_inverse(ub.Uprime);
    ExactMatrix Xu = Pi * d.X * ub.Uprime, Xiu = Pi * d.Xinv * ub.Uprime, Bu = Pi * d.B * ub.Uprime;
    ub.checks.add("X upper tridiagonal in u'-basis", is_upper_tridiagonal(Xu));
    ub.checks.add("X^-1 upper tridiagonal in u'-basis", is_upper_tridiagonal(Xiu));
    ub.checks.add("B upper tridiagonal in u'-basis", is_upper_tridiagonal(Bu));

    if (*m.xtype == XType::DS || *m.xtype == XType::DDa) {
        ExactMatrix E(N, N, ctx);
        FieldElement kk = k[0] * k[3];
        for (int r = 0; r <= n; ++r) {
            std::size_t c = static_cast<std::size_t>(r);
            if (r % 2 == 0) {
                FieldElement x = kk * qp(q, r);
                E(c, c) = x;
                if (r >= 1) E(c - 1, c) = x.inv();
                if (r >= 2) E(c - 2, c) = -x.inv();
            } else {
                FieldElement x = (kk * qp(q, r + 1)).inv();
                E(c, c) = x;
                E(c - 1, c) = -x;
            }
        }
        ub.checks.add_eq("X on u'-basis matches closed form", Xu, E);
    }
    return ub;
}

std::pair<int, int> eigenspace_diameters(XType t, int n) {
    switch (t) {
        case XType::DS: return {n / 2, (n - 2) / 2};
        case XType::DDa: return {(n + 1) / 2, (n - 3) / 2};
        default: return {(n - 1) / 2, (n - 1) / 2};
    }
}

T0Split t0_split(const HqModule& m) {
    require_type(m);
    const auto& k = m.params.k;
    if ((k[0] * k[0]).is_one()) throw DahaError("t0 split needs k0^2 != 1");
    int n = m.params.n;
    auto [d, dp] = eigenspace_diameters(*m.xtype, n);
    if (dp < 0) throw DahaError("V(k0^-1) is zero for this type and n");
    UBasis ub = u_basis(m);
    if (!ub.checks.ok()) throw DahaError("u-basis check failed: " + ub.checks.failed_names().front());
    Derived dv = derived_elements(m);
    std::size_t N = m.dim();
    std::vector<int> plus_idx, minus_idx;
    switch (*m.xtype) {
        case XType::DS:
            for (int r = 0; r <= n / 2; ++r) plus_idx.push_back(2 * r);
            for (int r = 1; r <= n / 2; ++r) minus_idx.push_back(2 * r);
            break;
        case XType::DDa:
            for (int r = 0; r <= (n - 1) / 2; ++r) plus_idx.push_back(2 * r);
            plus_idx.push_back(n);
            for (int r = 1; r <= (n - 1) / 2; ++r) minus_idx.push_back(2 * r);
            break;
        case XType::DDb:
        case XType::SSa:
            for (int r = 0; r <= (n - 1) / 2; ++r) {
                plus_idx.push_back(2 * r);
                minus_idx.push_back(2 * r + 1);
            }
            break;
        case XType::SSb:
            for (int r = 0; r <= (n - 1) / 2; ++r) {
                plus_idx.push_back(2 * r);
                minus_idx.push_back(2 * r);
            }
            break;
    }
    auto apply = [&](const ExactMatrix& F, const std::vector<int>& idx) {
        std::vector<std::vector<FieldElement>> vecs;
        for (int r : idx) vecs.push_back(F * ub.U.column(static_cast<std::size_t>(r)));
        return make_subspace(N, vecs, m.context());
    };
    T0Split s;
    s.d = d;
    s.dprime = dp;
    try {
        s.plus = apply(*dv.Fplus, plus_idx);
        s.minus = apply(*dv.Fminus, minus_idx);
    } catch (const MatrixError&) {
        throw DahaError("t0 eigenspace basis vectors are dependent");
    }
    if (s.plus.dim() != static_cast<std::size_t>(d + 1) || s.minus.dim() != static_cast<std::size_t>(dp + 1))
        throw DahaError("t0 eigenspace dimension mismatch");
    if (!s.plus.same_as(eigenspace(m.t[0], k[0])) || !s.minus.same_as(eigenspace(m.t[0], k[0].inv())))
        throw DahaError("t0 eigenspace bases do not span the eigenspaces");
    return s;
}

Seq predicted_A_diagonal(const HqModule& m, bool plus) {
    require_type(m);
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    auto [d, dp] = eigenspace_diameters(*m.xtype, m.params.n);
    int len = plus ? d : dp;
    XType t = *m.xtype;
    bool k01 = t == XType::DS || t == XType::DDa || t == XType::SSa;
    Seq out;
    for (int r = 0; r <= len; ++r) {
        FieldElement x = k01 ? k[0] * k[1] * qp(q, plus ? 2 * r : 2 * r + 2) : k[2] * k[3] * qp(q, 2 * r + 1);
        out.push_back(sym(x));
    }
    return out;
}

Seq predicted_B_diagonal(const HqModule& m, bool plus) {
    require_type(m);
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    auto [d, dp] = eigenspace_diameters(*m.xtype, m.params.n);
    int len = plus ? d : dp;
    Seq out;
    for (int r = 0; r <= len; ++r) {
        FieldElement x = is_D(*m.xtype) ? k[0] * k[3] * qp(q, plus ? 2 * r : 2 * r + 2) : k[1] * k[2] * qp(q, 2 * r + 1);
        out.push_back(sym(x));
    }
    return out;
}

HuangData closed_form_huang(const HqModule& m, bool plus) {
    require_type(m);
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    int n = m.params.n;
    auto [d, dp] = eigenspace_diameters(*m.xtype, n);
    FieldElement s = q * q, qk = plus ? q.inv() : q;
    HuangData h;
    h.d = plus ? d : dp;
    switch (*m.xtype) {
        case XType::DS: {
            FieldElement f = qp(q, plus ? n / 2 : (n + 2) / 2);
            h.a = k[0] * k[1] * f;
            h.b = k[0] * k[3] * f;
            h.c = k[0] * k[2] * f;
            return h;
        }
        case XType::DDa: h.a = k[1]; h.b = k[3]; h.c = k[2]; break;
        case XType::DDb: h.a = k[2]; h.b = k[0] * qk; h.c = k[1]; break;
        case XType::SSa: h.a = k[0] * qk; h.b = k[2]; h.c = k[3]; break;
        case XType::SSb: h.a = k[3]; h.b = k[1]; h.c = k[0] * qk; break;
    }
    FieldElement e = type_sign(m);
    h.a = e * h.a;
    h.b = e * h.b;
    h.c = e * h.c;
    return h;
}

Extraction restricted_leonard_pairs(const HqModule& m) {
    require_type(m);
    Extraction ex;
    T0Split sp = t0_split(m);
    Derived dv = derived_elements(m);
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    for (bool plus : {true, false}) {
        std::string side = plus ? "V(k0)" : "V(k0^-1)";
        const Subspace& W = plus ? sp.plus : sp.minus;
        RestrictedPair& rp = plus ? ex.plus : ex.minus;
        rp.pair.A = restrict(dv.A, W);
        rp.pair.Astar = restrict(dv.B, W);
        Seq pa = predicted_A_diagonal(m, plus), pb = predicted_B_diagonal(m, plus);
        ex.checks.add("A lower bidiagonal on " + side, is_lower_bidiagonal(rp.pair.A));
        ex.checks.add("B upper bidiagonal on " + side, is_upper_bidiagonal(rp.pair.Astar));
        ex.checks.add("A diagonal on " + side + " matches table", diagonal(rp.pair.A) == pa);
        ex.checks.add("B diagonal on " + side + " matches table", diagonal(rp.pair.Astar) == pb);
        auto ord = recognize_leonard_pair(rp.pair.A, rp.pair.Astar, pa, pb);
        ex.checks.add("Leonard pair on " + side, ord.has_value());
        if (!ord) throw DahaError("A, B do not act as a Leonard pair on " + side);
        rp.orderings = *ord;
        auto arrays = parameter_arrays(rp.pair, rp.orderings);
        auto h = huang_data_from_array(arrays[0], q);
        ex.checks.add("Huang data from parameter array on " + side, h.has_value());
        if (!h) throw DahaError("no Huang data on " + side);
        rp.generic = *h;
        rp.closed = closed_form_huang(m, plus);
        ex.checks.add("Huang data on " + side + " agrees with closed form", huang_equivalent(rp.generic, rp.closed));
        if (rp.closed.d >= 1) {
            FieldElement w = plus ? q.inv() * k[0] + q * k[0].inv() : q * k[0] + q.inv() * k[0].inv();
            FieldElement num = w * sym(k[2]) + sym(k[1]) * sym(k[3]) - sym(rp.closed.a) * sym(rp.closed.b);
            FieldElement rhs = num / (qp(q, rp.closed.d + 1) + qp(q, -rp.closed.d - 1));
            ex.checks.add("c + 1/c on " + side + " from the k's", sym(rp.generic.c) == rhs);
        }
    }
    return ex;
}

HqModule twist(const HqModule& m, Twist which, Report* checks) {
    const auto& t = m.t;
    const auto& ti = m.tinv;
    const auto& k = m.params.k;
    std::array<ExactMatrix, 4> g;
    HqParams p = m.params;
    if (which == Twist::Rho) {
        for (int i = 0; i < 4; ++i) g[i] = t[(i + 1) % 4];
        p.k = {k[1], k[2], k[3], k[0]};
    } else {
        g = {t[0], ti[0] * t[3] * t[0], t[1] * t[2] * ti[1], t[1]};
        p.k = {k[0], k[3], k[2], k[1]};
    }
    HqModule out = module_from_matrices(p, std::nullopt, g);
    Report rep = verify_hq_relations(out);
    Derived a = derived_elements(m), b = derived_elements(out);
    const FieldElement& q = m.params.q;
    if (which == Twist::Rho) {
        rep.add_eq("rho(X) = Y", b.X, a.Y);
        rep.add_eq("rho(Y) = q^-1 X^-1", b.Y, q.inv() * a.Xinv);
    } else {
        rep.add_eq("sigma(X) = t0^-1 Y t0", b.X, ti[0] * a.Y * t[0]);
        rep.add_eq("sigma(Y) = X", b.Y, a.X);
        rep.add_eq("sigma(A) = B", b.A, a.B);
        rep.add_eq("sigma(B) = A", b.B, a.A);
        rep.add_eq("sigma(T1) = T3", out.t[1] + out.tinv[1], t[3] + ti[3]);
        rep.add_eq("sigma(T3) = T1", out.t[3] + out.tinv[3], t[1] + ti[1]);
    }
    if (checks) checks->merge(rep);
    if (!rep.ok()) throw DahaError("twisted module fails: " + rep.failed_names().front());
    return out;
}

}  // namespace hq
