#include "hq/daha.hpp"

#include <algorithm>

namespace hq {

std::string to_string(XType t) {
    switch (t) {
        case XType::DS: return "DS";
        case XType::DDa: return "DDa";
        case XType::DDb: return "DDb";
        case XType::SSa: return "SSa";
        case XType::SSb: return "SSb";
    }
    return "?";
}

std::optional<XType> parse_xtype(const std::string& s) {
    for (auto t : {XType::DS, XType::DDa, XType::DDb, XType::SSa, XType::SSb})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

void Report::add_eq(const std::string& name, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    ExactMatrix r = lhs - rhs;
    bool pass = r.is_zero();
    checks.push_back({name, pass, pass ? std::nullopt : std::optional<ExactMatrix>(r)});
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<std::string> Report::failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

FieldContext HqModule::context() const {
    FieldContext ctx = params.q.context();
    for (const auto& k : params.k) ctx = join(ctx, k.context());
    return ctx;
}

namespace {

FieldElement qp(const FieldElement& q, long e) { return int_pow(q, e); }

bool among(const FieldElement& x, const Seq& list) { return std::find(list.begin(), list.end(), x) != list.end(); }

// q^from, q^{from+step}, ..., through q^to inclusive
Seq qpowers(const FieldElement& q, int from, int to, int step) {
    Seq s;
    if (step > 0)
        for (int e = from; e <= to; e += step) s.push_back(qp(q, e));
    else
        for (int e = from; e >= to; e += step) s.push_back(qp(q, e));
    return s;
}

std::string kname(int i) { return "k" + std::to_string(i); }

}  // namespace

Validation validate_params(XType t, int n, const KParams& k, const FieldElement& q) {
    Validation v;
    auto fail = [&](const std::string& s) { v.violations.push_back(s); };
    if (!is_valid_q(q)) {
        fail("q is not a rational outside {0, 1, -1}");
        return v;
    }
    if (n < 0) {
        fail("n is negative");
        return v;
    }
    for (int i = 0; i < 4; ++i)
        if (k[i].is_zero()) fail(kname(i) + " is zero");
    if (!v.ok()) return v;
    if ((t == XType::DS) != (n % 2 == 0)) fail("parity of n");
    const FieldElement target = qp(q, -n - 1);
    auto eq = [&](const FieldElement& lhs, const std::string& what) {
        if (lhs != target) fail(to_string(t) + " defining equation: " + what + " = q^(-n-1)");
    };
    switch (t) {
        case XType::DS: eq(k[0] * k[1] * k[2] * k[3], "k0k1k2k3"); break;
        case XType::DDa: eq(k[0] * k[0], "k0^2"); break;
        case XType::DDb: eq(k[3] * k[3], "k3^2"); break;
        case XType::SSa: eq(k[1] * k[1], "k1^2"); break;
        case XType::SSb: eq(k[2] * k[2], "k2^2"); break;
    }
    if (!v.ok()) return v;

    if (t == XType::DS) {
        Seq l1 = n >= 1 ? qpowers(q, -1, -n, -1) : Seq{};
        for (int s : {1, -1})
            if (among(FieldElement(s) * k[0] * k[3], l1)) fail("DS: +-k0k3 among q^-1..q^-n");
        Seq l2 = n >= 2 ? qpowers(q, -1, -n / 2, -1) : Seq{};
        for (int i = 0; i < 4; ++i)
            for (int s : {1, -1})
                if (among(FieldElement(s) * k[i], l2)) fail("DS: +-" + kname(i) + " among q^-1..q^-n/2");
        return v;
    }
    // odd n
    int free_idx = t == XType::DDa ? 3 : t == XType::DDb ? 0 : t == XType::SSa ? 2 : 1;
    Seq l1 = qpowers(q, 0, (n - 1) / 2, 1);
    for (int s : {1, -1})
        for (int e : {1, -1})
            if (among(FieldElement(s) * int_pow(k[free_idx], e), l1))
                fail(to_string(t) + ": +-" + kname(free_idx) + "^(+-1) among 1..q^((n-1)/2)");
    Seq l2 = qpowers(q, -1, -n, -2);
    bool dd = is_D(t);
    FieldElement base = dd ? k[0] * k[3] : k[1] * k[2];
    const FieldElement& u = dd ? k[1] : k[0];
    const FieldElement& w = dd ? k[2] : k[3];
    std::string label = dd ? "k0k3k1^(+-1)k2^(+-1)" : "k1k2k0^(+-1)k3^(+-1)";
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            if (among(base * int_pow(u, e1) * int_pow(w, e2), l2)) fail(to_string(t) + ": " + label + " among q^-1,q^-3,..,q^-n");
    return v;
}

FieldElement ladder_value(XType t, int r, const KParams& k, const FieldElement& q) {
    if (is_D(t)) {
        FieldElement kk = k[0] * k[3];
        return r % 2 == 0 ? kk * qp(q, r) : (kk * qp(q, r + 1)).inv();
    }
    FieldElement kk = k[1] * k[2];
    return r % 2 == 0 ? (kk * qp(q, r + 1)).inv() : kk * qp(q, r);
}

XDiagram x_diagram(const Seq& mu, const FieldElement& q) {
    XDiagram g;
    std::size_t n = mu.size();
    FieldElement qm2 = qp(q, -2);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement sq = mu[i] * mu[i];
        if (sq.is_one()) g.loops.push_back({i, Bond::Single});
        if (sq == qm2) g.loops.push_back({i, Bond::Double});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mu[i] == mu[j]) throw DahaError("x_diagram: eigenvalues are not distinct");
            FieldElement p = mu[i] * mu[j];
            if (p.is_one()) g.edges.push_back({i, j, Bond::Single});
            if (p == qm2) g.edges.push_back({i, j, Bond::Double});
        }
    }
    if (n == 0) throw DahaError("x_diagram: empty");
    if (n == 1) {
        g.path = {0};
        g.pattern = "DS";
        return g;
    }
    std::vector<std::vector<std::pair<std::size_t, Bond>>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.i].push_back({e.j, e.bond});
        adj[e.j].push_back({e.i, e.bond});
    }
    if (g.edges.size() != n - 1) throw DahaError("reduced X-diagram is not a path");
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].empty() || adj[i].size() > 2) throw DahaError("reduced X-diagram is not a path");
        if (adj[i].size() == 1 && start == n) start = i;
    }
    if (start == n) throw DahaError("reduced X-diagram is not a path");
    std::vector<Bond> bonds;
    std::size_t prev = n, cur = start;
    g.path.push_back(start);
    while (g.path.size() < n) {
        std::size_t next = n;
        Bond b = Bond::Single;
        for (auto [x, bb] : adj[cur])
            if (x != prev) {
                next = x;
                b = bb;
            }
        if (next == n) throw DahaError("reduced X-diagram is not a path");
        g.path.push_back(next);
        bonds.push_back(b);
        prev = cur;
        cur = next;
    }
    for (std::size_t i = 0; i + 1 < bonds.size(); ++i)
        if (bonds[i] == bonds[i + 1]) throw DahaError("reduced X-diagram bonds do not alternate");
    Bond first = bonds.front(), last = bonds.back();
    if (first != last) {
        g.pattern = "DS";
        if (first == Bond::Single) std::reverse(g.path.begin(), g.path.end());
    } else {
        g.pattern = first == Bond::Double ? "DD" : "SS";
    }
    return g;
}

Seq eigenvalue_ladder(XType t, int n, const KParams& k, const FieldElement& q) {
    Seq mu;
    for (int r = 0; r <= n; ++r) mu.push_back(ladder_value(t, r, k, q));
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j)
            if (mu[i] == mu[j]) throw DahaError("eigenvalue ladder is not distinct");
    XDiagram g = x_diagram(mu, q);
    std::string want = t == XType::DS ? "DS" : is_D(t) ? "DD" : "SS";
    if (g.pattern != want) throw DahaError("eigenvalue ladder has diagram " + g.pattern + ", expected " + want);
    // consecutive ladder entries are the bonds of the path
    FieldElement qm2 = qp(q, -2);
    for (int r = 0; r < n; ++r) {
        FieldElement p = mu[r] * mu[r + 1];
        bool dbl = (is_D(t) ? r % 2 == 0 : r % 2 == 1);
        if (dbl ? p != qm2 : !p.is_one()) throw DahaError("eigenvalue ladder bond pattern mismatch");
    }
    return mu;
}

FieldElement G_scalar(const FieldElement& lambda, const FieldElement& s, const FieldElement& t) {
    FieldElement L = sym(lambda), S = sym(s), T = sym(t);
    return L * L - L * S * T + S * S + T * T - FieldElement(4);
}

ExactMatrix G_matrix(const ExactMatrix& L, const FieldElement& s, const FieldElement& t) {
    FieldElement S = sym(s), T = sym(t);
    return shift(L * L - (S * T) * L, S * S + T * T - FieldElement(4));
}

HqModule module_from_matrices(const HqParams& p, std::optional<XType> t, const std::array<ExactMatrix, 4>& gens) {
    HqModule m;
    m.params = p;
    m.xtype = t;
    m.t = gens;
    for (int i = 0; i < 4; ++i) {
        if (!gens[i].square() || gens[i].rows() != gens[0].rows()) throw DahaError("generator matrices must be square of one size");
        m.tinv[i] = shift(-gens[i], sym(p.k[i]));
    }
    if (t && validate_params(*t, p.n, p.k, p.q).ok()) m.mu = eigenvalue_ladder(*t, p.n, p.k, p.q);
    return m;
}

HqModule build_module(XType type, int n, const KParams& k, const FieldElement& q) {
    Validation val = validate_params(type, n, k, q);
    if (!val.ok()) throw DahaError("invalid parameters: " + val.first());
    Seq mu = eigenvalue_ladder(type, n, k, q);
    FieldContext ctx = q.context();
    for (const auto& x : k) ctx = join(ctx, x.context());
    std::size_t N = static_cast<std::size_t>(n) + 1;
    std::array<ExactMatrix, 4> t;
    for (auto& m : t) m = ExactMatrix(N, N, ctx);
    std::vector<int> cover03(N, 0), cover12(N, 0);
    FieldElement K0 = sym(k[0]), K1 = sym(k[1]), K2 = sym(k[2]), K3 = sym(k[3]);
    FieldElement qm2 = qp(q, -2);
    for (std::size_t r = 0; r + 1 < N; ++r) {
        const FieldElement m = mu[r];
        FieldElement prod = m * mu[r + 1];
        if (prod.is_one()) {
            FieldElement mi = m.inv(), den = m - mi;
            if (den.is_zero()) throw DahaError("zero denominator in t0/t3 block");
            FieldElement G = G_scalar(m, k[0], k[3]);
            t[0](r, r) = (m * K0 - K3) / den;
            t[0](r + 1, r) = m / den;
            t[0](r, r + 1) = G / (m * (mi - m));
            t[0](r + 1, r + 1) = (mi * K0 - K3) / (mi - m);
            t[3](r, r) = (m * K3 - K0) / den;
            t[3](r + 1, r) = FieldElement(1) / (mi - m);
            t[3](r, r + 1) = G / den;
            t[3](r + 1, r + 1) = (mi * K3 - K0) / (mi - m);
            ++cover03[r];
            ++cover03[r + 1];
        } else if (prod == qm2) {
            FieldElement p = q * m, pp = (q * m).inv();
            if ((p - pp).is_zero()) throw DahaError("zero denominator in t1/t2 block");
            FieldElement G = G_scalar(p, k[1], k[2]);
            t[1](r, r) = (pp * K1 - K2) / (pp - p);
            t[1](r + 1, r) = FieldElement(1) / (p - pp);
            t[1](r, r + 1) = G / (pp - p);
            t[1](r + 1, r + 1) = (p * K1 - K2) / (p - pp);
            t[2](r, r) = (pp * K2 - K1) / (pp - p);
            t[2](r + 1, r) = pp / (pp - p);
            t[2](r, r + 1) = p * G / (p - pp);
            t[2](r + 1, r + 1) = (p * K2 - K1) / (p - pp);
            ++cover12[r];
            ++cover12[r + 1];
        } else {
            throw DahaError("consecutive ladder entries are not adjacent");
        }
    }
    std::size_t last = N - 1;
    auto end03 = [&](std::size_t r, const FieldElement& a, const FieldElement& b) {
        t[0](r, r) = a;
        t[3](r, r) = b;
        ++cover03[r];
    };
    auto end12 = [&](std::size_t r, const FieldElement& a, const FieldElement& b) {
        t[1](r, r) = a;
        t[2](r, r) = b;
        ++cover12[r];
    };
    switch (type) {
        case XType::DS:
            end03(0, k[0], k[3]);
            end12(last, k[1], k[2]);
            break;
        case XType::DDa:
            end03(0, k[0], k[3]);
            end03(last, k[0], k[3].inv());
            break;
        case XType::DDb:
            end03(0, k[0], k[3]);
            end03(last, k[0].inv(), k[3]);
            break;
        case XType::SSa:
            end12(0, k[1], k[2]);
            end12(last, k[1], k[2].inv());
            break;
        case XType::SSb:
            end12(0, k[1], k[2]);
            end12(last, k[1].inv(), k[2]);
            break;
    }
    for (std::size_t r = 0; r < N; ++r)
        if (cover03[r] != 1 || cover12[r] != 1) throw DahaError("generator action not defined exactly once on a basis vector");
    HqModule mod = module_from_matrices(HqParams{q, n, k}, type, t);
    mod.mu = mu;
    Report rep = verify_hq_relations(mod);
    if (!rep.ok()) throw DahaError("constructed module fails relation: " + rep.failed_names().front());
    return mod;
}

Report verify_hq_relations(const HqModule& m) {
    Report rep;
    std::size_t N = m.dim();
    FieldContext ctx = m.context();
    ExactMatrix I = ExactMatrix::identity(N, ctx);
    const auto& t = m.t;
    const auto& ti = m.tinv;
    for (int i = 0; i < 4; ++i) {
        std::string s = "t" + std::to_string(i);
        rep.add_eq(s + " " + s + "^-1 = I", t[i] * ti[i], I);
        rep.add_eq(s + "^-1 " + s + " = I", ti[i] * t[i], I);
    }
    for (int i = 0; i < 4; ++i) {
        ExactMatrix T = t[i] + ti[i];
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            rep.add_eq("T" + std::to_string(i) + " commutes with t" + std::to_string(j), T * t[j], t[j] * T);
        }
    }
    ExactMatrix qinv = m.params.q.inv() * I;
    for (int s = 0; s < 4; ++s) {
        std::string name;
        ExactMatrix prod = I;
        for (int j = 0; j < 4; ++j) {
            int idx = (s + j) % 4;
            name += "t" + std::to_string(idx);
            prod = prod * t[idx];
        }
        rep.add_eq(name + " = q^-1 I", prod, qinv);
    }
    for (int i = 0; i < 4; ++i) {
        const FieldElement& k = m.params.k[i];
        rep.add_eq("(t" + std::to_string(i) + " - k" + std::to_string(i) + ")(t" + std::to_string(i) + " - k" +
                       std::to_string(i) + "^-1) = 0",
                   shift(t[i], -k) * shift(t[i], -k.inv()), ExactMatrix(N, N, ctx));
    }
    return rep;
}

Derived derived_elements(const HqModule& m, Report* rep) {
    const auto& t = m.t;
    const auto& ti = m.tinv;
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    std::size_t N = m.dim();
    FieldContext ctx = m.context();
    ExactMatrix I = ExactMatrix::identity(N, ctx);
    Derived d;
    d.X = t[3] * t[0];
    d.Xinv = ti[0] * ti[3];
    d.Y = t[0] * t[1];
    d.Yinv = ti[1] * ti[0];
    d.A = d.Y + d.Yinv;
    d.B = d.X + d.Xinv;
    d.C = t[0] * t[2] + ti[2] * ti[0];
    for (int i = 0; i < 4; ++i) {
        int p = (i + 3) % 4;
        d.G[i] = t[i] - t[p] * t[i] * ti[p];
    }
    bool split = !(k[0] * k[0]).is_one();
    if (split) {
        FieldElement den = k[0] - k[0].inv();
        d.Fplus = den.inv() * shift(t[0], -k[0].inv());
        d.Fminus = (-den).inv() * shift(t[0], -k[0]);
    }
    if (!rep) return d;

    FieldElement K[4] = {sym(k[0]), sym(k[1]), sym(k[2]), sym(k[3])};
    rep->add_eq("X X^-1 = I", d.X * d.Xinv, I);
    rep->add_eq("Y Y^-1 = I", d.Y * d.Yinv, I);
    rep->add_eq("X G0 = G0 X^-1", d.X * d.G[0], d.G[0] * d.Xinv);
    rep->add_eq("X G2 = q^-2 G2 X^-1", d.X * d.G[2], qp(q, -2) * (d.G[2] * d.Xinv));
    rep->add_eq("X t0 - t0 X^-1 = X T0 - T3", d.X * t[0] - t[0] * d.Xinv, shift(K[0] * d.X, -K[3]));
    rep->add_eq("q X t2 - q^-1 t2 X^-1 = T1 - q^-1 X^-1 T2", q * (d.X * t[2]) - q.inv() * (t[2] * d.Xinv),
                shift(-(q.inv() * K[2]) * d.Xinv, K[1]));
    rep->add_eq("G0^2 = G(X, k0, k3)", d.G[0] * d.G[0], G_matrix(d.B, k[0], k[3]));
    rep->add_eq("G2^2 = G(qX, k1, k2)", d.G[2] * d.G[2], G_matrix(q * d.X + q.inv() * d.Xinv, k[1], k[2]));
    rep->add_eq("A commutes with t0", d.A * t[0], t[0] * d.A);
    rep->add_eq("A commutes with t1", d.A * t[1], t[1] * d.A);
    rep->add_eq("B commutes with t3", d.B * t[3], t[3] * d.B);
    rep->add_eq("B commutes with t0", d.B * t[0], t[0] * d.B);
    rep->add_eq("C commutes with t0", d.C * t[0], t[0] * d.C);
    rep->add_eq("C commutes with t2", d.C * t[2], t[2] * d.C);
    FieldElement den = (q * q - qp(q, -2)).inv(), qq = (q + q.inv()).inv();
    ExactMatrix w = q.inv() * t[0] + q * ti[0];
    auto lhs = [&](const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) {
        return x + den * (q * (y * z) - q.inv() * (z * y));
    };
    rep->add_eq("A + (qBC - q^-1CB)/(q^2-q^-2) relation", lhs(d.A, d.B, d.C), qq * shift(K[1] * w, K[2] * K[3]));
    rep->add_eq("B + (qCA - q^-1AC)/(q^2-q^-2) relation", lhs(d.B, d.C, d.A), qq * shift(K[3] * w, K[1] * K[2]));
    rep->add_eq("C + (qAB - q^-1BA)/(q^2-q^-2) relation", lhs(d.C, d.A, d.B), qq * shift(K[2] * w, K[3] * K[1]));
    // G_0, G_2 shuttle between paired X-eigenvectors of the standard basis
    if (m.xtype && m.mu.size() == N) {
        FieldElement qm2 = qp(q, -2);
        for (std::size_t r = 0; r + 1 < N; ++r) {
            FieldElement p = m.mu[r] * m.mu[r + 1];
            ExactMatrix er(N, 1, ctx), er1(N, 1, ctx);
            er(r, 0) = FieldElement(Rational(1), ctx);
            er1(r + 1, 0) = FieldElement(Rational(1), ctx);
            std::string rs = std::to_string(r);
            if (p.is_one()) {
                rep->add_eq("G0 v" + rs + " = v" + std::to_string(r + 1), d.G[0] * er, er1);
                rep->add_eq("G0 v" + std::to_string(r + 1) + " = G(mu,k0,k3) v" + rs, d.G[0] * er1,
                            G_scalar(m.mu[r], k[0], k[3]) * er);
            } else if (p == qm2) {
                rep->add_eq("G2 v" + rs + " = v" + std::to_string(r + 1), d.G[2] * er, er1);
                rep->add_eq("G2 v" + std::to_string(r + 1) + " = G(q mu,k1,k2) v" + rs, d.G[2] * er1,
                            G_scalar(q * m.mu[r], k[1], k[2]) * er);
            }
        }
    }
    if (split) {
        rep->add_eq("F+ idempotent", *d.Fplus * *d.Fplus, *d.Fplus);
        rep->add_eq("F- idempotent", *d.Fminus * *d.Fminus, *d.Fminus);
        rep->add_eq("F+ + F- = I", *d.Fplus + *d.Fminus, I);
        rep->add_eq("F+ F- = 0", *d.Fplus * *d.Fminus, ExactMatrix(N, N, ctx));
    }
    return d;
}

Seq beta_sequence(const HqModule& m) {
    if (!m.xtype) throw DahaError("module has no X-type");
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    Seq b;
    for (int r = 0; r <= m.params.n + 1; ++r) {
        bool even = r % 2 == 0;
        switch (*m.xtype) {
            case XType::DS:
            case XType::DDa: b.push_back(k[0] * k[1] * qp(q, even ? r : r + 1)); break;
            case XType::DDb: b.push_back((k[2] * k[3] * qp(q, even ? r + 1 : r)).inv()); break;
            case XType::SSa: b.push_back((k[0] * k[1] * qp(q, even ? r : r + 1)).inv()); break;
            case XType::SSb: b.push_back(k[2] * k[3] * qp(q, even ? r + 1 : r)); break;
        }
    }
    return b;
}

Seq predicted_y_spectrum(const HqModule& m) {
    Seq b = beta_sequence(m);
    Seq s;
    bool ss = *m.xtype == XType::SSa || *m.xtype == XType::SSb;
    for (int r = 0; r <= m.params.n; ++r) {
        bool direct = (r % 2 == 0) != ss;
        s.push_back(direct ? b[r] : b[r].inv());
    }
    return s;
}

Feasibility is_feasible(const HqModule& m) {
    if (!m.xtype) throw DahaError("feasibility needs an X-type");
    Feasibility f;
    const auto& k = m.params.k;
    const FieldElement& q = m.params.q;
    int n = m.params.n;
    Derived d = derived_elements(m);

    f.x_diagonalizable = m.mu.size() == m.dim();
    for (const auto& mu : m.mu)
        if (eigenspace(d.X, mu).dim() != 1) f.x_diagonalizable = false;

    FieldElement pr = (*m.xtype == XType::DDb || *m.xtype == XType::SSb) ? k[2] * k[3] : k[0] * k[1];
    Seq forbidden = n >= 1 ? qpowers(q, -1, -n, -1) : Seq{};
    f.y_table = !among(pr, forbidden) && !among(-pr, forbidden);

    Seq spec = predicted_y_spectrum(m), uniq;
    for (const auto& x : spec)
        if (!among(x, uniq)) uniq.push_back(x);
    std::size_t total = 0;
    for (const auto& x : uniq) total += eigenspace(d.Y, x).dim();
    f.y_direct = total == m.dim() && uniq.size() == spec.size();
    if (f.y_table != f.y_direct) throw DahaError("Y diagonalizability: inequality table and direct computation disagree");

    if (!(k[0] * k[0]).is_one()) {
        std::size_t p = eigenspace(m.t[0], k[0]).dim(), mi = eigenspace(m.t[0], k[0].inv()).dim();
        f.t0_two_eigenvalues = p > 0 && mi > 0 && p + mi == m.dim();
    }
    if (!f.x_diagonalizable) f.failed_clause = "X not diagonalizable";
    else if (!f.y_direct) f.failed_clause = "Y not diagonalizable";
    else if (!f.t0_two_eigenvalues) f.failed_clause = "t0 single eigenvalue";
    f.feasible = f.failed_clause.empty();
    return f;
}

}  // namespace hq
