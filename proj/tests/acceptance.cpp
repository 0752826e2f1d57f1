// Acceptance checks: one PASS/FAIL line per criterion.
#include "hq/daha.hpp"
#include "hq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace hq;

namespace {

FieldElement R(long a, long b = 1) { return FieldElement(Rational(a, b)); }

using Clock = std::chrono::steady_clock;

struct Tally {
    std::size_t checks = 0, failures = 0;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void report(const Report& r, const std::string& ctx) {
        for (const auto& c : r.checks) expect(c.pass, ctx + ": " + c.name);
    }
};

bool finish(int id, const std::string& title, const Tally& t, double secs, double limit) {
    bool ok = t.failures == 0 && t.checks > 0 && secs < limit;
    std::printf("%s criterion %d: %s (%zu checks, %zu failures, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", id,
                title.c_str(), t.checks, t.failures, secs, limit);
    for (const auto& n : t.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    return ok;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::uint64_t kSeed = 20240601;

std::vector<Instance> instances() {
    static std::vector<Instance> v = sample_instances(kSeed, 9, 240);
    return v;
}

// criterion 1
bool flagship() {
    auto t0 = Clock::now();
    Tally t;
    FieldElement q = R(2);
    HuangData h{R(3), R(5), R(7), 2}, h2{R(3), R(5), R(7), 0};
    auto cases = link_check(h, h2, q);
    t.expect(std::any_of(cases.begin(), cases.end(), [](const LinkCase& c) { return c.case_id == 1; }),
             "link_check reports case (i)");
    try {
        LinkResult r = link_construct(h, h2, q);
        t.expect(r.used.case_id == 1, "case (i) used");
        t.expect(r.xtype == XType::DDa, "type DDa");
        t.expect(r.module.params.n == 3, "n = 3");
        KParams want{R(1, 4), R(3), R(7), R(5)};
        t.expect(r.module.params.k == want, "k = (1/4,3,7,5)");
        t.report(verify_hq_relations(r.module), "relations");
        // extraction on a module rebuilt from the matrices alone
        HqModule m = module_from_matrices(r.module.params, XType::DDa, r.module.t);
        Extraction ex = restricted_leonard_pairs(m);
        t.report(ex.checks, "extract");
        t.expect(huang_equivalent(ex.plus.generic, h), "V(k0) Huang data ~ h");
        t.expect(huang_equivalent(ex.minus.generic, h2), "V(k0^-1) Huang data ~ h'");
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    return finish(1, "flagship case (i) round trip", t, since(t0), 1.0);
}

// criterion 2
bool construction() {
    auto t0 = Clock::now();
    Tally t;
    auto ins = instances();
    t.expect(ins.size() >= 200, "at least 200 instances");
    std::set<XType> types;
    for (const auto& in : ins) {
        types.insert(in.type);
        t.expect(in.n <= 9, "n <= 9");
        try {
            HqModule m = build_module(in.type, in.n, in.k, in.q);
            t.report(construction_checks(m), in.label());
            // spectrum of X compared with the ladder by direct kernel dimensions
            Derived d = derived_elements(m);
            Seq lad = eigenvalue_ladder(in.type, in.n, in.k, in.q);
            std::size_t total = 0;
            for (const auto& mu : lad) {
                std::size_t k = eigenspace(d.X, mu).dim();
                t.expect(k == 1, in.label() + ": 1-dim X eigenspace");
                total += k;
            }
            t.expect(total == m.dim(), in.label() + ": X spectrum exhausted by the ladder");
            t.expect(d.G[0] * d.G[0] == G_matrix(d.B, in.k[0], in.k[3]), in.label() + ": G0^2");
            FieldElement q = in.q;
            t.expect(d.G[2] * d.G[2] == G_matrix(q * d.X + q.inv() * d.Xinv, in.k[1], in.k[2]), in.label() + ": G2^2");
        } catch (const std::exception& e) {
            t.expect(false, in.label() + ": " + e.what());
        }
    }
    t.expect(types.size() == 5, "all five X-types sampled");
    std::printf("    %zu instances\n", ins.size());
    return finish(2, "construction battery", t, since(t0), 60.0);
}

// criterion 3
bool restricted_pairs() {
    auto t0 = Clock::now();
    Tally t;
    std::size_t feasible = 0;
    for (const auto& in : instances()) {
        try {
            HqModule m = build_module(in.type, in.n, in.k, in.q);
            if (!is_feasible(m).feasible) continue;
            ++feasible;
            Derived d = derived_elements(m);
            auto [dp, dm] = eigenspace_diameters(in.type, in.n);
            for (bool plus : {true, false}) {
                FieldElement ev = plus ? in.k[0] : in.k[0].inv();
                Subspace w = eigenspace(m.t[0], ev);
                std::string side = in.label() + (plus ? " V(k0)" : " V(k0^-1)");
                t.expect(static_cast<int>(w.dim()) == (plus ? dp : dm) + 1, side + ": dimension");
                ExactMatrix a = restrict(d.A, w), b = restrict(d.B, w);
                auto ord = recognize_leonard_pair(a, b, predicted_A_diagonal(m, plus), predicted_B_diagonal(m, plus));
                t.expect(ord.has_value(), side + ": Leonard pair");
                if (!ord) continue;
                t.expect(qracah_parameter(ord->theta, in.q).has_value(), side + ": theta q-Racah");
                t.expect(qracah_parameter(ord->theta_star, in.q).has_value(), side + ": theta* q-Racah");
            }
            Extraction ex = restricted_leonard_pairs(m);
            t.report(ex.checks, in.label());
            t.expect(huang_equivalent(ex.plus.generic, ex.plus.closed), in.label() + ": plus routes agree");
            t.expect(huang_equivalent(ex.minus.generic, ex.minus.closed), in.label() + ": minus routes agree");
        } catch (const std::exception& e) {
            t.expect(false, in.label() + ": " + e.what());
        }
    }
    t.expect(feasible >= 100, "at least 100 feasible instances");
    std::printf("    %zu feasible instances\n", feasible);
    return finish(3, "Leonard pairs on the t0-eigenspaces", t, since(t0), 120.0);
}

// criterion 4
bool shapes() {
    auto t0 = Clock::now();
    Tally t;
    for (const auto& in : instances()) {
        try {
            HqModule m = build_module(in.type, in.n, in.k, in.q);
            Derived d = derived_elements(m);
            Feasibility f = is_feasible(m);
            if (!f.feasible) continue;
            UBasis u = u_basis(m);
            t.report(u.checks, in.label());
            ExactMatrix Yu = change_of_basis(d.Y, u.U), Au = change_of_basis(d.A, u.U);
            ExactMatrix Xu = change_of_basis(d.X, u.Uprime), Bu = change_of_basis(d.B, u.Uprime);
            t.expect(is_lower_tridiagonal(Yu), in.label() + ": Y lower tridiagonal");
            t.expect(is_lower_tridiagonal(Au), in.label() + ": A lower tridiagonal");
            t.expect(is_upper_tridiagonal(Xu), in.label() + ": X upper tridiagonal");
            t.expect(is_upper_tridiagonal(Bu), in.label() + ": B upper tridiagonal");
            // Y diagonal from the beta sequence
            Seq beta = beta_sequence(m), want;
            bool ss = in.type == XType::SSa || in.type == XType::SSb;
            for (int r = 0; r <= in.n; ++r) want.push_back((r % 2 == 0) != ss ? beta[r] : beta[r].inv());
            t.expect(diagonal(Yu) == want, in.label() + ": Y diagonal");
            T0Split s = t0_split(m);
            for (bool plus : {true, false}) {
                const Subspace& w = plus ? s.plus : s.minus;
                std::string side = in.label() + (plus ? " V(k0)" : " V(k0^-1)");
                ExactMatrix a = restrict(d.A, w), b = restrict(d.B, w);
                t.expect(is_lower_bidiagonal(a), side + ": A lower bidiagonal");
                t.expect(is_upper_bidiagonal(b), side + ": B upper bidiagonal");
                t.expect(diagonal(a) == predicted_A_diagonal(m, plus), side + ": A diagonal");
                t.expect(diagonal(b) == predicted_B_diagonal(m, plus), side + ": B diagonal");
            }
        } catch (const std::exception& e) {
            t.expect(false, in.label() + ": " + e.what());
        }
    }
    return finish(4, "tridiagonal and bidiagonal shapes", t, since(t0), 120.0);
}

// criterion 5
bool leonard_core() {
    auto t0 = Clock::now();
    Tally t;
    std::size_t trips = 0;
    std::mt19937_64 rng(kSeed);
    for (long qv : {2L, 3L, -2L}) {
        FieldElement q = R(qv);
        for (const auto& h : sample_huang(kSeed + qv, q, 5, 50)) {
            std::ostringstream lab;
            lab << "q=" << qv << " (" << h.a.str() << "," << h.b.str() << "," << h.c.str() << "," << h.d << ")";
            try {
                LeonardPair p = build_pair_from_huang(h, q);
                auto arrays = parameter_arrays(p);
                bool any = false;
                for (const auto& pa : arrays) {
                    auto back = huang_data_from_array(pa, q);
                    t.expect(back && huang_equivalent(*back, h), lab.str() + ": round trip");
                    any = any || back.has_value();
                }
                if (any) ++trips;
                ExactMatrix ae = askey_wilson_third(p, h, q);
                auto ok = aw_relations_hold(p.A, p.Astar, ae, h, q);
                t.expect(ok[0] && ok[1] && ok[2], lab.str() + ": Askey-Wilson relations");
                if (h.d >= 1) {
                    // any nonzero change of the third element breaks the first two relations
                    std::size_t n = ae.rows();
                    std::uniform_int_distribution<std::size_t> pos(0, n - 1);
                    std::uniform_int_distribution<long> val(-5, 5);
                    for (int k = 0; k < 3; ++k) {
                        ExactMatrix pert(n, n);
                        long v = val(rng);
                        pert(pos(rng), pos(rng)) = FieldElement(v == 0 ? 1 : v);
                        if (k == 2) pert = FieldElement(v == 0 ? 1 : v) * ExactMatrix::identity(n);
                        auto bad = aw_relations_hold(p.A, p.Astar, ae + pert, h, q);
                        t.expect(!(bad[0] && bad[1]), lab.str() + ": rigidity");
                    }
                }
            } catch (const std::exception& e) {
                t.expect(false, lab.str() + ": " + e.what());
            }
        }
    }
    t.expect(trips >= 100, "at least 100 round trips");
    // d = 1 instance
    FieldElement q = R(2);
    HuangData h{R(3), R(5), R(7), 1};
    Seq phi = huang_phi(h, q), phi2 = huang_phi2(h, q);
    t.expect(phi.size() == 1 && phi[0] == R(-624, 35), "phi_1 = -624/35");
    t.expect(phi2.size() == 1 && phi2[0] == R(384, 35), "phi2_1 = 384/35");
    LeonardPair p = build_pair_from_huang(h, q);
    bool found = false;
    for (const auto& pa : parameter_arrays(p))
        found = found || (pa.phi == Seq{R(-624, 35)} && pa.phi2 == Seq{R(384, 35)});
    t.expect(found, "parameter array of the built pair carries (-624/35, 384/35)");
    std::printf("    %zu round trips\n", trips);
    return finish(5, "Leonard pair core", t, since(t0), 60.0);
}

// criterion 6
struct Row {
    int dd, ea, eb, ec;
};
const Row kRows[5] = {{-2, 0, 0, 0}, {-1, 1, 1, 1}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};

HuangData partner(const HuangData& h, int id, const FieldElement& q) {
    const Row& r = kRows[id - 1];
    return {h.a * int_pow(q, r.ea), h.b * int_pow(q, r.eb), h.c * int_pow(q, r.ec), h.d + r.dd};
}

// the inequalities attached to each row, on the uninverted first input
bool row_inequalities(int id, const HuangData& h, const FieldElement& q) {
    FieldElement a2 = h.a * h.a, b2 = h.b * h.b, c2 = h.c * h.c;
    FieldElement lo = int_pow(q, -2 * h.d), hi = int_pow(q, 2 * h.d), qm2 = int_pow(q, -2);
    switch (id) {
        case 2: return a2 != lo && b2 != lo;
        case 3: return b2 != lo && b2 != hi && a2 != qm2;
        case 4: return a2 != lo && a2 != hi && b2 != qm2;
        case 5: return a2 != lo && a2 != hi && b2 != lo && b2 != hi && c2 != qm2;
        default: return true;
    }
}

HuangData invert_some(const HuangData& h, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    HuangData o = h;
    if (coin(rng)) o.a = o.a.inv();
    if (coin(rng)) o.b = o.b.inv();
    if (coin(rng)) o.c = o.c.inv();
    return o;
}

std::string show(const HuangData& h) {
    return "(" + h.a.str() + "," + h.b.str() + "," + h.c.str() + "," + std::to_string(h.d) + ")";
}

bool link_sweep() {
    auto t0 = Clock::now();
    Tally t;
    std::mt19937_64 rng(kSeed + 6);
    const long primes[] = {3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> pick(0, 4), coin(0, 1);
    auto draw = [&]() {
        Rational v(primes[pick(rng)]);
        if (coin(rng)) v = 1 / v;
        if (coin(rng)) v = -v;
        return FieldElement(v);
    };
    std::size_t pairs = 0, linked = 0, near = 0, exchanges = 0;
    std::array<std::size_t, 8> per_case{};

    auto verdict = [&](const HuangData& h, const HuangData& h2, const FieldElement& q, const std::string& lab,
                       std::optional<int> expect_case) {
        if (!check_huang_admissible(h, q) || !check_huang_admissible(h2, q)) return;
        ++pairs;
        auto cs = link_check(h, h2, q);
        bool said = !cs.empty();
        bool built = false;
        std::string err;
        LinkResult r;
        try {
            r = link_construct(h, h2, q);
            built = true;
        } catch (const std::exception& e) {
            err = e.what();
        }
        t.expect(said == built, lab + ": verdict " + (said ? "linked" : "unlinked") + " vs construction " +
                                    (built ? "ok" : err));
        if (built) {
            ++linked;
            t.report(r.extraction.checks, lab);
            t.report(verify_hq_relations(r.module), lab);
        }
        if (expect_case) {
            bool has = std::any_of(cs.begin(), cs.end(), [&](const LinkCase& c) { return c.case_id == *expect_case; });
            t.expect(has, lab + ": case " + case_name(*expect_case) + " reported");
            if (has) ++per_case[*expect_case];
        }
        // exchanged order: (i) <-> (vii), (ii) <-> (vi)
        if (built && (r.used.case_id == 1 || r.used.case_id == 2) && !r.exchanged) {
            auto back = link_check(h2, h, q);
            int mirror = r.used.case_id == 1 ? 7 : 6;
            bool has = std::any_of(back.begin(), back.end(), [&](const LinkCase& c) { return c.case_id == mirror; });
            t.expect(has, lab + ": exchanged order reports case " + case_name(mirror));
            if (has) ++per_case[mirror];
            try {
                LinkResult e = link_construct(h2, h, q);
                ++exchanges;
                t.expect(e.exchanged, lab + ": exchange flagged");
                t.expect(e.used.case_id == r.used.case_id, lab + ": exchange maps to the same case");
                t.expect(e.xtype == r.xtype && e.module.params.n == r.module.params.n, lab + ": exchange same type");
                if (r.used.h.d != 0 || r.used.h2.d != 0)
                    t.expect(e.module.params.k == r.module.params.k, lab + ": exchange same k");
                t.report(e.extraction.checks, lab + " exchanged");
            } catch (const std::exception& ex) {
                t.expect(false, lab + ": exchanged construction: " + ex.what());
            }
        }
    };

    for (const FieldElement& q : {R(2), R(3), R(-2), R(3, 2)}) {
        for (int id = 1; id <= 5; ++id)
            for (int d = 0; d <= 4; ++d) {
                int d2 = d + kRows[id - 1].dd;
                if (d2 < 0 || d2 > 4) continue;
                for (int rep = 0; rep < 2; ++rep) {
                    HuangData h{draw(), draw(), draw(), d};
                    HuangData h2 = partner(h, id, q);
                    std::string lab = "q=" + q.str() + " row " + case_name(id) + " " + show(h) + " " + show(h2);
                    // a random draw can hit an excluded equality; then only the verdicts are compared
                    std::optional<int> want;
                    if (row_inequalities(id, h, q)) want = id;
                    verdict(invert_some(h, rng), invert_some(h2, rng), q, lab, want);
                }
            }
    }

    // near-misses: one excluded equality forced per row
    for (long qv : {2L, 3L}) {
        FieldElement q = R(qv);
        for (int d = 1; d <= 4; ++d) {
            FieldElement qd = int_pow(q, -d);
            std::vector<std::pair<int, HuangData>> miss;
            miss.push_back({2, {qd, draw(), draw(), d}});              // a^2 = q^-2d
            miss.push_back({2, {draw(), qd, draw(), d}});              // b^2 = q^-2d
            miss.push_back({3, {draw(), qd.inv(), draw(), d}});        // b^2 = q^2d
            miss.push_back({3, {q.inv(), draw(), draw(), d}});         // a^2 = q^-2
            miss.push_back({4, {qd, draw(), draw(), d}});              // a^2 = q^-2d
            miss.push_back({4, {draw(), q.inv(), draw(), d}});         // b^2 = q^-2
            miss.push_back({5, {draw(), qd.inv(), draw(), d}});        // b^2 = q^2d
            miss.push_back({5, {draw(), draw(), -q.inv(), d}});        // c^2 = q^-2
            for (const auto& [id, h] : miss) {
                int d2 = d + kRows[id - 1].dd;
                if (d2 < 0 || d2 > 4) continue;
                HuangData h2 = partner(h, id, q);
                if (!check_huang_admissible(h, q) || !check_huang_admissible(h2, q)) continue;
                ++near;
                auto cs = link_check(h, h2, q);
                bool row_hit = std::any_of(cs.begin(), cs.end(), [&](const LinkCase& c) { return c.case_id == id; });
                std::string lab = "near-miss q=" + q.str() + " row " + case_name(id) + " " + show(h);
                t.expect(!row_hit, lab + ": excluded row not reported");
                verdict(h, h2, q, lab, std::nullopt);
            }
        }
    }

    // random pairs, mostly unlinked
    for (int i = 0; i < 60; ++i) {
        FieldElement q = R(i % 2 ? 2 : 3);
        std::uniform_int_distribution<int> dd(0, 4);
        HuangData h{draw(), draw(), draw(), dd(rng)}, h2{draw(), draw(), draw(), dd(rng)};
        verdict(h, h2, q, "random " + show(h) + " " + show(h2), std::nullopt);
    }

    for (int id = 1; id <= 7; ++id) t.expect(per_case[id] > 0, "case " + case_name(id) + " exercised");
    std::printf("    %zu pairs, %zu linked, %zu near-misses, %zu exchanges; per case:", pairs, linked, near, exchanges);
    for (int id = 1; id <= 7; ++id) std::printf(" %s=%zu", case_name(id).c_str(), per_case[id]);
    std::printf("\n");
    return finish(6, "bidirectional link sweep", t, since(t0), 120.0);
}

}  // namespace

int main() {
    std::vector<std::function<bool()>> all{flagship, construction, restricted_pairs, shapes, leonard_core, link_sweep};
    int failed = 0;
    for (auto& f : all) {
        try {
            if (!f()) ++failed;
        } catch (const std::exception& e) {
            std::printf("FAIL uncaught exception: %s\n", e.what());
            ++failed;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
