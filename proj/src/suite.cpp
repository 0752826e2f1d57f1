#include "hq/suite.hpp"

#include <random>
#include <sstream>

namespace hq {

std::string Instance::label() const {
    std::ostringstream os;
    os << to_string(type) << " n=" << n << " q=" << q.str() << " k=(";
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << k[i].str();
    os << ")";
    return os.str();
}

namespace {

const long kPrimes[] = {3, 5, 7, 11, 13};

FieldElement draw_k(std::mt19937_64& rng, FieldContext ctx) {
    std::uniform_int_distribution<int> pick(0, 4), coin(0, 1), quarter(0, 3);
    Rational v(kPrimes[pick(rng)]);
    if (coin(rng)) v = 1 / v;
    if (coin(rng)) v = -v;
    if (!ctx.is_rational() && quarter(rng) != 0) return FieldElement(Rational(0), v, ctx);
    return FieldElement(v, ctx);
}

XType type_at(std::size_t i) {
    static const XType all[] = {XType::DS, XType::DDa, XType::DDb, XType::SSa, XType::SSb};
    return all[i % 5];
}

}  // namespace

std::vector<Instance> sample_instances(std::uint64_t seed, int max_n, std::size_t count) {
    std::mt19937_64 rng(seed);
    static const Rational qs[] = {Rational(2), Rational(3), Rational(1, 2), Rational(3, 2), Rational(-2), Rational(2, 3),
                                  Rational(-3), Rational(5)};
    std::vector<Instance> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 200 * count + 1000) {
        ++attempts;
        Instance in;
        in.type = type_at(out.size());
        bool ds = in.type == XType::DS;
        int top = ds ? max_n / 2 : (max_n - 1) / 2;
        if (top < 0) continue;
        std::uniform_int_distribution<int> nd(0, top), qd(0, 7), ctxd(0, 4), coin(0, 1);
        in.n = ds ? 2 * nd(rng) : 2 * nd(rng) + 1;
        in.q = FieldElement(qs[qd(rng)]);
        int c = ctxd(rng);
        FieldContext ctx = c == 3 ? FieldContext(2) : c == 4 ? FieldContext(3) : FieldContext();
        for (auto& x : in.k) x = draw_k(rng, ctx);
        FieldElement target = int_pow(in.q, -in.n - 1);
        if (ds) {
            in.k[3] = target / (in.k[0] * in.k[1] * in.k[2]);
        } else {
            FieldElement root = int_pow(in.q, -(in.n + 1) / 2);
            if (coin(rng)) root = -root;
            int idx = in.type == XType::DDa ? 0 : in.type == XType::DDb ? 3 : in.type == XType::SSa ? 1 : 2;
            in.k[idx] = root;
        }
        if (!validate_params(in.type, in.n, in.k, in.q).ok()) continue;
        try {
            eigenvalue_ladder(in.type, in.n, in.k, in.q);
        } catch (const DahaError&) {
            continue;
        }
        out.push_back(in);
    }
    return out;
}

std::vector<HuangData> sample_huang(std::uint64_t seed, const FieldElement& q, int max_d, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dd(0, max_d);
    std::vector<HuangData> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 100 * count + 1000) {
        ++attempts;
        HuangData h{draw_k(rng, {}), draw_k(rng, {}), draw_k(rng, {}), dd(rng)};
        if (check_huang_admissible(h, q)) out.push_back(h);
    }
    return out;
}

Report construction_checks(const HqModule& m) {
    Report rep = verify_hq_relations(m);
    if (m.xtype) rep.add("defining equation and exclusions", validate_params(*m.xtype, m.params.n, m.params.k, m.params.q).ok());
    Derived d = derived_elements(m, &rep);
    std::size_t total = 0;
    bool one_dim = true;
    for (const auto& mu : m.mu) {
        std::size_t k = eigenspace(d.X, mu).dim();
        total += k;
        if (k != 1) one_dim = false;
    }
    rep.add("X eigenspaces on the ladder are 1-dimensional", one_dim);
    rep.add("X spectrum is exactly the ladder", total == m.dim() && m.mu.size() == m.dim());
    return rep;
}

SuiteResult run_suite(std::uint64_t seed, int max_n, std::size_t count) {
    SuiteResult res;
    for (const auto& in : sample_instances(seed, max_n, count)) {
        InstanceOutcome out;
        out.label = in.label();
        try {
            HqModule m = build_module(in.type, in.n, in.k, in.q);
            out.report = construction_checks(m);
            Feasibility f = is_feasible(m);
            out.feasible = f.feasible;
            out.infeasible_clause = f.failed_clause;
            out.report.add("feasibility: Y table agrees with direct computation", f.y_table == f.y_direct);
            if (f.feasible) {
                UBasis ub = u_basis(m);
                out.report.merge(ub.checks);
                Extraction ex = restricted_leonard_pairs(m);
                out.report.merge(ex.checks);
                HqModule s = twist(m, Twist::Sigma, &out.report);
                out.report.add("sigma twist has X-spectrum of Y", multiplicity_free_spectrum(derived_elements(s).X,
                                                                                           predicted_y_spectrum(m))
                                                                       .has_value());
                const HuangData& hp = ex.plus.generic;
                const HuangData& hm = ex.minus.generic;
                bool linked = !link_check(hp, hm, in.q).empty();
                out.report.add("extracted Huang data are linked", linked);
                if (linked && check_huang_admissible(hp, in.q) && check_huang_admissible(hm, in.q)) {
                    try {
                        LinkResult lr = link_construct(hp, hm, in.q);
                        out.report.merge(lr.extraction.checks);
                    } catch (const std::exception& e) {
                        out.report.add(std::string("link construction: ") + e.what(), false);
                    }
                }
            }
        } catch (const std::exception& e) {
            out.error = e.what();
            out.report.add(std::string("exception: ") + e.what(), false);
        }
        res.checks += out.report.checks.size();
        res.failures += out.report.failures();
        if (out.feasible) ++res.feasible;
        res.instances.push_back(std::move(out));
    }
    return res;
}

}  // namespace hq
