#include "hq/daha.hpp"

#include <tuple>

namespace hq {

namespace {

FieldElement qp(const FieldElement& q, long e) { return int_pow(q, e); }

struct Row {
    int dd;
    int ea, eb, ec;  // ratio exponents of q
};

const Row kRows[7] = {{-2, 0, 0, 0}, {-1, 1, 1, 1}, {0, 2, 0, 0}, {0, 0, 2, 0},
                      {0, 0, 0, 2}, {1, -1, -1, -1}, {2, 0, 0, 0}};

bool inequalities(int id, const HuangData& h, const FieldElement& q) {
    FieldElement a2 = h.a * h.a, b2 = h.b * h.b, c2 = h.c * h.c;
    FieldElement lo = qp(q, -2 * h.d), hi = qp(q, 2 * h.d), qm2 = qp(q, -2);
    auto avoid_pm = [&](const FieldElement& x) { return x != lo && x != hi; };
    switch (id) {
        case 2:
        case 6: return a2 != lo && b2 != lo;
        case 3: return avoid_pm(b2) && a2 != qm2;
        case 4: return avoid_pm(a2) && b2 != qm2;
        case 5: return avoid_pm(a2) && avoid_pm(b2) && c2 != qm2;
        default: return true;
    }
}

HuangData apply_variant(const HuangData& h, const std::array<int, 3>& v) {
    return {int_pow(h.a, v[0]), int_pow(h.b, v[1]), int_pow(h.c, v[2]), h.d};
}

std::vector<std::array<int, 3>> variants(bool c_free) {
    std::vector<std::array<int, 3>> out;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) {
                if (c_free && c == -1) continue;
                out.push_back({a, b, c});
            }
    return out;
}

}  // namespace

std::string case_name(int id) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
    if (id < 1 || id > 7) return "?";
    return names[id - 1];
}

std::vector<LinkCase> link_check(const HuangData& h, const HuangData& h2, const FieldElement& q) {
    std::vector<LinkCase> out;
    bool free1 = h.d == 0, free2 = h2.d == 0;
    for (const auto& v1 : variants(free1))
        for (const auto& v2 : variants(free2)) {
            HuangData x = apply_variant(h, v1), y = apply_variant(h2, v2);
            for (int id = 1; id <= 7; ++id) {
                const Row& row = kRows[id - 1];
                if (y.d - x.d != row.dd) continue;
                if (y.a != x.a * qp(q, row.ea) || y.b != x.b * qp(q, row.eb)) continue;
                FieldElement rc = qp(q, row.ec);
                std::vector<std::pair<FieldElement, FieldElement>> cs;
                if (free1 && free2) {
                    // both c's arbitrary: keep the given first one, or 1
                    cs.push_back({x.c, x.c * rc});
                    if (!x.c.is_one()) cs.push_back({FieldElement(1), rc});
                } else if (free1) {
                    cs.push_back({y.c / rc, y.c});
                } else if (free2) {
                    cs.push_back({x.c, x.c * rc});
                } else if (y.c == x.c * rc) {
                    cs.push_back({x.c, y.c});
                }
                for (const auto& [c1, c2] : cs) {
                    HuangData xx = x, yy = y;
                    xx.c = c1;
                    yy.c = c2;
                    if (!inequalities(id, xx, q)) continue;
                    out.push_back({id, v1, v2, xx, yy});
                }
            }
        }
    return out;
}

namespace {

LinkResult build_linked(const LinkCase& used, bool exchanged, const FieldElement& q, RootSign sign) {
    const HuangData& x = used.h;
    const HuangData& y = used.h2;
    int d = x.d, n = d + y.d + 1;
    FieldElement qd1 = qp(q, -d - 1);
    KParams k;
    XType t;
    switch (used.case_id) {
        case 1:
            t = XType::DDa;
            k = {qp(q, -d), x.a, x.c, x.b};
            break;
        case 2: {
            t = XType::DS;
            FieldElement sq = x.a * x.b * x.c * qp(q, 1 - d);
            auto r = sqrt_in_field(sq);
            if (!r && sq.is_rational() && sq.context().is_rational()) {
                Rational v = sq.rat();
                Integer D = squarefree_part(Integer(v.get_num() * v.get_den()));
                r = sqrt_in_field(sq.in(FieldContext(D.get_si())));
            }
            if (!r) throw DahaError("field-extension conflict: k0 needs a second square root");
            FieldElement pos = *r, neg = -*r;
            FieldElement k0 = sign == RootSign::Plus ? pos : sign == RootSign::Minus ? neg : (serial_less(neg, pos) ? neg : pos);
            FieldElement f = qp(q, -d) * k0.inv();
            k = {k0, x.a * f, x.c * f, x.b * f};
            break;
        }
        case 3:
            t = XType::SSa;
            k = {x.a * q, qd1, x.b, x.c};
            break;
        case 4:
            t = XType::DDb;
            k = {x.b * q, x.c, x.a, qd1};
            break;
        case 5:
            t = XType::SSb;
            k = {x.c * q, x.b, qd1, x.a};
            break;
        default: throw DahaError("unexpected link case");
    }
    LinkResult res;
    res.used = used;
    res.xtype = t;
    res.exchanged = exchanged;
    res.module = build_module(t, n, k, q);
    Feasibility f = is_feasible(res.module);
    if (!f.feasible) throw DahaError("linked module is not feasible: " + f.failed_clause);
    res.extraction = restricted_leonard_pairs(res.module);
    res.extraction.checks.add("V(k0) carries the first Huang data", huang_equivalent(res.extraction.plus.generic, x));
    res.extraction.checks.add("V(k0^-1) carries the second Huang data", huang_equivalent(res.extraction.minus.generic, y));
    return res;
}

}  // namespace


LinkResult link_construct(const HuangData& h, const HuangData& h2, const FieldElement& q, RootSign sign) {
    if (!check_huang_admissible(h, q) || !check_huang_admissible(h2, q)) throw DahaError("inadmissible Huang data");
    auto cases = link_check(h, h2, q);
    if (cases.empty()) throw DahaError("not linked");
    // (vi), (vii) exchange the two pairs and become (ii), (i); ties go to the
    // fewest inversions, in a fixed order, so both input orders pick the same module
    auto normal = [](const LinkCase& c) {
        if (c.case_id <= 5) return c;
        return LinkCase{c.case_id == 6 ? 2 : 1, c.variant2, c.variant, c.h2, c.h};
    };
    auto flip = [](std::array<int, 3> v) {
        for (int& x : v) x = -x;
        return v;
    };
    auto key = [&](const LinkCase& c) { return std::tuple(c.case_id, flip(c.variant), flip(c.variant2)); };
    LinkCase used = normal(cases.front());
    bool exchanged = cases.front().case_id > 5;
    for (const auto& c : cases) {
        LinkCase u = normal(c);
        if (key(u) < key(used)) {
            used = u;
            exchanged = c.case_id > 5;
        }
    }
    if (used.h.d != 0 || used.h2.d != 0) return build_linked(used, exchanged, q, sign);
    // both c's are free: take the first c giving valid parameters
    FieldElement ratio = used.h2.c / used.h.c;
    std::vector<FieldElement> tries{used.h.c};
    for (long v : {1L, 2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        tries.push_back(FieldElement(v));
        tries.push_back(FieldElement(Rational(1, v)));
    }
    std::string last;
    for (const auto& c : tries) {
        LinkCase u = used;
        u.h.c = c;
        u.h2.c = c * ratio;
        if (!inequalities(u.case_id, u.h, q)) continue;
        try {
            return build_linked(u, exchanged, q, sign);
        } catch (const DahaError& e) {
            last = e.what();
        }
    }
    throw DahaError("no admissible choice of the free c: " + last);
}

}  // namespace hq
