#include "hq/poly.hpp"

#include <algorithm>

namespace hq {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FieldElement poly_eval(const Poly& p, const FieldElement& x) {
    FieldElement acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * FieldElement(static_cast<long>(i)));
    poly_trim(d);
    return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly r = a, bb = b;
    poly_trim(r);
    poly_trim(bb);
    if (bb.empty()) throw FieldError("polynomial division by zero");
    if (r.size() < bb.size()) return {Poly{}, r};
    Poly q(r.size() - bb.size() + 1);
    FieldElement lead = bb.back().inv();
    for (std::size_t k = q.size(); k-- > 0;) {
        FieldElement f = r[k + bb.size() - 1] * lead;
        q[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) r[k + j] -= f * bb[j];
    }
    r.resize(bb.size() - 1);
    poly_trim(r);
    poly_trim(q);
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    FieldElement s = a.back().inv();
    for (auto& x : a) x *= s;
    return a;
}

namespace {

using ModPoly = std::vector<long long>;

long long modp(const Integer& x, long long p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<long long>(r.get_si());
}

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, long long p) {
    mp_trim(a);
    long long inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        long long f = a.back() * inv % p;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - f * b[j]) % p + p) % p;
        mp_trim(a);
    }
    return a;
}

std::size_t mp_gcd_degree(ModPoly a, ModPoly b, long long p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer eval_int(const std::vector<Integer>& f, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = acc * x + *it;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // make square-free, clear denominators
    Poly f;
    for (const auto& c : coeffs) f.emplace_back(c);
    poly_trim(f);
    std::vector<Rational> roots;
    if (f.size() <= 1) return roots;
    std::size_t zero_mult = 0;
    while (f.front().is_zero()) {
        f.erase(f.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.emplace_back(0);
    Poly g = poly_gcd(f, poly_derivative(f));
    if (g.size() > 1) f = poly_divmod(f, g).first;
    if (f.size() <= 1) return roots;

    Integer l = 1;
    for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den_mpz_t());
    std::vector<Integer> fi;
    for (const auto& c : f) fi.push_back(Integer(c.rat() * l));
    std::size_t deg = fi.size() - 1;

    long long p = 2;
    for (;;) {
        ++p;
        if (!is_prime(p) || modp(fi.back(), p) == 0) continue;
        ModPoly fm, dm;
        for (const auto& c : fi) fm.push_back(modp(c, p));
        for (std::size_t i = 1; i <= deg; ++i) dm.push_back(fm[i] * static_cast<long long>(i) % p);
        mp_trim(dm);
        if (dm.empty() || mp_gcd_degree(fm, dm, p) != 0) continue;
        break;
    }

    // reconstruction needs m > 2 max(|num|, |den|)^2
    Integer big = std::max(Integer(abs(fi.front())), Integer(abs(fi.back())));
    Integer bound = 2 * big * big + 1;
    std::vector<Integer> dfi;
    for (std::size_t i = 1; i <= deg; ++i) dfi.push_back(fi[i] * static_cast<long>(i));

    for (long long r0 = 0; r0 < p; ++r0) {
        Integer pp = static_cast<long>(p);
        if (eval_int(fi, Integer(static_cast<long>(r0)), pp) != 0) continue;
        Integer r = static_cast<long>(r0), m = static_cast<long>(p);
        while (m <= bound) {
            m *= m;
            Integer fv = eval_int(fi, r, m), dv = eval_int(dfi, r, m), dinv;
            if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) break;
            r = r - fv * dinv;
            mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        // rational reconstruction
        Integer a0 = m, a1 = r, s0 = 0, s1 = 1, lim;
        mpz_sqrt(lim.get_mpz_t(), Integer(m / 2).get_mpz_t());
        while (a1 > lim) {
            Integer qq = a0 / a1;
            Integer t = a0 - qq * a1;
            a0 = a1;
            a1 = t;
            t = s0 - qq * s1;
            s0 = s1;
            s1 = t;
        }
        if (s1 == 0) continue;
        Rational cand(a1, s1);
        cand.canonicalize();
        if (poly_eval(f, FieldElement(cand)).is_zero()) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<std::vector<FieldElement>> split_roots(const Poly& p0) {
    Poly p = p0;
    poly_trim(p);
    if (p.empty()) return std::nullopt;
    FieldContext ctx;
    for (const auto& c : p) {
        if (!c.is_rational()) return std::nullopt;
        ctx = join(ctx, c.context());
    }
    std::vector<Rational> rc;
    for (const auto& c : p) rc.push_back(c.rat());
    std::vector<FieldElement> roots;
    for (const auto& r : rational_roots(rc)) {
        FieldElement x(r, ctx);
        Poly lin{-x, FieldElement(Rational(1), ctx)};
        for (;;) {
            auto [q, rem] = poly_divmod(p, lin);
            if (!rem.empty()) break;
            p = q;
            roots.push_back(x);
        }
    }
    if (p.size() == 3) {
        // a x^2 + b x + c with rational coefficients
        FieldElement a = p[2], b = p[1], c = p[0];
        FieldElement disc = b * b - FieldElement(4) * a * c;
        auto s = sqrt_in_field(disc.in(ctx));
        if (!s) return std::nullopt;
        FieldElement two_a = FieldElement(2) * a;
        roots.push_back((-b + *s) / two_a);
        roots.push_back((-b - *s) / two_a);
        p = {p[2]};
    }
    if (p.size() != 1) return std::nullopt;
    return roots;
}

}  // namespace hq
