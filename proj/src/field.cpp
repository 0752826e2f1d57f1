#include "hq/field.hpp"

#include <cstdlib>

namespace hq {

namespace {

// Trial division bound for square-free reduction. A cofactor with no small
// prime factor is square-free unless it is a perfect square or has a repeated
// factor above the bound (needs a cofactor > bound^3).
constexpr unsigned long kTrialBound = 1000000;

Integer strip_squares(Integer n, Integer* root_out) {
    // returns square-free s with |n| = s * root^2
    Integer root = 1, s = 1;
    if (n < 0) n = -n;
    for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            n /= p;
            ++e;
        }
        if (e % 2) s *= p;
        for (int i = 0; i < e / 2; ++i) root *= p;
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t()) != 0) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        root *= r;
    } else {
        s *= n;
    }
    if (root_out) *root_out = root;
    return s;
}

}  // namespace

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    Integer root;
    strip_squares(n, &root);
    return root == 1;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw FieldError("square-free part of zero");
    Integer s = strip_squares(n, nullptr);
    return n < 0 ? Integer(-s) : s;
}

FieldContext::FieldContext(long d) : d_(d) {
    if (d == 0 || !is_squarefree(Integer(d))) throw FieldError("discriminant must be square-free and nonzero");
}

FieldElement::FieldElement(const Rational& r, const Rational& i, FieldContext ctx) : rat_(r), irr_(i), ctx_(ctx) {
    canon();
}

FieldElement FieldElement::parse(const std::string& rat, const std::string& irr, long disc) {
    Rational r, i;
    try {
        r = Rational(rat);
        i = Rational(irr);
    } catch (const std::invalid_argument&) {
        throw FieldError("bad rational literal");
    }
    return FieldElement(r, i, FieldContext(disc));
}

void FieldElement::canon() {
    rat_.canonicalize();
    irr_.canonicalize();
    if (ctx_.is_rational() && sgn(irr_) != 0) {
        // sqrt(1) = 1
        rat_ += irr_;
        irr_ = 0;
    }
}

FieldContext join(const FieldContext& a, const FieldContext& b) {
    if (a == b) return a;
    if (a.is_rational()) return b;
    if (b.is_rational()) return a;
    throw FieldError("context mismatch");
}

namespace {
FieldContext join_elems(const FieldElement& a, const FieldElement& b) {
    if (a.context() == b.context()) return a.context();
    if (a.is_rational() && b.is_rational()) {
        if (a.context().is_rational()) return b.context();
        if (b.context().is_rational()) return a.context();
        throw FieldError("context mismatch");
    }
    if (a.is_rational() && a.context().is_rational()) return b.context();
    if (b.is_rational() && b.context().is_rational()) return a.context();
    throw FieldError("context mismatch");
}
}  // namespace

FieldElement FieldElement::in(FieldContext ctx) const {
    if (ctx == ctx_) return *this;
    if (!is_rational()) throw FieldError("context mismatch");
    FieldElement r = *this;
    r.ctx_ = ctx;
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.rat_ = -r.rat_;
    r.irr_ = -r.irr_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    ctx_ = join_elems(*this, o);
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    ctx_ = join_elems(*this, o);
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    ctx_ = join_elems(*this, o);
    if (sgn(irr_) == 0 && sgn(o.irr_) == 0) {
        rat_ *= o.rat_;
        return *this;
    }
    Rational r = rat_ * o.rat_ + irr_ * o.irr_ * ctx_.disc();
    Rational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = r;
    irr_ = i;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inv(); }

FieldElement FieldElement::conj() const {
    FieldElement r = *this;
    r.irr_ = -r.irr_;
    return r;
}

Rational FieldElement::norm() const { return rat_ * rat_ - irr_ * irr_ * ctx_.disc(); }

FieldElement FieldElement::inv() const {
    if (is_zero()) throw FieldError("division by zero");
    if (sgn(irr_) == 0) return FieldElement(Rational(1) / rat_, ctx_);
    Rational n = norm();
    return FieldElement(rat_ / n, -irr_ / n, ctx_);
}

std::string FieldElement::str() const {
    std::string s = rat_.get_str();
    if (sgn(irr_) != 0) s += (sgn(irr_) > 0 ? "+" : "") + irr_.get_str() + "*sqrt(" + std::to_string(ctx_.disc()) + ")";
    return s;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.rat_ != b.rat_ || a.irr_ != b.irr_) return false;
    return sgn(a.irr_) == 0 || a.ctx_ == b.ctx_;
}

FieldElement int_pow(const FieldElement& x, long e) {
    if (e < 0) return int_pow(x.inv(), -e);
    FieldElement result = FieldElement(Rational(1), x.context());
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

namespace {
std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (sgn(x) == 0) return Rational(0);
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}
}  // namespace

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    if (!x.is_rational()) {
        // (u + v sqrt D)^2 = x + y sqrt D  =>  u^2 - D v^2 = +-sqrt(norm), 2uv = y
        auto m = rational_sqrt(x.norm());
        if (!m) return std::nullopt;
        for (int s : {1, -1}) {
            auto u = rational_sqrt(Rational((x.rat() + s * *m) / 2));
            if (!u || sgn(*u) == 0) continue;
            FieldElement r(*u, Rational(x.irr() / (2 * *u)), x.context());
            if (r * r == x) return r;
        }
        return std::nullopt;
    }
    if (auto r = rational_sqrt(x.rat())) return FieldElement(*r, x.context());
    if (!x.context().is_rational()) {
        if (auto r = rational_sqrt(x.rat() / x.disc())) return FieldElement(Rational(0), *r, x.context());
    }
    return std::nullopt;
}

bool is_valid_q(const FieldElement& x) {
    if (!x.is_rational()) return false;
    return sgn(x.rat()) != 0 && x.rat() != 1 && x.rat() != -1;
}

bool serial_less(const FieldElement& a, const FieldElement& b) {
    auto key = [](const FieldElement& x) {
        return "{\"disc\":" + std::to_string(x.disc()) + ",\"irr\":\"" + x.irr().get_str() + "\",\"rat\":\"" +
               x.rat().get_str() + "\"}";
    };
    return key(a) < key(b);
}

}  // namespace hq
