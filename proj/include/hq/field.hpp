// Exact arithmetic in Q and in a single quadratic extension Q(sqrt D).
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hq {

using Rational = mpq_class;
using Integer = mpz_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D = 1 means the rationals.
class FieldContext {
public:
    FieldContext() = default;
    explicit FieldContext(long d);
    long disc() const { return d_; }
    bool is_rational() const { return d_ == 1; }
    bool operator==(const FieldContext& o) const { return d_ == o.d_; }

private:
    long d_ = 1;
};

bool is_squarefree(const Integer& n);
// Square-free part of a nonzero integer (sign kept).
Integer squarefree_part(const Integer& n);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long v) : rat_(v) {}  // NOLINT(implicit)
    FieldElement(const Rational& v, FieldContext ctx = {}) : rat_(v), ctx_(ctx) { rat_.canonicalize(); }
    FieldElement(const Rational& r, const Rational& i, FieldContext ctx);

    static FieldElement parse(const std::string& rat, const std::string& irr = "0", long disc = 1);

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    const FieldContext& context() const { return ctx_; }
    long disc() const { return ctx_.disc(); }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
    bool is_one() const { return rat_ == 1 && sgn(irr_) == 0; }
    bool is_rational() const { return sgn(irr_) == 0; }

    // Same value moved into ctx; throws if that loses information.
    FieldElement in(FieldContext ctx) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    FieldElement inv() const;
    FieldElement conj() const;
    Rational norm() const;

    std::string str() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    void canon();
    Rational rat_ = 0;
    Rational irr_ = 0;
    FieldContext ctx_{};
};

inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

inline FieldElement inv(const FieldElement& x) { return x.inv(); }
FieldElement int_pow(const FieldElement& x, long e);
// A square root inside the element's own field, else the rational root
// times sqrt(D) of its context, else none.
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);
bool is_valid_q(const FieldElement& x);

// Context large enough to hold both operands.
FieldContext join(const FieldContext& a, const FieldContext& b);

// x + 1/x
inline FieldElement sym(const FieldElement& x) { return x + x.inv(); }

// Total order on the serialized form, used for deterministic tie-breaking.
bool serial_less(const FieldElement& a, const FieldElement& b);

}  // namespace hq
