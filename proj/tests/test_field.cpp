#include "helpers.hpp"

#include <doctest.h>

using namespace hq;

TEST_CASE("rationals stay canonical") {
    FieldElement x(Rational(6, -4));
    CHECK(x.rat().get_num() == -3);
    CHECK(x.rat().get_den() == 2);
    CHECK((R(3, 2) * R(2, 3)).is_one());
    CHECK(R(0) + R(5, 7) == R(5, 7));
}

TEST_CASE("quadratic field arithmetic") {
    FieldElement a = Q2(1, 1, 2), b = Q2(1, -1, 2);
    CHECK(a * b == R(-1));
    CHECK(a.inv() == Q2(-1, 1, 2));
    CHECK(Q2(0, 1, 2).inv() == Q2(0, Rational(1, 2), 2));
    CHECK(R(2).inv() == R(1, 2));
    CHECK(a.conj() == b);
    CHECK(a.norm() == -1);
    CHECK((a * a.inv()).is_one());
}

TEST_CASE("context rules") {
    CHECK_THROWS_AS(FieldContext(4), FieldError);
    CHECK_THROWS_AS(FieldContext(0), FieldError);
    // a rational mixes with any context, two irrational contexts do not
    CHECK(R(3) * Q2(0, 1, 2) == Q2(0, 3, 2));
    CHECK_THROWS(Q2(0, 1, 2) + Q2(0, 1, 3));
    CHECK(Q2(5, 0, 2) == R(5));
    CHECK_THROWS_AS(R(0).inv(), FieldError);
}

TEST_CASE("square-free parts") {
    CHECK(squarefree_part(Integer(72)) == 2);
    CHECK(squarefree_part(Integer(-45)) == -5);
    CHECK(squarefree_part(Integer(1)) == 1);
    CHECK(is_squarefree(Integer(30)));
    CHECK_FALSE(is_squarefree(Integer(12)));
}

TEST_CASE("integer powers") {
    CHECK(int_pow(R(2), -4) == R(1, 16));
    CHECK(int_pow(R(7, 3), 0).is_one());
    CHECK(int_pow(R(3, 2), 2) == R(9, 4));
    CHECK(int_pow(Q2(1, 1, 2), 2) == Q2(3, 2, 2));
}

TEST_CASE("square roots inside the field") {
    CHECK(*sqrt_in_field(R(9, 4)) == R(3, 2));
    auto r = sqrt_in_field(FieldElement(Rational(8), FieldContext(2)));
    REQUIRE(r);
    CHECK(*r * *r == R(8));
    CHECK(r->is_rational() == false);
    CHECK_FALSE(sqrt_in_field(FieldElement(Rational(3), FieldContext(2))));
    CHECK_FALSE(sqrt_in_field(R(2)));
    auto s = sqrt_in_field(Q2(3, 2, 2));  // (1 + sqrt 2)^2
    REQUIRE(s);
    CHECK(*s * *s == Q2(3, 2, 2));
    CHECK_FALSE(sqrt_in_field(Q2(1, 1, 2)));
}

TEST_CASE("valid q") {
    CHECK(is_valid_q(R(2)));
    CHECK_FALSE(is_valid_q(R(-1)));
    CHECK_FALSE(is_valid_q(R(1)));
    CHECK_FALSE(is_valid_q(R(0)));
    CHECK(is_valid_q(R(1, 2)));
    CHECK_FALSE(is_valid_q(Q2(0, 1, 2)));
}

TEST_CASE("parse and print") {
    FieldElement x = FieldElement::parse("-3/6", "1/2", 5);
    CHECK(x == Q2(Rational(-1, 2), Rational(1, 2), 5));
    CHECK(R(-3, 4).str() == "-3/4");
    CHECK(serial_less(R(-1), R(1)));
}
