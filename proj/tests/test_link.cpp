#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hq;

namespace {
bool has_case(const std::vector<LinkCase>& v, int id) {
    return std::any_of(v.begin(), v.end(), [&](const LinkCase& c) { return c.case_id == id; });
}
}  // namespace

TEST_CASE("link cases for the flagship data") {
    HuangData p{R(3), R(5), R(7), 2}, m{R(3), R(5), R(7), 0};
    CHECK(has_case(link_check(p, m, R(2)), 1));
    CHECK(has_case(link_check(m, p, R(2)), 7));
    CHECK(case_name(1) == "i");
    CHECK(case_name(7) == "vii");
}

TEST_CASE("link construction reproduces the flagship module") {
    HuangData p{R(3), R(5), R(7), 2}, m{R(3), R(5), R(7), 0};
    LinkResult r = link_construct(p, m, R(2));
    CHECK(r.used.case_id == 1);
    CHECK(r.xtype == XType::DDa);
    CHECK(r.module.params.n == 3);
    CHECK(r.module.params.k == flagship_k());
    CHECK(r.extraction.checks.ok());
    CHECK_FALSE(r.exchanged);

    LinkResult rev = link_construct(m, p, R(2));
    CHECK(rev.exchanged);
    CHECK(rev.module.params.k == flagship_k());
}

TEST_CASE("inverted inputs still link") {
    HuangData p{R(1, 3), R(5), R(1, 7), 2}, m{R(3), R(1, 5), R(7), 0};
    CHECK(has_case(link_check(p, m, R(2)), 1));
    LinkResult r = link_construct(p, m, R(2));
    CHECK(r.extraction.checks.ok());
}

TEST_CASE("case ii excludes a^2 = q^-2d") {
    FieldElement q = R(2);
    // a = q^-d with d = 2 makes a^2 = q^-4
    HuangData h{R(1, 4), R(5), R(7), 2}, h2{R(1, 2), R(10), R(14), 1};
    for (const auto& c : link_check(h, h2, q)) CHECK(c.case_id != 2);
    HuangData ok{R(3), R(5), R(7), 2}, ok2{R(6), R(10), R(14), 1};
    CHECK(has_case(link_check(ok, ok2, q), 2));
}

TEST_CASE("case iv builds DDb") {
    FieldElement q = R(2);
    HuangData h{R(3), R(5), R(7), 1}, h2{R(3), R(5) * q * q, R(7), 1};
    auto cs = link_check(h, h2, q);
    REQUIRE(has_case(cs, 4));
    LinkResult r = link_construct(h, h2, q);
    CHECK(r.used.case_id == 4);
    CHECK(r.xtype == XType::DDb);
    KParams want{R(5) * q, R(7), R(3), int_pow(q, -2)};
    CHECK(r.module.params.k == want);
    CHECK(r.module.params.n == 3);
    CHECK(r.extraction.checks.ok());
}

TEST_CASE("case ii builds DS") {
    FieldElement q = R(2);
    HuangData h{R(3), R(5), R(7), 2}, h2{R(3) * q, R(5) * q, R(7) * q, 1};
    LinkResult r = link_construct(h, h2, q);
    CHECK(r.used.case_id == 2);
    CHECK(r.xtype == XType::DS);
    CHECK(r.extraction.checks.ok());
}

TEST_CASE("unlinked data") {
    HuangData h{R(3), R(5), R(7), 2}, h2{R(3), R(5), R(7), 1};
    CHECK(link_check(h, h2, R(2)).empty());
    CHECK_THROWS_AS(link_construct(h, h2, R(2)), DahaError);
    HuangData x{R(3), R(5), R(7), 1}, y{R(11), R(5), R(7), 1};
    CHECK(link_check(x, y, R(2)).empty());
}
