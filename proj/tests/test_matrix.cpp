#include "helpers.hpp"
#include "hq/poly.hpp"

#include <doctest.h>

using namespace hq;

TEST_CASE("inverse and products") {
    CHECK(mat_inverse(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
    CHECK(mat_mul(ExactMatrix::diag({R(2), R(3)}), ExactMatrix::diag({R(1, 2), R(1, 3)})) == ExactMatrix::identity(2));
    CHECK_THROWS_AS(mat_inverse(M({{1, 2}, {2, 4}})), MatrixError);
    ExactMatrix a = M({{2, 1}, {7, 4}});
    CHECK(a * mat_inverse(a) == ExactMatrix::identity(2));
}

TEST_CASE("kernels") {
    CHECK(kernel_basis(ExactMatrix(2, 2)).dim() == 2);
    CHECK(kernel_basis(ExactMatrix::identity(2)).dim() == 0);
    Subspace k = kernel_basis(M({{1, 1}, {1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains({R(1), R(-1)}));
    CHECK_FALSE(k.contains({R(1), R(1)}));
}

TEST_CASE("eigenspaces") {
    ExactMatrix d = ExactMatrix::diag({R(3), R(1, 12), R(12)});
    Subspace e = eigenspace(d, R(3));
    REQUIRE(e.dim() == 1);
    CHECK(e.contains({R(1), R(0), R(0)}));
    CHECK(eigenspace(ExactMatrix::identity(2), R(2)).dim() == 0);
    CHECK(eigenspace(ExactMatrix::diag({R(5), R(5)}), R(5)).dim() == 2);
}

TEST_CASE("shape predicates") {
    CHECK(is_irreducible_tridiagonal(M({{1, 1}, {1, 1}})));
    CHECK_FALSE(is_irreducible_tridiagonal(M({{1, 0}, {1, 1}})));
    CHECK(is_upper_bidiagonal(ExactMatrix::diag({R(1), R(2)})));
    CHECK(is_lower_bidiagonal(M({{1, 0, 0}, {1, 2, 0}, {0, 1, 3}})));
    CHECK_FALSE(is_lower_bidiagonal(M({{1, 0, 0}, {1, 2, 0}, {1, 1, 3}})));
    CHECK(is_lower_tridiagonal(M({{1, 0, 0}, {1, 2, 0}, {1, 1, 3}})));
    CHECK_FALSE(is_lower_tridiagonal(M({{1, 1, 0}, {1, 2, 0}, {1, 1, 3}})));
    CHECK(is_upper_tridiagonal(M({{1, 1, 1}, {0, 2, 1}, {0, 0, 3}})));
    CHECK(is_tridiagonal(M({{1, 1, 0}, {1, 2, 1}, {0, 1, 3}})));
    CHECK_FALSE(is_tridiagonal(M({{1, 1, 1}, {1, 2, 1}, {0, 1, 3}})));
}

TEST_CASE("change of basis") {
    ExactMatrix m = M({{1, 2}, {3, 4}});
    CHECK(change_of_basis(m, ExactMatrix::identity(2)) == m);
    CHECK(change_of_basis(ExactMatrix::diag({R(1), R(2)}), M({{0, 1}, {1, 0}})) == ExactMatrix::diag({R(2), R(1)}));
    ExactMatrix p = M({{1, 1}, {0, 1}});
    CHECK(change_of_basis(change_of_basis(m, p), mat_inverse(p)) == m);
}

TEST_CASE("restriction") {
    Subspace w = make_subspace(3, {{R(1), R(1), R(0)}, {R(0), R(1), R(1)}});
    CHECK(restrict(ExactMatrix::identity(3), w) == ExactMatrix::identity(2));
    Subspace w2 = make_subspace(3, {{R(1), R(0), R(0)}, {R(0), R(0), R(1)}});
    CHECK(restrict(ExactMatrix::diag({R(1), R(2), R(3)}), w2) == ExactMatrix::diag({R(1), R(3)}));
    CHECK_THROWS_AS(restrict(ExactMatrix::diag({R(1), R(2)}), make_subspace(2, {{R(1), R(1)}})), MatrixError);
}

TEST_CASE("subspaces") {
    Subspace a = make_subspace(3, {{R(1), R(0), R(0)}, {R(0), R(1), R(0)}});
    Subspace b = make_subspace(3, {{R(0), R(1), R(0)}, {R(0), R(0), R(1)}});
    Subspace i = intersect(a, b);
    REQUIRE(i.dim() == 1);
    CHECK(i.contains({R(0), R(5), R(0)}));
    CHECK(subspace_sum(a, b).dim() == 3);
    CHECK(a.same_as(make_subspace(3, {{R(1), R(1), R(0)}, {R(1), R(-1), R(0)}})));
    CHECK_THROWS_AS(make_subspace(2, {{R(1), R(2)}, {R(2), R(4)}}), MatrixError);
}

TEST_CASE("rank and solve") {
    CHECK(rank(M({{1, 2}, {2, 4}})) == 1);
    auto x = solve(M({{2, 0}, {0, 4}}), M({{2}, {2}}));
    REQUIRE(x);
    CHECK(*x == ExactMatrix::from_rows({{R(1)}, {R(1, 2)}}));
    CHECK_FALSE(solve(M({{1}, {1}}), M({{1}, {2}})));
}

TEST_CASE("characteristic polynomial and roots") {
    // (x - 2)(x - 1/3)(x + 5)
    ExactMatrix m = ExactMatrix::diag({R(2), R(1, 3), R(-5)});
    auto p = char_poly(m);
    REQUIRE(p.size() == 4);
    CHECK(p[3].is_one());
    CHECK(p[0] == R(10, 3));
    auto roots = split_roots(p);
    REQUIRE(roots);
    CHECK(roots->size() == 3);
    // x^2 - 2 splits only after extending
    auto r2 = split_roots({R(-2), R(0), R(1)});
    CHECK_FALSE(r2);
    auto r3 = split_roots({FieldElement(Rational(-2), FieldContext(2)), R(0), R(1)});
    REQUIRE(r3);
    CHECK(r3->size() == 2);
    auto rr = rational_roots({Rational(-6), Rational(11), Rational(-6), Rational(1)});
    CHECK(rr == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    auto big = rational_roots({Rational(-1000003), Rational(999), Rational(1)});  // no rational root
    for (const auto& r : big) CHECK(r * r + 999 * r - 1000003 == 0);
    CHECK(rational_roots({Rational(-3), Rational(1)}) == std::vector<Rational>{Rational(3)});
    CHECK(rational_roots({Rational(50), Rational(7)}) == std::vector<Rational>{Rational(-50, 7)});
    CHECK(rational_roots({Rational(-1001), Rational(0), Rational(0), Rational(1)}).empty());
}
