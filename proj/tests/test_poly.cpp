#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "support.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/poly.hpp"

using namespace syzcurve;
using testsupport::curve;

TEST_CASE("monomial enumeration and indexing invert each other") {
    for (long k = 0; k <= 6; ++k) {
        const auto mons = monomials_of_degree(k);
        REQUIRE(static_cast<long>(mons.size()) == dim_forms(k));
        for (std::size_t i = 0; i < mons.size(); ++i) {
            const Exp3& e = mons[i];
            CHECK(e[0] + e[1] + e[2] == k);
            CHECK(index_in_degree(e, k) == static_cast<long>(i));
        }
        // The enumeration follows the canonical term order (earlier = greater).
        TermOrder before;
        for (std::size_t i = 1; i < mons.size(); ++i) CHECK(before(mons[i - 1], mons[i]));
    }
    CHECK(dim_forms(-1) == 0);
    CHECK(monomials_of_degree(-2).empty());
}

TEST_CASE("polynomial arithmetic basics") {
    const Poly x = Poly::variable(0);
    const Poly y = Poly::variable(1);
    const Poly z = Poly::variable(2);

    Poly f = x * y - z.pow(2);
    CHECK(to_string(f) == "x*y - z^2");
    CHECK(f.total_degree() == 2);
    CHECK(f.eval(2, 3, 1) == 5);
    CHECK((f - f).is_zero());
    CHECK(Poly().total_degree() == -1);

    Poly g = (x + y).pow(3);
    CHECK(g.terms().size() == 4);
    CHECK(g.eval(1, 1, 0) == 8);

    CHECK(f.partial(0) == y);
    CHECK(f.partial(2) == z * Rat(-2));
    CHECK(f.degree_in(2) == 2);
    CHECK(f.coefficient_of(2, 2) == Poly(Rat(-1)));
    CHECK(f.coefficient_of(2, 0) == x * y);

    // order_at_origin reads the affine (x, y) order after substituting z = 1.
    Poly germ = x.pow(2) * z - y.pow(3);
    CHECK(germ.subst({x, y, Poly(Rat(1))}).order_at_origin() == 2);

    // Substitution is a ring homomorphism on a spot check.
    std::array<Poly, 3> img{y + z, x, z};
    CHECK(f.subst(img) == (y + z) * x - z.pow(2));
}

TEST_CASE("homogeneous wrapper validates degrees") {
    CHECK_THROWS_AS(HomogeneousPoly(Poly::variable(0) + Poly(Rat(1)), 1), NotHomogeneous);
    const Poly x = Poly::variable(0);
    CHECK_THROWS_AS(HomogeneousPoly(x * x, 3), NotHomogeneous);

    HomogeneousPoly f = curve("x*y - z^2");
    CHECK(f.degree() == 2);
    CHECK(euler_check(f));
    CHECK(euler_check(curve("x^5 + y^5 + z^5")));

    auto row = f.coefficient_row();
    REQUIRE(row.size() == 2);
    // Sparse ascending column indices within degree 2 (x*y has index 1, z^2 index 5).
    CHECK(row[0].first == index_in_degree({1, 1, 0}, 2));
    CHECK(row[1].first == index_in_degree({0, 0, 2}, 2));
    CHECK(row[0].second == 1);
    CHECK(row[1].second == -1);

    HomogeneousPoly prod = f * f;
    CHECK(prod.degree() == 4);
    CHECK(prod == HomogeneousPoly(f.poly() * f.poly(), 4));
}

TEST_CASE("univariate division, gcd, and squarefree part") {
    // p = (t - 1)^2 (t + 2)
    UnivariatePoly p({Rat(2), Rat(-3), Rat(0), Rat(1)});
    UnivariatePoly d({Rat(-1), Rat(1)});
    auto [q, r] = p.divmod(d);
    CHECK(r.is_zero());
    CHECK(q.eval(1) == 0);

    UnivariatePoly g = gcd(p, p.derivative());
    CHECK(g.degree() == 1);
    CHECK(g.eval(1) == 0);

    UnivariatePoly sf = squarefree_part(p);
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(1) == 0);
    CHECK(sf.eval(-2) == 0);
    CHECK(gcd(sf, sf.derivative()).degree() == 0);
}

TEST_CASE("rational roots are found with multiplicities") {
    // (t - 1)^2 (t + 2) (2t - 3), expanded via the polynomial product.
    UnivariatePoly p({Rat(-1), Rat(1)});
    p = p * p;
    p = p * UnivariatePoly({Rat(2), Rat(1)});
    p = p * UnivariatePoly({Rat(-3), Rat(2)});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == std::make_pair(Rat(-2), 1L));
    CHECK(roots[1] == std::make_pair(Rat(1), 2L));
    CHECK(roots[2] == std::make_pair(Rat(3, 2), 1L));

    // t^2 + 1 has no rational roots; t^3 has the origin with multiplicity 3.
    CHECK(rational_roots(UnivariatePoly({Rat(1), Rat(0), Rat(1)})).empty());
    auto origin = rational_roots(UnivariatePoly({Rat(0), Rat(0), Rat(0), Rat(1)}));
    REQUIRE(origin.size() == 1);
    CHECK(origin[0] == std::make_pair(Rat(0), 3L));
}

TEST_CASE("linear forms normalize and reject degenerate input") {
    LinearForm l(2, -1, 1);
    CHECK(l.a == 1);
    CHECK(l.b == Rat(-1, 2));
    CHECK(l.c == Rat(1, 2));
    CHECK(l == LinearForm(4, -2, 2));
    CHECK_THROWS_AS(LinearForm(0, 0, 0), BadParameters);
    CHECK_THROWS_AS(LinearForm::from_poly(Poly::variable(0) * Poly::variable(1)), BadParameters);
    CHECK(LinearForm::from_poly(l.to_poly()) == l);
    CHECK(l.to_homogeneous().degree() == 1);
}

TEST_CASE("projective points normalize to a leading 1") {
    ProjPoint p(0, 2, -4);
    CHECK(p.y == 1);
    CHECK(p.z == -2);
    CHECK(p == ProjPoint(0, -1, 2));
    CHECK_THROWS_AS(ProjPoint(0, 0, 0), BadParameters);
    CHECK(ProjPoint(1, 0, 0) < ProjPoint(2, 0, 1));  // (2:0:1) normalizes to (1:0:1/2)
}

TEST_CASE("line restriction and intersection counting") {
    const HomogeneousPoly fermat = curve("x^3 + y^3 + z^3");
    LineRestriction r = restrict_to_line(fermat, LinearForm(0, 0, 1));
    CHECK(r.inf_mult == 0);
    CHECK(r.degree_total() == 3);
    CHECK(r.p.coeff(0) == 1);
    CHECK(r.p.coeff(3) == 1);
    CHECK(count_intersections(fermat, LinearForm(0, 0, 1)) == 3);

    // x = 0 meets x*(x*y - z^2) only along the section z^2 then at infinity of the line.
    const HomogeneousPoly g1 = curve("x*(x*y - z^2)");
    CHECK_THROWS_AS(restrict_to_line(g1, LinearForm(1, 0, 0)), ZeroRestriction);
    CHECK(count_intersections(g1, LinearForm(0, 1, 0)) == 2);

    // Parameter point at infinity contributes when the line passes through it.
    LineRestriction tangent = restrict_to_line(curve("x*y*(x + y + z)"), LinearForm(0, 0, 1));
    CHECK(tangent.inf_mult == 1);  // (s:t) = (0:1) maps to (0:1:0), on the curve
    CHECK(tangent.degree_total() == 3);
}

TEST_CASE("exact division by a linear form") {
    const HomogeneousPoly g1 = curve("x*(x*y - z^2)");
    HomogeneousPoly q = divide_exact(g1, LinearForm(1, 0, 0));
    CHECK(q == curve("x*y - z^2"));
    CHECK(divides(g1, LinearForm(1, 0, 0)));
    CHECK_FALSE(divides(g1, LinearForm(0, 1, 0)));
    CHECK_THROWS_AS(divide_exact(g1, LinearForm(0, 1, 0)), NotDivisible);

    // Division works in whichever variable the form involves.
    HomogeneousPoly f = curve("(x + 2*y - z)*(x*y - z^2)");
    CHECK(divide_exact(f, LinearForm(1, 2, -1)) == curve("x*y - z^2"));
}

TEST_CASE("squarefreeness certificates") {
    CHECK(is_squarefree(curve("x*y*z")));
    CHECK(is_squarefree(curve("x^3 + y^3 + z^3")));
    CHECK(is_squarefree(curve("x*z*(x - z)*(x*y - z^2)")));
    CHECK_FALSE(is_squarefree(curve("(x*y - z^2)^2")));
    CHECK_FALSE(is_squarefree(curve("x^2*y")));
    CHECK_NOTHROW(require_reduced(curve("x*y*z")));
    CHECK_THROWS_AS(require_reduced(curve("x^2*y")), NotReduced);
}
