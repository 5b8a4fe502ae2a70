#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/local.hpp"

using namespace syzcurve;
using testsupport::curve;

TEST_CASE("local Milnor and Tjurina numbers at reference singularities") {
    // Unique singular point of the free cubic, a quasi-homogeneous tacnode.
    LocalInvariants qh = local_mu_tau(curve("x*(x*y - z^2)"), ProjPoint(0, 1, 0));
    CHECK(qh.mu == 3);
    CHECK(qh.tau == 3);

    // x*z*(x*y - z^2) at (0:1:0), still quasi-homogeneous.
    LocalInvariants d6 = local_mu_tau(curve("x*z*(x*y - z^2)"), ProjPoint(0, 1, 0));
    CHECK(d6.mu == 6);
    CHECK(d6.tau == 6);

    // x*z*(x - z)*(x*y - z^2) at (0:1:0): first non-quasi-homogeneous example.
    LocalInvariants big = local_mu_tau(curve("x*z*(x - z)*(x*y - z^2)"), ProjPoint(0, 1, 0));
    CHECK(big.mu == 11);
    CHECK(big.tau == 10);
    CHECK(local_epsilon(curve("x*z*(x - z)*(x*y - z^2)"), ProjPoint(0, 1, 0)) == 1);

    // Ordinary node of the same curve at (1:1:1).
    LocalInvariants simple = local_mu_tau(curve("x*z*(x - z)*(x*y - z^2)"), ProjPoint(1, 1, 1));
    CHECK(simple.mu == 1);
    CHECK(simple.tau == 1);
}

TEST_CASE("cuspidal family germ at infinity") {
    // ((z^(k-1)*y + x^k)^2*z - x^(2k+1) for k = 2.
    const HomogeneousPoly cusp2 = curve("(z*y + x^2)^2*z - x^5");
    LocalInvariants li = local_mu_tau(cusp2, ProjPoint(0, 1, 0));
    CHECK(li.mu == 8);
    CHECK(li.tau == 8);

    const HomogeneousPoly cusp3 = curve("(z^2*y + x^3)^2*z - x^7");
    LocalInvariants l3 = local_mu_tau(cusp3, ProjPoint(0, 1, 0));
    CHECK(l3.mu == 24);
    CHECK(l3.tau == 21);
}

TEST_CASE("error paths of the local computations") {
    CHECK_THROWS_AS(local_mu_tau(curve("x*y*z"), ProjPoint(1, 1, 1)), PointNotOnCurve);
    // Smooth point: both invariants are zero.
    LocalInvariants sm = local_mu_tau(curve("x^3 + y^3 + z^3"), ProjPoint(1, -1, 0));
    CHECK(sm.mu == 0);
    CHECK(sm.tau == 0);
    // Non-isolated singularity (double conic) cannot stabilize.
    CHECK_THROWS_AS(local_mu_tau(curve("(x*y - z^2)^2"), ProjPoint(0, 1, 0)), NonIsolated);
}

TEST_CASE("intersection multiplicities of germs") {
    CHECK(intersection_multiplicity(curve("x^2*z"), curve("y^2*z"), ProjPoint(0, 0, 1)) == 4);
    CHECK(intersection_multiplicity(curve("x*y*z"), curve("(x + y)*z^2"), ProjPoint(0, 0, 1)) ==
          2);
    // Tangent conics meet with multiplicity > 1.
    CHECK(intersection_multiplicity(curve("x*y - z^2"), curve("x*y*2 - z^2"),
                                    ProjPoint(0, 1, 0)) == 2);
    CHECK_THROWS_AS(intersection_multiplicity(curve("x*y*z"), curve("y*(x - z)*(x + z)"),
                                              ProjPoint(1, 0, 1)),
                    SharedComponent);
}

TEST_CASE("local Milnor additivity across a union") {
    CHECK(mu_union_check(curve("x*(x*y - z^2)"), LinearForm(0, 1, 0).to_homogeneous(),
                         ProjPoint(0, 0, 1)));
}

TEST_CASE("pointwise conjecture check on a cuspidal union") {
    const HomogeneousPoly cusp2 = curve("(z*y + x^2)^2*z - x^5");
    ConjecturePointCheck c =
        conjecture_check(cusp2, LinearForm(0, 0, 1).to_homogeneous(), ProjPoint(0, 1, 0));
    CHECK(c.c1.mu == 8);
    CHECK(c.c1.tau == 8);
    CHECK(c.c2.mu == 0);
    CHECK(c.imult == 5);  // the line meets the quintic only here
    CHECK(c.curve_union.mu == c.c1.mu + 2 * c.imult - 1);
    CHECK(c.eps_q == 2);
    CHECK(c.conj1_ok);
    CHECK(c.conj2_ok);
    CHECK(c.mu_identity_ok);
}
