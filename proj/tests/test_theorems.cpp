#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "support.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/incidence.hpp"
#include "syzcurve/theorems.hpp"

using namespace syzcurve;
using testsupport::curve;

namespace {

PairAnalysis analyze(const char* f, const char* line) {
    return PairAnalysis(make_union_pair(curve(f), parse_line(line)));
}

}  // namespace

TEST_CASE("line bundle section counts") {
    CHECK(h0_line(-2) == 0);
    CHECK(h0_line(-1) == 0);
    CHECK(h0_line(0) == 1);
    CHECK(h0_line(3) == 4);
}

TEST_CASE("table lookups outside the stored range are zero") {
    auto tb = jacobian_module_table(curve("x*(x + y)*(x*y - z^2)"));
    CHECK(n_value(tb, -1) == 0);
    CHECK(n_value(tb, 3) == 1);
    CHECK(n_value(tb, tb.T + 1) == 0);
}

TEST_CASE("full pair analysis of a free-to-free addition") {
    // C = x*z*(x*y - z^2) free (1,2); C u (x - z) = x*z*(x - z)*(x*y - z^2) free (2,2).
    PairAnalysis pa = analyze("x*z*(x*y - z^2)", "x - z");
    CHECK(pa.pair.r == 2);
    CHECK(pa.tau_c == 7);
    CHECK(pa.tau_u == 12);
    CHECK(pa.eps == 1);
    CHECK(pa.cl_c.kind == "free");
    CHECK(pa.cl_c.exponents == std::vector<long>{1, 2});
    CHECK(pa.cl_u.kind == "free");
    CHECK(pa.cl_u.exponents == std::vector<long>{2, 2});

    AdditionReport add = addition_report(pa);
    CHECK(add.case_id == 2);  // d1 < d2 and r == d2 + 1 - eps
    CHECK(add.predicted_exponents == std::vector<long>{2, 2});
    CHECK(add.predicted_kind == "free");
    CHECK(add.ok());

    DeletionReport del = deletion_report(pa);
    CHECK(del.case_id == 2);  // r == e2 + 1 - eps
    CHECK(del.predicted_exponents == std::vector<long>{1, 2});
    CHECK(del.predicted_kind == "free");
    CHECK(del.ok());

    SequenceScanReport up = addition_dimension_scan(pa);
    CHECK(up.identity == "union-dimensions-from-free-curve");
    CHECK(up.all_hold);
    CHECK(up.failing_k.empty());
    CHECK(up.k_hi == sequence_scan_bound(pa));

    SequenceScanReport down = deletion_dimension_scan(pa);
    CHECK(down.identity == "curve-dimensions-from-free-union");
    CHECK(down.all_hold);

    BiconditionalReport ba = addition_biconditional(pa);
    CHECK(ba.premise);
    CHECK(ba.lhs);
    CHECK(ba.rhs);
    CHECK(ba.holds);
    CHECK(ba.threshold == 2);  // d2 + 1 - eps = 2 + 1 - 1

    BiconditionalReport bd = deletion_biconditional(pa);
    CHECK(bd.premise);
    CHECK(bd.holds);
    CHECK(bd.threshold == 1);  // mdr(C) + 1 - eps = 1 + 1 - 1

    MdrStepReport step = mdr_step_report(pa);
    CHECK(step.mdr_curve == 1);
    CHECK(step.mdr_union == 2);
    CHECK(step.holds);
}

TEST_CASE("addition landing outside the free locus") {
    // C = x*(x*y - z^2) free (1,1); adding x + y produces a plus-one-generated union.
    PairAnalysis pa = analyze("x*(x*y - z^2)", "x + y");
    REQUIRE(pa.cl_c.kind == "free");
    AdditionReport add = addition_report(pa);
    CHECK(add.case_id == 3);
    CHECK(add.ok());
    CHECK(pa.cl_u.kind != "free");
    // r sits strictly between the two freeness thresholds in case 3.
    CHECK(pa.pair.r == 3);
    CHECK(add.r_formula_ok);
}

TEST_CASE("deletion landing outside the free locus") {
    // C' = x*z*(x - z)*(x*y - z^2) free (2,2); deleting x leaves a nearly free quartic.
    PairAnalysis pa = analyze("z*(x - z)*(x*y - z^2)", "x");
    REQUIRE(pa.cl_c.kind == "nearly_free");
    REQUIRE(pa.cl_u.kind == "free");
    CHECK(pa.pair.r == 1);
    CHECK(pa.eps == 1);
    DeletionReport del = deletion_report(pa);
    CHECK(del.case_id == 3);
    CHECK(del.predicted_kind == "plus_one_generated");
    CHECK(del.ok());
    // The addition theorem needs C free, which fails here.
    CHECK_THROWS_AS(addition_report(pa), NotFree);
}

TEST_CASE("biconditionals are vacuously true without their premise") {
    // C = x*(x + y)*(x*y - z^2) is nearly free, so the addition premise fails.
    PairAnalysis pa = analyze("x*(x + y)*(x*y - z^2)", "y");
    REQUIRE(pa.cl_c.kind != "free");
    BiconditionalReport ba = addition_biconditional(pa);
    CHECK_FALSE(ba.premise);
    CHECK(ba.holds);
    CHECK_THROWS_AS(addition_report(pa), NotFree);
}

TEST_CASE("per-curve consistency cross-checks") {
    for (const char* eq : {"x*(x*y - z^2)", "x*(x + y)*(x*y - z^2)", "x^3 + y^3 + z^3"}) {
        CurveData cd{curve(eq)};
        Classification cl = classify(cd);
        JacobianModuleTable tb = jacobian_module_table(cd);
        CurveConsistencyReport rep = curve_consistency_report(cd, cl, tb);
        INFO(eq);
        CHECK(rep.bridge_ok);
        CHECK(rep.hilbert_ok);
        CHECK(rep.sigma_ok);
        CHECK(rep.ok());
    }
}
