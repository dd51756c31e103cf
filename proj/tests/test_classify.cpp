#include <doctest.h>

#include "qf/classify.hpp"
#include "qf/reduction.hpp"
#include "qf/representations.hpp"

using namespace qf;

TEST_CASE("refined Humbert status anchors") {
    HumbertStatus st = refined_humbert_status(family_qic(2, 12));
    CHECK(st.verdict == Verdict::Yes);
    CHECK(st.jacobian);
    CHECK(st.path == "content4-improperly-primitive-half");

    st = refined_humbert_status(TernaryForm{9, 16, 16, -16, 0, 0});
    CHECK(st.verdict == Verdict::Yes);
    CHECK(st.jacobian);
    CHECK(st.path == "square-witness");

    st = refined_humbert_status(diagonal_form(4, 4, 4));
    CHECK(st.verdict == Verdict::No);
    CHECK(st.path == "content4-half-not-improperly-primitive");

    // mod-4 obstruction
    st = refined_humbert_status(diagonal_form(1, 1, 1));
    CHECK(st.verdict == Verdict::No);
    CHECK(st.path == "mod4");

    // content 8: all values 0 mod 4 but the content rule rejects
    st = refined_humbert_status(TernaryForm{8, 8, 8, 8, 8, 8});
    CHECK(st.verdict == Verdict::No);
    CHECK(st.path == "content");

    // genus-condition path for a primitive family instance that has no small
    // coprime square: q_{3,9} = [4,4,9,-4,-4,0]
    st = refined_humbert_status(family_qic(3, 9));
    CHECK(st.verdict == Verdict::Yes);
    CHECK(st.jacobian);
}

TEST_CASE("q_{5,c} conflict is surfaced, not silently classified") {
    HumbertStatus st = refined_humbert_status(family_qic(5, 12));
    CHECK(st.verdict == Verdict::Unknown);
    CHECK(st.path == "content4-q5c-conflict");
    CHECK_THROWS_AS(curve_classification(family_qic(5, 12)), MathError);

    // c = 0 mod 8 instances have no conflict: plain No
    st = refined_humbert_status(family_qic(5, 8));
    CHECK(st.verdict == Verdict::No);
}

TEST_CASE("curve classification anchors") {
    CurveClassification cc = curve_classification(family_qic(1, 4));
    CHECK(cc.group == CurveGroup::GL2_3);
    CHECK(cc.a_value == 24);
    CHECK(cc.k.num == 1);
    CHECK(cc.k.den == 1);

    cc = curve_classification(family_qic(2, 4));
    CHECK(cc.group == CurveGroup::C3semiD4);
    CHECK(cc.a_value == 12);
    CHECK(cc.k.num == 1);

    cc = curve_classification(TernaryForm{9, 16, 16, -16, 0, 0});
    CHECK(cc.group == CurveGroup::C2);
    CHECK(cc.a_value == 1);
    CHECK(cc.proper_aut_order == 12);
    CHECK(cc.k.num == 12);
    CHECK(cc.k.den == 1);

    CHECK_THROWS_AS(curve_classification(diagonal_form(4, 4, 4)), MathError);
}

TEST_CASE("subgroup criteria") {
    CHECK(subgroup_criteria(family_qic(1, 5)).contains_d6);
    CHECK(subgroup_criteria(family_qic(6, 5)).contains_d4);
    SubgroupCriteria sc = subgroup_criteria(diagonal_form(4, 4, 5));
    CHECK(sc.contains_d4);
    CHECK_FALSE(sc.contains_d6);

    CHECK(subgroup_criteria(BinaryForm{4, 4, 4}).contains_d6);
    CHECK(subgroup_criteria(BinaryForm{4, 0, 4}).contains_d4);
    CHECK_FALSE(subgroup_criteria(BinaryForm{4, 0, 4}).contains_d6);
}

TEST_CASE("theorem list membership") {
    CHECK(theorem_list_membership(family_qic(2, 8)) == "D6(q_{2,c})");
    CHECK(theorem_list_membership(family_qic(1, 4)) == "GL2_3(q_{1,4})");
    CHECK(theorem_list_membership(diagonal_form(4, 4, 5)) == "D4(Q_c)");
    CHECK(theorem_list_membership(family_qic(3, 8)) == "D4(Q_c)");
    CHECK(theorem_list_membership(family_qic(4, 8)) == "C2xC2-imprimitive");
    CHECK(theorem_list_membership(TernaryForm{4, 5, 5, 2, 4, 4}) == "C2xC2-primitive-partial");
    CHECK_FALSE(theorem_list_membership(TernaryForm{5, 5, 5, 2, 2, 2}).has_value());
    // shape [4,b,b,2,4,4] with b = 0 mod 4 is in no list: wrong mod-4 class
    // and content 2
    CHECK_FALSE(theorem_list_membership(TernaryForm{4, 8, 8, 2, 4, 4}).has_value());
    // matching happens after reduction
    CHECK(theorem_list_membership(TernaryForm{4, 4, 8, 0, 0, 4}) == "D6(q_{2,c})");
}

TEST_CASE("membership in the subgroup lists matches the representation criteria") {
    // Jacobian ternary forms: D6 criterion iff the form is in the q_{1,c} or
    // q_{2,c} list
    std::vector<TernaryForm> forms = {family_qic(1, 5), family_qic(2, 9),  family_qic(1, 8),
                                      family_qic(2, 12), family_qic(6, 5),  diagonal_form(4, 4, 9),
                                      family_qic(3, 9),  family_qic(4, 8)};
    for (const TernaryForm& q : forms) {
        CAPTURE(q.str());
        CHECK(subgroup_criteria(q).contains_d6 == in_d6_subgroup_list(q));
        CHECK(subgroup_criteria(q).contains_d4 == in_d4_subgroup_list(q));
    }
}

TEST_CASE("certified family instances classify to their listed groups") {
    auto expect_group = [](const TernaryForm& q, CurveGroup g) {
        CAPTURE(q.str());
        HumbertStatus st = refined_humbert_status(q);
        CHECK(st.verdict == Verdict::Yes);
        CHECK(st.jacobian);
        CHECK(curve_classification(q).group == g);
    };
    expect_group(family_qic(1, 4), CurveGroup::GL2_3);
    expect_group(family_qic(2, 4), CurveGroup::C3semiD4);
    for (i64 c = 5; c <= 50; ++c) {
        i64 m4 = c % 4;
        if (m4 == 0) {  // imprimitive instances
            expect_group(family_qic(1, c), CurveGroup::D6);
            expect_group(family_qic(2, c), CurveGroup::D6);
            expect_group(family_qic(3, c), CurveGroup::D4);
            expect_group(family_qic(6, c), CurveGroup::D4);
            expect_group(family_qic(4, c), CurveGroup::C2xC2);
            expect_group(family_qj(1, c, c + 4, 0), CurveGroup::C2xC2);
            expect_group(family_qj(7, c, c + 4, -2), CurveGroup::C2xC2);
        } else if (m4 == 1) {  // primitive instances
            expect_group(family_qic(1, c), CurveGroup::D6);
            expect_group(family_qic(2, c), CurveGroup::D6);
            expect_group(family_qic(6, c), CurveGroup::D4);
            expect_group(diagonal_form(4, 4, c), CurveGroup::D4);
            if (c % 8 == 1) expect_group(family_qic(3, c), CurveGroup::D4);
        }
    }
}

TEST_CASE("table-1 pairing between group labels and invariants") {
    for (CurveGroup g : {CurveGroup::C2xC2, CurveGroup::D4, CurveGroup::D6, CurveGroup::C3semiD4,
                         CurveGroup::GL2_3}) {
        i64 order = group_order(g);
        CHECK(order % 2 == 0);
    }
    CHECK(group_from_r4(0) == CurveGroup::C2);
    CHECK(group_from_r4(6) == CurveGroup::D6);
    CHECK_THROWS_AS(group_from_r4(10), MathError);
}
