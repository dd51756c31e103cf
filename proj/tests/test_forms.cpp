#include <doctest.h>

#include <limits>
#include <random>

#include "qf/forms.hpp"
#include "test_helpers.hpp"

using namespace qf;

TEST_CASE("evaluation at unit vectors returns the diagonal") {
    TernaryForm q{3, 7, 11, 2, 4, 6};
    CHECK(q(Vec3{1, 0, 0}) == 3);
    CHECK(q(Vec3{0, 1, 0}) == 7);
    CHECK(q(Vec3{0, 0, 1}) == 11);
    CHECK(q(Vec3{0, 0, 0}) == 0);
}

TEST_CASE("anchor evaluations") {
    CHECK(family_qic(1, 5)(Vec3{-1, -1, 1}) == 9);
    CHECK(family_qic(6, 5)(Vec3{-1, -1, 0}) == 8);
    CHECK(family_qic(2, 5)(Vec3{1, 1, 1}) == 9);
}

TEST_CASE("discriminant convention reproduces the family formulas") {
    for (i64 c : {5, 8, 9, 12, 13}) {
        CHECK(family_qic(1, c).discriminant() == 16 * (4 - 3 * c));
        CHECK(family_qic(2, c).discriminant() == -48 * c);
        if (c > 4) {
            CHECK(family_qic(3, c).discriminant() == 64 * (2 - c));
            CHECK(family_qic(6, c).discriminant() == 64 * (1 - c));
        }
        CHECK(diagonal_form(4, 4, c).discriminant() == -64 * c);
    }
    CHECK(BinaryForm{9, 6, 13}.discriminant() == -432);
    CHECK(family_qic(2, 5).discriminant() == -240);
    CHECK(family_qic(3, 9).discriminant() == -448);
}

TEST_CASE("content and mod-4 residues") {
    InvariantBundle inv = form_invariants(family_qic(1, 4));
    CHECK(inv.content == 4);
    CHECK(inv.mod4_residues == std::set<i64>{0});
    CHECK(inv.is_positive_definite);
    CHECK(inv.minimum == 4);
}

TEST_CASE("positive definiteness") {
    CHECK(TernaryForm{1, 1, 1, 0, 0, 0}.is_positive_definite());
    CHECK_FALSE(TernaryForm{1, 1, -1, 0, 0, 0}.is_positive_definite());
    CHECK_FALSE(TernaryForm{1, 1, 1, 4, 0, 0}.is_positive_definite());
    CHECK(BinaryForm{1, 0, 1}.is_positive_definite());
    CHECK_FALSE(BinaryForm{1, 3, 1}.is_positive_definite());
}

TEST_CASE("apply_transform identities") {
    TernaryForm q = family_qic(6, 5);
    CHECK(apply_transform(q, Mat3::identity()) == q);

    Mat3 flip = Mat3::identity();
    flip.m[0][0] = -1;
    CHECK(apply_transform(q, flip) == TernaryForm{4, 4, 5, 0, 4, 0});

    Mat3 bad = Mat3::identity();
    bad.m[0][0] = 2;
    CHECK_THROWS_AS(apply_transform(q, bad), MathError);
}

TEST_CASE("transforms preserve invariants and commute with evaluation") {
    std::mt19937_64 rng(20240901);
    TernaryForm q = diagonal_form(4, 4, 4);
    CHECK(q.discriminant() == -64 * 4);
    for (int i = 0; i < 50; ++i) {
        Mat3 u = testing::random_unimodular(rng);
        TernaryForm qu = apply_transform(q, u);
        CHECK(qu.discriminant() == -256);
        CHECK(qu.content() == q.content());
        for (const Vec3& v : {Vec3{1, 2, 3}, Vec3{-1, 0, 2}, Vec3{5, -3, 1}})
            CHECK(qu(v) == q(u * v));
    }
}

TEST_CASE("the full invariant bundle is a class invariant") {
    std::mt19937_64 rng(8086);
    for (const TernaryForm& q : {family_qic(1, 5), family_qic(2, 8), TernaryForm{7, 9, 11, 2, 2, 2}}) {
        InvariantBundle base = form_invariants(q);
        for (int i = 0; i < 25; ++i) {
            TernaryForm moved = apply_transform(q, testing::random_unimodular(rng));
            InvariantBundle inv = form_invariants(moved);
            CHECK(inv.content == base.content);
            CHECK(inv.discriminant == base.discriminant);
            CHECK(inv.minimum == base.minimum);
            CHECK(inv.is_positive_definite == base.is_positive_definite);
            CHECK(mod4_residues_full(moved) == mod4_residues_full(q));
        }
    }
}

TEST_CASE("families") {
    CHECK(family_qic(1, 4) == TernaryForm{4, 4, 4, 4, 4, 4});
    CHECK(family_Qc(5) == std::vector<TernaryForm>{diagonal_form(4, 4, 5), family_qic(6, 5)});
    CHECK(family_Qc(4) == std::vector<TernaryForm>{family_qic(1, 4), family_qic(2, 4)});
    CHECK(family_Qc(9).size() == 3);
    CHECK(family_Qc(8) == std::vector<TernaryForm>{family_qic(3, 8), family_qic(6, 8)});
    CHECK_THROWS_AS(family_qic(3, 4), MathError);
    CHECK_THROWS_AS(family_Qc(6), MathError);
    CHECK_THROWS_AS(family_qj(2, 8, 8, 1), MathError);  // needs r > 1

    FormFamily fam;
    fam.kind = FormFamily::Kind::QcSet;
    fam.c = 5;
    CHECK(make_family(fam).size() == 2);
}

TEST_CASE("family instances satisfy the mod-4 constraints") {
    for (i64 c : {4, 8, 12, 16}) {
        for (int i : {1, 2}) {
            auto residues = mod4_residues_full(family_qic(i, c));
            CHECK(residues == std::set<i64>{0});
        }
    }
    // primitive instances take only 0,1 mod 4
    for (i64 c : {5, 9, 13}) {
        CHECK(values_are_0_1_mod4(family_qic(1, c)));
        CHECK(values_are_0_1_mod4(family_qic(2, c)));
        CHECK(values_are_0_1_mod4(family_qic(6, c)));
        CHECK(values_are_0_1_mod4(diagonal_form(4, 4, c)));
    }
    for (i64 c : {9, 17}) CHECK(values_are_0_1_mod4(family_qic(3, c)));
}

TEST_CASE("form literals") {
    CHECK(parse_ternary("[4,4,5,0,-4,0]") == family_qic(6, 5));
    CHECK(parse_ternary(" [ 4, 4, 5, 0, -4, 0 ] ") == family_qic(6, 5));
    CHECK(parse_binary("[9,6,13]") == BinaryForm{9, 6, 13});
    CHECK_THROWS_AS(parse_ternary("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_ternary("4,4,5"), ParseError);
    CHECK_THROWS_AS(parse_binary("[1,x,3]"), ParseError);
    CHECK(parse_form("[1,2,3]").binary.has_value());
    CHECK(parse_form("[1,2,3,4,5,6]").ternary.has_value());
}

TEST_CASE("checked arithmetic overflows loudly") {
    i64 big = std::numeric_limits<i64>::max();
    CHECK_THROWS_AS(chk_add(big, 1), MathError);
    CHECK_THROWS_AS(chk_mul(big, 2), MathError);
    TernaryForm huge{big, big, big, big, big, big};
    CHECK_THROWS_AS(huge(Vec3{2, 2, 2}), MathError);
}
