#include <doctest.h>

#include "qf/genus.hpp"
#include "qf/intersections.hpp"
#include "qf/representations.hpp"

using namespace qf;

TEST_CASE("pair intersection anchors") {
    PairIntersection pi = humbert_pair_intersection(4, 5);
    CHECK(pi.members == std::vector<BinaryForm>{{1, 0, 4}, {4, 0, 5}, {4, 4, 5}});
    CHECK(pi.filtered_unknown.empty());

    CHECK(humbert_pair_intersection(2, 3).members.empty());
    CHECK_THROWS_AS(humbert_pair_intersection(5, 5), MathError);
}

TEST_CASE("pair intersection is symmetric and members verify their predicate") {
    for (auto [n, m] : std::vector<std::pair<i64, i64>>{{4, 5}, {5, 8}, {4, 9}, {8, 9}}) {
        PairIntersection a = humbert_pair_intersection(n, m);
        PairIntersection b = humbert_pair_intersection(m, n);
        CHECK(a.members == b.members);
        for (const BinaryForm& q : a.members) {
            CHECK(represents_primitively(q, n));
            CHECK(represents_primitively(q, m));
            for (i64 res : mod4_residues_full(q)) CHECK((res == 0 || res == 1));
        }
    }
}

TEST_CASE("intersect with the base schemes") {
    auto h404_5 = intersect_with_humbert(HumbertBase::F404, 5);
    CHECK(h404_5 == std::vector<TernaryForm>{diagonal_form(4, 4, 5), family_qic(6, 5)});

    auto h444_9 = intersect_with_humbert(HumbertBase::F444, 9);
    CHECK(h444_9 == std::vector<TernaryForm>{family_qic(1, 5), family_qic(2, 5), family_qic(1, 9),
                                             family_qic(2, 9)});

    auto h444_5 = intersect_with_humbert(HumbertBase::F444, 5);
    CHECK(h444_5 == std::vector<TernaryForm>{family_qic(1, 5), family_qic(2, 5)});

    CHECK_THROWS_AS(intersect_with_humbert(HumbertBase::F444, 6), MathError);
    // [4,0,4] primitively represents 8
    CHECK_THROWS_AS(intersect_with_humbert(HumbertBase::F404, 8), MathError);
}

TEST_CASE("intersection members satisfy the discriminant bound and really represent") {
    for (i64 c : {5, 9, 13, 17}) {
        for (auto base : {HumbertBase::F444, HumbertBase::F404}) {
            BinaryForm base_form = base == HumbertBase::F444 ? BinaryForm{4, 4, 4} : BinaryForm{4, 0, 4};
            if (represents_primitively(base_form, c)) continue;
            for (const TernaryForm& f : intersect_with_humbert(base, c)) {
                CAPTURE(f.str());
                CHECK(represents_primitively(f, c));
                CHECK(represents_binary(f, base_form).has_value());
                i64 df = f.discriminant();
                i64 dq = base_form.discriminant();
                CHECK((df < 0 ? -df : df) <= c * (dq < 0 ? -dq : dq));
            }
        }
    }
}

TEST_CASE("disc bound check") {
    CHECK(disc_bound_check(family_qic(1, 9), BinaryForm{4, 4, 4}, 9));
    CHECK(family_qic(1, 9).discriminant() == -368);
    CHECK(disc_bound_check(diagonal_form(4, 4, 5), BinaryForm{4, 0, 4}, 5));
    CHECK(diagonal_form(4, 4, 5).discriminant() == -320);
    CHECK(disc_bound_check(lift_binary(BinaryForm{1, 0, 1}), BinaryForm{4, 0, 4}, 1));

    // violated preconditions are reported
    CHECK_THROWS_AS(disc_bound_check(family_qic(1, 9), BinaryForm{4, 4, 4}, 4), MathError);
    CHECK_THROWS_AS(disc_bound_check(diagonal_form(4, 4, 5), BinaryForm{9, 6, 13}, 5), MathError);
}

TEST_CASE("empty intersection certificate") {
    CertificateReport rep = empty_intersection_certificate();
    CHECK(rep.all_passed);
    CHECK(rep.checks.size() >= 12);
    for (const std::string& line : rep.checks) CHECK(line.substr(0, 2) == "ok");
}
