#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>

#include "qf/intersections.hpp"
#include "qf/representations.hpp"
#include "qf/subcovers.hpp"

using namespace qf;

namespace {

// Independent class-group oracle: all primitive forms of discriminant d
// with both outer coefficients at most |d|, connected by the elementary
// proper transforms; count connected components. Every class member inside
// the window reaches the reduced representative without leaving it.
i64 class_number_oracle(i64 d) {
    std::vector<BinaryForm> forms;
    std::map<BinaryForm, int> index;
    i64 bound = -d;
    for (i64 a = 1; a <= bound; ++a)
        for (i64 b = 1; b <= bound; ++b) {
            i64 v = 4 * a * b + d;
            if (v < 0) continue;
            i64 t = isqrt_floor(v);
            if (t * t != v) continue;
            for (i64 tt : {t, -t}) {
                BinaryForm q{a, tt, b};
                if (q.content() != 1) continue;
                if (!index.count(q)) {
                    index[q] = static_cast<int>(forms.size());
                    forms.push_back(q);
                }
                if (t == 0) break;
            }
        }
    std::vector<int> parent(forms.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (size_t i = 0; i < forms.size(); ++i) {
        const BinaryForm& q = forms[i];
        // swap generator (x,y) -> (-y,x)
        auto it = index.find(BinaryForm{q.b, -q.t, q.a});
        if (it != index.end()) unite(static_cast<int>(i), it->second);
        // translations x -> x +- y
        for (i64 k : {-1, 1}) {
            it = index.find(BinaryForm{q.a, q.t + 2 * k * q.a, q.a * k * k + q.t * k + q.b});
            if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
    }
    std::set<int> roots;
    for (size_t i = 0; i < forms.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<i64>(roots.size());
}

}  // namespace

TEST_CASE("class number anchors") {
    CHECK(class_number(-11) == 1);
    CHECK(class_number(-15) == 2);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-27) == 1);
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK_THROWS_AS(class_number(5), MathError);
    CHECK_THROWS_AS(class_number(-5), MathError);  // 3 mod 4
}

TEST_CASE("class number agrees with the transform-orbit oracle") {
    for (i64 d = -3; d >= -200; --d) {
        i64 m = ((d % 4) + 4) % 4;
        if (m != 0 && m != 1) continue;
        CAPTURE(d);
        CHECK(class_number(d) == class_number_oracle(d));
    }
}

TEST_CASE("subcover anchors") {
    SubcoverReport rep = subcovers(family_qic(2, 5), 3);
    CHECK(rep.exists);
    CHECK(rep.count == 12);

    rep = subcovers(family_qic(1, 4), 1);
    CHECK_FALSE(rep.exists);

    rep = subcovers(family_qic(1, 5), 3);
    CHECK(rep.exists);

    CHECK_THROWS_AS(subcovers(diagonal_form(1, 1, 1), 2), MathError);  // represents 1
    CHECK_THROWS_AS(subcovers(family_qic(1, 5), 0), MathError);
}

TEST_CASE("d6 locus count") {
    D6LocusCount dc = d6_locus_count(3);
    CHECK(dc.total == 6);
    REQUIRE(dc.terms.size() == 4);
    // ordered by c', family index
    CHECK(dc.terms[0].family == 1);
    CHECK(dc.terms[0].cprime == 5);
    CHECK(dc.terms[0].contribution == 1);
    CHECK(dc.terms[1].family == 2);
    CHECK(dc.terms[1].cprime == 5);
    CHECK(dc.terms[1].h == 2);
    CHECK(dc.terms[1].contribution == 1);
    CHECK(dc.terms[2].family == 1);
    CHECK(dc.terms[2].cprime == 9);
    CHECK(dc.terms[2].contribution == 3);
    CHECK(dc.terms[3].family == 2);
    CHECK(dc.terms[3].cprime == 9);
    CHECK(dc.terms[3].contribution == 1);

    CHECK(d6_locus_count(1).total == 0);
    CHECK_THROWS_AS(d6_locus_count(2), MathError);
}

TEST_CASE("d6 locus count for degree 5") {
    D6LocusCount dc = d6_locus_count(5);
    CHECK(dc.total == 27);
    i64 q1_total = 0, q2_total = 0;
    for (const D6LocusTerm& term : dc.terms) {
        if (term.family == 1) q1_total += term.contribution;
        if (term.family == 2) q2_total += term.contribution;
        if (term.family == 2 && term.cprime % 3 != 0) CHECK(term.h % 2 == 0);
    }
    CHECK(q1_total == 19);
    CHECK(q2_total == 8);
}

TEST_CASE("locus terms line up with the base-scheme intersection") {
    for (i64 m : {3, 5, 7}) {
        D6LocusCount dc = d6_locus_count(m);
        auto members = intersect_with_humbert(HumbertBase::F444, m * m);
        std::set<TernaryForm> member_set(members.begin(), members.end());
        std::set<TernaryForm> term_set;
        for (const D6LocusTerm& term : dc.terms)
            term_set.insert(family_qic(term.family, term.cprime));
        // terms with c' >= 5 are exactly the member forms with c' >= 5
        std::set<TernaryForm> member_big;
        for (const TernaryForm& f : member_set)
            if (f.c >= 5) member_big.insert(f);
        CHECK(term_set == member_big);
    }
}

TEST_CASE("degree form discriminant") {
    CHECK(degree_form_disc(family_qic(1, 5)) == -11);
    CHECK(degree_form_disc(family_qic(2, 5)) == -15);
    CHECK(degree_form_disc(diagonal_form(4, 4, 13)) == -52);
    CHECK_THROWS_AS(degree_form_disc(diagonal_form(1, 1, 2)), MathError);
}

TEST_CASE("class number table round-trips through disk") {
    std::filesystem::path path = std::filesystem::temp_directory_path() / "qf_class_numbers.txt";
    ClassNumberTable table;
    for (i64 d : {-11, -15, -23, -27}) table[d] = class_number(d);
    save_class_number_table(table, path.string());
    ClassNumberTable loaded = load_class_number_table(path.string());
    CHECK(loaded == table);
    std::filesystem::remove(path);
}
