#pragma once

#include <map>

#include "qf/forms.hpp"

namespace qf {

struct SubcoverReport {
    i64 degree = 0;
    bool exists = false;
    i64 count = 0;  // primitive vectors v with q(v) = degree^2
};

// Elliptic subcovers of degree n of the curve behind a Jacobian form q;
// counted as the primitive vectors of R_{n^2}(q).
SubcoverReport subcovers(const TernaryForm& q, i64 n);

// Number of classes of primitive positive binary forms of discriminant d,
// d < 0 and d = 0,1 mod 4. Exact enumeration of reduced forms, cached.
i64 class_number(i64 d);

// On-disk cache, line oriented "d h".
using ClassNumberTable = std::map<i64, i64>;
ClassNumberTable load_class_number_table(const std::string& path);
void save_class_number_table(const ClassNumberTable& table, const std::string& path);
ClassNumberTable snapshot_class_number_cache();

struct D6LocusTerm {
    int family = 0;        // 1 for q_{1,c'}, 2 for q_{2,c'}
    i64 cprime = 0;
    i64 disc_arg = 0;      // 4-3c' resp. -3c'
    i64 h = 0;             // class number of disc_arg
    i64 contribution = 0;  // h, or h/2 for the 3-coprime q_2 terms
};

struct D6LocusCount {
    i64 total = 0;
    std::vector<D6LocusTerm> terms;
};

// Number of genus 2 curves with automorphism group containing D_6 and an
// elliptic subcover of degree m (odd):
//   sum over 5 <= c' <= m^2+1, c' = 1 mod 4 of
//     h(4-3c')   when q_{1,c'} primitively represents m^2
//     h(-3c')    when q_{2,c'} does and 3 | c'
//     h(-3c')/2  when q_{2,c'} does and 3 does not divide c'
// A non-integral halved term raises.
D6LocusCount d6_locus_count(i64 m);

// disc(q)/16, the discriminant of the degree form attached to a Jacobian
// ternary form.
i64 degree_form_disc(const TernaryForm& q);

}  // namespace qf
