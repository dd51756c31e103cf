#pragma once

#include "qf/forms.hpp"

namespace qf {

// Outcome of the pairwise Humbert-surface computation: members are the
// reduced binary forms that primitively represent both targets and pass the
// nonemptiness filters; a form that passes everything except the square
// search is reported separately instead of being dropped.
struct PairIntersection {
    std::vector<BinaryForm> members;
    std::vector<BinaryForm> filtered_unknown;
};

// All reduced positive binary forms q -> n and q -> m (primitively), with
// every value of q being 0 or 1 mod 4 and a primitively represented square
// below the bound (default 4 n m). n != m required.
PairIntersection humbert_pair_intersection(i64 n, i64 m, i64 square_bound = 0);

enum class HumbertBase { F444, F404 };  // 4x^2+4xy+4y^2 and 4x^2+4y^2

// Defining forms of the one-dimensional pieces of H*(base) cut by H_c:
//   F444 -> the q_{1,c'}, q_{2,c'} with 1 < c' <= c+1 that primitively
//           represent c;
//   F404 -> the members of Q_{c'}, 4 <= c' <= c+1, that primitively
//           represent c.
// Requires c > 1, c = 0,1 mod 4, and the base not primitively representing c.
std::vector<TernaryForm> intersect_with_humbert(HumbertBase base, i64 c);

// |disc f| <= n |disc q| whenever q does not represent n, f primitively
// represents q, and f represents n. The preconditions are verified and a
// violated one raises; a false return indicates a bug.
bool disc_bound_check(const TernaryForm& f, const BinaryForm& q, i64 n);

struct CertificateReport {
    bool all_passed = false;
    std::vector<std::string> checks;  // one line per verified step
};

// Replays the finite verification that H([4,0,4]) and H([9,6,13]) are
// disjoint: the Q_5 reciprocal obstructions, the three x^2+4q lift cases,
// and the enumeration of reduced binary forms representing 1 and 2.
CertificateReport empty_intersection_certificate();

}  // namespace qf
