#pragma once

#include "qf/forms.hpp"

namespace qf {

struct TernaryReduction {
    TernaryForm reduced;
    Mat3 transform;  // apply_transform(original, transform) == reduced
};

struct BinaryReduction {
    BinaryForm reduced;
    Mat2 transform;
};

// Eisenstein reducedness for positive ternary forms in Dickson's sense
// (even cross coefficients). With e = a + b + 2r + 2s + 2t on the halved
// cross coefficients:
//   (1) r, s, t all positive or all nonpositive
//   (2) a <= b <= c, e >= 0
//   (3) a >= |2s|, a >= |2t|, b >= |2r|
//   (4) a=b => |r| <= |s|;  b=c => |s| <= |t|;  e=0 => a + 2s + t <= 0
//   (5) for r,s,t <= 0:  a=-2t => s=0;  a=-2s => t=0;  b=-2r => t=0
//   (6) for r,s,t > 0:   a=2t => s<=2r;  a=2s => t<=2r;  b=2r => t<=2s
// Exactly one reduced form per equivalence class.
bool is_eisenstein_reduced(const TernaryForm& q);

// Canonical reduction. Greedy shear/sort pre-pass, then exhaustive assembly
// of minima bases; the unique assembled form passing the reducedness
// predicate is returned together with a witness transform.
TernaryReduction reduce_ternary(const TernaryForm& q);

// Gauss reduction, canonical representative with 0 <= t <= a <= b.
BinaryReduction reduce_binary(const BinaryForm& q);
bool is_gauss_reduced(const BinaryForm& q);

// GL_3(Z)-equivalence through canonical forms; returns a witness U with
// q1 o U = q2 when equivalent.
std::optional<Mat3> equivalent(const TernaryForm& q1, const TernaryForm& q2);
std::optional<Mat2> equivalent(const BinaryForm& q1, const BinaryForm& q2);

}  // namespace qf
