#pragma once

#include "qf/forms.hpp"

namespace qf {

struct AutomorphGroup {
    std::vector<Mat3> elements;  // all U with q o U = q, det +-1
    i64 proper_count = 0;        // |{U : det U = +1}|
};

// Exhaustive Aut(q): candidate columns are the representation vectors of the
// diagonal values, filtered by polar values and determinant. Parallel over
// first-column candidates.
AutomorphGroup automorphisms(const TernaryForm& q);
i64 proper_automorphism_count(const TernaryForm& q);  // |Aut^+(q)|

// |Aut^+| predicted from the coefficient-pattern theorems for Eisenstein
// reduced forms: the 3|u patterns (6/12/24) apply to any reduced Dickson
// form; the 3∤u patterns (1/2/4/8) additionally need leading coefficient 4
// and all values 0,1 mod 4. Absent when no hypothesis applies.
std::optional<i64> predicted_proper_order(const TernaryForm& q);

namespace reference {
// Serial reference for the parallel automorphism search.
AutomorphGroup automorphisms_serial(const TernaryForm& q);
}  // namespace reference

}  // namespace qf
