#pragma once

#include "qf/forms.hpp"
#include "qf/genus.hpp"

namespace qf {

enum class CurveGroup { C2, C10, C2xC2, D4, D6, C3semiD4, GL2_3 };
std::string to_string(CurveGroup g);
i64 group_order(CurveGroup g);
// r_4 -> curve group: 0,2,4,6,8,12 -> C2, C2xC2, D4, D6, C3semiD4, GL2_3.
CurveGroup group_from_r4(i64 r4);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct HumbertStatus {
    Verdict verdict = Verdict::Unknown;
    bool jacobian = false;   // verdict Yes and the form does not represent 1
    std::string path;        // which criterion decided
    std::string detail;      // witness or obstruction description
};

// Decides whether q is equivalent to a refined Humbert invariant.
//   - some value of q is 2 or 3 mod 4            -> No
//   - content not 1 or 4                         -> No
//   - content 4: half form improperly primitive and reduced leading
//     coefficient 4                              -> Yes, else No
//   - primitive: a primitively represented square coprime to 2 disc -> Yes;
//     otherwise both genus conditions            -> Yes; else Unknown
// The q_{5,c} family with c = 4 mod 8 passes the improperly-primitive
// predicate but is excluded by the classification lists; those forms come
// back Unknown with the conflict spelled out instead of a silent verdict.
HumbertStatus refined_humbert_status(const TernaryForm& q, i64 search_limit = 2000);

struct Rational {
    i64 num = 0, den = 1;
    std::string str() const;
};

struct CurveClassification {
    i64 r4 = 0;
    i64 a_value = 0;
    i64 proper_aut_order = 0;
    Rational k;  // |Aut^+| / a
    CurveGroup group = CurveGroup::C2;
    std::optional<std::string> list_tag;
};

// Requires refined_humbert_status = Yes with the Jacobian flag.
CurveClassification curve_classification(const TernaryForm& q);

struct SubgroupCriteria {
    bool contains_d6 = false;  // primitively represents [4,4,4]
    bool contains_d4 = false;  // primitively represents [4,0,4]
};
SubgroupCriteria subgroup_criteria(const TernaryForm& q);
SubgroupCriteria subgroup_criteria(const BinaryForm& q);

// Canonicalize and match against the classification lists. Tags:
//   "GL2_3(q_{1,4})", "C3semiD4(q_{2,4})", "D6(q_{1,c})", "D6(q_{2,c})",
//   "D4(Q_c)", "C2xC2-imprimitive", "C2xC2-primitive-partial"
std::optional<std::string> theorem_list_membership(const TernaryForm& q);

// The two explicit subgroup lists: D6 (q_{1,c}, q_{2,c}, c = 0,1 mod 4) and
// D4 (the Q_c sets). Evaluated on the canonical form.
bool in_d6_subgroup_list(const TernaryForm& q);
bool in_d4_subgroup_list(const TernaryForm& q);

}  // namespace qf
