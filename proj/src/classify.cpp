#include "qf/classify.hpp"

#include <numeric>
#include <sstream>

#include "qf/automorphs.hpp"
#include "qf/reduction.hpp"
#include "qf/representations.hpp"

namespace qf {

std::string to_string(CurveGroup g) {
    switch (g) {
        case CurveGroup::C2: return "C2";
        case CurveGroup::C10: return "C10";
        case CurveGroup::C2xC2: return "C2xC2";
        case CurveGroup::D4: return "D4";
        case CurveGroup::D6: return "D6";
        case CurveGroup::C3semiD4: return "C3semiD4";
        case CurveGroup::GL2_3: return "GL2_3";
    }
    return "?";
}

i64 group_order(CurveGroup g) {
    switch (g) {
        case CurveGroup::C2: return 2;
        case CurveGroup::C10: return 10;
        case CurveGroup::C2xC2: return 4;
        case CurveGroup::D4: return 8;
        case CurveGroup::D6: return 12;
        case CurveGroup::C3semiD4: return 24;
        case CurveGroup::GL2_3: return 48;
    }
    return 0;
}

CurveGroup group_from_r4(i64 r4) {
    switch (r4) {
        case 0: return CurveGroup::C2;
        case 2: return CurveGroup::C2xC2;
        case 4: return CurveGroup::D4;
        case 6: return CurveGroup::D6;
        case 8: return CurveGroup::C3semiD4;
        case 12: return CurveGroup::GL2_3;
        default: throw MathError("r_4 = " + std::to_string(r4) + " does not match any curve group");
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Content-4 form: the half form is improperly primitive exactly when some
// written cross coefficient is 4 mod 8 (all diagonals are 0 mod 4 already).
bool half_form_improperly_primitive(const TernaryForm& q) {
    auto cross_hits = [](i64 v) { return ((v % 8) + 8) % 8 == 4; };
    return cross_hits(q.r) || cross_hits(q.s) || cross_hits(q.t);
}

bool is_q5c_family(const TernaryForm& reduced, i64& c_out) {
    if (reduced.a == 4 && reduced.b == reduced.c && reduced.b > 4 && reduced.r == -reduced.b &&
        reduced.s == 0 && reduced.t == 0) {
        c_out = reduced.b;
        return true;
    }
    return false;
}

}  // namespace

HumbertStatus refined_humbert_status(const TernaryForm& q, i64 search_limit) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    HumbertStatus out;

    auto residues = mod4_residues_full(q);
    for (i64 m : residues)
        if (m != 0 && m != 1) {
            out.verdict = Verdict::No;
            out.path = "mod4";
            out.detail = "some value is " + std::to_string(m) + " mod 4";
            return out;
        }

    i64 cont = q.content();
    if (cont != 1 && cont != 4) {
        out.verdict = Verdict::No;
        out.path = "content";
        out.detail = "content " + std::to_string(cont) + " is neither 1 nor 4";
        return out;
    }

    out.jacobian = representations(q, 1).vectors.empty();

    if (cont == 4) {
        TernaryForm red = reduce_ternary(q).reduced;
        i64 c_param = 0;
        if (is_q5c_family(red, c_param) && ((c_param % 8) + 8) % 8 == 4) {
            out.verdict = Verdict::Unknown;
            out.path = "content4-q5c-conflict";
            out.detail = "half of " + red.str() +
                         " is improperly primitive, but the C2xC2 classification excludes the "
                         "q_{5,c} family; left undecided";
            return out;
        }
        if (half_form_improperly_primitive(red) && red.a == 4) {
            out.verdict = Verdict::Yes;
            out.path = "content4-improperly-primitive-half";
            out.detail = "reduced form " + red.str();
            return out;
        }
        out.verdict = Verdict::No;
        out.path = red.a == 4 ? "content4-half-not-improperly-primitive" : "content4-minimum-not-4";
        out.detail = "reduced form " + red.str();
        return out;
    }

    // primitive: primitively represented square coprime to 2 disc
    i64 disc = q.discriminant();
    for (i64 w = 1; w * w <= search_limit; ++w) {
        i64 n = w * w;
        if (gcd_nonneg(n, chk_mul(2, disc)) != 1) continue;
        if (represents_primitively(q, n)) {
            out.verdict = Verdict::Yes;
            out.path = "square-witness";
            out.detail = "represents " + std::to_string(w) + "^2 coprime to 2 disc = " +
                         std::to_string(2 * disc);
            return out;
        }
    }

    try {
        GenusConditions gc = genus_conditions(q, search_limit);
        if (gc.chi_condition == Tri::Yes && gc.I2_condition == Tri::Yes) {
            out.verdict = Verdict::Yes;
            out.path = "genus-conditions";
            out.detail = "character condition and I2 condition hold, witness m = " +
                         std::to_string(*gc.witness_m);
            return out;
        }
        out.verdict = Verdict::Unknown;
        out.path = "undecided";
        out.detail = gc.chi_condition == Tri::No
                         ? "assigned character " + gc.failing_character->str() + " evaluates to -1"
                         : "no decisive criterion below the search limit";
    } catch (const MathError& e) {
        out.verdict = Verdict::Unknown;
        out.path = "undecided";
        out.detail = std::string("genus machinery unavailable: ") + e.what();
    }
    return out;
}

CurveClassification curve_classification(const TernaryForm& q) {
    HumbertStatus st = refined_humbert_status(q);
    if (st.verdict != Verdict::Yes || !st.jacobian)
        throw MathError("form is not a certified Jacobian refined Humbert invariant: " + q.str() +
                        " (" + to_string(st.verdict) + ", " + st.path + ")");
    CurveClassification out;
    out.r4 = representation_count(q, 4);
    out.group = group_from_r4(out.r4);
    out.a_value = std::max<i64>({1, out.r4, 3 * out.r4 - 12});
    out.proper_aut_order = proper_automorphism_count(q);
    i64 g = std::gcd(out.proper_aut_order, out.a_value);
    out.k = Rational{out.proper_aut_order / g, out.a_value / g};
    out.list_tag = theorem_list_membership(q);
    return out;
}

SubgroupCriteria subgroup_criteria(const TernaryForm& q) {
    SubgroupCriteria out;
    out.contains_d6 = represents_binary(q, BinaryForm{4, 4, 4}).has_value();
    out.contains_d4 = represents_binary(q, BinaryForm{4, 0, 4}).has_value();
    return out;
}

SubgroupCriteria subgroup_criteria(const BinaryForm& q) {
    SubgroupCriteria out;
    out.contains_d6 = equivalent(q, BinaryForm{4, 4, 4}).has_value();
    out.contains_d4 = equivalent(q, BinaryForm{4, 0, 4}).has_value();
    return out;
}

namespace {

bool mod4_is(i64 v, i64 m) { return ((v % 4) + 4) % 4 == m; }
bool is_0_or_1_mod4(i64 v) { return mod4_is(v, 0) || mod4_is(v, 1); }

// members of Q_c for the appropriate congruence class of c
bool in_Qc_set(const TernaryForm& f, i64 c) {
    if (c <= 4 || !is_0_or_1_mod4(c)) return false;
    for (const TernaryForm& g : family_Qc(c))
        if (f == g) return true;
    return false;
}

// imprimitive C2xC2 list: q_{4,c} with 4|c>4, or a content-4 instance of
// q_1..q_7 with second diagonal != 4 for the families 3, 5, 6, 7.
bool in_c2xc2_imprimitive_list(const TernaryForm& f) {
    if (f.content() != 4) return false;
    const i64 b = f.b, c = f.c;
    if (f.a != 4 || b % 4 != 0 || c % 4 != 0 || f.r % 4 != 0 || f.s % 4 != 0 || f.t % 4 != 0)
        return false;
    i64 rh = f.r / 2;
    // q_{4,c} = [4,c,c,-4,0,0]
    if (b == c && b > 4 && f.r == -4 && f.s == 0 && f.t == 0) return true;
    if (b > 4 && b <= c && f.r == 0 && f.s == 0 && f.t == -4) return true;                 // q_1
    if (b == c && b > 4 && rh > 1 && f.s == 4 && f.t == 4) return true;                    // q_2
    if (b != c && b > 4 && f.r == 0 && f.s == -4 && f.t == 0) return true;                 // q_3
    if (b > 4 && b != c && f.r == -b && f.s == -4 && f.t == 0) return true;                // q_4
    if (b != c && b > 4 && rh > 1 && f.s == 4 && f.t == 4) return true;                    // q_5
    if (b > 4 && rh < 0 && b != -2 * rh && f.s == 0 && f.t == -4) return true;             // q_6
    if (b != c && b > 4 && rh < 0 && b != -2 * rh && f.s == -4 && f.t == 0) return true;   // q_7
    return false;
}

// primitive C2xC2 candidates (one-directional): [4,b,b,2,4,4] with b = 1
// mod 4, or the trivial-pattern families with b != 4.
bool in_c2xc2_primitive_partial_list(const TernaryForm& f) {
    if (f.content() != 1) return false;
    if (f.a != 4 || f.b == 4) return false;
    const i64 b = f.b, c = f.c;
    if (b == c && b > 1 && mod4_is(b, 1) && f.r == 2 && f.s == 4 && f.t == 4) return true;
    i64 rh = f.r / 2;
    // order-4 patterns with b != 4
    if (b > 4 && b <= c && f.r == 0 && f.s == 0 && f.t == -4) return true;                 // q_1
    if (b == c && b > 4 && rh > 1 && f.s == 4 && f.t == 4) return true;                    // q_2
    if (b != c && f.r == 0 && f.s == -4 && f.t == 0) return true;                          // q_3
    if (b > 4 && b != c && f.r == -b && f.s == -4 && f.t == 0) return true;                // q_4
    if (b > 4 && b != c && f.r == 0 && f.s == 0 && f.t == 0) return true;                  // q_{4,b,c}
    if (b != c && f.r == -b && f.s == 0 && f.t == 0) return true;                          // [4,b,c,-b,0,0]
    if (b == c && b > 4 && rh != 0 && b != -2 * rh && f.s == 0 && f.t == 0) return true;   // [4,b,b,2r,0,0]
    if (b > 4 && b != c && f.r == 2 && f.s == 4 && f.t == 4) return true;                  // [4,b,c,2,4,4]
    // order-2 patterns
    if (b != c && rh > 1 && f.s == 4 && f.t == 4) return true;                             // q_5
    if (b > 4 && rh < 0 && b != -2 * rh && f.s == 0 && f.t == -4) return true;             // q_6
    if (b != c && rh < 0 && b != -2 * rh && f.s == -4 && f.t == 0) return true;            // q_7
    return false;
}

}  // namespace

std::optional<std::string> theorem_list_membership(const TernaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    if (!q.is_dickson()) return std::nullopt;  // every listed family has even crosses
    TernaryForm f = reduce_ternary(q).reduced;

    if (f == family_qic(1, 4)) return "GL2_3(q_{1,4})";
    if (f == family_qic(2, 4)) return "C3semiD4(q_{2,4})";

    if (f.a == 4 && f.b == 4 && f.c > 4 && is_0_or_1_mod4(f.c)) {
        if (f == family_qic(1, f.c)) return "D6(q_{1,c})";
        if (f == family_qic(2, f.c)) return "D6(q_{2,c})";
    }
    if (in_Qc_set(f, f.c)) return "D4(Q_c)";
    if (in_c2xc2_imprimitive_list(f)) return "C2xC2-imprimitive";
    if (in_c2xc2_primitive_partial_list(f)) return "C2xC2-primitive-partial";
    return std::nullopt;
}

bool in_d6_subgroup_list(const TernaryForm& q) {
    TernaryForm f = reduce_ternary(q).reduced;
    if (f.a != 4 || f.b != 4 || f.c <= 1 || !is_0_or_1_mod4(f.c)) return false;
    if (f.c >= 4 && (f == family_qic(1, f.c) || f == family_qic(2, f.c))) return true;
    return false;
}

bool in_d4_subgroup_list(const TernaryForm& q) {
    TernaryForm f = reduce_ternary(q).reduced;
    if (f.c > 4 && in_Qc_set(f, f.c)) return true;
    return f == family_qic(1, 4) || f == family_qic(2, 4);
}

}  // namespace qf
