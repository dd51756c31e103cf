#include "qf/intersections.hpp"

#include <algorithm>
#include <sstream>

#include "qf/genus.hpp"
#include "qf/reduction.hpp"
#include "qf/representations.hpp"

namespace qf {

namespace {

bool is_0_or_1_mod4(i64 v) {
    i64 m = ((v % 4) + 4) % 4;
    return m == 0 || m == 1;
}

bool all_values_0_1_mod4(const BinaryForm& q) {
    for (i64 m : mod4_residues_full(q))
        if (m != 0 && m != 1) return false;
    return true;
}

// smallest primitively represented perfect square <= bound, if any
std::optional<i64> primitive_square_value(const BinaryForm& q, i64 bound) {
    for (i64 w = 1; w * w <= bound; ++w)
        if (represents_primitively(q, w * w)) return w * w;
    return std::nullopt;
}

}  // namespace

PairIntersection humbert_pair_intersection(i64 n, i64 m, i64 square_bound) {
    if (n == m) throw MathError("pair intersection needs two distinct invariants");
    if (n < 1 || m < 1) throw MathError("invariants must be positive");
    if (square_bound <= 0) square_bound = chk_mul(4, chk_mul(n, m));

    i64 lo = std::min(n, m), hi = std::max(n, m);
    PairIntersection out;
    // reduced positive binary forms: 0 <= t <= a <= b; the minimum a is at
    // most both targets and any value with y != 0 is at least b.
    for (i64 a = 1; a <= lo; ++a)
        for (i64 t = 0; t <= a; ++t)
            for (i64 b = a; b <= hi; ++b) {
                BinaryForm q{a, t, b};
                if (!q.is_positive_definite()) continue;
                if (!represents_primitively(q, n) || !represents_primitively(q, m)) continue;
                if (!all_values_0_1_mod4(q)) continue;
                if (primitive_square_value(q, square_bound))
                    out.members.push_back(q);
                else
                    out.filtered_unknown.push_back(q);
            }
    return out;
}

std::vector<TernaryForm> intersect_with_humbert(HumbertBase base, i64 c) {
    if (c <= 1 || !is_0_or_1_mod4(c)) throw MathError("invariant must be > 1 and 0,1 mod 4");
    BinaryForm base_form = base == HumbertBase::F444 ? BinaryForm{4, 4, 4} : BinaryForm{4, 0, 4};
    if (represents_primitively(base_form, c))
        throw MathError("base form primitively represents " + std::to_string(c));

    std::vector<TernaryForm> out;
    if (base == HumbertBase::F444) {
        for (i64 cp = 4; cp <= c + 1; ++cp) {
            if (!is_0_or_1_mod4(cp)) continue;
            for (int i : {1, 2}) {
                TernaryForm f = family_qic(i, cp);
                if (represents_primitively(f, c)) out.push_back(f);
            }
        }
    } else {
        for (i64 cp = 4; cp <= c + 1; ++cp) {
            if (!is_0_or_1_mod4(cp)) continue;
            for (const TernaryForm& f : family_Qc(cp))
                if (represents_primitively(f, c)) out.push_back(f);
        }
    }
    return out;
}

bool disc_bound_check(const TernaryForm& f, const BinaryForm& q, i64 n) {
    if (represents(q, n))
        throw MathError("precondition failed: binary form represents " + std::to_string(n));
    if (!represents_binary(f, q))
        throw MathError("precondition failed: ternary form does not primitively represent " +
                        q.str());
    if (!represents(f, n))
        throw MathError("precondition failed: ternary form does not represent " +
                        std::to_string(n));
    i64 df = f.discriminant(), dq = q.discriminant();
    i64 adf = df < 0 ? -df : df, adq = dq < 0 ? -dq : dq;
    return adf <= chk_mul(n, adq);
}

namespace {

void check(CertificateReport& rep, bool ok, const std::string& what) {
    rep.checks.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) {
        rep.all_passed = false;
        throw MathError("certificate check failed: " + what);
    }
}

}  // namespace

CertificateReport empty_intersection_certificate() {
    CertificateReport rep;
    rep.all_passed = true;
    const BinaryForm q1{4, 0, 4};
    const BinaryForm q2{9, 6, 13};

    // Q_5 members cannot primitively represent q2: reciprocal target 27.
    check(rep, q2.discriminant() == -432, "disc [9,6,13] = -432");
    {
        TernaryForm f445 = diagonal_form(4, 4, 5);
        GenusData gd = genus_data(f445);
        check(rep, gd.reciprocal == TernaryForm{5, 5, 4, 0, 0, 0}, "reciprocal of q_{4,4,5}");
        ObstructionReport ob = reciprocal_obstruction(f445, q2);
        check(rep, ob.target == 27 && !ob.represented,
              "reciprocal of q_{4,4,5} misses 27, so q_{4,4,5} does not represent [9,6,13]");
        check(rep, !represents_binary(f445, q2), "direct search confirms q_{4,4,5} -/-> [9,6,13]");
    }
    {
        TernaryForm f65 = family_qic(6, 5);
        GenusData gd = genus_data(f65);
        check(rep, gd.reciprocal == TernaryForm{5, 4, 4, 0, 4, 0}, "reciprocal of q_{6,5}");
        ObstructionReport ob = reciprocal_obstruction(f65, q2);
        check(rep, ob.target == 27 && !ob.represented,
              "reciprocal of q_{6,5} misses 27, so q_{6,5} does not represent [9,6,13]");
        check(rep, !represents_binary(f65, q2), "direct search confirms q_{6,5} -/-> [9,6,13]");
    }

    // Reduced binary forms representing 1 and 2.
    {
        std::vector<BinaryForm> hits;
        for (i64 a = 1; a <= 1; ++a)
            for (i64 t = 0; t <= a; ++t)
                for (i64 b = a; b <= 2; ++b) {
                    BinaryForm q{a, t, b};
                    if (!q.is_positive_definite()) continue;
                    if (represents(q, 1) && represents(q, 2)) hits.push_back(q);
                }
        std::vector<BinaryForm> expected{{1, 0, 1}, {1, 0, 2}, {1, 1, 2}};
        check(rep, hits == expected, "forms representing 1 and 2 are [1,0,1], [1,0,2], [1,1,2]");
        check(rep, !represents(BinaryForm{1, 1, 1}, 2), "[1,1,1] does not represent 2");
    }

    // Case 1: q = [1,0,1]
    {
        TernaryForm f = lift_binary(BinaryForm{1, 0, 1});
        GenusData gd = genus_data(f);
        check(rep, gd.reciprocal == TernaryForm{4, 1, 1, 0, 0, 0}, "lift [1,0,1] reciprocal");
        bool mod4_blocks = true;
        for (i64 m : mod4_residues_full(gd.reciprocal))
            if (m == 3) mod4_blocks = false;
        check(rep, mod4_blocks, "reciprocal of lift [1,0,1] takes no value 3 mod 4");
        ObstructionReport ob = reciprocal_obstruction(f, q2);
        check(rep, ob.target == 27 && !ob.represented, "lift [1,0,1] cannot represent [9,6,13]");
    }

    // Case 2: q = [1,0,2], obstruction against q1 = [4,0,4] with target 4
    {
        TernaryForm f = lift_binary(BinaryForm{1, 0, 2});
        GenusData gd = genus_data(f);
        check(rep, gd.reciprocal == TernaryForm{8, 2, 1, 0, 0, 0}, "lift [1,0,2] reciprocal");
        ObstructionReport ob = reciprocal_obstruction(f, q1);
        check(rep, ob.target == 4 && !ob.represented,
              "reciprocal of lift [1,0,2] misses 4 primitively, so the lift cannot represent "
              "[4,0,4]");
    }

    // Case 3: q = [1,1,2], obstruction mod 7
    {
        TernaryForm f = lift_binary(BinaryForm{1, 1, 2});
        GenusData gd = genus_data(f);
        check(rep, gd.reciprocal == TernaryForm{7, 2, 1, -1, 0, 0}, "lift [1,1,2] reciprocal");
        std::set<i64> squares_mod7;
        for (i64 x = 0; x < 7; ++x) squares_mod7.insert((x * x) % 7);
        check(rep, !squares_mod7.count(27 % 7), "27 is a quadratic nonresidue mod 7");
        bool values_are_squares = true;
        for (i64 x = 0; x < 7 && values_are_squares; ++x)
            for (i64 y = 0; y < 7 && values_are_squares; ++y)
                for (i64 z = 0; z < 7; ++z) {
                    i64 v = ((gd.reciprocal(Vec3{x, y, z}) % 7) + 7) % 7;
                    if (!squares_mod7.count(v)) {
                        values_are_squares = false;
                        break;
                    }
                }
        check(rep, values_are_squares, "reciprocal of lift [1,1,2] only takes squares mod 7");
        ObstructionReport ob = reciprocal_obstruction(f, q2);
        check(rep, ob.target == 27 && !ob.represented, "lift [1,1,2] cannot represent [9,6,13]");
    }

    return rep;
}

}  // namespace qf
