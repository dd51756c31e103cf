#pragma once

#include "qf/forms.hpp"

namespace qf {

// Assigned characters: chi_{-4}, chi_8, chi_ell for odd primes ell.
struct CharacterLabel {
    enum class Kind { MinusFour, Eight, OddPrime };
    Kind kind = Kind::MinusFour;
    i64 ell = 0;  // only for OddPrime
    std::string str() const;
};

// Basic genus invariants of a primitive positive ternary form f in Dickson's
// sense. The adjoint is the form whose coefficient matrix is -2 adj(A(f));
// |I_1| is its content, I_1^2 I_2 = 16 disc(f), and the reciprocal is the
// primitive positive form (-adjoint)/|I_1|.
struct GenusInvariants {
    Mat3 coefficient_matrix;
    TernaryForm adjoint;     // negative definite
    i64 abs_I1 = 0;
    i64 I2 = 0;
    TernaryForm reciprocal;  // positive definite, content 1
};
GenusInvariants genus_invariants(const TernaryForm& f);

struct GenusData : GenusInvariants {
    std::vector<CharacterLabel> characters;
};

// Invariants plus the assigned characters. The character table covers the
// 2-adic invariant patterns 16 -> {chi_-4} and 32 -> {chi_-4, chi_8} plus
// chi_ell for odd primes ell | I_1; any other 2-adic pattern raises an
// "unsupported pattern" error rather than guessing the assignment.
GenusData genus_data(const TernaryForm& f);

// Kronecker-Jacobi symbol (a/n), defined for all integers n.
int kronecker(i64 a, i64 n);

// chi(x); x must be coprime to the character modulus.
int character_value(const CharacterLabel& chi, i64 x);

enum class Tri { Yes, No, Unknown };

struct GenusConditions {
    Tri chi_condition = Tri::Unknown;
    std::optional<CharacterLabel> failing_character;  // set when chi_condition = No
    Tri I2_condition = Tri::Unknown;
    std::optional<i64> witness_m;                     // set when I2_condition = Yes
};

// chi(f) = 1 for every assigned character, evaluated on represented values
// coprime to the character modulus; and (I_2(f)/m) = 1 for some represented
// m of the reciprocal with gcd(m, 2 I_2) = 1. The m-search is bounded, so a
// missing witness yields Unknown rather than No.
GenusConditions genus_conditions(const TernaryForm& f, i64 search_limit = 0);

i64 default_genus_search_limit(i64 I2);

struct ObstructionReport {
    i64 target = 0;
    bool represented = false;  // false certifies f does not primitively represent q
};

// Non-representation certificate: if f primitively represents the binary
// form q then the reciprocal of f primitively represents -disc(q)/|I_1(f)|.
ObstructionReport reciprocal_obstruction(const TernaryForm& f, const BinaryForm& q);

// x^2 + 4 q(y,z) as a ternary form.
TernaryForm lift_binary(const BinaryForm& q);

}  // namespace qf
