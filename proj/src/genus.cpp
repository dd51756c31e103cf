#include "qf/genus.hpp"

#include <algorithm>

#include "qf/representations.hpp"

namespace qf {

std::string CharacterLabel::str() const {
    switch (kind) {
        case Kind::MinusFour: return "chi_-4";
        case Kind::Eight: return "chi_8";
        case Kind::OddPrime: return "chi_" + std::to_string(ell);
    }
    return "?";
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // factor out 2s from n; (a/2) = 0, 1, -1 for a = 0, +-1, +-3 mod 8
    while (n % 2 == 0) {
        n /= 2;
        i64 m = ((a % 8) + 8) % 8;
        if (m == 3 || m == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // Jacobi symbol with odd positive n
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 m = n % 8;
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int character_value(const CharacterLabel& chi, i64 x) {
    switch (chi.kind) {
        case CharacterLabel::Kind::MinusFour:
            if (x % 2 == 0) throw MathError("chi_-4 needs an odd argument");
            return kronecker(-4, x);
        case CharacterLabel::Kind::Eight:
            if (x % 2 == 0) throw MathError("chi_8 needs an odd argument");
            return kronecker(8, x);
        case CharacterLabel::Kind::OddPrime:
            if (x % chi.ell == 0) throw MathError("chi_ell argument not coprime to ell");
            return kronecker(x, chi.ell);
    }
    throw MathError("unknown character");
}

namespace {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<CharacterLabel> assigned_characters(i64 abs_I1) {
    // 2-adic part 16 -> {chi_-4}; 32 -> {chi_-4, chi_8}; plus chi_ell for odd
    // primes ell | I_1. Only these 2-adic patterns occur here; anything else
    // is rejected rather than guessed.
    std::vector<CharacterLabel> out;
    i64 two_part = 1;
    i64 odd = abs_I1;
    while (odd % 2 == 0) {
        odd /= 2;
        two_part *= 2;
    }
    if (two_part == 16) {
        out.push_back({CharacterLabel::Kind::MinusFour, 0});
    } else if (two_part == 32) {
        out.push_back({CharacterLabel::Kind::MinusFour, 0});
        out.push_back({CharacterLabel::Kind::Eight, 0});
    } else {
        throw MathError("unsupported 2-adic invariant pattern: |I1| = " + std::to_string(abs_I1));
    }
    for (i64 p = 3; p * p <= odd; p += 2)
        if (odd % p == 0) {
            out.push_back({CharacterLabel::Kind::OddPrime, p});
            while (odd % p == 0) odd /= p;
        }
    if (odd > 1) {
        if (!is_prime(odd)) throw MathError("unexpected composite odd part of |I1|");
        out.push_back({CharacterLabel::Kind::OddPrime, odd});
    }
    return out;
}

}  // namespace

GenusInvariants genus_invariants(const TernaryForm& f) {
    if (!f.is_positive_definite()) throw MathError("form is not positive definite: " + f.str());
    if (!f.is_dickson()) throw MathError("form has odd cross coefficients: " + f.str());
    if (f.content() != 1) throw MathError("form is imprimitive: " + f.str());

    GenusInvariants out;
    out.coefficient_matrix = f.coefficient_matrix();
    Mat3 adj = out.coefficient_matrix.adjugate();
    Mat3 m2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m2.m[i][j] = chk_mul(-2, adj.m[i][j]);
    // coefficient matrix of the adjoint form is -2 adj(A(f))
    TernaryForm adj_form;
    adj_form.a = m2.m[0][0] / 2;
    adj_form.b = m2.m[1][1] / 2;
    adj_form.c = m2.m[2][2] / 2;
    adj_form.t = m2.m[0][1];
    adj_form.s = m2.m[0][2];
    adj_form.r = m2.m[1][2];
    out.adjoint = adj_form;

    out.abs_I1 = adj_form.content();
    i64 disc = f.discriminant();
    i64 i1sq = chk_mul(out.abs_I1, out.abs_I1);
    i64 num = chk_mul(16, disc);
    if (num % i1sq != 0) throw MathError("I1^2 does not divide 16 disc for " + f.str());
    out.I2 = num / i1sq;

    TernaryForm rec;
    for (auto [dst, src] : std::initializer_list<std::pair<i64*, i64>>{
             {&rec.a, adj_form.a}, {&rec.b, adj_form.b}, {&rec.c, adj_form.c},
             {&rec.r, adj_form.r}, {&rec.s, adj_form.s}, {&rec.t, adj_form.t}}) {
        if (src % out.abs_I1 != 0) throw MathError("adjoint is not divisible by |I1|");
        *dst = -src / out.abs_I1;
    }
    if (!rec.is_positive_definite() || rec.content() != 1)
        throw MathError("reciprocal is not a primitive positive form");
    out.reciprocal = rec;
    return out;
}

GenusData genus_data(const TernaryForm& f) {
    GenusData out;
    static_cast<GenusInvariants&>(out) = genus_invariants(f);
    out.characters = assigned_characters(out.abs_I1);
    return out;
}

i64 default_genus_search_limit(i64 I2) {
    i64 a = I2 < 0 ? -I2 : I2;
    return std::max<i64>(200, chk_mul(10, chk_mul(a, a)));
}

GenusConditions genus_conditions(const TernaryForm& f, i64 search_limit) {
    GenusData gd = genus_data(f);
    if (search_limit <= 0) search_limit = default_genus_search_limit(gd.I2);

    GenusConditions out;

    // Represented values of f up to a small bound decide each character; the
    // character is constant on represented values coprime to its modulus, and
    // that is asserted across everything found.
    std::vector<Vec3> small = vectors_up_to(f, std::min<i64>(search_limit, 4 * (f.a + f.b + f.c)));
    out.chi_condition = Tri::Yes;
    for (const CharacterLabel& chi : gd.characters) {
        i64 modulus = chi.kind == CharacterLabel::Kind::OddPrime ? chi.ell : 2;
        std::optional<int> value;
        for (const Vec3& v : small) {
            i64 n = f(v);
            if (n % modulus == 0) continue;
            int cv = character_value(chi, n);
            if (!value) {
                value = cv;
            } else if (*value != cv) {
                throw MathError("assigned character is not constant on represented values of " +
                                f.str());
            }
        }
        if (!value) {
            if (out.chi_condition == Tri::Yes) out.chi_condition = Tri::Unknown;
            continue;
        }
        if (*value != 1) {
            out.chi_condition = Tri::No;
            out.failing_character = chi;
        }
    }

    // smallest represented m of the reciprocal with gcd(m, 2 I2) = 1 and
    // (I2/m) = 1
    out.I2_condition = Tri::Unknown;
    std::vector<i64> values;
    for (const Vec3& v : vectors_up_to(gd.reciprocal, search_limit))
        values.push_back(gd.reciprocal(v));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (i64 m : values) {
        if (gcd_nonneg(m, chk_mul(2, gd.I2)) != 1) continue;
        if (kronecker(gd.I2, m) == 1) {
            out.I2_condition = Tri::Yes;
            out.witness_m = m;
            break;
        }
    }
    return out;
}

ObstructionReport reciprocal_obstruction(const TernaryForm& f, const BinaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("binary form is not positive definite");
    GenusInvariants gd = genus_invariants(f);
    i64 disc = q.discriminant();
    if ((-disc) % gd.abs_I1 != 0)
        throw MathError("|I1(f)| does not divide |disc(q)|");
    ObstructionReport out;
    out.target = -disc / gd.abs_I1;
    out.represented = represents_primitively(gd.reciprocal, out.target);
    return out;
}

TernaryForm lift_binary(const BinaryForm& q) {
    return TernaryForm{1, chk_mul(4, q.a), chk_mul(4, q.b), chk_mul(4, q.t), 0, 0};
}

}  // namespace qf
