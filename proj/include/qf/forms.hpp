#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

using i64 = std::int64_t;

// Precondition violations of the mathematical operations (CLI exit code 3).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Bad form literals / malformed input (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit arithmetic. All coefficient math goes through these;
// overflow throws instead of wrapping.
i64 chk_add(i64 a, i64 b);
i64 chk_sub(i64 a, i64 b);
i64 chk_mul(i64 a, i64 b);
i64 gcd_nonneg(i64 a, i64 b);
i64 isqrt_floor(i64 n);  // floor(sqrt(n)), n >= 0

struct Vec3 {
    i64 x = 0, y = 0, z = 0;
    bool operator==(const Vec3&) const = default;
    auto operator<=>(const Vec3&) const = default;
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    bool is_primitive() const;  // gcd of coordinates is 1
};

struct Vec2 {
    i64 x = 0, y = 0;
    bool operator==(const Vec2&) const = default;
    auto operator<=>(const Vec2&) const = default;
    Vec2 operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_primitive() const;
};

// 3x3 integer matrix acting on column vectors.
struct Mat3 {
    std::array<std::array<i64, 3>, 3> m{};
    static Mat3 identity();
    bool operator==(const Mat3&) const = default;
    auto operator<=>(const Mat3&) const = default;
    i64 det() const;
    Mat3 transpose() const;
    Mat3 adjugate() const;
    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const;
    bool is_unimodular() const { return det() == 1 || det() == -1; }
    Mat3 inverse_unimodular() const;  // requires det = +-1
};

struct Mat2 {
    std::array<std::array<i64, 2>, 2> m{};
    static Mat2 identity();
    bool operator==(const Mat2&) const = default;
    i64 det() const;
    Mat2 operator*(const Mat2& o) const;
    Vec2 operator*(const Vec2& v) const;
    bool is_unimodular() const { return det() == 1 || det() == -1; }
};

// a x^2 + b y^2 + c z^2 + r yz + s xz + t xy, cross coefficients as written.
struct TernaryForm {
    i64 a = 0, b = 0, c = 0, r = 0, s = 0, t = 0;
    bool operator==(const TernaryForm&) const = default;
    auto operator<=>(const TernaryForm&) const = default;

    i64 operator()(const Vec3& v) const { return evaluate(*this, v); }
    static i64 evaluate(const TernaryForm& q, const Vec3& v);

    // polar(u,v) = q(u+v) - q(u) - q(v)
    i64 polar(const Vec3& u, const Vec3& v) const;

    // Coefficient matrix: diagonal 2a,2b,2c, off-diagonal t,s,r (symmetric).
    Mat3 coefficient_matrix() const;

    bool is_dickson() const { return r % 2 == 0 && s % 2 == 0 && t % 2 == 0; }
    bool is_positive_definite() const;
    i64 content() const;
    i64 discriminant() const;  // -det(coefficient_matrix)/2
    std::string str() const;
};

// a x^2 + t xy + b y^2
struct BinaryForm {
    i64 a = 0, t = 0, b = 0;
    bool operator==(const BinaryForm&) const = default;
    auto operator<=>(const BinaryForm&) const = default;

    i64 operator()(const Vec2& v) const { return evaluate(*this, v); }
    static i64 evaluate(const BinaryForm& q, const Vec2& v);
    i64 polar(const Vec2& u, const Vec2& v) const;

    bool is_positive_definite() const;
    i64 content() const;
    i64 discriminant() const { return chk_sub(chk_mul(t, t), chk_mul(4, chk_mul(a, b))); }
    std::string str() const;
};

// q composed with the substitution v -> Uv. Discriminant and content are
// unchanged when U is unimodular (checked).
TernaryForm apply_transform(const TernaryForm& q, const Mat3& u);
BinaryForm apply_transform(const BinaryForm& q, const Mat2& u);

struct InvariantBundle {
    i64 content = 0;
    i64 discriminant = 0;
    std::optional<i64> minimum;      // absent for non positive definite input
    std::set<i64> mod4_residues;     // q(v) mod 4 over the nonzero 0/1 vectors
    bool is_positive_definite = false;
};
InvariantBundle form_invariants(const TernaryForm& q);
InvariantBundle form_invariants(const BinaryForm& q);

// Residues q(v) mod 4 over all of (Z/4)^3; decides whether every value of q
// is 0 or 1 mod 4 even when cross coefficients are odd.
std::set<i64> mod4_residues_full(const TernaryForm& q);
std::set<i64> mod4_residues_full(const BinaryForm& q);
bool values_are_0_1_mod4(const TernaryForm& q);

// Named form families.
//
//   q_{1,c} = [4,4,c,4,4,4]    q_{2,c} = [4,4,c,0,0,-4]   q_{3,c} = [4,4,c,-4,-4,0]
//   q_{4,c} = [4,c,c,-4,0,0]   q_{5,c} = [4,c,c,-c,0,0]   q_{6,c} = [4,4,c,0,-4,0]
//
// i = 1,2 need c >= 4, the rest c > 4.
TernaryForm family_qic(int i, i64 c);
TernaryForm diagonal_form(i64 a, i64 b, i64 c);  // q_{a,b,c}

// Small reduced families q_1..q_7 (r below is the halved cross coefficient):
//   q_1 = [4,b,c,0,0,-4]  b>4          q_2 = [4,b,b,2r,4,4]  b>4, r>1
//   q_3 = [4,b,c,0,-4,0]  b!=c         q_4 = [4,b,c,-b,-4,0] b>4, b!=c, b even
//   q_5 = [4,b,c,2r,4,4]  b!=c, r>1    q_6 = [4,b,c,2r,0,-4] 4<b!=-2r, r<0
//   q_7 = [4,b,c,2r,-4,0] b!=c, b!=-2r, r<0
// with b <= c and b >= |2r| throughout.
TernaryForm family_qj(int j, i64 b, i64 c, i64 r = 0);

// Q_c = {q_{4,4,c}, q_{6,c}, q_{3,c}} for c=1 (8), {q_{4,4,c}, q_{6,c}} for
// c=5 (8), {q_{3,c}, q_{6,c}} for 4|c>4, and Q_4 = {q_{1,4}, q_{2,4}}.
std::vector<TernaryForm> family_Qc(i64 c);

struct FormFamily {
    enum class Kind { Qic, Diagonal, Qj, QcSet };
    Kind kind = Kind::Qic;
    int index = 0;       // i for q_{i,c}, j for q_j
    i64 a = 0, b = 0, c = 0;
    i64 r = 0;           // halved cross parameter of q_2, q_5, q_6, q_7
};
// Returns one form for Qic/Diagonal/Qj, the full set for QcSet.
std::vector<TernaryForm> make_family(const FormFamily& fam);

// Canonical textual syntax "[a,b,c,r,s,t]" and "[a,t,b]".
TernaryForm parse_ternary(const std::string& text);
BinaryForm parse_binary(const std::string& text);
// Either arity; ternary carries 6 entries, binary 3.
struct ParsedForm {
    std::optional<TernaryForm> ternary;
    std::optional<BinaryForm> binary;
};
ParsedForm parse_form(const std::string& text);

std::string to_string(const Vec3& v);
std::string to_string(const Mat3& m);

}  // namespace qf
