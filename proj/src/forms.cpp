#include "qf/forms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qf {

i64 chk_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw MathError("integer overflow in addition");
    return out;
}

i64 chk_sub(i64 a, i64 b) {
    i64 out;
    if (__builtin_sub_overflow(a, b, &out)) throw MathError("integer overflow in subtraction");
    return out;
}

i64 chk_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) throw MathError("integer overflow in multiplication");
    return out;
}

i64 gcd_nonneg(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 isqrt_floor(i64 n) {
    if (n < 0) throw MathError("isqrt of negative number");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool Vec3::is_primitive() const { return gcd_nonneg(gcd_nonneg(x, y), z) == 1; }
bool Vec2::is_primitive() const { return gcd_nonneg(x, y) == 1; }

Mat3 Mat3::identity() {
    Mat3 u;
    u.m[0][0] = u.m[1][1] = u.m[2][2] = 1;
    return u;
}

i64 Mat3::det() const {
    i64 d = 0;
    d = chk_add(d, chk_mul(m[0][0], chk_sub(chk_mul(m[1][1], m[2][2]), chk_mul(m[1][2], m[2][1]))));
    d = chk_sub(d, chk_mul(m[0][1], chk_sub(chk_mul(m[1][0], m[2][2]), chk_mul(m[1][2], m[2][0]))));
    d = chk_add(d, chk_mul(m[0][2], chk_sub(chk_mul(m[1][0], m[2][1]), chk_mul(m[1][1], m[2][0]))));
    return d;
}

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
}

Mat3 Mat3::adjugate() const {
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return chk_sub(chk_mul(m[r0][c0], m[r1][c1]), chk_mul(m[r0][c1], m[r1][c0]));
    };
    Mat3 adj;
    // adj = transpose of the cofactor matrix
    adj.m[0][0] = minor2(1, 2, 1, 2);
    adj.m[1][0] = -minor2(1, 2, 0, 2);
    adj.m[2][0] = minor2(1, 2, 0, 1);
    adj.m[0][1] = -minor2(0, 2, 1, 2);
    adj.m[1][1] = minor2(0, 2, 0, 2);
    adj.m[2][1] = -minor2(0, 2, 0, 1);
    adj.m[0][2] = minor2(0, 1, 1, 2);
    adj.m[1][2] = -minor2(0, 1, 0, 2);
    adj.m[2][2] = minor2(0, 1, 0, 1);
    return adj;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i64 acc = 0;
            for (int k = 0; k < 3; ++k) acc = chk_add(acc, chk_mul(m[i][k], o.m[k][j]));
            p.m[i][j] = acc;
        }
    return p;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    auto row = [&](int i) {
        return chk_add(chk_add(chk_mul(m[i][0], v.x), chk_mul(m[i][1], v.y)), chk_mul(m[i][2], v.z));
    };
    return {row(0), row(1), row(2)};
}

Mat3 Mat3::inverse_unimodular() const {
    i64 d = det();
    if (d != 1 && d != -1) throw MathError("matrix is not unimodular");
    Mat3 adj = adjugate();
    if (d == -1)
        for (auto& row : adj.m)
            for (auto& e : row) e = -e;
    return adj;
}

Mat2 Mat2::identity() {
    Mat2 u;
    u.m[0][0] = u.m[1][1] = 1;
    return u;
}

i64 Mat2::det() const { return chk_sub(chk_mul(m[0][0], m[1][1]), chk_mul(m[0][1], m[1][0])); }

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 p;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            p.m[i][j] = chk_add(chk_mul(m[i][0], o.m[0][j]), chk_mul(m[i][1], o.m[1][j]));
    return p;
}

Vec2 Mat2::operator*(const Vec2& v) const {
    return {chk_add(chk_mul(m[0][0], v.x), chk_mul(m[0][1], v.y)),
            chk_add(chk_mul(m[1][0], v.x), chk_mul(m[1][1], v.y))};
}

i64 TernaryForm::evaluate(const TernaryForm& q, const Vec3& v) {
    i64 acc = chk_mul(q.a, chk_mul(v.x, v.x));
    acc = chk_add(acc, chk_mul(q.b, chk_mul(v.y, v.y)));
    acc = chk_add(acc, chk_mul(q.c, chk_mul(v.z, v.z)));
    acc = chk_add(acc, chk_mul(q.r, chk_mul(v.y, v.z)));
    acc = chk_add(acc, chk_mul(q.s, chk_mul(v.x, v.z)));
    acc = chk_add(acc, chk_mul(q.t, chk_mul(v.x, v.y)));
    return acc;
}

i64 TernaryForm::polar(const Vec3& u, const Vec3& v) const {
    Vec3 w{chk_add(u.x, v.x), chk_add(u.y, v.y), chk_add(u.z, v.z)};
    return chk_sub(chk_sub((*this)(w), (*this)(u)), (*this)(v));
}

Mat3 TernaryForm::coefficient_matrix() const {
    Mat3 mm;
    mm.m[0][0] = chk_mul(2, a);
    mm.m[1][1] = chk_mul(2, b);
    mm.m[2][2] = chk_mul(2, c);
    mm.m[0][1] = mm.m[1][0] = t;
    mm.m[0][2] = mm.m[2][0] = s;
    mm.m[1][2] = mm.m[2][1] = r;
    return mm;
}

bool TernaryForm::is_positive_definite() const {
    if (a <= 0) return false;
    Mat3 mm = coefficient_matrix();
    i64 m2 = chk_sub(chk_mul(mm.m[0][0], mm.m[1][1]), chk_mul(mm.m[0][1], mm.m[1][0]));
    return m2 > 0 && mm.det() > 0;
}

i64 TernaryForm::content() const {
    i64 g = 0;
    for (i64 v : {a, b, c, r, s, t}) g = gcd_nonneg(g, v);
    return g;
}

i64 TernaryForm::discriminant() const {
    i64 d = coefficient_matrix().det();
    if (d % 2 != 0) throw MathError("coefficient matrix determinant is odd");
    return -d / 2;
}

std::string TernaryForm::str() const {
    std::ostringstream os;
    os << '[' << a << ',' << b << ',' << c << ',' << r << ',' << s << ',' << t << ']';
    return os.str();
}

i64 BinaryForm::evaluate(const BinaryForm& q, const Vec2& v) {
    i64 acc = chk_mul(q.a, chk_mul(v.x, v.x));
    acc = chk_add(acc, chk_mul(q.t, chk_mul(v.x, v.y)));
    acc = chk_add(acc, chk_mul(q.b, chk_mul(v.y, v.y)));
    return acc;
}

i64 BinaryForm::polar(const Vec2& u, const Vec2& v) const {
    Vec2 w{chk_add(u.x, v.x), chk_add(u.y, v.y)};
    return chk_sub(chk_sub((*this)(w), (*this)(u)), (*this)(v));
}

bool BinaryForm::is_positive_definite() const { return a > 0 && discriminant() < 0; }

i64 BinaryForm::content() const { return gcd_nonneg(gcd_nonneg(a, t), b); }

std::string BinaryForm::str() const {
    std::ostringstream os;
    os << '[' << a << ',' << t << ',' << b << ']';
    return os.str();
}

TernaryForm apply_transform(const TernaryForm& q, const Mat3& u) {
    if (!u.is_unimodular()) throw MathError("transform is not unimodular");
    Mat3 mm = u.transpose() * q.coefficient_matrix() * u;
    TernaryForm out;
    out.a = mm.m[0][0] / 2;
    out.b = mm.m[1][1] / 2;
    out.c = mm.m[2][2] / 2;
    out.t = mm.m[0][1];
    out.s = mm.m[0][2];
    out.r = mm.m[1][2];
    return out;
}

BinaryForm apply_transform(const BinaryForm& q, const Mat2& u) {
    if (!u.is_unimodular()) throw MathError("transform is not unimodular");
    Vec2 e1 = u * Vec2{1, 0};
    Vec2 e2 = u * Vec2{0, 1};
    return BinaryForm{q(e1), q.polar(e1, e2), q(e2)};
}

namespace {

// Minimum of a positive definite form by bounded vector enumeration:
// x_i^2 <= 2B * adj(M)_ii / det(M) for q(v) <= B.
std::optional<i64> ternary_minimum(const TernaryForm& q) {
    if (!q.is_positive_definite()) return std::nullopt;
    i64 bound = std::min({q.a, q.b, q.c});
    Mat3 mm = q.coefficient_matrix();
    Mat3 adj = mm.adjugate();
    i64 d = mm.det();
    i64 best = bound;
    auto coord_bound = [&](int i) {
        return isqrt_floor(chk_mul(2 * best, adj.m[i][i]) / d);
    };
    i64 bx = coord_bound(0), by = coord_bound(1), bz = coord_bound(2);
    for (i64 x = -bx; x <= bx; ++x)
        for (i64 y = -by; y <= by; ++y)
            for (i64 z = -bz; z <= bz; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                i64 v = q(Vec3{x, y, z});
                if (v > 0 && v < best) best = v;
            }
    return best;
}

// 4a*q = (2ax + ty)^2 + (4ab - t^2) y^2 bounds both coordinates exactly.
std::optional<i64> binary_minimum(const BinaryForm& q) {
    if (!q.is_positive_definite()) return std::nullopt;
    i64 bound = std::min(q.a, q.b);
    i64 disc = -q.discriminant();
    i64 by = isqrt_floor(chk_mul(4, chk_mul(q.a, bound)) / disc);
    i64 best = bound;
    i64 w = isqrt_floor(chk_mul(4, chk_mul(q.a, bound)));
    for (i64 y = -by; y <= by; ++y) {
        i64 lo = (-w - chk_mul(q.t, y)) / (2 * q.a) - 1;
        i64 hi = (w - chk_mul(q.t, y)) / (2 * q.a) + 1;
        for (i64 x = lo; x <= hi; ++x) {
            if (x == 0 && y == 0) continue;
            i64 v = q(Vec2{x, y});
            if (v > 0 && v < best) best = v;
        }
    }
    return best;
}

}  // namespace

InvariantBundle form_invariants(const TernaryForm& q) {
    InvariantBundle out;
    out.content = q.content();
    out.discriminant = q.discriminant();
    out.is_positive_definite = q.is_positive_definite();
    out.minimum = ternary_minimum(q);
    for (i64 x = 0; x <= 1; ++x)
        for (i64 y = 0; y <= 1; ++y)
            for (i64 z = 0; z <= 1; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                out.mod4_residues.insert(((q(Vec3{x, y, z}) % 4) + 4) % 4);
            }
    return out;
}

InvariantBundle form_invariants(const BinaryForm& q) {
    InvariantBundle out;
    out.content = q.content();
    out.discriminant = q.discriminant();
    out.is_positive_definite = q.is_positive_definite();
    out.minimum = binary_minimum(q);
    for (i64 x = 0; x <= 1; ++x)
        for (i64 y = 0; y <= 1; ++y) {
            if (x == 0 && y == 0) continue;
            out.mod4_residues.insert(((q(Vec2{x, y}) % 4) + 4) % 4);
        }
    return out;
}

std::set<i64> mod4_residues_full(const TernaryForm& q) {
    std::set<i64> res;
    for (i64 x = 0; x < 4; ++x)
        for (i64 y = 0; y < 4; ++y)
            for (i64 z = 0; z < 4; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                res.insert(((q(Vec3{x, y, z}) % 4) + 4) % 4);
            }
    return res;
}

std::set<i64> mod4_residues_full(const BinaryForm& q) {
    std::set<i64> res;
    for (i64 x = 0; x < 4; ++x)
        for (i64 y = 0; y < 4; ++y) {
            if (x == 0 && y == 0) continue;
            res.insert(((q(Vec2{x, y}) % 4) + 4) % 4);
        }
    return res;
}

bool values_are_0_1_mod4(const TernaryForm& q) {
    for (i64 m : mod4_residues_full(q))
        if (m != 0 && m != 1) return false;
    return true;
}

TernaryForm family_qic(int i, i64 c) {
    switch (i) {
        case 1:
            if (c < 4) throw MathError("q_{1,c} needs c >= 4");
            return {4, 4, c, 4, 4, 4};
        case 2:
            if (c < 4) throw MathError("q_{2,c} needs c >= 4");
            return {4, 4, c, 0, 0, -4};
        case 3:
            if (c <= 4) throw MathError("q_{3,c} needs c > 4");
            return {4, 4, c, -4, -4, 0};
        case 4:
            if (c <= 4) throw MathError("q_{4,c} needs c > 4");
            return {4, c, c, -4, 0, 0};
        case 5:
            if (c <= 4) throw MathError("q_{5,c} needs c > 4");
            return {4, c, c, -c, 0, 0};
        case 6:
            if (c <= 4) throw MathError("q_{6,c} needs c > 4");
            return {4, 4, c, 0, -4, 0};
        default:
            throw MathError("family index must be 1..6");
    }
}

TernaryForm diagonal_form(i64 a, i64 b, i64 c) {
    if (a <= 0 || b <= 0 || c <= 0) throw MathError("diagonal form needs positive entries");
    return {a, b, c, 0, 0, 0};
}

TernaryForm family_qj(int j, i64 b, i64 c, i64 r) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw MathError(std::string("family parameter violates ") + what);
    };
    need(b <= c, "b <= c");
    need(b >= 2 * (r < 0 ? -r : r), "b >= |2r|");
    switch (j) {
        case 1:
            need(b > 4, "b > 4");
            return {4, b, c, 0, 0, -4};
        case 2:
            need(b > 4 && r > 1, "b > 4, r > 1");
            return {4, b, b, 2 * r, 4, 4};
        case 3:
            need(b != c, "b != c");
            return {4, b, c, 0, -4, 0};
        case 4:
            need(b > 4 && b != c && b % 2 == 0, "b > 4, b != c, b even");
            return {4, b, c, -b, -4, 0};
        case 5:
            need(b != c && r > 1, "b != c, r > 1");
            return {4, b, c, 2 * r, 4, 4};
        case 6:
            need(b > 4 && r < 0 && b != -2 * r, "4 < b != -2r, r < 0");
            return {4, b, c, 2 * r, 0, -4};
        case 7:
            need(b != c && r < 0 && b != -2 * r, "b != c != -2r, r < 0");
            return {4, b, c, 2 * r, -4, 0};
        default:
            throw MathError("family index must be 1..7");
    }
}

std::vector<TernaryForm> family_Qc(i64 c) {
    if (c == 4) return {family_qic(1, 4), family_qic(2, 4)};
    if (c <= 4) throw MathError("Q_c needs c >= 4");
    i64 m8 = ((c % 8) + 8) % 8;
    if (m8 == 1) return {diagonal_form(4, 4, c), family_qic(6, c), family_qic(3, c)};
    if (m8 == 5) return {diagonal_form(4, 4, c), family_qic(6, c)};
    if (c % 4 == 0) return {family_qic(3, c), family_qic(6, c)};
    throw MathError("Q_c needs c = 0,1 mod 4");
}

std::vector<TernaryForm> make_family(const FormFamily& fam) {
    switch (fam.kind) {
        case FormFamily::Kind::Qic:
            return {family_qic(fam.index, fam.c)};
        case FormFamily::Kind::Diagonal:
            return {diagonal_form(fam.a, fam.b, fam.c)};
        case FormFamily::Kind::Qj:
            return {family_qj(fam.index, fam.b, fam.c, fam.r)};
        case FormFamily::Kind::QcSet:
            return family_Qc(fam.c);
    }
    throw MathError("unknown family kind");
}

namespace {

std::vector<i64> parse_int_list(const std::string& text) {
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
        throw ParseError("form literal must look like [a,b,...]: " + text);
    std::vector<i64> vals;
    std::string body = trimmed.substr(1, trimmed.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw ParseError("empty entry in form literal: " + text);
        size_t used = 0;
        i64 v;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in form literal");
        }
        if (used != tok.size()) throw ParseError("bad integer '" + tok + "' in form literal");
        vals.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vals;
}

}  // namespace

TernaryForm parse_ternary(const std::string& text) {
    auto v = parse_int_list(text);
    if (v.size() != 6) throw ParseError("ternary form literal needs 6 entries: " + text);
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

BinaryForm parse_binary(const std::string& text) {
    auto v = parse_int_list(text);
    if (v.size() != 3) throw ParseError("binary form literal needs 3 entries: " + text);
    return {v[0], v[1], v[2]};
}

ParsedForm parse_form(const std::string& text) {
    auto v = parse_int_list(text);
    ParsedForm out;
    if (v.size() == 6)
        out.ternary = TernaryForm{v[0], v[1], v[2], v[3], v[4], v[5]};
    else if (v.size() == 3)
        out.binary = BinaryForm{v[0], v[1], v[2]};
    else
        throw ParseError("form literal needs 3 or 6 entries: " + text);
    return out;
}

std::string to_string(const Vec3& v) {
    std::ostringstream os;
    os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
    return os.str();
}

std::string to_string(const Mat3& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 3; ++i) {
        os << '[' << m.m[i][0] << ',' << m.m[i][1] << ',' << m.m[i][2] << ']';
        if (i < 2) os << ',';
    }
    os << ']';
    return os.str();
}

}  // namespace qf
