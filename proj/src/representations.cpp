#include "qf/representations.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf {

namespace {

void require_pd(const TernaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
}

void require_pd(const BinaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
}

// Solve (2a x + ty + sz)^2 = w2 for integer x; push solutions.
inline void solve_x(const TernaryForm& q, i64 y, i64 z, i64 w2, std::vector<Vec3>& out) {
    i64 w = isqrt_floor(w2);
    if (w * w != w2) return;
    i64 lin = q.t * y + q.s * z;
    for (i64 sign = 0; sign < 2; ++sign) {
        i64 rhs = (sign == 0 ? w : -w) - lin;
        if (rhs % (2 * q.a) == 0) out.push_back(Vec3{rhs / (2 * q.a), y, z});
        if (w == 0) break;
    }
}

// All v with q(v) = n for one fixed z, via
//   4a q = (2ax + ty + sz)^2 + A y^2 + B yz + C z^2.
void scan_z_slice(const TernaryForm& q, i64 n, i64 z, i64 A, i64 B, i64 C,
                  std::vector<Vec3>& out) {
    i64 lim = chk_mul(4, chk_mul(q.a, n));
    i64 w = chk_sub(chk_mul(4, chk_mul(A, lim)), chk_mul(chk_sub(chk_mul(4, chk_mul(A, C)), chk_mul(B, B)), chk_mul(z, z)));
    if (w < 0) return;
    i64 ws = isqrt_floor(w);
    i64 bz = chk_mul(B, z);
    i64 ylo = (-ws - bz) / (2 * A) - 1;
    i64 yhi = (ws - bz) / (2 * A) + 1;
    for (i64 y = ylo; y <= yhi; ++y) {
        i64 g = chk_add(chk_add(chk_mul(A, chk_mul(y, y)), chk_mul(bz, y)), chk_mul(C, chk_mul(z, z)));
        i64 w2 = lim - g;
        if (w2 < 0) continue;
        solve_x(q, y, z, w2, out);
    }
}

std::vector<Vec3> enumerate_exact(const TernaryForm& q, i64 n) {
    if (n == 0) return {Vec3{0, 0, 0}};
    i64 A = chk_sub(chk_mul(4, chk_mul(q.a, q.b)), chk_mul(q.t, q.t));
    i64 B = chk_sub(chk_mul(4, chk_mul(q.a, q.r)), chk_mul(2, chk_mul(q.s, q.t)));
    i64 C = chk_sub(chk_mul(4, chk_mul(q.a, q.c)), chk_mul(q.s, q.s));
    i64 D = chk_sub(chk_mul(4, chk_mul(A, C)), chk_mul(B, B));
    i64 zmax = isqrt_floor(chk_mul(chk_mul(16, q.a), chk_mul(A, n)) / D);

    std::vector<Vec3> all;
#ifdef _OPENMP
    int slices = static_cast<int>(2 * zmax + 1);
    std::vector<std::vector<Vec3>> per(slices);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < slices; ++i) {
        scan_z_slice(q, n, -zmax + i, A, B, C, per[i]);
    }
    for (auto& chunk : per) all.insert(all.end(), chunk.begin(), chunk.end());
#else
    for (i64 z = -zmax; z <= zmax; ++z) scan_z_slice(q, n, z, A, B, C, all);
#endif
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

RepresentationSet representations(const TernaryForm& q, i64 n, bool primitive_only) {
    require_pd(q);
    if (n < 0) throw MathError("representation target must be nonnegative");
    RepresentationSet out;
    out.target = n;
    std::vector<Vec3> all = enumerate_exact(q, n);
    for (const Vec3& v : all)
        if (v.is_primitive()) out.primitive_vectors.push_back(v);
    out.vectors = primitive_only ? out.primitive_vectors : std::move(all);
    return out;
}

RepresentationSet2 representations(const BinaryForm& q, i64 n, bool primitive_only) {
    require_pd(q);
    if (n < 0) throw MathError("representation target must be nonnegative");
    RepresentationSet2 out;
    out.target = n;
    std::vector<Vec2> all;
    if (n == 0) {
        all.push_back(Vec2{0, 0});
    } else {
        i64 disc = -q.discriminant();
        i64 lim = chk_mul(4, chk_mul(q.a, n));
        i64 ymax = isqrt_floor(lim / disc);
        for (i64 y = -ymax; y <= ymax; ++y) {
            i64 w2 = lim - chk_mul(disc, chk_mul(y, y));
            i64 w = isqrt_floor(w2);
            if (w * w != w2) continue;
            for (i64 sign = 0; sign < 2; ++sign) {
                i64 rhs = (sign == 0 ? w : -w) - q.t * y;
                if (rhs % (2 * q.a) == 0) all.push_back(Vec2{rhs / (2 * q.a), y});
                if (w == 0) break;
            }
        }
        std::sort(all.begin(), all.end());
    }
    for (const Vec2& v : all)
        if (v.is_primitive()) out.primitive_vectors.push_back(v);
    out.vectors = primitive_only ? out.primitive_vectors : std::move(all);
    return out;
}

std::vector<Vec3> vectors_up_to(const TernaryForm& q, i64 bound) {
    require_pd(q);
    if (bound < 1) return {};
    Mat3 mm = q.coefficient_matrix();
    Mat3 adj = mm.adjugate();
    i64 d = mm.det();
    auto cb = [&](int i) { return isqrt_floor(chk_mul(2 * bound, adj.m[i][i]) / d); };
    i64 bx = cb(0), by = cb(1), bz = cb(2);
    std::vector<Vec3> out;
    for (i64 x = -bx; x <= bx; ++x)
        for (i64 y = -by; y <= by; ++y)
            for (i64 z = -bz; z <= bz; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                i64 v = q(Vec3{x, y, z});
                if (v > 0 && v <= bound) out.push_back(Vec3{x, y, z});
            }
    std::sort(out.begin(), out.end());
    return out;
}

i64 representation_count(const TernaryForm& q, i64 n) {
    return static_cast<i64>(representations(q, n).vectors.size());
}

bool represents(const TernaryForm& q, i64 n) { return !representations(q, n).vectors.empty(); }

bool represents_primitively(const TernaryForm& q, i64 n) {
    return !representations(q, n).primitive_vectors.empty();
}

bool represents(const BinaryForm& q, i64 n) { return !representations(q, n).vectors.empty(); }

bool represents_primitively(const BinaryForm& q, i64 n) {
    return !representations(q, n).primitive_vectors.empty();
}

i64 a_invariant(const TernaryForm& q) {
    i64 r4 = representation_count(q, 4);
    return std::max<i64>({1, r4, 3 * r4 - 12});
}

namespace {

// gcd of the 2x2 minors of the 2x3 matrix with rows u, v.
i64 minor_gcd(const Vec3& u, const Vec3& v) {
    i64 m1 = chk_sub(chk_mul(u.x, v.y), chk_mul(u.y, v.x));
    i64 m2 = chk_sub(chk_mul(u.x, v.z), chk_mul(u.z, v.x));
    i64 m3 = chk_sub(chk_mul(u.y, v.z), chk_mul(u.z, v.y));
    return gcd_nonneg(gcd_nonneg(m1, m2), m3);
}

}  // namespace

std::optional<std::pair<Vec3, Vec3>> represents_binary(const TernaryForm& f, const BinaryForm& q) {
    require_pd(f);
    require_pd(q);
    auto ra = representations(f, q.a);
    auto rb = representations(f, q.b);
    for (const Vec3& u : ra.vectors)
        for (const Vec3& v : rb.vectors) {
            i64 p = f.polar(u, v);
            if (p != q.t && p != -q.t) continue;
            if (minor_gcd(u, v) != 1) continue;
            return std::make_pair(u, p == q.t ? v : -v);
        }
    return std::nullopt;
}

namespace reference {

RepresentationSet representations_serial(const TernaryForm& q, i64 n, bool primitive_only) {
    require_pd(q);
    if (n < 0) throw MathError("representation target must be nonnegative");
    RepresentationSet out;
    out.target = n;
    std::vector<Vec3> all;
    if (n == 0) {
        all.push_back(Vec3{0, 0, 0});
    } else {
        Mat3 mm = q.coefficient_matrix();
        Mat3 adj = mm.adjugate();
        i64 d = mm.det();
        auto cb = [&](int i) { return isqrt_floor(chk_mul(2 * n, adj.m[i][i]) / d); };
        i64 bx = cb(0), by = cb(1), bz = cb(2);
        for (i64 x = -bx; x <= bx; ++x)
            for (i64 y = -by; y <= by; ++y)
                for (i64 z = -bz; z <= bz; ++z)
                    if (q(Vec3{x, y, z}) == n) all.push_back(Vec3{x, y, z});
        std::sort(all.begin(), all.end());
    }
    for (const Vec3& v : all)
        if (v.is_primitive()) out.primitive_vectors.push_back(v);
    out.vectors = primitive_only ? out.primitive_vectors : std::move(all);
    return out;
}

}  // namespace reference

}  // namespace qf
