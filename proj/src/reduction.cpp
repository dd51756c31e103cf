#include "qf/reduction.hpp"

#include <algorithm>
#include <map>

#include "qf/representations.hpp"

namespace qf {

namespace {

void require_dickson_pd(const TernaryForm& q) {
    if (!q.is_dickson()) throw MathError("form has odd cross coefficients: " + q.str());
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
}

i64 iabs(i64 v) { return v < 0 ? -v : v; }

}  // namespace

bool is_eisenstein_reduced(const TernaryForm& q) {
    require_dickson_pd(q);
    const i64 a = q.a, b = q.b, c = q.c;
    const i64 r = q.r / 2, s = q.s / 2, t = q.t / 2;

    bool all_pos = r > 0 && s > 0 && t > 0;
    bool all_nonpos = r <= 0 && s <= 0 && t <= 0;
    if (!all_pos && !all_nonpos) return false;

    i64 e = a + b + 2 * r + 2 * s + 2 * t;
    if (!(a <= b && b <= c && e >= 0)) return false;
    if (!(a >= iabs(2 * s) && a >= iabs(2 * t) && b >= iabs(2 * r))) return false;

    if (a == b && !(iabs(r) <= iabs(s))) return false;
    if (b == c && !(iabs(s) <= iabs(t))) return false;
    if (e == 0 && !(a + 2 * s + t <= 0)) return false;

    if (all_nonpos) {
        if (a == -2 * t && s != 0) return false;
        if (a == -2 * s && t != 0) return false;
        if (b == -2 * r && t != 0) return false;
    } else {
        if (a == 2 * t && !(s <= 2 * r)) return false;
        if (a == 2 * s && !(t <= 2 * r)) return false;
        if (b == 2 * r && !(t <= 2 * s)) return false;
    }
    return true;
}

namespace {

Mat3 permutation_matrix(int p0, int p1, int p2) {
    // columns e_{p0}, e_{p1}, e_{p2}
    Mat3 u;
    u.m[p0][0] = 1;
    u.m[p1][1] = 1;
    u.m[p2][2] = 1;
    return u;
}

// column op: e_j <- e_j + k e_i
Mat3 shear_matrix(int i, int j, i64 k) {
    Mat3 u = Mat3::identity();
    u.m[i][j] = k;
    return u;
}

// k with cross + 2*diag*k in (-diag, diag]
i64 shear_steps(i64 cross, i64 diag) {
    i64 two = 2 * diag;
    i64 r0 = cross % two;
    if (r0 < 0) r0 += two;
    i64 target = r0 > diag ? r0 - two : r0;
    return (target - cross) / two;
}

struct PrepassState {
    TernaryForm form;
    Mat3 u = Mat3::identity();

    void apply(const Mat3& step) {
        form = apply_transform(form, step);
        u = u * step;
    }
};

// Greedy sort/shear pass; shrinks coefficients so the max diagonal is a
// usable enumeration bound. Not required to reach the reduced form.
void prepass(PrepassState& st) {
    for (int iter = 0; iter < 256; ++iter) {
        TernaryForm before = st.form;
        // sort diagonal ascending
        std::array<std::pair<i64, int>, 3> diag{{{st.form.a, 0}, {st.form.b, 1}, {st.form.c, 2}}};
        std::stable_sort(diag.begin(), diag.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        if (diag[0].second != 0 || diag[1].second != 1)
            st.apply(permutation_matrix(diag[0].second, diag[1].second, diag[2].second));

        i64 k = shear_steps(st.form.t, st.form.a);
        if (k != 0) st.apply(shear_matrix(0, 1, k));
        k = shear_steps(st.form.s, st.form.a);
        if (k != 0) st.apply(shear_matrix(0, 2, k));
        k = shear_steps(st.form.r, st.form.b);
        if (k != 0) st.apply(shear_matrix(1, 2, k));

        if (st.form == before) break;
    }
}

i64 det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    return chk_add(chk_sub(chk_mul(u.x, chk_sub(chk_mul(v.y, w.z), chk_mul(v.z, w.y))),
                           chk_mul(u.y, chk_sub(chk_mul(v.x, w.z), chk_mul(v.z, w.x)))),
                   chk_mul(u.z, chk_sub(chk_mul(v.x, w.y), chk_mul(v.y, w.x))));
}

Mat3 basis_matrix(const Vec3& u, const Vec3& v, const Vec3& w) {
    Mat3 b;
    b.m[0] = {u.x, v.x, w.x};
    b.m[1] = {u.y, v.y, w.y};
    b.m[2] = {u.z, v.z, w.z};
    return b;
}

bool independent2(const Vec3& u, const Vec3& v) {
    return chk_sub(chk_mul(u.x, v.y), chk_mul(u.y, v.x)) != 0 ||
           chk_sub(chk_mul(u.x, v.z), chk_mul(u.z, v.x)) != 0 ||
           chk_sub(chk_mul(u.y, v.z), chk_mul(u.z, v.y)) != 0;
}

struct Minima {
    i64 m1 = 0, m2 = 0, m3 = 0;
    bool complete = false;
};

Minima successive_minima(const TernaryForm& q, const std::vector<Vec3>& sorted_by_norm) {
    Minima out;
    std::vector<Vec3> reps;
    std::vector<std::pair<i64, Vec3>> by_norm;
    by_norm.reserve(sorted_by_norm.size());
    for (const Vec3& v : sorted_by_norm) by_norm.emplace_back(q(v), v);
    std::stable_sort(by_norm.begin(), by_norm.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [norm, v] : by_norm) {
        bool indep = true;
        if (reps.size() == 1) indep = independent2(reps[0], v);
        if (reps.size() == 2) indep = det3(reps[0], reps[1], v) != 0;
        if (!indep) continue;
        reps.push_back(v);
        if (reps.size() == 1) out.m1 = norm;
        if (reps.size() == 2) out.m2 = norm;
        if (reps.size() == 3) {
            out.m3 = norm;
            out.complete = true;
            break;
        }
    }
    return out;
}

}  // namespace

TernaryReduction reduce_ternary(const TernaryForm& q) {
    require_dickson_pd(q);
    if (is_eisenstein_reduced(q)) return {q, Mat3::identity()};

    PrepassState st{q};
    prepass(st);

    i64 bound = std::max({st.form.a, st.form.b, st.form.c});
    for (int attempt = 0; attempt < 8; ++attempt, bound = chk_mul(bound, 2)) {
        std::vector<Vec3> sphere = vectors_up_to(st.form, bound);
        Minima mins = successive_minima(st.form, sphere);
        if (!mins.complete) continue;

        std::vector<Vec3> v1, v2, v3;
        for (const Vec3& v : sphere) {
            i64 n = st.form(v);
            if (n == mins.m1) v1.push_back(v);
            if (n == mins.m2) v2.push_back(v);
            if (n == mins.m3) v3.push_back(v);
        }

        // Third column candidates: minima vectors first, everything in the
        // sphere as a fallback.
        for (int widen = 0; widen < 2; ++widen) {
            const std::vector<Vec3>& third = widen == 0 ? v3 : sphere;
            std::map<TernaryForm, Mat3> found;
            for (const Vec3& u : v1)
                for (const Vec3& v : v2) {
                    if (!independent2(u, v)) continue;
                    for (const Vec3& w : third) {
                        i64 d = det3(u, v, w);
                        if (d != 1 && d != -1) continue;
                        Mat3 bm = basis_matrix(u, v, w);
                        TernaryForm cand = apply_transform(st.form, bm);
                        if (is_eisenstein_reduced(cand)) found.emplace(cand, bm);
                    }
                }
            if (found.size() > 1) {
                std::string all;
                for (const auto& [f, _] : found) all += f.str() + " ";
                throw MathError("reduction produced several reduced forms: " + all);
            }
            if (found.size() == 1) {
                const auto& [red, bm] = *found.begin();
                Mat3 total = st.u * bm;
                TernaryReduction out{red, total};
                if (apply_transform(q, total) != red)
                    throw MathError("reduction transform does not reproduce the reduced form");
                return out;
            }
        }
    }
    throw MathError("reduction failed for " + q.str());
}

bool is_gauss_reduced(const BinaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    return 0 <= q.t && q.t <= q.a && q.a <= q.b;
}

BinaryReduction reduce_binary(const BinaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    BinaryForm cur = q;
    Mat2 u = Mat2::identity();
    auto apply = [&](const Mat2& step) {
        cur = apply_transform(cur, step);
        u = u * step;
    };
    for (int iter = 0; iter < 512; ++iter) {
        if (cur.a > cur.b) {
            Mat2 swap;
            swap.m[0][1] = 1;
            swap.m[1][0] = 1;
            apply(swap);
            continue;
        }
        i64 k = shear_steps(cur.t, cur.a);
        if (k != 0) {
            Mat2 shear = Mat2::identity();
            shear.m[0][1] = k;
            apply(shear);
            continue;
        }
        break;
    }
    if (cur.t < 0) {
        Mat2 flip = Mat2::identity();
        flip.m[1][1] = -1;
        apply(flip);
    }
    if (!is_gauss_reduced(cur)) throw MathError("binary reduction failed for " + q.str());
    return {cur, u};
}

std::optional<Mat3> equivalent(const TernaryForm& q1, const TernaryForm& q2) {
    TernaryReduction r1 = reduce_ternary(q1);
    TernaryReduction r2 = reduce_ternary(q2);
    if (r1.reduced != r2.reduced) return std::nullopt;
    Mat3 witness = r1.transform * r2.transform.inverse_unimodular();
    if (apply_transform(q1, witness) != q2)
        throw MathError("equivalence witness does not map q1 to q2");
    return witness;
}

std::optional<Mat2> equivalent(const BinaryForm& q1, const BinaryForm& q2) {
    BinaryReduction r1 = reduce_binary(q1);
    BinaryReduction r2 = reduce_binary(q2);
    if (r1.reduced != r2.reduced) return std::nullopt;
    Mat2 inv;
    i64 d = r2.transform.det();
    inv.m[0][0] = d * r2.transform.m[1][1];
    inv.m[0][1] = -d * r2.transform.m[0][1];
    inv.m[1][0] = -d * r2.transform.m[1][0];
    inv.m[1][1] = d * r2.transform.m[0][0];
    Mat2 witness = r1.transform * inv;
    if (apply_transform(q1, witness) != q2)
        throw MathError("equivalence witness does not map q1 to q2");
    return witness;
}

}  // namespace qf
