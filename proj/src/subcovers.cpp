#include "qf/subcovers.hpp"

#include <fstream>
#include <mutex>

#include "qf/representations.hpp"

namespace qf {

SubcoverReport subcovers(const TernaryForm& q, i64 n) {
    if (n < 1) throw MathError("subcover degree must be positive");
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    if (represents(q, 1)) throw MathError("form represents 1, so it is not a Jacobian form");
    SubcoverReport out;
    out.degree = n;
    out.count = static_cast<i64>(representations(q, chk_mul(n, n)).primitive_vectors.size());
    out.exists = out.count > 0;
    return out;
}

namespace {

std::mutex cache_mutex;
ClassNumberTable cache;

i64 class_number_uncached(i64 d) {
    if (d >= 0) throw MathError("class number needs a negative discriminant");
    i64 m = ((d % 4) + 4) % 4;
    if (m != 0 && m != 1) throw MathError("discriminant must be 0 or 1 mod 4");
    i64 count = 0;
    i64 amax = isqrt_floor((-d) / 3);
    for (i64 a = 1; a <= amax; ++a)
        for (i64 t = -a; t <= a; ++t) {
            if (((t * t - d) % (4 * a)) != 0) continue;
            i64 b = (t * t - d) / (4 * a);
            if (b < a) continue;
            if (t < 0 && (t == -a || a == b)) continue;  // boundary classes counted once
            if (gcd_nonneg(gcd_nonneg(a, t), b) != 1) continue;
            ++count;
        }
    return count;
}

}  // namespace

i64 class_number(i64 d) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    i64 h = class_number_uncached(d);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(d, h);
    return h;
}

ClassNumberTable load_class_number_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MathError("cannot open class number table: " + path);
    ClassNumberTable table;
    i64 d, h;
    while (in >> d >> h) table[d] = h;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (const auto& [dd, hh] : table) cache.emplace(dd, hh);
    return table;
}

void save_class_number_table(const ClassNumberTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MathError("cannot write class number table: " + path);
    for (const auto& [d, h] : table) out << d << ' ' << h << '\n';
}

ClassNumberTable snapshot_class_number_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache;
}

D6LocusCount d6_locus_count(i64 m) {
    if (m < 1 || m % 2 == 0) throw MathError("degree must be odd and positive");
    D6LocusCount out;
    i64 target = chk_mul(m, m);
    for (i64 cp = 5; cp <= target + 1; cp += 4) {
        if (represents_primitively(family_qic(1, cp), target)) {
            i64 arg = 4 - 3 * cp;
            i64 h = class_number(arg);
            out.terms.push_back({1, cp, arg, h, h});
            out.total += h;
        }
        if (represents_primitively(family_qic(2, cp), target)) {
            i64 arg = -3 * cp;
            i64 h = class_number(arg);
            i64 contribution = h;
            if (cp % 3 != 0) {
                if (h % 2 != 0)
                    throw MathError("halved class number h(" + std::to_string(arg) +
                                    ") is odd; locus formula misapplied");
                contribution = h / 2;
            }
            out.terms.push_back({2, cp, arg, h, contribution});
            out.total += contribution;
        }
    }
    return out;
}

i64 degree_form_disc(const TernaryForm& q) {
    if (!q.is_positive_definite()) throw MathError("form is not positive definite: " + q.str());
    if (represents(q, 1)) throw MathError("form represents 1, so it is not a Jacobian form");
    i64 d = q.discriminant();
    if (d % 16 != 0) throw MathError("discriminant of " + q.str() + " is not divisible by 16");
    return d / 16;
}

}  // namespace qf
