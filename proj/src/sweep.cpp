#include "qf/sweep.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

#include "qf/automorphs.hpp"
#include "qf/reduction.hpp"
#include "qf/representations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf {

namespace {

bool reduced_quiet(const TernaryForm& f) {
    return f.is_positive_definite() && is_eisenstein_reduced(f);
}

}  // namespace

std::vector<TernaryForm> enumerate_reduced_forms(i64 max_abs_disc) {
    if (max_abs_disc < 1) throw MathError("discriminant bound must be positive");
    // reduced forms satisfy a*b*c <= |disc|/2; scan with a factor-4 margin
    i64 lim = chk_mul(2, max_abs_disc);
    std::vector<TernaryForm> out;
    for (i64 a = 1; a * a * a <= lim; ++a)
        for (i64 b = a; a * b * b <= lim; ++b)
            for (i64 c = b; a * b * c <= lim; ++c)
                for (i64 r2 = -b / 2; r2 <= b / 2; ++r2)
                    for (i64 s2 = -a / 2; s2 <= a / 2; ++s2)
                        for (i64 t2 = -a / 2; t2 <= a / 2; ++t2) {
                            TernaryForm f{a, b, c, 2 * r2, 2 * s2, 2 * t2};
                            if (!reduced_quiet(f)) continue;
                            i64 d = f.discriminant();
                            if ((d < 0 ? -d : d) <= max_abs_disc) out.push_back(f);
                        }
    return out;
}

std::vector<TernaryForm> enumerate_reduced_forms_by_diag(i64 diag_max) {
    std::vector<TernaryForm> out;
    for (i64 a = 1; a <= diag_max; ++a)
        for (i64 b = a; b <= diag_max; ++b)
            for (i64 c = b; c <= diag_max; ++c)
                for (i64 r2 = -b / 2; r2 <= b / 2; ++r2)
                    for (i64 s2 = -a / 2; s2 <= a / 2; ++s2)
                        for (i64 t2 = -a / 2; t2 <= a / 2; ++t2) {
                            TernaryForm f{a, b, c, 2 * r2, 2 * s2, 2 * t2};
                            if (reduced_quiet(f)) out.push_back(f);
                        }
    return out;
}

SweepRecord classify_form(const TernaryForm& form) {
    SweepRecord rec;
    rec.form = form;
    HumbertStatus st = refined_humbert_status(form);
    rec.verdict = st.verdict;
    rec.jacobian = st.jacobian;
    rec.path = st.path;
    rec.r4 = representation_count(form, 4);
    rec.a_value = std::max<i64>({1, rec.r4, 3 * rec.r4 - 12});
    rec.aut_plus = proper_automorphism_count(form);
    i64 g = std::gcd(rec.aut_plus, rec.a_value);
    rec.k = Rational{rec.aut_plus / g, rec.a_value / g};
    if (st.verdict == Verdict::Yes && st.jacobian) {
        switch (rec.r4) {
            case 0: case 2: case 4: case 6: case 8: case 12:
                rec.group = group_from_r4(rec.r4);
                break;
            default:
                break;  // left absent; the property suites flag this
        }
    }
    return rec;
}

std::string sweep_record_to_json(const SweepRecord& rec) {
    nlohmann::json j;
    j["form"] = {rec.form.a, rec.form.b, rec.form.c, rec.form.r, rec.form.s, rec.form.t};
    j["status"] = to_string(rec.verdict);
    j["jacobian"] = rec.jacobian;
    j["path"] = rec.path;
    j["r4"] = rec.r4;
    j["a"] = rec.a_value;
    j["aut_plus"] = rec.aut_plus;
    j["k"] = rec.k.str();
    j["group"] = rec.group ? to_string(*rec.group) : "";
    return j.dump();
}

SweepRecord sweep_record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SweepRecord rec;
    auto f = j.at("form");
    rec.form = TernaryForm{f.at(0), f.at(1), f.at(2), f.at(3), f.at(4), f.at(5)};
    std::string status = j.at("status");
    rec.verdict = status == "YES" ? Verdict::Yes : status == "NO" ? Verdict::No : Verdict::Unknown;
    rec.jacobian = j.at("jacobian");
    rec.path = j.value("path", "");
    rec.r4 = j.at("r4");
    rec.a_value = j.at("a");
    rec.aut_plus = j.at("aut_plus");
    std::string k = j.at("k");
    auto slash = k.find('/');
    if (slash == std::string::npos)
        rec.k = Rational{std::stoll(k), 1};
    else
        rec.k = Rational{std::stoll(k.substr(0, slash)), std::stoll(k.substr(slash + 1))};
    std::string group = j.value("group", "");
    if (!group.empty()) {
        for (CurveGroup g : {CurveGroup::C2, CurveGroup::C2xC2, CurveGroup::D4, CurveGroup::D6,
                             CurveGroup::C3semiD4, CurveGroup::GL2_3})
            if (to_string(g) == group) rec.group = g;
    }
    return rec;
}

SweepReport sweep(i64 max_disc, const std::string& cache_path, int jobs) {
    if (max_disc <= 0) throw MathError("discriminant bound must be positive");
    std::vector<TernaryForm> forms = enumerate_reduced_forms(max_disc);

    std::map<TernaryForm, SweepRecord> cached;
    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty()) continue;
            SweepRecord rec = sweep_record_from_json(line);
            cached.emplace(rec.form, rec);
        }
    }

    SweepReport report;
    report.total = static_cast<i64>(forms.size());
    report.records.resize(forms.size());

    std::vector<int> missing;
    for (size_t i = 0; i < forms.size(); ++i) {
        auto it = cached.find(forms[i]);
        if (it != cached.end()) {
            report.records[i] = it->second;
            ++report.from_cache;
        } else {
            missing.push_back(static_cast<int>(i));
        }
    }

    // Chunked processing with a single writer appending completed chunks, so
    // an interrupted run leaves a prefix that a re-run extends to the same
    // final cache.
    const i64 chunk = 64;
    std::ofstream cache_out;
    if (!cache_path.empty() && !missing.empty()) {
        cache_out.open(cache_path, std::ios::app);
        if (!cache_out) throw MathError("cannot append to cache: " + cache_path);
    }
    for (i64 start = 0; start < static_cast<i64>(missing.size()); start += chunk) {
        i64 stop = std::min<i64>(start + chunk, static_cast<i64>(missing.size()));
#ifdef _OPENMP
        if (jobs > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
            for (i64 mi = start; mi < stop; ++mi)
                report.records[missing[mi]] = classify_form(forms[missing[mi]]);
        } else {
#pragma omp parallel for schedule(dynamic)
            for (i64 mi = start; mi < stop; ++mi)
                report.records[missing[mi]] = classify_form(forms[missing[mi]]);
        }
#else
        (void)jobs;
        for (i64 mi = start; mi < stop; ++mi)
            report.records[missing[mi]] = classify_form(forms[missing[mi]]);
#endif
        if (cache_out.is_open()) {
            for (i64 mi = start; mi < stop; ++mi)
                cache_out << sweep_record_to_json(report.records[missing[mi]]) << '\n';
            cache_out.flush();
        }
    }

    for (const SweepRecord& rec : report.records) {
        if (rec.verdict == Verdict::Yes) ++report.yes;
        if (rec.verdict == Verdict::No) ++report.no;
        if (rec.verdict == Verdict::Unknown) ++report.unknown;
        if (rec.group) ++report.group_counts[to_string(*rec.group)];
    }
    return report;
}

}  // namespace qf
