#pragma once

#include <map>

#include "qf/classify.hpp"
#include "qf/forms.hpp"

namespace qf {

// All Eisenstein reduced Dickson-sense forms with |disc| <= max_abs_disc,
// in deterministic (a,b,c,r,s,t) order. Complete: reduced forms satisfy
// a*b*c <= |disc|/2.
std::vector<TernaryForm> enumerate_reduced_forms(i64 max_abs_disc);

// All Eisenstein reduced Dickson-sense forms with a <= b <= c <= diag_max.
std::vector<TernaryForm> enumerate_reduced_forms_by_diag(i64 diag_max);

struct SweepRecord {
    TernaryForm form;
    Verdict verdict = Verdict::Unknown;
    bool jacobian = false;
    std::string path;
    i64 r4 = 0;
    i64 a_value = 0;
    i64 aut_plus = 0;
    Rational k;
    std::optional<CurveGroup> group;  // present for certified Jacobian forms
};

SweepRecord classify_form(const TernaryForm& form);

struct SweepReport {
    std::vector<SweepRecord> records;
    i64 total = 0;
    i64 yes = 0, no = 0, unknown = 0;
    i64 from_cache = 0;
    std::map<std::string, i64> group_counts;
};

// Classifies every reduced form with |disc| <= max_disc. Results are
// appended to a JSON-lines cache when a path is given; cached entries are
// reused, so an interrupted sweep resumes to the same final cache. The
// record order (and cache bytes) do not depend on the number of jobs.
SweepReport sweep(i64 max_disc, const std::string& cache_path = "", int jobs = 0);

std::string sweep_record_to_json(const SweepRecord& rec);
SweepRecord sweep_record_from_json(const std::string& line);

}  // namespace qf
