#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qf/cli.hpp"
#include "qf/sweep.hpp"
#include "qf/tables.hpp"

#include <json.hpp>

using namespace qf;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = qf::cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("reduced form enumeration finds the known families") {
    auto forms = enumerate_reduced_forms(320);
    auto has = [&](const TernaryForm& f) {
        return std::find(forms.begin(), forms.end(), f) != forms.end();
    };
    CHECK(has(family_qic(1, 4)));      // disc -128
    CHECK(has(diagonal_form(4, 4, 4)));
    CHECK(has(family_qic(2, 4)));      // disc -192
    CHECK(has(diagonal_form(1, 1, 1)));
    CHECK(has(diagonal_form(4, 4, 5)));  // disc -320
    for (const TernaryForm& f : forms) {
        i64 d = f.discriminant();
        CHECK((d < 0 ? -d : d) <= 320);
        // completeness margin of the enumeration bound
        CHECK(f.a * f.b * f.c <= (d < 0 ? -d : d));
    }
    // no duplicates
    std::set<TernaryForm> unique_forms(forms.begin(), forms.end());
    CHECK(unique_forms.size() == forms.size());
}

TEST_CASE("sweep caching is idempotent and parallel-degree independent") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qf_sweep_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path cache = dir / "cache.jsonl";

    SweepReport direct = sweep(300, "", 2);
    SweepReport first = sweep(300, cache.string(), 1);
    CHECK(first.from_cache == 0);
    std::string bytes_after_first = slurp(cache);

    SweepReport second = sweep(300, cache.string(), 3);
    CHECK(second.from_cache == second.total);
    CHECK(slurp(cache) == bytes_after_first);

    REQUIRE(direct.records.size() == second.records.size());
    for (size_t i = 0; i < direct.records.size(); ++i) {
        CHECK(direct.records[i].form == second.records[i].form);
        CHECK(direct.records[i].verdict == second.records[i].verdict);
        CHECK(direct.records[i].aut_plus == second.records[i].aut_plus);
    }

    // simulate an interrupted run: keep only a prefix of the cache
    {
        std::ifstream in(cache);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        std::ofstream out(cache, std::ios::trunc);
        for (size_t i = 0; i + 5 < lines.size(); ++i) out << lines[i] << '\n';
    }
    SweepReport resumed = sweep(300, cache.string(), 2);
    CHECK(resumed.from_cache == resumed.total - 5);
    CHECK(slurp(cache) == bytes_after_first);

    fs::remove_all(dir);
}

TEST_CASE("sweep finds exactly one GL2_3 and one C3semiD4 form up to disc 2000") {
    SweepReport rep = sweep(2000);
    std::vector<TernaryForm> big_groups;
    for (const SweepRecord& rec : rep.records) {
        if (!rec.group) continue;
        if (*rec.group == CurveGroup::GL2_3 || *rec.group == CurveGroup::C3semiD4)
            big_groups.push_back(rec.form);
    }
    CHECK(big_groups == std::vector<TernaryForm>{family_qic(2, 4), family_qic(1, 4)});
}

TEST_CASE("r_4 = 2 exactly for leading coefficient 4 with second coefficient bigger") {
    for (const SweepRecord& rec : sweep(700).records) {
        if (rec.verdict != Verdict::Yes || !rec.jacobian) continue;
        CAPTURE(rec.form.str());
        CHECK((rec.r4 == 2) == (rec.form.a == 4 && rec.form.b != 4));
    }
}

TEST_CASE("classified groups pair with their invariants as in the correspondence table") {
    for (const SweepRecord& rec : sweep(700).records) {
        if (!rec.group) continue;
        CAPTURE(rec.form.str());
        CHECK(group_order(*rec.group) == 2 * rec.a_value);
        CHECK(rec.a_value == std::max<i64>({1, rec.r4, 3 * rec.r4 - 12}));
        CHECK(rec.aut_plus % rec.a_value == 0);
    }
}

TEST_CASE("D6 and D4 subgroup criteria match the explicit lists on classified forms") {
    for (const SweepRecord& rec : sweep(700).records) {
        if (rec.verdict != Verdict::Yes || !rec.jacobian) continue;
        CAPTURE(rec.form.str());
        SubgroupCriteria sc = subgroup_criteria(rec.form);
        CHECK(sc.contains_d6 == in_d6_subgroup_list(rec.form));
        CHECK(sc.contains_d4 == in_d4_subgroup_list(rec.form));
    }
}

TEST_CASE("sweep record json round trip") {
    SweepRecord rec = classify_form(family_qic(1, 4));
    SweepRecord back = sweep_record_from_json(sweep_record_to_json(rec));
    CHECK(back.form == rec.form);
    CHECK(back.verdict == rec.verdict);
    CHECK(back.aut_plus == rec.aut_plus);
    CHECK(back.group == rec.group);
    CHECK(back.k.num == rec.k.num);
}

TEST_CASE("cli reduce and exit codes") {
    std::string out;
    CHECK(run_cli({"reduce", "[4,4,5,0,4,0]"}, &out) == 0);
    CHECK(out.find("[4,4,5,0,-4,0]") != std::string::npos);

    CHECK(run_cli({"reduce", "[4,4"}) == 2);
    CHECK(run_cli({"nonsense"}) == 2);
    CHECK(run_cli({"reduce", "[1,1,-1,0,0,0]"}) == 3);   // not positive definite
    CHECK(run_cli({"class-number", "-5"}) == 3);         // bad discriminant
    CHECK(run_cli({"classify", "[4,4,4,0,0,0]"}) == 3);  // not a Jacobian form
}

TEST_CASE("cli json output") {
    std::string out;
    REQUIRE(run_cli({"--json", "classify", "[4,4,4,4,4,4]"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("group") == "GL2_3");
    CHECK(j.at("a") == 24);
    CHECK(j.at("k") == 1);

    REQUIRE(run_cli({"--json", "intersect", "404", "5"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("members").size() == 2);

    REQUIRE(run_cli({"--json", "humbert-status", "[9,16,16,-16,0,0]"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("verdict") == "YES");
    CHECK(j.at("jacobian") == true);

    REQUIRE(run_cli({"--json", "d6-count", "3"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("total") == 6);

    // verified negative results exit 0 with structured output
    REQUIRE(run_cli({"--json", "humbert-status", "[4,4,4,0,0,0]"}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("verdict") == "NO");
}

TEST_CASE("cli text output for the documented examples") {
    std::string out;
    REQUIRE(run_cli({"intersect", "404", "5"}, &out) == 0);
    CHECK(out.find("[4,4,5,0,0,0]") != std::string::npos);
    CHECK(out.find("[4,4,5,0,-4,0]") != std::string::npos);

    REQUIRE(run_cli({"pair-intersect", "4", "5"}, &out) == 0);
    CHECK(out.find("[1,0,4]") != std::string::npos);
    CHECK(out.find("[4,0,5]") != std::string::npos);
    CHECK(out.find("[4,4,5]") != std::string::npos);

    REQUIRE(run_cli({"rep", "[4,4,4,0,0,-4]", "4"}, &out) == 0);
    CHECK(out.find("r_4 = 8") != std::string::npos);

    REQUIRE(run_cli({"certificate"}, &out) == 0);
    CHECK(out.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli sweep with cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qf_cli_sweep";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string cache = (dir / "cache.jsonl").string();
    std::string out;
    REQUIRE(run_cli({"--json", "sweep", "150", "--cache", cache, "--jobs", "2"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j.at("cached") == 0);
    i64 total = j.at("total");
    REQUIRE(run_cli({"--json", "sweep", "150", "--cache", cache}, &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j.at("cached") == total);
    fs::remove_all(dir);
}

TEST_CASE("tables regenerate deterministically") {
    namespace fs = std::filesystem;
    fs::path dir1 = fs::temp_directory_path() / "qf_tables_1";
    fs::path dir2 = fs::temp_directory_path() / "qf_tables_2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    auto paths1 = regenerate_tables(dir1.string());
    auto paths2 = regenerate_tables(dir2.string());
    REQUIRE(paths1.size() == 4);
    for (size_t i = 0; i < paths1.size(); ++i) CHECK(slurp(paths1[i]) == slurp(paths2[i]));
    std::string t3 = slurp(dir1 / "table3.txt");
    CHECK(t3.find("q_{1,c} | 6 | 6 | 1") != std::string::npos);
    std::string t2 = slurp(dir1 / "table2.txt");
    CHECK(t2.find("64(1-c)") != std::string::npos);
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}
