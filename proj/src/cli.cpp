#include "qf/cli.hpp"

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qf/automorphs.hpp"
#include "qf/classify.hpp"
#include "qf/genus.hpp"
#include "qf/intersections.hpp"
#include "qf/reduction.hpp"
#include "qf/representations.hpp"
#include "qf/subcovers.hpp"
#include "qf/sweep.hpp"
#include "qf/tables.hpp"

namespace qf::cli {

namespace {

using nlohmann::json;

json form_json(const TernaryForm& f) { return json::array({f.a, f.b, f.c, f.r, f.s, f.t}); }
json form_json(const BinaryForm& f) { return json::array({f.a, f.t, f.b}); }
json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json mat_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(json::array({m.m[i][0], m.m[i][1], m.m[i][2]}));
    return rows;
}

json mat_json(const Mat2& m) {
    return json::array({json::array({m.m[0][0], m.m[0][1]}), json::array({m.m[1][0], m.m[1][1]})});
}

struct Options {
    bool json_output = false;
    bool primitive_only = false;
    i64 limit = 0;
    int jobs = 0;
    std::string cache;
    std::string out_dir;
};

void emit(const Options& opt, std::ostream& os, const json& payload,
          const std::string& text) {
    if (opt.json_output)
        os << payload.dump() << "\n";
    else
        os << text;
}

int dispatch(const std::string& cmd, const std::vector<std::string>& pos, const Options& opt,
             std::ostream& out) {
    std::ostringstream text;
    json payload;

    if (cmd == "reduce") {
        ParsedForm pf = parse_form(pos.at(0));
        if (pf.ternary) {
            TernaryReduction red = reduce_ternary(*pf.ternary);
            payload = {{"reduced", form_json(red.reduced)}, {"transform", mat_json(red.transform)}};
            text << "reduced: " << red.reduced.str() << "\ntransform: " << to_string(red.transform)
                 << "\n";
        } else {
            BinaryReduction red = reduce_binary(*pf.binary);
            payload = {{"reduced", form_json(red.reduced)}, {"transform", mat_json(red.transform)}};
            text << "reduced: " << red.reduced.str() << "\n";
        }
    } else if (cmd == "equiv") {
        ParsedForm f1 = parse_form(pos.at(0));
        ParsedForm f2 = parse_form(pos.at(1));
        if (f1.ternary && f2.ternary) {
            auto w = equivalent(*f1.ternary, *f2.ternary);
            payload = {{"equivalent", w.has_value()}};
            if (w) payload["witness"] = mat_json(*w);
            text << (w ? "equivalent, witness " + to_string(*w) : "not equivalent") << "\n";
        } else if (f1.binary && f2.binary) {
            auto w = equivalent(*f1.binary, *f2.binary);
            payload = {{"equivalent", w.has_value()}};
            if (w) payload["witness"] = mat_json(*w);
            text << (w ? "equivalent" : "not equivalent") << "\n";
        } else {
            throw ParseError("equiv needs two forms of the same arity");
        }
    } else if (cmd == "aut") {
        TernaryForm f = parse_ternary(pos.at(0));
        AutomorphGroup g = automorphisms(f);
        payload = {{"order", g.elements.size()}, {"proper_order", g.proper_count}};
        text << "|Aut| = " << g.elements.size() << ", |Aut+| = " << g.proper_count << "\n";
        if (f.is_dickson() && is_eisenstein_reduced(f)) {
            if (auto pred = predicted_proper_order(f); pred) {
                payload["predicted_proper_order"] = *pred;
                text << "pattern prediction: " << *pred << "\n";
            }
        }
    } else if (cmd == "rep") {
        ParsedForm pf = parse_form(pos.at(0));
        i64 n = std::stoll(pos.at(1));
        const char* label = opt.primitive_only ? "primitive r_" : "r_";
        if (pf.ternary) {
            RepresentationSet rs = representations(*pf.ternary, n, opt.primitive_only);
            payload = {{"n", n},
                       {"count", rs.vectors.size()},
                       {"primitive_count", rs.primitive_vectors.size()}};
            json vecs = json::array();
            for (const Vec3& v : rs.vectors) vecs.push_back(vec_json(v));
            payload["vectors"] = vecs;
            text << label << n << " = " << rs.vectors.size() << "\n";
            for (const Vec3& v : rs.vectors) text << "  " << to_string(v) << "\n";
        } else {
            RepresentationSet2 rs = representations(*pf.binary, n, opt.primitive_only);
            payload = {{"n", n},
                       {"count", rs.vectors.size()},
                       {"primitive_count", rs.primitive_vectors.size()}};
            text << label << n << " = " << rs.vectors.size() << "\n";
        }
    } else if (cmd == "classify") {
        TernaryForm f = parse_ternary(pos.at(0));
        CurveClassification cc = curve_classification(f);
        payload = {{"group", to_string(cc.group)},
                   {"a", cc.a_value},
                   {"r4", cc.r4},
                   {"aut_plus", cc.proper_aut_order}};
        payload["k"] = cc.k.den == 1 ? json(cc.k.num) : json(cc.k.str());
        if (cc.list_tag) payload["list"] = *cc.list_tag;
        text << "Aut(C) = " << to_string(cc.group) << ", a = " << cc.a_value << ", r4 = " << cc.r4
             << ", |Aut+| = " << cc.proper_aut_order << ", k = " << cc.k.str() << "\n";
        if (cc.list_tag) text << "list: " << *cc.list_tag << "\n";
    } else if (cmd == "genus") {
        TernaryForm f = parse_ternary(pos.at(0));
        GenusData gd = genus_data(f);
        json chars = json::array();
        for (const auto& chi : gd.characters) chars.push_back(chi.str());
        payload = {{"abs_I1", gd.abs_I1},
                   {"I2", gd.I2},
                   {"disc", f.discriminant()},
                   {"adjoint", form_json(gd.adjoint)},
                   {"reciprocal", form_json(gd.reciprocal)},
                   {"characters", chars}};
        text << "|I1| = " << gd.abs_I1 << ", I2 = " << gd.I2 << ", disc = " << f.discriminant()
             << "\nadjoint: " << gd.adjoint.str() << "\nreciprocal: " << gd.reciprocal.str()
             << "\ncharacters:";
        for (const auto& chi : gd.characters) text << " " << chi.str();
        text << "\n";
    } else if (cmd == "humbert-status") {
        TernaryForm f = parse_ternary(pos.at(0));
        HumbertStatus st =
            opt.limit > 0 ? refined_humbert_status(f, opt.limit) : refined_humbert_status(f);
        payload = {{"verdict", to_string(st.verdict)},
                   {"jacobian", st.jacobian},
                   {"path", st.path},
                   {"detail", st.detail}};
        text << to_string(st.verdict) << " (" << st.path << "): " << st.detail
             << (st.jacobian ? " [Jacobian]" : "") << "\n";
    } else if (cmd == "intersect") {
        const std::string& base = pos.at(0);
        if (base != "444" && base != "404") throw ParseError("base must be 444 or 404");
        i64 c = std::stoll(pos.at(1));
        auto members = intersect_with_humbert(
            base == "444" ? HumbertBase::F444 : HumbertBase::F404, c);
        json arr = json::array();
        for (const TernaryForm& f : members) arr.push_back(form_json(f));
        payload = {{"base", base}, {"c", c}, {"members", arr}};
        text << "H*(" << (base == "444" ? "[4,4,4]" : "[4,0,4]") << ")_cap_H_" << c << ":\n";
        for (const TernaryForm& f : members) text << "  " << f.str() << "\n";
    } else if (cmd == "pair-intersect") {
        i64 n = std::stoll(pos.at(0)), m = std::stoll(pos.at(1));
        PairIntersection pi = humbert_pair_intersection(n, m, opt.limit);
        json arr = json::array(), unk = json::array();
        for (const BinaryForm& f : pi.members) arr.push_back(form_json(f));
        for (const BinaryForm& f : pi.filtered_unknown) unk.push_back(form_json(f));
        payload = {{"n", n}, {"m", m}, {"members", arr}, {"filtered_unknown", unk}};
        text << "H_" << n << " cap H_" << m << ":\n";
        for (const BinaryForm& f : pi.members) text << "  " << f.str() << "\n";
        for (const BinaryForm& f : pi.filtered_unknown)
            text << "  " << f.str() << " (filtered-unknown: no represented square found)\n";
    } else if (cmd == "subcovers") {
        TernaryForm f = parse_ternary(pos.at(0));
        i64 n = std::stoll(pos.at(1));
        SubcoverReport rep = subcovers(f, n);
        payload = {{"degree", rep.degree}, {"exists", rep.exists}, {"count", rep.count}};
        text << "degree " << n << ": " << (rep.exists ? "exists" : "none") << ", count "
             << rep.count << "\n";
    } else if (cmd == "class-number") {
        i64 d = std::stoll(pos.at(0));
        i64 h = class_number(d);
        payload = {{"d", d}, {"h", h}};
        text << "h(" << d << ") = " << h << "\n";
    } else if (cmd == "d6-count") {
        i64 m = std::stoll(pos.at(0));
        D6LocusCount dc = d6_locus_count(m);
        json terms = json::array();
        for (const D6LocusTerm& term : dc.terms)
            terms.push_back({{"family", term.family},
                             {"cprime", term.cprime},
                             {"disc", term.disc_arg},
                             {"h", term.h},
                             {"contribution", term.contribution}});
        payload = {{"m", m}, {"total", dc.total}, {"terms", terms}};
        text << "|H(D6," << m << ")| = " << dc.total << "\n";
        for (const D6LocusTerm& term : dc.terms)
            text << "  q_{" << term.family << "," << term.cprime << "}: h(" << term.disc_arg
                 << ") = " << term.h << " contributes " << term.contribution << "\n";
    } else if (cmd == "certificate") {
        CertificateReport rep = empty_intersection_certificate();
        json checks = json::array();
        for (const std::string& line : rep.checks) checks.push_back(line);
        payload = {{"all_passed", rep.all_passed}, {"checks", checks}};
        for (const std::string& line : rep.checks) text << line << "\n";
        text << (rep.all_passed ? "all checks passed\n" : "FAILED\n");
    } else if (cmd == "tables") {
        auto paths = regenerate_tables(opt.out_dir.empty() ? "." : opt.out_dir);
        json arr = json::array();
        for (const std::string& p : paths) arr.push_back(p);
        payload = {{"files", arr}};
        for (const std::string& p : paths) text << p << "\n";
    } else if (cmd == "sweep") {
        i64 max_disc = std::stoll(pos.at(0));
        SweepReport rep = sweep(max_disc, opt.cache, opt.jobs);
        json groups;
        for (const auto& [g, n] : rep.group_counts) groups[g] = n;
        payload = {{"total", rep.total},   {"yes", rep.yes},
                   {"no", rep.no},         {"unknown", rep.unknown},
                   {"cached", rep.from_cache}, {"groups", groups}};
        text << "forms: " << rep.total << " (yes " << rep.yes << ", no " << rep.no << ", unknown "
             << rep.unknown << ", cached " << rep.from_cache << ")\n";
        for (const auto& [g, n] : rep.group_counts) text << "  " << g << ": " << n << "\n";
    } else {
        throw ParseError("unknown command: " + cmd);
    }

    emit(opt, out, payload, text.str());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for positive definite binary and ternary quadratic forms",
                 "qform"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* target) {
        target->add_flag("--json", opt.json_output, "emit JSON instead of text");
        target->add_flag("--primitive", opt.primitive_only,
                         "restrict rep output to primitive vectors");
        target->add_option("--limit", opt.limit, "search limit override");
        target->add_option("--jobs", opt.jobs, "parallelism degree for sweeps");
        target->add_option("--cache", opt.cache, "JSON-lines result cache path");
        target->add_option("--out", opt.out_dir, "output directory for tables");
    };
    add_common(&app);

    struct Sub {
        const char* name;
        const char* desc;
        int arity;
    };
    const std::vector<Sub> subs = {
        {"reduce", "canonical reduced form with transform", 1},
        {"equiv", "equivalence test with witness", 2},
        {"aut", "automorphism group orders", 1},
        {"rep", "representations of an integer", 2},
        {"classify", "curve group classification of a Jacobian form", 1},
        {"genus", "genus invariants, adjoint, reciprocal, characters", 1},
        {"humbert-status", "refined Humbert membership decision", 1},
        {"intersect", "H*(base) cap H_c member forms (base 444 or 404)", 2},
        {"pair-intersect", "binary forms of H_n cap H_m", 2},
        {"subcovers", "elliptic subcovers of given degree", 2},
        {"class-number", "class number of a negative discriminant", 1},
        {"d6-count", "D6 locus count with class-number terms", 1},
        {"certificate", "replay the empty-intersection certificate", 0},
        {"tables", "regenerate the classification tables", 0},
        {"sweep", "classify all reduced forms up to a discriminant bound", 1},
    };
    std::map<std::string, int> arity;
    for (const Sub& sub : subs) {
        CLI::App* s = app.add_subcommand(sub.name, sub.desc);
        // form literals carry commas and brackets; keep them away from the
        // option parser and collect them raw
        s->allow_extras();
        add_common(s);
        arity[sub.name] = sub.arity;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CLI::App* chosen = app.get_subcommands().at(0);
        std::vector<std::string> positional = chosen->remaining();
        if (static_cast<int>(positional.size()) != arity[chosen->get_name()])
            throw ParseError(chosen->get_name() + " expects " +
                             std::to_string(arity[chosen->get_name()]) + " argument(s), got " +
                             std::to_string(positional.size()));
        return dispatch(chosen->get_name(), positional, opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: bad integer argument (" << e.what() << ")\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: argument out of range (" << e.what() << ")\n";
        return 2;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace qf::cli
