// Command-line front end: set analysis, theorem sweeps, lemma suites,
// divisor-sum scans, bias detection, rectifiability, extremal tables.
//
// Exit codes: 0 clean, 1 violations / failed assertion, 2 usage or parse
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cyc/classify.hpp"
#include "cyc/fourier.hpp"
#include "cyc/harness.hpp"
#include "cyc/rectify.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace cyc;

namespace {

constexpr int kSchemaVersion = 1;

struct Output {
    std::string format = "json";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream f(path);
            f << text << "\n";
        }
    }
    void write(const json& doc) const { write(doc.dump(2)); }
};

json doubling_json(const DoublingData& d) {
    return json{{"size", d.size},
                {"doubled_size", d.doubled_size},
                {"ratio", json{{"num", d.ratio.num}, {"den", d.ratio.den}}},
                {"delta", d.delta}};
}

json verdict_or_note(const WitnessSearch& ws) {
    json j{{"hypothesis_ok", ws.hypothesis_ok}};
    if (!ws.hypothesis_ok) j["hypothesis_note"] = ws.hypothesis_note;
    json all = json::array();
    for (const auto& w : ws.all) all.push_back(w.to_json());
    j["witnesses"] = all;
    j["best"] = ws.best ? ws.all[*ws.best].to_json() : json(nullptr);
    j["nontrivial_available"] = ws.has_nontrivial();
    return j;
}

json rectify_json(const RectifyVerdict& rv) {
    json j{{"rectifiable", rv.rectifiable}};
    if (rv.integer_model) j["integer_model"] = *rv.integer_model;
    if (rv.obstruction)
        j["obstruction"] = json{
            {"pair1", {rv.obstruction->first.first,
                       rv.obstruction->first.second}},
            {"pair2", {rv.obstruction->second.first,
                       rv.obstruction->second.second}}};
    return j;
}

json bias_json(const std::optional<BiasWitness>& w) {
    if (!w) return json(nullptr);
    return json{{"subgroup_order", w->subgroup.order},
                {"progression", json{{"start", w->progression.start},
                                     {"diff", w->progression.diff},
                                     {"length", w->progression.length}}},
                {"covered", w->covered.str()},
                {"coverage_ratio", w->coverage_ratio},
                {"character", w->character}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure analysis of small-doubling sets in Z_n"};
    app.require_subcommand(1);

    Output out;
    std::string set_literal;
    std::string mode = "main";
    u64 const_c = 0, const_c0 = 0;
    u64 min_index = 37;
    double coeff = 0.8, coverage = 0.9;
    u64 n_max = 0, trials = 0, seed = 20250826;
    int threads = 0;
    std::string suite;
    u64 from = 92400, to = 200475;
    u64 group = 0, size_min = 1, size_max = 0;

    app.add_option("--format", out.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out.path, "output file (default stdout)");

    auto add_consts = [&](CLI::App* c) {
        c->add_option("--const-c", const_c, "dense-coset constant C");
        c->add_option("--const-c0", const_c0, "increment constant C0");
    };

    auto* an = app.add_subcommand("analyze", "full report for one set");
    an->add_option("--set", set_literal)->required();
    an->add_option("--mode", mode)->check(CLI::IsMember({"main", "aux"}));
    add_consts(an);
    an->add_option("--min-index", min_index);
    an->add_option("--coeff", coeff);
    an->add_option("--coverage", coverage);

    auto* sw = app.add_subcommand("sweep", "exhaustive theorem sweep");
    sw->add_option("--n-max", n_max)->required();
    sw->add_option("--mode", mode)->check(CLI::IsMember({"main", "aux"}));
    sw->add_option("--threads", threads);
    add_consts(sw);

    auto* lm = app.add_subcommand("lemmas", "lemma verification suite");
    lm->add_option("--suite", suite)->required();
    lm->add_option("--n-max", n_max);
    lm->add_option("--trials", trials);
    lm->add_option("--seed", seed);
    lm->add_option("--threads", threads);

    auto* ph = app.add_subcommand("phi-scan", "divisor-sum density scan");
    ph->add_option("--from", from, "exclusive lower end");
    ph->add_option("--to", to, "inclusive upper end");

    auto* bi = app.add_subcommand("bias", "character concentration witness");
    bi->add_option("--set", set_literal)->required();
    bi->add_option("--min-index", min_index);
    bi->add_option("--coeff", coeff);
    bi->add_option("--coverage", coverage);

    auto* rc = app.add_subcommand("rectify", "exact rectifiability decision");
    rc->add_option("--set", set_literal)->required();

    auto* ex = app.add_subcommand("extremal", "minimal doubling per size");
    ex->add_option("--group,-n", group)->required();
    ex->add_option("--size-min", size_min);
    ex->add_option("--size-max", size_max);

    // Let --format/--out be given after a subcommand name as well.
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ClassifyConstants consts;
    if (const_c) consts.dense_c = const_c;
    if (const_c0) consts.aux_c0 = const_c0;
    if (const_c && const_c0 && 4 * const_c != 5 * const_c0) {
        std::cerr << "error: constants must satisfy 4C = 5C0 "
                     "(got C=" << const_c << ", C0=" << const_c0 << ")\n";
        return 2;
    }
    ClassifyMode cmode =
        mode == "aux" ? ClassifyMode::Aux : ClassifyMode::Main;

    try {
        if (an->parsed()) {
            CyclicSet a = CyclicSet::parse(set_literal);
            json doc{{"schema_version", kSchemaVersion},
                     {"op", "analyze"},
                     {"set", a.str()},
                     {"mode", mode}};
            doc["doubling"] = doubling_json(doubling(a));
            doc["vsds"] = is_vsds(a).to_json();
            WitnessSearch ws = find_witness(a, consts, cmode);
            doc["witness_search"] = verdict_or_note(ws);
            if (a.size() <= 12)
                doc["rectifiability"] = rectify_json(is_rectifiable(a));
            if (a.modulus() <= 4096)
                doc["bias"] = bias_json(
                    bias_detect(a, BiasParams{min_index, coeff, coverage}));
            out.write(doc);
            return 0;
        }
        if (sw->parsed()) {
            if (n_max > 24) {
                std::cerr << "error: sweep bound is n <= 24; use analyze "
                             "for individual large-n sets\n";
                return 2;
            }
            SweepReport rep =
                sweep_theorem(SweepConfig{n_max, cmode, consts, threads});
            json doc = rep.to_json();
            doc["schema_version"] = kSchemaVersion;
            out.write(doc);
            return rep.ok() ? 0 : 1;
        }
        if (lm->parsed()) {
            SweepReport rep = lemma_suite(
                SuiteConfig{suite, n_max, trials, seed, threads});
            json doc = rep.to_json();
            doc["schema_version"] = kSchemaVersion;
            out.write(doc);
            return rep.ok() ? 0 : 1;
        }
        if (ph->parsed()) {
            std::ostringstream csv;
            bool want_csv = out.format == "csv";
            if (want_csv) csv << "n,phi_num,phi_den,ok\n";
            PhiScanReport rep = phi_scan(
                from, to, Rat(4, 2025), [&](const PhiScanRow& row) {
                    if (want_csv)
                        csv << row.n << ',' << row.phi_num << ','
                            << row.phi_den << ',' << (row.ok ? 1 : 0) << '\n';
                });
            if (want_csv) {
                out.write(csv.str());
            } else {
                out.write(json{{"schema_version", kSchemaVersion},
                               {"op", "phi-scan"},
                               {"from", rep.lo},
                               {"to", rep.hi},
                               {"eps",
                                json{{"num", rep.eps.num},
                                     {"den", rep.eps.den}}},
                               {"checked", rep.checked},
                               {"violations", rep.violations}});
            }
            return rep.violations.empty() ? 0 : 1;
        }
        if (bi->parsed()) {
            CyclicSet a = CyclicSet::parse(set_literal);
            auto w = bias_detect(a, BiasParams{min_index, coeff, coverage});
            out.write(json{{"schema_version", kSchemaVersion},
                           {"op", "bias"},
                           {"set", a.str()},
                           {"witness", bias_json(w)}});
            return 0;
        }
        if (rc->parsed()) {
            CyclicSet a = CyclicSet::parse(set_literal);
            RectifyVerdict rv = is_rectifiable(a);
            json doc{{"schema_version", kSchemaVersion},
                     {"op", "rectify"},
                     {"set", a.str()}};
            doc["verdict"] = rectify_json(rv);
            auto iv = interval_rectify(a);
            doc["interval"] =
                iv ? json{{"unit", iv->unit}, {"shift", iv->shift}}
                   : json(nullptr);
            out.write(doc);
            return 0;
        }
        if (ex->parsed()) {
            if (size_max == 0) size_max = group;
            auto rows = extremal_scan(group, size_min, size_max);
            if (out.format == "csv") {
                std::ostringstream csv;
                csv << "size,min_doubling,attaining\n";
                for (const auto& r : rows)
                    csv << r.size << ',' << r.min_doubling << ','
                        << r.attaining.str() << '\n';
                out.write(csv.str());
            } else {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back(json{{"size", r.size},
                                       {"min_doubling", r.min_doubling},
                                       {"attaining", r.attaining.str()}});
                out.write(json{{"schema_version", kSchemaVersion},
                               {"op", "extremal"},
                               {"modulus", group},
                               {"rows", arr}});
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
