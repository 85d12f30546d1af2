// Batch verification front-end: one subcommand per suite, reports in
// JSON / CSV / text, deterministic output, optional on-disk basis cache.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "mui/suites.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    uint32_t p = 3;
    int n = 2;
    std::string family = "sl";
    std::string case_name;
    int maxdeg = -1; // suite-specific default when negative
    int jobs = 1;
    std::string cache_dir;
    std::string format = "json";
    std::string out;
    std::string golden_dir = "data/golden";
    bool gated = false;
};

mui::Family parse_family(const std::string& s) {
    if (s == "sl") return mui::Family::SLn;
    if (s == "gn") return mui::Family::Gn;
    if (s == "gnp") return mui::Family::GnPrime;
    throw std::invalid_argument("unknown family: " + s);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

json config_json(const std::string& suite, const RunConfig& cfg, int maxdeg) {
    json j;
    j["suite"] = suite;
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["family"] = cfg.family;
    j["case"] = cfg.case_name;
    j["max_deg"] = maxdeg;
    // execution parameters (jobs, cache directory) are deliberately not
    // echoed: reports must be byte-identical across them
    return j;
}

std::string render(const std::string& suite, const RunConfig& cfg, int maxdeg,
                   const std::vector<mui::CheckRow>& rows) {
    size_t passed = 0;
    for (const auto& r : rows) passed += r.pass ? 1 : 0;
    if (cfg.format == "json") {
        json j;
        j["suite"] = suite;
        j["config"] = config_json(suite, cfg, maxdeg);
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"degree", r.degree},
                           {"statement", r.statement},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"pass", r.pass},
                           {"paper_ref", r.ref}});
        j["rows"] = arr;
        j["summary"] = {{"total", rows.size()},
                        {"passed", passed},
                        {"failed", rows.size() - passed}};
        return j.dump(2) + "\n";
    }
    std::string s;
    if (cfg.format == "csv") {
        s = "degree,statement,expected,computed,pass,paper_ref\n";
        for (const auto& r : rows)
            s += std::to_string(r.degree) + "," + csv_quote(r.statement) + "," +
                 csv_quote(r.expected) + "," + csv_quote(r.computed) + "," +
                 (r.pass ? "true" : "false") + "," + csv_quote(r.ref) + "\n";
        return s;
    }
    if (cfg.format == "text") {
        for (const auto& r : rows) {
            s += r.pass ? "[ ok ] " : "[FAIL] ";
            if (r.degree >= 0) s += "d=" + std::to_string(r.degree) + " ";
            s += r.statement + "  expected " + r.expected + ", computed " +
                 r.computed + "  (" + r.ref + ")\n";
        }
        s += "summary: " + std::to_string(passed) + "/" +
             std::to_string(rows.size()) + " checks passed\n";
        return s;
    }
    throw std::invalid_argument("unknown format: " + cfg.format);
}

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write output file: " + cfg.out);
    f << body;
}

int run_verify(const std::string& suite, RunConfig cfg) {
    using namespace mui;
    Cache cache_store;
    const Cache* cache = nullptr;
    if (!cfg.cache_dir.empty()) {
        cache_store = Cache(cfg.cache_dir);
        cache = &cache_store;
    }
    auto dflt = [&](int d) { return cfg.maxdeg < 0 ? d : cfg.maxdeg; };

    std::vector<CheckRow> rows;
    int maxdeg = dflt(20);
    if (suite == "steenrod") {
        maxdeg = dflt(30);
        rows = suite_steenrod(cfg.p, cfg.n, maxdeg, 2, 300);
    } else if (suite == "division") {
        maxdeg = 0;
        rows = suite_division(cfg.p, cfg.n);
    } else if (suite == "lemma31") {
        maxdeg = 0;
        rows = suite_lemma31(parse_family(cfg.family), cfg.n, cfg.p);
    } else if (suite == "prop33") {
        rows = suite_prop33(parse_family(cfg.family), cfg.n, cfg.p, maxdeg, cache);
    } else if (suite == "prop34") {
        rows = suite_prop34(parse_family(cfg.family), cfg.n, cfg.p, maxdeg, cache);
    } else if (suite == "thm41") {
        rows = suite_thm41(parse_family(cfg.family), cfg.n, cfg.p, maxdeg, cache,
                           cfg.jobs);
    } else if (suite == "prop43") {
        if (cfg.case_name.empty()) throw std::invalid_argument("prop43 needs --case");
        rows = suite_prop43(cfg.case_name, maxdeg, cache);
    } else if (suite == "thm42-closure") {
        if (cfg.case_name.empty())
            throw std::invalid_argument("thm42-closure needs --case");
        rows = suite_closure(cfg.case_name, maxdeg);
    } else if (suite == "serre") {
        maxdeg = dflt(200);
        rows = suite_serre(cfg.case_name, maxdeg);
    } else if (suite == "weyl") {
        if (cfg.case_name.empty()) throw std::invalid_argument("weyl needs --case");
        maxdeg = dflt(40);
        rows = suite_weyl(cfg.case_name, maxdeg, cfg.golden_dir, cfg.gated,
                          cfg.jobs);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    emit(cfg, render(suite, cfg, maxdeg, rows));
    return all_pass(rows) ? 0 : 1;
}

int run_series(const RunConfig& cfg, const std::string& part) {
    using namespace mui;
    static const std::map<std::string, ModulePart> parts = {
        {"m0", ModulePart::M0},
        {"m1", ModulePart::M1},
        {"m0even", ModulePart::M0Even},
        {"m1even", ModulePart::M1Even},
        {"m0odd", ModulePart::M0Odd},
        {"m0even/ek", ModulePart::M0EvenModEk},
        {"m1even/ek", ModulePart::M1EvenModEk},
    };
    auto it = parts.find(part);
    if (it == parts.end()) throw std::invalid_argument("unknown part: " + part);
    if (cfg.case_name.empty()) throw std::invalid_argument("series needs --case");
    int D = cfg.maxdeg < 0 ? 40 : cfg.maxdeg;
    Poly s = series_M(case_by_name(cfg.case_name), it->second, size_t(D));
    std::string body;
    for (int d = 0; d <= D; ++d)
        body += std::to_string(d) + "," + std::to_string(s.at(size_t(d))) + "\n";
    emit(cfg, body);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the invariant-ring computations"};
    app.set_config("--config");
    RunConfig cfg;
    app.add_option("--p", cfg.p, "prime (3 or 5)");
    app.add_option("--n", cfg.n, "rank of the elementary abelian subgroup");
    app.add_option("--family", cfg.family, "matrix family: sl, gn, gnp");
    app.add_option("--case", cfg.case_name,
                   "case name: pu3, pu5, f4, e6, e7, e8 (weyl also: su3)");
    app.add_option("--max-deg", cfg.maxdeg, "top degree of the run");
    app.add_option("--jobs", cfg.jobs, "parallelism width");
    app.add_option("--cache-dir", cfg.cache_dir, "on-disk basis cache directory");
    app.add_option("--format", cfg.format, "report format: json, csv, text");
    app.add_option("--out", cfg.out, "output file (stdout when omitted)");
    app.add_option("--golden-dir", cfg.golden_dir, "directory of golden CSV tables");
    app.add_flag("--gated", cfg.gated, "run the gated heavy Weyl cases");

    std::string suite, part = "m0";
    CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
    verify->add_option("suite", suite,
                       "steenrod, division, lemma31, prop33, prop34, thm41, "
                       "prop43, thm42-closure, serre, weyl")
        ->required();
    CLI::App* series = app.add_subcommand("series", "print a module series");
    series->add_option("part", part, "m0, m1, m0even, m1even, m0odd, "
                                     "m0even/ek, m1even/ek");
    verify->fallthrough();
    series->fallthrough();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(suite, cfg);
        return run_series(cfg, part);
    } catch (const mui::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
