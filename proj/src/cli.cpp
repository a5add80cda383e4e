#include "yzq/cli.hpp"

#include "yzq/bps_solver.hpp"
#include "yzq/harvey_moore.hpp"
#include "yzq/mirror_symmetry.hpp"
#include "yzq/modular_forms.hpp"
#include "yzq/noether_lefschetz.hpp"
#include "yzq/series_io.hpp"
#include "yzq/weakly_holomorphic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

namespace yzq {

namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

// A flat table: every cell is text, `numeric` columns are written to JSON as
// numbers and the rest as strings.
struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<bool> numeric;
    std::vector<std::vector<std::string>> rows;
    Json meta = Json::object();
    std::vector<std::string> footer;  // text-only trailing lines
};

void emit(const Table& t, OutputFormat format, std::ostream& out)
{
    switch (format) {
    case OutputFormat::json: {
        Json j;
        j["table"] = t.title;
        for (const auto& [k, v] : t.meta.items()) {
            j[k] = v;
        }
        Json rows = Json::array();
        for (const auto& r : t.rows) {
            Json row;
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                if (t.numeric[c]) {
                    row[t.columns[c]] = std::stol(r[c]);
                } else {
                    row[t.columns[c]] = r[c];
                }
            }
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out << (c ? "," : "") << t.columns[c];
        }
        out << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << (c ? "," : "") << r[c];
            }
            out << "\n";
        }
        break;
    case OutputFormat::text:
        out << "# " << t.title << "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out << (c ? "  " : "") << t.columns[c];
        }
        out << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << (c ? "  " : "") << r[c];
            }
            out << "\n";
        }
        for (const auto& line : t.footer) {
            out << line << "\n";
        }
        break;
    }
}

// "a" or "a:b" (inclusive).
std::pair<int, int> parse_range(const std::string& text, const char* flag)
{
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {v, v};
        }
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) {
            throw std::invalid_argument(text);
        }
        const int hi = std::stoi(b, &used);
        if (used != b.size() || hi < lo) {
            throw std::invalid_argument(text);
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw std::invalid_argument(std::string("--") + flag + ": expected an integer or a range lo:hi, got '" + text
                                    + "'");
    }
}

std::filesystem::path cache_root(const RunConfig& cfg)
{
    if (!cfg.cache_dir.empty()) {
        return cfg.cache_dir;
    }
    if (const char* env = std::getenv("YZQ_CACHE_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return {};
}

// Cache file: "order N" on the first line, then the series text. A file whose
// order is too small or that does not parse is recomputed and overwritten.
LaurentSeries load_form(const std::string& name, int order, const RunConfig& cfg, std::ostream& err)
{
    const std::filesystem::path root = cache_root(cfg);
    if (root.empty()) {
        return named_form(name, order);
    }
    const std::filesystem::path file = root / (name + ".series");
    if (std::ifstream in(file); in) {
        std::string tag;
        int stored = 0;
        if (in >> tag >> stored && tag == "order" && stored >= order) {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            try {
                const LaurentSeries s = read_series(in);
                if (s.truncation() >= order) {
                    if (cfg.verbosity > 0) {
                        err << "cache hit: " << file.string() << "\n";
                    }
                    return s.truncated(order);
                }
            } catch (const std::exception&) {
            }
        }
        if (cfg.verbosity > 0) {
            err << "cache stale: " << file.string() << "\n";
        }
    }
    const LaurentSeries s = named_form(name, order);
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (std::ofstream o(file); o) {
        o << "order " << order << "\n";
        write_series(o, s);
    } else if (cfg.verbosity > 0) {
        err << "cache not writable: " << file.string() << "\n";
    }
    return s;
}

int cmd_modform(const RunConfig& cfg, const std::string& name, int order, std::ostream& out, std::ostream& err)
{
    const auto& names = form_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        err << "unknown form '" << name << "'; known:";
        for (const auto& n : names) {
            err << " " << n;
        }
        err << "\n";
        return kExitUsage;
    }
    const LaurentSeries s = load_form(name, order, cfg, err);
    const int lo = s.is_zero() ? 0 : std::min(s.valuation(), 0);
    switch (cfg.format) {
    case OutputFormat::json: {
        Json j;
        j["form"] = name;
        j["order"] = order;
        Json coeffs = Json::array();
        for (int n = lo; n < order; ++n) {
            coeffs.push_back(Json{{"exponent", n}, {"value", to_string(s.coeff(n))}});
        }
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        out << "exponent,value\n";
        for (int n = lo; n < order; ++n) {
            out << n << "," << to_string(s.coeff(n)) << "\n";
        }
        break;
    case OutputFormat::text:
        for (int n = lo; n < order; ++n) {
            out << (n > lo ? ", " : "") << "q^" << n << ": " << to_string(s.coeff(n));
        }
        out << "\n";
        break;
    }
    return kExitOk;
}

struct KeyRanges {
    std::string h, d1, d2, m;
};

int cmd_nl(const RunConfig& cfg, const KeyRanges& k, bool refined, std::ostream& out, std::ostream& err)
{
    const auto [h_lo, h_hi] = parse_range(k.h, "h");
    const auto [a_lo, a_hi] = parse_range(k.d1, "d1");
    const auto [b_lo, b_hi] = parse_range(k.d2, "d2");
    std::pair<int, int> m_range{1, 1};
    if (refined) {
        m_range = parse_range(k.m, "m");
        if (m_range.first < 1) {
            err << "--m must be at least 1\n";
            return kExitUsage;
        }
    }
    const bool single_class = a_lo == a_hi && b_lo == b_hi;
    if (refined && single_class && a_lo == 0 && b_lo == 0) {
        err << "refined numbers are undefined for (d1, d2) = (0, 0)\n";
        return kExitUsage;
    }

    Table t;
    t.title = refined ? "nl-refined" : "nl";
    t.columns = refined ? std::vector<std::string>{"m", "h", "d1", "d2", "delta", "value"}
                        : std::vector<std::string>{"h", "d1", "d2", "delta", "value"};
    t.numeric.assign(t.columns.size(), true);
    t.numeric.back() = false;
    for (int h = h_lo; h <= h_hi; ++h) {
        for (int m = m_range.first; m <= m_range.second; ++m) {
            for (int d1 = a_lo; d1 <= a_hi; ++d1) {
                for (int d2 = b_lo; d2 <= b_hi; ++d2) {
                    const std::string delta = std::to_string(discriminant(h, d1, d2));
                    if (!refined) {
                        t.rows.push_back({std::to_string(h), std::to_string(d1), std::to_string(d2), delta,
                                          to_string(nl_number(h, d1, d2))});
                    } else if (d1 != 0 || d2 != 0) {
                        t.rows.push_back({std::to_string(m), std::to_string(h), std::to_string(d1),
                                          std::to_string(d2), delta, to_string(nl_refined(m, h, d1, d2))});
                    }
                }
            }
        }
    }
    emit(t, cfg.format, out);
    return kExitOk;
}

int cmd_bps(const RunConfig& cfg, int d1max, int d2max, const std::string& model, std::ostream& out)
{
    const BpsModel mdl = model == "original" ? BpsModel::original : BpsModel::resolved;
    const GwTable gw = gw_closed_form(d1max, d2max);
    const BpsTable bps = bps_closed_form(d1max, d2max, mdl);
    Table t;
    t.title = "bps";
    t.meta["model"] = model;
    t.meta["source"] = "closed form 2 f(q1) E4(q2)/(j(q1) - j(q2))";
    t.columns = {"d1", "d2", "gw_original", "bps"};
    t.numeric = {true, true, false, false};
    for (const auto& [key, n] : bps.values) {
        t.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(gw.values.at(key)),
                          to_string(n)});
    }
    t.footer.push_back("# model: " + model + (mdl == BpsModel::resolved ? " (n = 2 n^X)" : " (n = n^X)"));
    emit(t, cfg.format, out);
    return kExitOk;
}

void print_failure(const VerifyReport& r, std::ostream& err)
{
    err << "FAIL " << r.describe() << "\n";
}

int cmd_solve_yz(const RunConfig& cfg, int hmax, int mmax, std::ostream& out, std::ostream& err)
{
    const YauZaslowRun run = verify_yau_zaslow(hmax, mmax);
    const LaurentSeries yz = yz_series(hmax + 1);
    Table t;
    t.title = "solve-yz";
    t.meta["bps_source"] = "closed-form counts of the resolved model read from 2 f(q1) E4(q2)/(j(q1) - j(q2)); "
                           "not an independent Gromov-Witten computation";
    t.columns = {"h", "m", "r", "expected", "match"};
    t.numeric = {true, true, false, false, false};
    std::vector<std::pair<std::pair<int, int>, Rat>> entries;
    for (const auto& [key, value] : run.reduced.values) {
        if (key.second == 0 && key.first >= 2) {
            continue;
        }
        entries.push_back({{key.second, key.first}, value});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [hm, value] : entries) {
        const Rat expected = yz.coeff(hm.first);
        t.rows.push_back({std::to_string(hm.first), std::to_string(hm.second), to_string(value), to_string(expected),
                          expected == value ? "yes" : "no"});
    }
    t.meta["status"] = run.report.ok ? "ALL MATCH η^-24" : "MISMATCH";
    t.meta["checked"] = run.report.checked;
    t.footer.push_back("# BPS source: " + t.meta["bps_source"].get<std::string>());
    if (run.report.ok) {
        t.footer.push_back("ALL MATCH η^-24");
    }
    emit(t, cfg.format, out);
    if (!run.report.ok) {
        print_failure(run.report, err);
        return kExitMismatch;
    }
    return kExitOk;
}

struct VerifyOptions {
    int order = 0;
    int nmax = 0;
    int n1 = 0;
    int n2 = 0;
    int window = 0;
    int bi_order = 0;
    int hmax = 0;
    int mmax = 0;

    static int pick(int given, int fallback) { return given > 0 ? given : fallback; }
};

using Suite = std::function<VerifyReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, Suite>>& suites()
{
    using O = VerifyOptions;
    static const std::vector<std::pair<std::string, Suite>> all{
        {"modular",
         [](const O& o) {
             VerifyReport r;
             r.name = "modular";
             r.merge(ramanujan_check(O::pick(o.order, 30)));
             r.merge(product_identities_check(O::pick(o.order, 30)));
             return r;
         }},
        {"harvey-moore", [](const O& o) { return verify_harmoo(O::pick(o.n1, 12), O::pick(o.window, 12)); }},
        {"ppx", [](const O& o) { return verify_ppx(O::pick(o.n1, 10), O::pick(o.n2, 10)); }},
        {"iii", [](const O& o) { return expansion_iii_check(O::pick(o.n1, 10), O::pick(o.window, 12)); }},
        {"hecke", [](const O& o) { return hecke_suite(O::pick(o.nmax, 8), O::pick(o.order, 25)); }},
        {"bol", [](const O& o) { return bol_check(O::pick(o.order, 30)); }},
        {"fricke", [](const O& o) { return verify_fricke(O::pick(o.order, 25)); }},
        {"klm",
         [](const O& o) {
             VerifyReport r;
             r.name = "klm";
             r.merge(verify_hyp2f1_operator({Rat(1, 12), Rat(5, 12), Rat(1)}, O::pick(o.order, 20)));
             r.merge(verify_ode_solution(O::pick(o.order, 20)));
             r.merge(verify_vvh_equivalence(O::pick(o.bi_order, 8)));
             r.merge(verify_mirror_derivatives(O::pick(o.bi_order, 8)));
             return r;
         }},
        {"f3", [](const O& o) { return verify_f3_cancellation(O::pick(o.bi_order, 8)); }},
        {"v678", [](const O& o) { return verify_v678(O::pick(o.bi_order, 6)); }},
        {"yau-zaslow",
         [](const O& o) { return verify_yau_zaslow(O::pick(o.hmax, 25), O::pick(o.mmax, 4)).report; }},
    };
    return all;
}

Json report_json(const VerifyReport& r)
{
    Json j;
    j["suite"] = r.name;
    j["ok"] = r.ok;
    j["checked"] = r.checked;
    if (r.mismatch) {
        j["mismatch"] = Json{{"exponents", r.mismatch->exponents},
                             {"expected", to_string(r.mismatch->expected)},
                             {"actual", to_string(r.mismatch->actual)}};
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const VerifyOptions& opts, std::ostream& out,
               std::ostream& err)
{
    std::vector<std::pair<std::string, Suite>> chosen;
    for (const auto& s : suites()) {
        if (suite == "all" || suite == s.first) {
            chosen.push_back(s);
        }
    }
    if (chosen.empty()) {
        err << "unknown suite '" << suite << "'; known: all";
        for (const auto& s : suites()) {
            err << " " << s.first;
        }
        err << "\n";
        return kExitUsage;
    }
    std::vector<VerifyReport> reports;
    bool ok = true;
    for (const auto& [name, run] : chosen) {
        const auto start = std::chrono::steady_clock::now();
        VerifyReport r = run(opts);
        r.name = name;
        if (cfg.verbosity > 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            err << name << ": " << dt.count() << " s\n";
        }
        reports.push_back(r);
        if (!r.ok) {
            ok = false;
            break;
        }
    }
    switch (cfg.format) {
    case OutputFormat::json: {
        Json j;
        j["ok"] = ok;
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(report_json(r));
        }
        j["suites"] = std::move(arr);
        out << j.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        out << "suite,ok,checked,exponents,expected,actual\n";
        for (const auto& r : reports) {
            std::string exps;
            if (r.mismatch) {
                for (std::size_t i = 0; i < r.mismatch->exponents.size(); ++i) {
                    exps += (i ? " " : "") + std::to_string(r.mismatch->exponents[i]);
                }
            }
            out << r.name << "," << (r.ok ? "true" : "false") << "," << r.checked << "," << exps << ","
                << (r.mismatch ? to_string(r.mismatch->expected) : "") << ","
                << (r.mismatch ? to_string(r.mismatch->actual) : "") << "\n";
        }
        break;
    case OutputFormat::text:
        for (const auto& r : reports) {
            out << r.describe() << "\n";
        }
        break;
    }
    if (!ok) {
        print_failure(reports.back(), err);
        return kExitMismatch;
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series engine for the Yau-Zaslow series of the STU model", "yzq"};
    app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", cfg.cache_dir, "Series cache directory (default: $YZQ_CACHE_DIR)");
    app.add_flag("-v,--verbose", cfg.verbosity, "Timing and cache messages on stderr");

    std::string form;
    int order = 10;
    auto* modform = app.add_subcommand("modform", "Print a q-expansion");
    modform->add_option("name", form, "E2, E4, E6, E8, E10, E12, E14, eta24, j, f or yz")->required();
    modform->add_option("--order", order, "Exclusive truncation")->check(CLI::PositiveNumber);

    KeyRanges keys;
    auto* nl = app.add_subcommand("nl", "Noether-Lefschetz numbers");
    nl->add_option("--h", keys.h, "h or lo:hi")->required();
    nl->add_option("--d1", keys.d1, "d1 or lo:hi")->required();
    nl->add_option("--d2", keys.d2, "d2 or lo:hi")->required();

    auto* nlr = app.add_subcommand("nl-refined", "Noether-Lefschetz numbers by divisibility");
    nlr->add_option("--m", keys.m, "m or lo:hi")->required();
    nlr->add_option("--h", keys.h, "h or lo:hi")->required();
    nlr->add_option("--d1", keys.d1, "d1 or lo:hi")->required();
    nlr->add_option("--d2", keys.d2, "d2 or lo:hi")->required();

    int d1max = 4;
    int d2max = 4;
    std::string model = "resolved";
    auto* bps = app.add_subcommand("bps", "Closed-form Gromov-Witten and BPS counts");
    bps->add_option("--d1max", d1max)->check(CLI::PositiveNumber);
    bps->add_option("--d2max", d2max)->check(CLI::PositiveNumber);
    bps->add_option("--model", model, "resolved (default) or original")
        ->check(CLI::IsMember({"resolved", "original"}));

    int hmax = 25;
    int mmax = 4;
    auto* solve = app.add_subcommand("solve-yz", "Solve the reduced K3 invariants and compare");
    solve->add_option("--hmax", hmax)->check(CLI::PositiveNumber);
    solve->add_option("--mmax", mmax)->check(CLI::PositiveNumber);

    std::string suite;
    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : suites()) {
        suite_names.push_back(s.first);
    }
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
    verify->add_option("--order", vo.order)->check(CLI::PositiveNumber);
    verify->add_option("--nmax", vo.nmax)->check(CLI::PositiveNumber);
    verify->add_option("--n1", vo.n1)->check(CLI::PositiveNumber);
    verify->add_option("--n2", vo.n2)->check(CLI::PositiveNumber);
    verify->add_option("--window", vo.window)->check(CLI::PositiveNumber);
    verify->add_option("--bi-order", vo.bi_order)->check(CLI::PositiveNumber);
    verify->add_option("--hmax", vo.hmax)->check(CLI::PositiveNumber);
    verify->add_option("--mmax", vo.mmax)->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"yzq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.format = kFormats.at(format);

    try {
        if (modform->parsed()) {
            cfg.command = "modform";
            return cmd_modform(cfg, form, order, out, err);
        }
        if (nl->parsed()) {
            cfg.command = "nl";
            return cmd_nl(cfg, keys, false, out, err);
        }
        if (nlr->parsed()) {
            cfg.command = "nl-refined";
            return cmd_nl(cfg, keys, true, out, err);
        }
        if (bps->parsed()) {
            cfg.command = "bps";
            return cmd_bps(cfg, d1max, d2max, model, out);
        }
        if (solve->parsed()) {
            cfg.command = "solve-yz";
            return cmd_solve_yz(cfg, hmax, mmax, out, err);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, suite, vo, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}

} // namespace yzq
