// rec_zeros: build, certify and check the R_{k,l} family from the shell.
//
// Exit codes: 0 success, 1 a mathematical failure (non-conforming instance
// or failed claim), 2 usage error, 3 internal accounting error.

#include "reczeros/reczeros.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace reczeros;

namespace {

enum class Format { json, csv, table };

struct RunConfig {
    std::string command;
    std::string k_text, ell_text;
    std::optional<unsigned> k_max, ell_max;
    long precision = 128;
    std::string width_text = "2^-110";
    unsigned jobs = 1;
    std::string out;
    std::string format_text = "json";
    std::string suite_text = "all";
    bool force = false;

    std::vector<unsigned> ks, ells;
    Rational width;
    Format format = Format::json;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<unsigned> resolve(const std::string& text, const std::optional<unsigned>& max, unsigned lo,
                              const char* name, std::optional<unsigned> fallback_max)
{
    if (!text.empty()) {
        try {
            return parse_range(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--") + name + ": " + e.what());
        }
    }
    std::optional<unsigned> m = max ? max : fallback_max;
    if (!m)
        throw UsageError(std::string("give --") + name + " or --" + name + "-max");
    return range_values(lo, *m);
}

Rational parse_width(const std::string& text)
{
    if (text.rfind("2^", 0) == 0) {
        long e = std::stol(text.substr(2));
        return pow2(e);
    }
    return parse_rational(text);
}

void finish_config(RunConfig& c)
{
    const bool verify = c.command == "verify";
    c.ks = resolve(c.k_text, c.k_max, 1, "k", verify ? std::optional<unsigned>(5) : std::nullopt);
    c.ells = resolve(c.ell_text, c.ell_max, 1, "ell", verify ? std::optional<unsigned>(2) : std::nullopt);
    if (!verify) {
        if (c.ks.empty() || c.ells.empty())
            throw UsageError("empty parameter range");
        if (c.ks.front() < 1 || c.ells.front() < 1)
            throw UsageError("k and ell must be at least 1");
    } else {
        // k = 0 or ell = 0 only ever means an empty grid
        std::erase(c.ks, 0u);
        std::erase(c.ells, 0u);
    }
    if (c.precision < 64)
        throw UsageError("--prec must be at least 64");
    if (c.jobs < 1)
        throw UsageError("--jobs must be at least 1");
    try {
        c.width = parse_width(c.width_text);
    } catch (const std::exception&) {
        throw UsageError("--width: cannot parse '" + c.width_text + "'");
    }
    if (c.width <= 0)
        throw UsageError("--width must be positive");
    if (c.format_text == "json")
        c.format = Format::json;
    else if (c.format_text == "csv")
        c.format = Format::csv;
    else if (c.format_text == "table")
        c.format = Format::table;
    else
        throw UsageError("--format must be json, csv or table");
    if (!parse_suite(c.suite_text))
        throw UsageError("--suite must be lemmas, props, intervals or all");
}

std::vector<std::pair<unsigned, unsigned>> grid(const RunConfig& c)
{
    std::vector<std::pair<unsigned, unsigned>> g;
    for (unsigned k : c.ks)
        for (unsigned l : c.ells)
            g.emplace_back(k, l);
    return g;
}

void emit(const RunConfig& c, const Json& doc, const Table& table)
{
    std::ostringstream os;
    switch (c.format) {
    case Format::json:
        os << doc.dump(2) << "\n";
        break;
    case Format::csv:
        write_csv(os, table);
        break;
    case Format::table:
        write_table(os, table);
        break;
    }
    if (c.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f)
            throw UsageError("cannot open --out file '" + c.out + "'");
        f << os.str();
    }
}

int cmd_construct(const RunConfig& c)
{
    auto recs = parallel_map(grid(c), c.jobs, [](const std::pair<unsigned, unsigned>& kl) {
        return construct_instance(kl.first, kl.second);
    });
    Json doc = document("construct");
    Json arr = Json::array();
    for (const auto& r : recs)
        arr.push_back(to_json(r));
    doc["instances"] = std::move(arr);
    emit(c, doc, construct_table(recs));
    return 0;
}

int cmd_certify(const RunConfig& c)
{
    warm_constants(c.ks.back());
    auto certs = parallel_map(grid(c), c.jobs, [&](const std::pair<unsigned, unsigned>& kl) {
        return certify_zeros(kl.first, kl.second, c.width);
    });
    bool all = true;
    Json doc = document("certificates");
    Json arr = Json::array();
    for (const auto& cert : certs) {
        all = all && cert.conforms;
        arr.push_back(to_json(cert));
    }
    doc["conforms_all"] = all;
    doc["certificates"] = std::move(arr);
    emit(c, doc, certificate_table(certs));
    if (!all)
        std::cerr << "rec_zeros: at least one instance does not have the expected zero partition\n";
    return all ? 0 : 1;
}

int cmd_verify(const RunConfig& c)
{
    VerifyConfig vc;
    vc.ks = c.ks;
    vc.ells = c.ells;
    vc.precision = c.precision;
    vc.suite = *parse_suite(c.suite_text);
    vc.jobs = c.jobs;
    VerificationReport rep = run_all(vc);
    emit(c, to_json(rep, c.suite_text), report_table(rep));
    for (const auto& cl : rep.claims) {
        if (cl.status == ClaimStatus::finding)
            std::cerr << "note: finding in " << cl.id << (cl.note.empty() ? "" : ": " + cl.note) << "\n";
        else if (cl.status == ClaimStatus::inconclusive)
            std::cerr << "note: " << cl.id << " inconclusive at the precision cap\n";
        else if (cl.status == ClaimStatus::pass && cl.note == "empty range")
            std::cerr << "note: " << cl.id << " has an empty range\n";
    }
    return rep.any(ClaimStatus::fail) ? 1 : 0;
}

int cmd_analyze(const RunConfig& c)
{
    if (c.ks.back() > analysis_k_cap && !c.force)
        throw UsageError("analyze is capped at k <= " + std::to_string(analysis_k_cap) +
                         " (resultants grow quickly); pass --force to go further");
    warm_constants(c.ks.back());
    auto recs = parallel_map(grid(c), c.jobs, [&](const std::pair<unsigned, unsigned>& kl) {
        return analyze_instance(kl.first, kl.second, c.precision, c.width);
    });
    bool ok = true;
    Json doc = document("analysis");
    Json arr = Json::array();
    for (const auto& r : recs) {
        if (!r.conforms || r.discriminant == 0 || r.mahler_inequality == Tri::no || r.alpha_in_interval == Tri::no)
            ok = false;
        arr.push_back(to_json(r));
    }
    doc["records"] = std::move(arr);
    emit(c, doc, analysis_table(recs));
    return ok ? 0 : 1;
}

int cmd_scan(const RunConfig& c)
{
    auto recs = parallel_map(grid(c), c.jobs, [](const std::pair<unsigned, unsigned>& kl) {
        return UnityScanRecord{kl.first, kl.second, roots_of_unity_zeros(kl.first, kl.second)};
    });
    Json doc = document("unity-scan");
    Json arr = Json::array();
    for (const auto& r : recs)
        arr.push_back(to_json(r));
    doc["instances"] = std::move(arr);
    emit(c, doc, unity_table(recs));
    return 0;
}

void add_common(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--k", c.k_text, "k values: 7, 1..10 (inclusive) or a comma list such as 1,3,5..7");
    sub->add_option("--ell", c.ell_text, "l values, same syntax as --k");
    sub->add_option("--k-max", c.k_max, "shorthand for --k 1..K");
    sub->add_option("--ell-max", c.ell_max, "shorthand for --ell 1..L");
    sub->add_option("--prec", c.precision, "starting precision in bits for enclosures (>= 64)")->capture_default_str();
    sub->add_option("--width", c.width_text, "alpha refinement width: rational, decimal or 2^-N")
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format_text, "json, csv or table")->capture_default_str();
    sub->add_flag("--force", c.force, "allow analyze beyond its k cap");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact zero certification for the Bernoulli-coefficient polynomials R_{k,l}.\n"
                 "Ranges: a..b is inclusive; comma lists may mix single values and ranges.\n"
                 "REC_ZEROS_PREC_CAP overrides the 4096-bit precision cap."};
    app.require_subcommand(1);
    RunConfig cfg;
    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {{"construct", "write the coefficients of R, M and (k >= 3) A and Delta"},
                        {"certify", "certify the zero partition of R_{k,l}"},
                        {"verify", "check the supporting inequalities and sign conditions"},
                        {"analyze", "discriminant, Mahler measure and the alpha window"},
                        {"scan", "list n such that Phi_n divides R_{k,l}"}};
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, cfg);
        if (std::string(s.name) == "verify")
            sub->add_option("--suite", cfg.suite_text, "lemmas, props, intervals or all")->capture_default_str();
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        finish_config(cfg);
        if (cfg.command == "construct")
            code = cmd_construct(cfg);
        else if (cfg.command == "certify")
            code = cmd_certify(cfg);
        else if (cfg.command == "verify")
            code = cmd_verify(cfg);
        else if (cfg.command == "analyze")
            code = cmd_analyze(cfg);
        else
            code = cmd_scan(cfg);
    } catch (const UsageError& e) {
        std::cerr << "rec_zeros: " << e.what() << "\n";
        return 2;
    } catch (const AccountingError& e) {
        std::cerr << "rec_zeros: internal accounting error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "rec_zeros: internal error: " << e.what() << "\n";
        return 3;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "rec_zeros " << cfg.command << ": " << secs << " s wall\n";
    return code;
}
