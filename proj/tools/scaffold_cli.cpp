// Command-line front end: single-case analysis, preset tables, parameter
// sweeps, and verification of the divided-power realization.
//
// Exit codes: 0 success, 1 verification or internal assertion failure,
// 2 usage or validation error. Errors go to stderr as a JSON object.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "scaffold/json_io.hpp"
#include "scaffold/realization.hpp"
#include "scaffold/special.hpp"
#include "scaffold/structure.hpp"

namespace {

using scaffold::Int;

std::string join(const std::vector<Int>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::string braces(const std::vector<Int>& v) { return "{" + join(v, ",") + "}"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

const char* kReportCsvHeader =
    "p,n,b,h,b_exponent,d,w,free,dd,ee,min_generators,embedding_dimension,"
    "tolerance_required";

std::string report_csv_row(const scaffold::StructureReport& r) {
    std::ostringstream os;
    os << r.p << ',' << r.n << ',' << csv_quote(join(r.shifts, ",")) << ',' << r.h
       << ',' << r.b_exponent << ',' << csv_quote(join(r.d, ",")) << ','
       << csv_quote(join(r.w, ",")) << ',' << (r.free ? "true" : "false") << ','
       << csv_quote(join(r.dd, ",")) << ',' << csv_quote(join(r.ee, ",")) << ','
       << r.min_generators << ',' << r.embedding_dimension << ','
       << r.tolerance_required;
    return os.str();
}

void print_report_table(const scaffold::StructureReport& r, std::ostream& os) {
    os << "p                   " << r.p << "\n"
       << "n                   " << r.n << "\n"
       << "b                   " << join(r.shifts, ",") << "\n"
       << "h                   " << r.h << "\n"
       << "b_exponent          " << r.b_exponent << "\n"
       << "d                   (" << join(r.d, ",") << ")\n"
       << "w                   (" << join(r.w, ",") << ")\n"
       << "free                " << (r.free ? "true" : "false") << "\n"
       << "dd                  " << braces(r.dd) << "\n"
       << "ee                  " << braces(r.ee) << "\n"
       << "min_generators      " << r.min_generators << "\n"
       << "embedding_dimension " << r.embedding_dimension << "\n"
       << "tolerance_required  " << r.tolerance_required << "\n";
}

void emit_report(const scaffold::StructureReport& r, const std::string& format) {
    if (format == "json")
        std::cout << scaffold::to_json(r).dump(2) << "\n";
    else if (format == "csv")
        std::cout << kReportCsvHeader << "\n" << report_csv_row(r) << "\n";
    else
        print_report_table(r, std::cout);
}

// All eight residue classes (b mod 4, h mod 4) of the biquadratic case,
// at the representatives b in {1,3} and b-3 <= h <= b.
void print_biquadratic_table(std::ostream& os) {
    os << " b  h | d(0) d(1) d(2) d(3) | w(0) w(1) w(2) w(3) | DD | EE\n";
    for (Int b : {1, 3}) {
        const scaffold::ScaffoldParams params(2, 2, {b, b});
        for (Int h = b; h >= b - 3; --h) {
            const auto r = scaffold::analyze(params, h);
            os << " " << b << " " << (h < 0 ? "" : " ") << h << " |";
            for (Int s = 0; s < 4; ++s) os << "    " << r.d[static_cast<size_t>(s)];
            os << " |";
            for (Int s = 0; s < 4; ++s) os << "    " << r.w[static_cast<size_t>(s)];
            os << " | " << braces(r.dd) << " | " << braces(r.ee) << "\n";
        }
    }
}

void print_weak_table(Int p, Int n, std::ostream& os) {
    const Int pn = scaffold::checked_pow(p, n);
    os << " h | free | min_generators | embedding_dimension\n";
    for (Int h = 1; h <= pn; ++h) {
        const auto r = scaffold::weak_report(p, n, h);
        os << " " << h << " | " << (r.free ? "true" : "false") << " | "
           << r.min_generators << " | " << r.embedding_dimension << "\n";
    }
}

int run_verify(Int p, Int n, Int b, Int h, const std::string& t_range,
               bool trace) {
    const scaffold::ScaffoldRealization real(p, n, b);
    const Int pn = real.modulus();
    Int lo = h - pn, hi = h + 2 * pn;
    if (!t_range.empty()) {
        const auto colon = t_range.find(':');
        scaffold::require(colon != std::string::npos,
                          "--t-range expects the form lo:hi");
        lo = std::stoll(t_range.substr(0, colon));
        hi = std::stoll(t_range.substr(colon + 1));
        scaffold::require(lo <= hi, "--t-range is empty");
    }
    const auto report = scaffold::analyze(real.params(), h);

    if (trace) {
        for (Int t = h; t < h + pn; ++t)
            std::cout << "# lambda_" << t << " = " << real.lambda(t).to_string()
                      << "\n";
        for (Int s = 0; s < pn; ++s) {
            const auto phi = real.phi(s, report.w[static_cast<size_t>(s)]);
            std::cout << "# Phi^(" << s << ") = " << phi.to_string()
                      << ", Phi^(" << s << ") lambda_" << report.b_exponent
                      << " = "
                      << phi.act(real.lambda(report.b_exponent)).to_string()
                      << "\n";
        }
    }

    struct Check {
        const char* name;
        scaffold::VerificationReport report;
    };
    const Check checks[] = {
        {"scaffold-relations", scaffold::verify_scaffold(real, lo, hi)},
        {"associated-order",
         scaffold::realize_associated_order_check(real, h, report)},
        {"freeness", scaffold::realize_freeness_check(real, h, report)},
        {"phi-products", scaffold::psi_prod_check(real, h, report)},
    };

    std::cout << "verify p=" << p << " n=" << n << " b=" << b << " h=" << h
              << " t-range=[" << lo << "," << hi << "]"
              << " engine=" << (report.free ? "free" : "non-free") << "\n";
    bool ok = true;
    Int total = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& c : checks) {
        total += c.report.checks_run;
        std::cout << "  " << c.name << ": " << (c.report.ok() ? "PASS" : "FAIL")
                  << " (" << c.report.checks_run << " checks";
        if (!c.report.ok()) {
            std::cout << ", " << c.report.failures.size() << " failures";
            ok = false;
            auto j = scaffold::to_json(c.report);
            j["check"] = c.name;
            failures.push_back(j);
        }
        std::cout << ")\n";
    }
    if (!ok) {
        std::cout << "verification FAILED\n";
        std::cerr << nlohmann::json{{"error",
                                     {{"kind", "verification"},
                                      {"message", "realization disagrees"},
                                      {"detail", failures}}}}
                         .dump()
                  << "\n";
        return 1;
    }
    std::cout << "all " << total << " checks passed; "
              << (report.free ? "freeness" : "non-freeness") << " confirmed\n";
    return 0;
}

int run_sweep(Int p, Int n, Int b_mod, bool all_b, Int jobs,
              const std::string& format, Int limit) {
    const Int pn = scaffold::checked_pow(p, n);
    if (pn > limit)
        throw std::domain_error("sweep: p^n exceeds --limit (" +
                                std::to_string(limit) + ")");
    std::vector<Int> b_classes;
    if (all_b) {
        for (Int b = 1; b < pn; ++b)
            if (b % p != 0) b_classes.push_back(b);
    } else {
        scaffold::require(scaffold::mod_floor(b_mod, p) != 0,
                          "--b-mod must be coprime to p");
        b_classes.push_back(scaffold::mod_floor(b_mod, pn));
    }

    struct Cell {
        Int b, h;
    };
    std::vector<Cell> cells;
    for (Int b : b_classes)
        for (Int h = 0; h < pn; ++h) cells.push_back({b, h});

    // workers pull cells; row order stays lexicographic by (b, h)
    std::vector<std::string> rows(cells.size());
    const Int workers =
        std::max<Int>(1, std::min<Int>(jobs, static_cast<Int>(cells.size())));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (Int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1)) {
                const scaffold::ScaffoldParams params(
                    p, n, std::vector<Int>(static_cast<size_t>(n), cells[i].b));
                const auto r = scaffold::analyze(params, cells[i].h);
                if (format == "json")
                    rows[i] = scaffold::to_json(r).dump();
                else if (format == "table")
                    rows[i] = "b=" + std::to_string(cells[i].b) +
                              " h=" + std::to_string(cells[i].h) + " free=" +
                              (r.free ? "true" : "false") +
                              " gens=" + std::to_string(r.min_generators) +
                              " embdim=" + std::to_string(r.embedding_dimension);
                else
                    rows[i] = report_csv_row(r);
            }
        });
    for (auto& th : pool) th.join();

    if (format == "csv") std::cout << kReportCsvHeader << "\n";
    for (const auto& row : rows) std::cout << row << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral Galois module structure from scaffold data"};
    app.require_subcommand(1);
    // --h is an option (the ideal exponent); keep help on --help only
    app.set_help_flag("--help", "print usage");

    Int p = 0, n = 0, h = 0, b_single = 0, b_mod = 0, jobs = 1, limit = 4096;
    std::vector<Int> b_list;
    std::string format = "json", preset, t_range;
    bool all_b = false, h_all = false;

    auto* analyze_cmd =
        app.add_subcommand("analyze", "Structure report for one (p, n, b, h)");
    analyze_cmd->set_help_flag("--help", "print usage");
    analyze_cmd->add_option("--p", p, "prime p")->required();
    analyze_cmd->add_option("--n", n, "rank n")->required();
    analyze_cmd->add_option("--b", b_list, "shift parameters b_1,...,b_n")
        ->required()
        ->delimiter(',');
    analyze_cmd->add_option("--h", h, "ideal exponent (use --h=-2 for negatives)")
        ->required();
    analyze_cmd->add_option("--format", format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    auto* table_cmd = app.add_subcommand("table", "Preset tables");
    table_cmd->set_help_flag("--help", "print usage");
    table_cmd->add_option("--preset", preset, "biquadratic|weak")->required();
    table_cmd->add_option("--p", p, "prime p (weak preset)");
    table_cmd->add_option("--n", n, "rank n (weak preset)");

    auto* verify_cmd =
        app.add_subcommand("verify", "Verify the divided-power realization");
    verify_cmd->set_help_flag("--help", "print usage");
    verify_cmd->add_option("--p", p, "prime p")->required();
    verify_cmd->add_option("--n", n, "exponent n")->required();
    verify_cmd->add_option("--b", b_single, "action parameter b, 0 < b < p^n")
        ->required();
    verify_cmd->add_option("--h", h, "ideal exponent")->required();
    verify_cmd->add_option("--t-range", t_range, "lo:hi (default h-p^n:h+2p^n)");
    bool trace = false;
    verify_cmd->add_flag("--trace", trace, "print the lambda and Phi elements");

    auto* sweep_cmd = app.add_subcommand("sweep", "Reports for a grid of (b, h)");
    sweep_cmd->set_help_flag("--help", "print usage");
    sweep_cmd->add_option("--p", p, "prime p")->required();
    sweep_cmd->add_option("--n", n, "rank n")->required();
    auto* bmod_opt =
        sweep_cmd->add_option("--b-mod", b_mod, "single b class mod p^n");
    sweep_cmd->add_flag("--all-b", all_b, "all b classes coprime to p");
    sweep_cmd->add_flag("--h-all", h_all, "all h classes mod p^n");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (output unchanged)");
    sweep_cmd->add_option("--limit", limit, "largest allowed p^n (default 4096)");
    auto* sweep_format_opt =
        sweep_cmd->add_option("--format", format, "csv|json|table (default csv)")
            ->check(CLI::IsMember({"json", "csv", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0)
            std::cerr << nlohmann::json{{"error",
                                         {{"kind", "usage"},
                                          {"message", e.what()}}}}
                             .dump()
                      << "\n";
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            const scaffold::ScaffoldParams params(p, n, b_list);
            emit_report(scaffold::analyze(params, h), format);
            return 0;
        }
        if (table_cmd->parsed()) {
            if (preset == "biquadratic") {
                print_biquadratic_table(std::cout);
            } else if (preset == "weak") {
                scaffold::require(p > 0 && n > 0,
                                  "the weak preset needs --p and --n");
                print_weak_table(p, n, std::cout);
            } else {
                throw std::domain_error("unknown preset: " + preset);
            }
            return 0;
        }
        if (verify_cmd->parsed())
            return run_verify(p, n, b_single, h, t_range, trace);
        if (sweep_cmd->parsed()) {
            scaffold::require(h_all, "sweep requires --h-all");
            scaffold::require(all_b != (bmod_opt->count() > 0),
                              "sweep requires exactly one of --all-b, --b-mod");
            const std::string sweep_format =
                sweep_format_opt->count() > 0 ? format : std::string("csv");
            return run_sweep(p, n, b_mod, all_b, jobs, sweep_format, limit);
        }
    } catch (const scaffold::internal_error& e) {
        std::cerr << nlohmann::json{{"error",
                                     {{"kind", "internal"},
                                      {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    } catch (const scaffold::resource_error& e) {
        std::cerr << nlohmann::json{{"error",
                                     {{"kind", "resource"},
                                      {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error",
                                     {{"kind", "usage"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    }
    return 0;
}
