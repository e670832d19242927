#include "knapsack/cli.hpp"

#include "knapsack/certify.hpp"
#include "knapsack/degree.hpp"
#include "knapsack/identities.hpp"
#include "knapsack/paths.hpp"
#include "knapsack/report.hpp"
#include "knapsack/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace knapsack::cli {

namespace {

// Usage problems found after parsing (bad combinations, out-of-range
// parameters) surface as this and map to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "text";
    std::string file;
};

void add_output_options(CLI::App* cmd, Output& o, std::vector<std::string> formats)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--out", o.file, "Write output to this file (relative to $KNAPSACK_OUTPUT_DIR when set)");
}

void emit(const Output& o, const std::string& text, std::ostream& out)
{
    if (o.file.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(o.file);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("KNAPSACK_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot write " + path.string());
    }
    file << text;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string reports_text(const std::vector<VerificationReport>& reports, bool failures_only)
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        if (!failures_only || !r.pass) {
            out << to_text(r);
        }
    }
    out << passed << "/" << reports.size() << " passed\n";
    return out.str();
}

std::string reports_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << "id,params,lhs,rhs,pass,regime\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [name, value] : r.params) {
            params += (params.empty() ? "" : ";") + name + "=" + std::to_string(value);
        }
        out << r.id << ',' << csv_quote(params) << ',' << to_decimal(r.lhs) << ',' << to_decimal(r.rhs) << ','
            << (r.pass ? "true" : "false") << ',' << csv_quote(r.regime) << '\n';
    }
    return out.str();
}

int emit_reports(const Output& o, const std::vector<VerificationReport>& reports, bool failures_only,
                 std::ostream& out, Json extra = Json::object())
{
    std::string text;
    if (o.format == "json") {
        Json j = to_json(std::span<const VerificationReport>(reports));
        for (auto& [key, value] : extra.items()) {
            j[key] = value;
        }
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = reports_csv(reports);
    } else {
        text = reports_text(reports, failures_only);
    }
    emit(o, text, out);
    return all_pass(reports) ? kExitPass : kExitFail;
}

// ---- degree -------------------------------------------------------------

struct DegreeOptions {
    std::string shape;
    std::string method = "hook";
    Output output;
};

int run_degree(const DegreeOptions& opt, std::ostream& out)
{
    const Partition lambda = parse_shape(opt.shape);
    std::vector<std::pair<std::string, BigInt>> values;
    auto want = [&](const char* m) { return opt.method == m || opt.method == "all"; };
    if (want("hook")) {
        values.emplace_back("hook", degree(lambda));
    }
    if (want("closed")) {
        const auto p = lambda.padded(3);
        if (lambda.length() <= 3) {
            values.emplace_back("closed", degree_threepart(p[0], p[1], p[2]));
        } else if (lambda[1] >= 1 && std::all_of(lambda.parts().begin() + 2, lambda.parts().end(),
                                                 [](int x) { return x == 1; })) {
            values.emplace_back("closed", degree_fathook(lambda[0], lambda[1], lambda.length() - 2));
        } else if (opt.method == "closed") {
            throw UsageError("no closed form for shape " + lambda.to_string());
        }
    }
    if (want("syt")) {
        if (lambda.size() > kDefaultSytBound) {
            if (opt.method == "syt") {
                throw UsageError("tableau enumeration is limited to n <= " + std::to_string(kDefaultSytBound));
            }
        } else {
            values.emplace_back("syt", syt_enumerate(lambda));
        }
    }
    const bool agree = std::all_of(values.begin(), values.end(),
                                   [&](const auto& v) { return v.second == values.front().second; });
    std::string text;
    if (opt.output.format == "json") {
        Json j;
        j["shape"] = lambda.to_string();
        j["n"] = lambda.size();
        j["degree"] = to_decimal(values.front().second);
        Json methods = Json::object();
        for (const auto& [name, v] : values) {
            methods[name] = to_decimal(v);
        }
        j["methods"] = std::move(methods);
        j["agree"] = agree;
        text = j.dump(2) + "\n";
    } else if (values.size() == 1) {
        text = to_decimal(values.front().second) + "\n";
    } else {
        for (const auto& [name, v] : values) {
            text += name + ": " + to_decimal(v) + "\n";
        }
        text += agree ? "agree\n" : "DISAGREE\n";
    }
    emit(opt.output, text, out);
    return agree ? kExitPass : kExitFail;
}

// ---- paths --------------------------------------------------------------

struct PathOptions {
    std::string kind;
    int n = 0;
    int flats = -1;
    int ups = -1;
    bool list = false;
    Output output;
};

int run_paths(const PathOptions& opt, std::ostream& out)
{
    const PathKind kind = parse_path_kind(opt.kind);
    Json j;
    std::string text;
    if (opt.flats >= 0 || opt.ups >= 0) {
        if (kind != PathKind::Riordan || opt.flats < 0 || opt.ups < 0) {
            throw UsageError("--flats and --ups go together and need --kind riordan");
        }
        const BigInt count = count_riordan_by_steps(opt.n, opt.flats, opt.ups);
        j = {{"kind", "riordan"}, {"n", opt.n}, {"flats", opt.flats}, {"ups", opt.ups}, {"count", to_decimal(count)}};
        text = to_decimal(count) + "\n";
    } else {
        const BigInt count = count_paths(kind, opt.n);
        j = {{"kind", std::string(to_string(kind))}, {"n", opt.n}, {"count", to_decimal(count)}};
        text = to_decimal(count) + "\n";
        if (opt.list) {
            Json paths = Json::array();
            for (const auto& p : enumerate_paths(kind, opt.n)) {
                paths.push_back(p.to_string());
                text += p.to_string() + "\n";
            }
            j["paths"] = std::move(paths);
        }
    }
    emit(opt.output, opt.output.format == "json" ? j.dump(2) + "\n" : text, out);
    return kExitPass;
}

// ---- verify -------------------------------------------------------------

struct VerifyOptions {
    std::string id;
    bool sweep = false;
    int n = -1;
    int k = -1;
    int m = -1;
    int d = -1;
    int cls = 1;
    std::string mu;
    int max_n = -1;
    int max_k = -1;
    int max_m = -1;
    int max_d = -1;
    int max_mu = -1;
    Output output;
};

int need(int value, const char* flag)
{
    if (value < 0) {
        throw UsageError(std::string("missing ") + flag);
    }
    return value;
}

int bound(int value, int fallback)
{
    return value < 0 ? fallback : value;
}

std::vector<VerificationReport> window_reports(const char* id, int d, int k, int m)
{
    std::vector<VerificationReport> out;
    for (auto& r : verify_fat_hook_window(d, k, m)) {
        if (r.id == id) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_single(const VerifyOptions& o)
{
    const std::string& id = o.id;
    if (id == "thm1.4") {
        auto [a, b] = verify_second_part_identities(need(o.n, "--n"), need(o.k, "--k"));
        return {a, b};
    }
    if (id == "thm1.3") {
        return verify_riordan_refinement(need(o.n, "--n"));
    }
    if (id == "lwindow") {
        return verify_fat_hook_window(need(o.d, "--d"), need(o.k, "--k"), need(o.m, "--m"));
    }
    if (id == "lem2.3" || id == "thm4.2" || id == "cor4.4" || id == "ex4.1") {
        const char* wire = id == "lem2.3" ? "Lem2.3" : id == "thm4.2" ? "Thm4.2" : id == "cor4.4" ? "Cor4.4" : "Ex4.1";
        const int d = id == "lem2.3" ? 1 : id == "ex4.1" ? 2 : need(o.d, "--d");
        auto out = window_reports(wire, d, need(o.k, "--k"), need(o.m, "--m"));
        if (out.empty()) {
            throw UsageError("parameters lie outside the region of " + id);
        }
        return out;
    }
    if (id == "eq4.5") {
        return {verify_analytic_window(need(o.d, "--d"), need(o.k, "--k"), need(o.m, "--m"))};
    }
    if (id == "thm4.7") {
        return {verify_h_expansion(need(o.n, "--n"), need(o.k, "--k"))};
    }
    if (id == "prop2.4") {
        return {verify_boundary_pair(need(o.k, "--k"), need(o.m, "--m"))};
    }
    if (id == "hookwrap") {
        return {verify_hook_wrap(parse_shape(o.mu), need(o.k, "--k"))};
    }
    if (id == "regev") {
        return {verify_regev(need(o.m, "--m"))};
    }
    if (id == "branch") {
        if (o.cls != 1 && o.cls != 2) {
            throw UsageError("--class is 1 or 2");
        }
        return {verify_branching_decomposition(need(o.n, "--n"), need(o.k, "--k"),
                                               o.cls == 1 ? XSetClass::Class1 : XSetClass::Class2)};
    }
    throw UsageError("unknown identity id '" + id + "'");
}

constexpr int kMaxSweep = 200;

std::vector<VerificationReport> verify_sweep(const VerifyOptions& o)
{
    for (int b : {o.max_n, o.max_k, o.max_m, o.max_d, o.max_mu}) {
        if (b > kMaxSweep) {
            throw UsageError("sweep bounds are limited to " + std::to_string(kMaxSweep));
        }
    }
    if (o.max_mu > 12) {
        throw UsageError("--max-mu is limited to 12");
    }
    std::vector<VerificationReport> out;
    auto add = [&out](std::vector<VerificationReport> rs) {
        for (auto& r : rs) {
            out.push_back(std::move(r));
        }
    };
    const std::string& id = o.id;
    if (id == "thm1.4") {
        for (int n = 4; n <= bound(o.max_n, 60); ++n) {
            for (int k = 1; 2 * k <= n; ++k) {
                auto [a, b] = verify_second_part_identities(n, k);
                out.push_back(std::move(a));
                out.push_back(std::move(b));
            }
        }
    } else if (id == "thm1.3") {
        for (int n = 2; n <= bound(o.max_n, 40); ++n) {
            add({verify_riordan_refinement(n).back()});
        }
    } else if (id == "lem2.3") {
        for (int k = 2; k <= bound(o.max_k, 40); ++k) {
            for (int m = 4; m <= bound(o.max_m, 40); ++m) {
                add(window_reports("Lem2.3", 1, k, m));
            }
        }
    } else if (id == "thm4.2") {
        for (int d = 0; d <= bound(o.max_d, 4); ++d) {
            for (int k = 2; k <= bound(o.max_k, 30); ++k) {
                for (int m = std::max(2, 4 * (d - 1)); m <= k; ++m) {
                    add(window_reports("Thm4.2", d, k, m));
                }
            }
        }
    } else if (id == "cor4.4") {
        for (int d = 0; d <= bound(o.max_d, 4); ++d) {
            for (int k = 2; k <= bound(o.max_k, 20); ++k) {
                for (int m = std::max(2, k + 6 * d - 3); m <= bound(o.max_m, 60); ++m) {
                    add(window_reports("Cor4.4", d, k, m));
                }
            }
        }
    } else if (id == "ex4.1") {
        for (int k = 6; k <= bound(o.max_k, 30); ++k) {
            for (int delta = 1; delta <= 8; ++delta) {
                add(window_reports("Ex4.1", 2, k, k + delta));
            }
        }
    } else if (id == "eq4.5") {
        for (int d = 0; d <= bound(o.max_d, 4); ++d) {
            for (int k = 2; k <= bound(o.max_k, 20); ++k) {
                for (int m = 2; m <= bound(o.max_m, 30); ++m) {
                    if (2 * d >= k + m) {
                        continue;  // an h1 denominator vanishes there
                    }
                    out.push_back(verify_analytic_window(d, k, m));
                }
            }
        }
    } else if (id == "thm4.7") {
        for (int n = 4; n <= bound(o.max_n, 40); ++n) {
            for (int k = 1; n - 2 * k >= 2; ++k) {
                out.push_back(verify_h_expansion(n, k));
            }
        }
    } else if (id == "prop2.4") {
        for (int m = 1; m <= bound(o.max_m, 40); ++m) {
            for (int k : {m - 1, m + 1}) {
                if (k >= 1) {
                    out.push_back(verify_boundary_pair(k, m));
                }
            }
        }
    } else if (id == "hookwrap") {
        for (int size = 0; size <= bound(o.max_mu, 8); ++size) {
            for (const auto& mu : partitions_of(size)) {
                for (int k = 2; k <= bound(o.max_k, 8); ++k) {
                    out.push_back(verify_hook_wrap(mu, k));
                }
            }
        }
    } else if (id == "regev") {
        for (int m = 2; m <= bound(o.max_m, 12); ++m) {
            out.push_back(verify_regev(m));
        }
    } else if (id == "branch") {
        for (int n = 2; n <= bound(o.max_n, 30); ++n) {
            for (int k = 1; 2 * k <= n; ++k) {
                for (XSetClass c : {XSetClass::Class1, XSetClass::Class2}) {
                    if (!x_set(n, k, c).empty()) {
                        out.push_back(verify_branching_decomposition(n, k, c));
                    }
                }
            }
        }
    } else {
        throw UsageError("no sweep for identity id '" + id + "'");
    }
    return out;
}

int run_verify(const VerifyOptions& o, std::ostream& out)
{
    if (o.sweep) {
        return emit_reports(o.output, verify_sweep(o), true, out);
    }
    return emit_reports(o.output, verify_single(o), false, out);
}

// ---- table --------------------------------------------------------------

struct TableOptions {
    std::string id;
    Output output;
};

int run_table(const TableOptions& o, std::ostream& out)
{
    const auto reports = reproduce_table(o.id);
    if (o.output.format == "text") {
        emit(o.output, table_text(reports), out);
        return all_pass(reports) ? kExitPass : kExitFail;
    }
    return emit_reports(o.output, reports, false, out);
}

// ---- certify ------------------------------------------------------------

struct CertifyOptions {
    bool all = false;
    std::string id;
    Output output;
};

VerificationReport certificate_report(const Certificate& c)
{
    VerificationReport r;
    r.id = c.id;
    r.regime = "symbolic";
    if (!c.spot_checks.empty()) {
        r.lhs = c.spot_checks.front().lhs;
        r.rhs = c.spot_checks.front().rhs;
        for (const auto& [name, value] : c.spot_checks.front().params) {
            r.params.emplace_back(name, value);
        }
    }
    r.pass = c.pass();
    Json checks = Json::array();
    for (const auto& ch : c.checks) {
        checks.push_back({{"description", ch.description},
                          {"lhs", ch.lhs},
                          {"rhs", ch.rhs},
                          {"difference", ch.difference.to_string(c.variables)},
                          {"holds", ch.holds()}});
    }
    Json spots = Json::array();
    for (const auto& s : c.spot_checks) {
        Json params = Json::object();
        for (const auto& [name, value] : s.params) {
            params[name] = value;
        }
        spots.push_back({{"description", s.description},
                         {"params", std::move(params)},
                         {"lhs", to_decimal(s.lhs)},
                         {"rhs", to_decimal(s.rhs)},
                         {"pass", s.holds()}});
    }
    r.details = {{"certificate",
                  {{"statement", c.statement},
                   {"variables", c.variables},
                   {"difference", c.difference_text()},
                   {"checks", std::move(checks)},
                   {"spot_checks", std::move(spots)}}}};
    return r;
}

std::string certificate_text(const Certificate& c)
{
    std::ostringstream out;
    out << c.id << ": " << c.statement << '\n';
    for (const auto& ch : c.checks) {
        out << "  check " << ch.description << ": difference "
            << (ch.holds() ? std::string("0") : ch.difference.to_string(c.variables)) << '\n';
    }
    for (const auto& s : c.spot_checks) {
        out << "  spot  " << s.description << ": " << to_decimal(s.lhs) << " vs " << to_decimal(s.rhs)
            << (s.holds() ? "" : "  MISMATCH") << '\n';
    }
    out << "  " << (c.pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

int run_certify(const CertifyOptions& o, std::ostream& out)
{
    if (o.all == !o.id.empty()) {
        throw UsageError("give exactly one of --all and --id");
    }
    const std::vector<Certificate> certs = o.all ? certify_all() : std::vector<Certificate>{certify_by_id(o.id)};
    if (o.output.format == "text") {
        std::string text;
        for (const auto& c : certs) {
            text += certificate_text(c);
        }
        emit(o.output, text, out);
        return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass(); }) ? kExitPass
                                                                                                       : kExitFail;
    }
    std::vector<VerificationReport> reports;
    for (const auto& c : certs) {
        reports.push_back(certificate_report(c));
    }
    return emit_reports(o.output, reports, false, out);
}

// ---- search -------------------------------------------------------------

struct SearchOptions {
    int n = 0;
    std::string pool = "3part+fathook";
    SearchLimits limits;
    std::size_t limit = 0;
    Output output;
};

int run_search(const SearchOptions& o, std::ostream& out)
{
    const SearchPool pool = make_pool(o.n, o.pool);
    const SearchResult result = find_equal_sum_pairs(pool, o.limits);
    std::size_t shown = o.limit == 0 ? result.identities.size() : std::min(o.limit, result.identities.size());

    std::vector<VerificationReport> reports;
    for (std::size_t i = 0; i < shown; ++i) {
        const FoundIdentity& f = result.identities[i];
        VerificationReport r = verify_knapsack_sets(f.left, f.right, "Search");
        r.params.emplace_back("n", o.n);
        r.regime = f.rediscovery.empty() ? "new" : "rediscovery";
        if (!f.rediscovery.empty()) {
            r.details = {{"rediscovery", f.rediscovery}};
        }
        reports.push_back(std::move(r));
    }
    std::size_t known = 0;
    for (const auto& f : result.identities) {
        known += f.rediscovery.empty() ? 0 : 1;
    }

    if (o.output.format == "text") {
        std::ostringstream text;
        text << "pool " << o.pool << ": " << pool.candidates.size() << " shapes, " << result.evaluations
             << " evaluations" << (result.truncated ? ", TRUNCATED" : "") << '\n';
        text << result.identities.size() << " identities, " << known << " rediscoveries\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            text << reports[i].equation() << "    [" << to_decimal(reports[i].lhs) << "]";
            if (!result.identities[i].rediscovery.empty()) {
                text << "  (" << result.identities[i].rediscovery << ")";
            }
            text << '\n';
        }
        emit(o.output, text.str(), out);
        return all_pass(reports) ? kExitPass : kExitFail;
    }
    Json extra = {{"pool_size", pool.candidates.size()},
                  {"identities", result.identities.size()},
                  {"rediscoveries", known},
                  {"evaluations", result.evaluations},
                  {"truncated", result.truncated}};
    return emit_reports(o.output, reports, false, out, std::move(extra));
}

// ---- scan ---------------------------------------------------------------

struct ScanOptions {
    int k = 0;
    int m = 0;
    int d_max = 4;
    Output output{"csv", ""};
};

int run_scan(const ScanOptions& o, std::ostream& out)
{
    const auto rows = scan_even_L(o.k, o.m, o.d_max);
    std::string text;
    if (o.output.format == "json") {
        Json list = Json::array();
        for (const auto& r : rows) {
            list.push_back({{"k", r.k},
                            {"m", r.m},
                            {"d", r.d},
                            {"L_d", to_decimal(r.value)},
                            {"probe", r.probe},
                            {"probe_value", to_decimal(r.probe_value)},
                            {"residual", to_decimal(r.residual)},
                            {"match", r.match}});
        }
        text = Json{{"rows", std::move(list)}}.dump(2) + "\n";
    } else if (o.output.format == "text") {
        for (const auto& r : rows) {
            text += "d=" + std::to_string(r.d) + " L_d=" + to_decimal(r.value) + " probe " + r.probe +
                    " residual " + to_decimal(r.residual) + " -> " + r.match + "\n";
        }
    } else {
        text = even_window_csv(rows);
    }
    emit(o.output, text, out);
    return kExitPass;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact character degree identities: evaluation, verification and search", "knapsack"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    DegreeOptions degree_opt;
    auto* degree_cmd = app.add_subcommand("degree", "Print f^lambda for a shape such as 5,5,1^10");
    degree_cmd->add_option("--shape", degree_opt.shape, "Comma-separated parts, 1^r repeats")->required();
    degree_cmd->add_option("--method", degree_opt.method, "hook, closed, syt or all")
        ->check(CLI::IsMember({"hook", "closed", "syt", "all"}));
    add_output_options(degree_cmd, degree_opt.output, {"text", "json"});

    PathOptions path_opt;
    auto* paths_cmd = app.add_subcommand(
        "paths", "Count lattice paths (Dyck: n is the semilength; Motzkin/Riordan: n is the number of steps)");
    paths_cmd->add_option("--kind", path_opt.kind, "dyck, motzkin or riordan")->required();
    paths_cmd->add_option("--n", path_opt.n, "Length parameter")->required()->check(CLI::Range(0, 2000));
    paths_cmd->add_option("--flats", path_opt.flats, "Riordan paths with this many flat steps")
        ->check(CLI::Range(0, 2000));
    paths_cmd->add_option("--ups", path_opt.ups, "... and this many up steps")->check(CLI::Range(0, 2000));
    paths_cmd->add_flag("--list", path_opt.list, "Also list the paths (n <= 16)");
    add_output_options(paths_cmd, path_opt.output, {"text", "json"});

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Verify one identity instance, or sweep a family");
    verify_cmd
        ->add_option("--id", verify_opt.id,
                     "thm1.4, thm1.3, lwindow, lem2.3, thm4.2, cor4.4, ex4.1, eq4.5, thm4.7, prop2.4, hookwrap, "
                     "regev, branch")
        ->required();
    verify_cmd->add_flag("--sweep", verify_opt.sweep, "Run the family over its default grid");
    verify_cmd->add_option("--n", verify_opt.n)->check(CLI::Range(0, 400));
    verify_cmd->add_option("--k", verify_opt.k)->check(CLI::Range(0, 400));
    verify_cmd->add_option("--m", verify_opt.m)->check(CLI::Range(0, 400));
    verify_cmd->add_option("--d", verify_opt.d)->check(CLI::Range(0, 50));
    verify_cmd->add_option("--class", verify_opt.cls, "X-set class, 1 or 2");
    verify_cmd->add_option("--mu", verify_opt.mu, "Shape for hookwrap");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "Sweep bound on n")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-k", verify_opt.max_k, "Sweep bound on k")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-m", verify_opt.max_m, "Sweep bound on m")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-d", verify_opt.max_d, "Sweep bound on d")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-mu", verify_opt.max_mu, "Sweep bound on |mu|")->check(CLI::NonNegativeNumber);
    add_output_options(verify_cmd, verify_opt.output, {"text", "json", "csv"});

    TableOptions table_opt;
    auto* table_cmd = app.add_subcommand("table", "Reproduce a worked table");
    table_cmd->add_option("--id", table_opt.id, "intro-n20, intro-n32 or lem2.3-n35")
        ->required()
        ->check(CLI::IsMember(table_ids()));
    add_output_options(table_cmd, table_opt.output, {"text", "json", "csv"});

    CertifyOptions certify_opt;
    auto* certify_cmd = app.add_subcommand("certify", "Run the symbolic certificates");
    certify_cmd->add_flag("--all", certify_opt.all, "Every certificate");
    certify_cmd->add_option("--id", certify_opt.id, "lem2.3, prop2.4, lem4.3, h-swap or s-symmetry");
    add_output_options(certify_cmd, certify_opt.output, {"text", "json"});

    SearchOptions search_opt;
    auto* search_cmd = app.add_subcommand("search", "Look for equal degree sums over disjoint shape sets");
    search_cmd->add_option("--n", search_opt.n)->required()->check(CLI::Range(1, 60));
    search_cmd->add_option("--pool", search_opt.pool, "Families joined by +: 3part, fathook, parity3, kk1, all");
    search_cmd->add_option("--max-left", search_opt.limits.max_left)->check(CLI::Range(1, 8));
    search_cmd->add_option("--max-right", search_opt.limits.max_right)->check(CLI::Range(1, 8));
    search_cmd->add_option("--max-evals", search_opt.limits.max_evaluations, "Hard cap on evaluations")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10'000'000}));
    search_cmd->add_option("--max-results", search_opt.limits.max_results)->check(CLI::PositiveNumber);
    search_cmd->add_option("--limit", search_opt.limit, "Print only the first N identities (0 = all)");
    add_output_options(search_cmd, search_opt.output, {"text", "json"});

    ScanOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate L_d(k,m) for even d with probe residuals");
    scan_cmd->add_option("--k", scan_opt.k)->required()->check(CLI::Range(2, 200));
    scan_cmd->add_option("--m", scan_opt.m)->required()->check(CLI::Range(2, 200));
    scan_cmd->add_option("--d-max", scan_opt.d_max)->check(CLI::Range(0, 40));
    add_output_options(scan_cmd, scan_opt.output, {"csv", "json", "text"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*degree_cmd) {
            return run_degree(degree_opt, out);
        }
        if (*paths_cmd) {
            return run_paths(path_opt, out);
        }
        if (*verify_cmd) {
            return run_verify(verify_opt, out);
        }
        if (*table_cmd) {
            return run_table(table_opt, out);
        }
        if (*certify_cmd) {
            return run_certify(certify_opt, out);
        }
        if (*search_cmd) {
            return run_search(search_opt, out);
        }
        if (*scan_cmd) {
            return run_scan(scan_opt, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace knapsack::cli
