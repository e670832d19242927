#include "knapsack/report.hpp"

#include "knapsack/degree.hpp"

#include <algorithm>
#include <sstream>

namespace knapsack {

namespace {

std::string join_args(const std::vector<long>& args, const char* sep_last = ",")
{
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) {
            out += (i + 1 == args.size()) ? sep_last : ",";
        }
        out += std::to_string(args[i]);
    }
    return out;
}

const char* kind_name(TermKind kind)
{
    switch (kind) {
    case TermKind::Degree:
        return "f";
    case TermKind::H:
        return "h";
    case TermKind::H1:
        return "h1";
    }
    return "?";
}

}  // namespace

std::string term_text(const ReportTerm& term)
{
    if (!term.label.empty()) {
        return term.label;
    }
    switch (term.kind) {
    case TermKind::Degree:
        return "f^(" + join_args(term.args) + ")";
    case TermKind::H:
        return "h(" + join_args(term.args) + ")";
    case TermKind::H1:
        return "h1(" + join_args(term.args, ";") + ")";
    }
    return "?";
}

bool VerificationReport::terms_consistent() const
{
    BigInt left = 0;
    BigInt right = 0;
    for (const auto& t : terms) {
        BigInt& side = t.side == 'L' ? left : right;
        side += t.sign > 0 ? t.value : BigInt(-t.value);
    }
    return left == lhs && right == rhs;
}

std::string VerificationReport::equation() const
{
    std::string sides[2];
    for (const auto& t : terms) {
        std::string& s = sides[t.side == 'L' ? 0 : 1];
        if (s.empty()) {
            s = (t.sign < 0 ? "-" : "") + term_text(t);
        } else {
            s += (t.sign < 0 ? " - " : " + ") + term_text(t);
        }
    }
    for (auto& s : sides) {
        if (s.empty()) {
            s = "0";
        }
    }
    return sides[0] + " = " + sides[1];
}

ReportBuilder::ReportBuilder(std::string id)
{
    report_.id = std::move(id);
}

ReportBuilder& ReportBuilder::param(std::string name, long long value)
{
    report_.params.emplace_back(std::move(name), value);
    return *this;
}

ReportBuilder& ReportBuilder::regime(std::string text)
{
    report_.regime = std::move(text);
    return *this;
}

ReportBuilder& ReportBuilder::note(std::string text)
{
    report_.notes.push_back(std::move(text));
    return *this;
}

ReportBuilder& ReportBuilder::degree(char side, int sign, const Partition& lambda, int min_parts)
{
    std::vector<long> args;
    for (int p : lambda.padded(min_parts)) {
        args.push_back(p);
    }
    return value(side, sign, TermKind::Degree, std::move(args), "f^(" + lambda.to_string(min_parts) + ")",
                 knapsack::degree(lambda));
}

bool ReportBuilder::degree_if(char side, int sign, const std::optional<Partition>& shape, int min_parts)
{
    if (!shape) {
        return false;
    }
    degree(side, sign, *shape, min_parts);
    return true;
}

ReportBuilder& ReportBuilder::h(char side, int sign, long x, long y, long z)
{
    return value(side, sign, TermKind::H, {x, y, z}, "", h_analytic(x, y, z).to_integer());
}

ReportBuilder& ReportBuilder::h1(char side, int sign, long x, long y, long r)
{
    return value(side, sign, TermKind::H1, {x, y, r}, "", h1_analytic(x, y, r).to_integer());
}

ReportBuilder& ReportBuilder::value(char side, int sign, TermKind kind, std::vector<long> args, std::string label,
                                   BigInt v)
{
    ReportTerm t;
    t.side = side;
    t.sign = sign < 0 ? -1 : 1;
    t.kind = kind;
    t.args = std::move(args);
    t.label = std::move(label);
    t.value = std::move(v);
    BigInt& total = side == 'L' ? report_.lhs : report_.rhs;
    total += t.sign > 0 ? t.value : BigInt(-t.value);
    report_.terms.push_back(std::move(t));
    return *this;
}

ReportBuilder& ReportBuilder::reference(std::string label, BigInt value)
{
    report_.reference = Reference{std::move(label), std::move(value)};
    return *this;
}

ReportBuilder& ReportBuilder::details(Json value)
{
    report_.details = std::move(value);
    return *this;
}

VerificationReport ReportBuilder::finish()
{
    report_.pass = report_.lhs == report_.rhs && (!report_.reference || report_.reference->value == report_.lhs);
    return std::move(report_);
}

Json to_json(const VerificationReport& report)
{
    Json j;
    j["id"] = report.id;
    Json params = Json::object();
    for (const auto& [name, value] : report.params) {
        params[name] = value;
    }
    j["params"] = std::move(params);
    j["lhs"] = to_decimal(report.lhs);
    j["rhs"] = to_decimal(report.rhs);
    j["pass"] = report.pass;
    j["regime"] = report.regime;
    Json terms = Json::array();
    for (const auto& t : report.terms) {
        Json term;
        term["side"] = std::string(1, t.side);
        term["sign"] = t.sign;
        term["kind"] = kind_name(t.kind);
        term["shape"] = t.args;
        term["value"] = to_decimal(t.value);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    if (report.reference) {
        j["reference"] = {{"label", report.reference->label}, {"value", to_decimal(report.reference->value)}};
    }
    if (!report.notes.empty()) {
        j["notes"] = report.notes;
    }
    if (!report.details.is_null()) {
        j["details"] = report.details;
    }
    return j;
}

Json to_json(std::span<const VerificationReport> reports)
{
    Json list = Json::array();
    for (const auto& r : reports) {
        list.push_back(to_json(r));
    }
    Json out;
    out["reports"] = std::move(list);
    out["all_pass"] = all_pass(reports);
    return out;
}

std::string to_text(const VerificationReport& report)
{
    std::ostringstream out;
    out << report.id;
    for (const auto& [name, value] : report.params) {
        out << ' ' << name << '=' << value;
    }
    if (!report.regime.empty()) {
        out << " [" << report.regime << ']';
    }
    out << '\n' << "  " << report.equation() << '\n';
    out << "  lhs = " << to_decimal(report.lhs) << ", rhs = " << to_decimal(report.rhs) << '\n';
    if (report.reference) {
        out << "  " << report.reference->label << " = " << to_decimal(report.reference->value) << '\n';
    }
    for (const auto& n : report.notes) {
        out << "  note: " << n << '\n';
    }
    out << "  " << (report.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

bool all_pass(std::span<const VerificationReport> reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace knapsack
