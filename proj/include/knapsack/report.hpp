#pragma once

#include "knapsack/bigint.hpp"
#include "knapsack/partition.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knapsack {

using Json = nlohmann::ordered_json;

enum class TermKind { Degree, H, H1 };

/// One signed summand of an identity. For Degree terms `args` holds the
/// parts (zero padded where the display wants it); for H it holds (x,y,z)
/// and for H1 (x,y,r).
struct ReportTerm {
    char side = 'L';
    int sign = 1;
    TermKind kind = TermKind::Degree;
    std::vector<long> args;
    std::string label;
    BigInt value;
};

struct Reference {
    std::string label;
    BigInt value;
};

struct VerificationReport {
    std::string id;
    std::vector<std::pair<std::string, long long>> params;
    BigInt lhs;
    BigInt rhs;
    bool pass = false;
    std::string regime;
    std::vector<ReportTerm> terms;
    /// Optional third value both sides must also equal (a path count, a
    /// Catalan product, an X-set sum).
    std::optional<Reference> reference;
    std::vector<std::string> notes;
    Json details;

    /// True when the signed term values add up to lhs and rhs.
    bool terms_consistent() const;
    /// Equation text "f^(..) + f^(..) = f^(..)"; an empty side prints as 0.
    std::string equation() const;
};

/// Accumulates terms and sums them into lhs/rhs.
class ReportBuilder {
public:
    explicit ReportBuilder(std::string id);

    ReportBuilder& param(std::string name, long long value);
    ReportBuilder& regime(std::string text);
    ReportBuilder& note(std::string text);

    /// f^lambda, displayed with at least min_parts entries.
    ReportBuilder& degree(char side, int sign, const Partition& lambda, int min_parts = 0);
    /// Adds f^shape if the shape exists; returns whether it did.
    bool degree_if(char side, int sign, const std::optional<Partition>& shape, int min_parts = 0);
    ReportBuilder& h(char side, int sign, long x, long y, long z);
    ReportBuilder& h1(char side, int sign, long x, long y, long r);
    /// A term whose value the caller already has.
    ReportBuilder& value(char side, int sign, TermKind kind, std::vector<long> args, std::string label, BigInt v);

    ReportBuilder& reference(std::string label, BigInt value);
    ReportBuilder& details(Json value);

    /// Sets pass = (lhs == rhs) and, with a reference, lhs == reference.
    VerificationReport finish();

private:
    VerificationReport report_;
};

std::string term_text(const ReportTerm& term);

Json to_json(const VerificationReport& report);
/// {"reports": [...], "all_pass": bool}
Json to_json(std::span<const VerificationReport> reports);
std::string to_text(const VerificationReport& report);

bool all_pass(std::span<const VerificationReport> reports);

}  // namespace knapsack
