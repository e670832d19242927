#pragma once

#include "knapsack/bigint.hpp"
#include "knapsack/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace knapsack {

/// One symbolic claim "lhs == rhs" decided by the cross-multiplied
/// difference polynomial.
struct CertificateCheck {
    std::string description;
    std::string lhs;
    std::string rhs;
    MultiPoly difference;

    bool holds() const { return difference.is_zero(); }
};

/// Exact numeric instance of the certified identity, evaluated through the
/// hook length formula or the analytic extensions.
struct SpotCheck {
    std::string description;
    std::vector<std::pair<std::string, long long>> params;
    BigInt lhs;
    BigInt rhs;

    bool holds() const { return lhs == rhs; }
};

struct Certificate {
    std::string id;
    std::string statement;
    std::vector<std::string> variables;
    std::vector<CertificateCheck> checks;
    std::vector<SpotCheck> spot_checks;

    bool symbolic_pass() const;
    bool pass() const;
    /// Concatenation of every nonzero difference, "0" when all vanish.
    std::string difference_text() const;
};

/// L(k,m) - f^(k+2,k,1^(m-2)) equals (2k+m)! (k-m+1)(k-m+2) / ((k+1)! (k+2)! m!),
/// and so do f^(m-2,k+1,k+1) and f^(k,k,m).
Certificate certify_three_window();

/// f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) - f^(k+1,k,1^(m-1)) has a closed form
/// carrying the factor (k-m-1)(k-m+1).
Certificate certify_boundary_pair();

/// f^(l,k,m) = f^(l,k,1^m) - f^(l,k+2,1^(m-2)) - f^(l+2,k,1^(m-2)) + f^(l+2,k+2,1^(m-4)).
Certificate certify_four_term();

/// h(x,y,z) = h(z-2, x+1, y+1).
Certificate certify_h_swap();

/// s(j) = h(m+2j, k, k-2j) satisfies s((k-m)/2 - 1 - j) = -s(j).
Certificate certify_s_symmetry();

std::vector<Certificate> certify_all();

/// Looks a certificate up by its wire id ("lem2.3", "prop2.4", "lem4.3",
/// "h-swap", "s-symmetry"). Throws std::invalid_argument when unknown.
Certificate certify_by_id(const std::string& id);

}  // namespace knapsack
