#pragma once

#include "knapsack/partition.hpp"
#include "knapsack/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace knapsack {

/// The single place deciding which X-set carries the two-term fat-hook sum:
/// true (X1 and X2 trade roles) exactly when k > ceil(n/3) and k, n differ
/// in parity.
bool roles_swapped(int n, int k);
std::string regime_text(int n, int k);

/// Both degree-sum identities for the three-part partitions of n with second
/// part k. first: X-set = f^(k,k,1^(n-2k)) + f^(k+1,k+1,1^(n-2k-2)).
/// second: other X-set = f^(k+1,k,1^(n-2k-1)). Shapes that are not
/// partitions are dropped from the right side.
/// Requires n >= 1, 0 <= k <= n/2.
std::pair<VerificationReport, VerificationReport> verify_second_part_identities(int n, int k);

/// Per-k reports for k = n (mod 2), then a total report comparing the
/// equal-parity three-part sum, the fat-hook sum over 1 <= k <= n/2, and
/// the Riordan number.
std::vector<VerificationReport> verify_riordan_refinement(int n);

/// L_{2d+1}(k,m) = sum_{j<=2d} f^(k+j,k+j,1^(m-2j)) against every closed form
/// whose validity region contains (d,k,m): small m (m <= k, m >= 4(d-1)),
/// large m (m >= k+6d-3), the eight d=2 cases 1 <= m-k <= 8, and the
/// three-case d=1 form for m >= 4. Requires k, m >= 2; throws
/// std::invalid_argument when no region applies.
std::vector<VerificationReport> verify_fat_hook_window(int d, int k, int m);

/// The same window with every term replaced by its analytic extension.
/// A singular argument gives a failing report with a note.
VerificationReport verify_analytic_window(int d, int k, int m);

/// f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) against
/// h1(k+1,k-2d-1;m+2d) - h1(k-1,k-2d-1;m+2d+2) + sum_{j<=d} h(m+2j,k,k-2j)
/// at d = floor(k/2), m = n-2k. Inside the first regime the h terms that are
/// not partitions must cancel and the rest must sum to X1(n,k).
/// Requires k >= 1, n - 2k >= 2.
VerificationReport verify_h_expansion(int n, int k);

/// f^(k,k,1^m) + f^(k+1,k+1,1^(m-2)) = f^(k+1,k,1^(m-1)) for |k-m| = 1.
VerificationReport verify_boundary_pair(int k, int m);

/// Signed sum over add_rim_hooks(mu, k) is zero.
VerificationReport verify_hook_wrap(const Partition& mu, int k);

/// Sum over (j,j,2^(m-j)), 2 <= j <= m, against the sum over partitions of
/// 2m-2 with at most four parts, and both against C_{m-1} C_m.
VerificationReport verify_regev(int m);

/// Removes one box from each row of every member of x_set(n,k,cls) and
/// names the result per row as an X-set of n-1 minus at most one term.
VerificationReport verify_branching_decomposition(int n, int k, XSetClass cls);

/// Plain degree-sum comparison of two partition lists.
VerificationReport verify_knapsack_sets(const std::vector<Partition>& left, const std::vector<Partition>& right,
                                        std::string id = "Knapsack");

/// Table ids: "intro-n20", "intro-n32", "lem2.3-n35".
std::vector<VerificationReport> reproduce_table(const std::string& id);
std::vector<std::string> table_ids();
/// One line per identity: equation, common value, PASS/FAIL.
std::string table_text(const std::vector<VerificationReport>& reports);

}  // namespace knapsack
