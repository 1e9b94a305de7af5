#pragma once

// Arithmetic of the kr + j witness structures: mu_j, xi_j, the breakpoint set
// and the catalogue of concentration-interval lengths for a given r.

#include <cstdint>
#include <vector>

namespace alphar {

inline constexpr std::int64_t kMaxR = 1'000'000;

struct MuXi {
  std::int64_t mu;  ///< defects per (k+1)-part: floor((r-j)/j)
  std::int64_t xi;  ///< number of parts carrying exactly mu defects: j(mu+2) - r
};

/// Throws RangeError unless 1 <= j <= r <= kMaxR.
MuXi mu_xi(std::int64_t r, std::int64_t j);

struct JProfile {
  std::int64_t r = 0;
  std::vector<std::int64_t> mu;  ///< mu[j-1] for j = 1..r
  std::vector<std::int64_t> xi;  ///< xi[j-1] for j = 1..r
  /// j_1 < ... < j_s: the j where mu_j != mu_{j+1}, with mu_{r+1} = -1.
  std::vector<std::int64_t> breakpoints;

  std::int64_t mu_at(std::int64_t j) const { return mu.at(static_cast<std::size_t>(j - 1)); }
  std::int64_t xi_at(std::int64_t j) const { return xi.at(static_cast<std::size_t>(j - 1)); }
  std::size_t s() const { return breakpoints.size(); }
};

JProfile j_set(std::int64_t r);

/// Lengths |I_n| phase by phase over one level: 1, j_1 - j_0 + 1, 1, j_2 - j_1 + 1, ...
/// with j_0 = 0.
std::vector<std::int64_t> interval_length_sequence(std::int64_t r);

/// Distinct values of interval_length_sequence, ascending.
std::vector<std::int64_t> interval_length_set(std::int64_t r);

struct StructureCounts {
  std::int64_t plus_sets_mu;   ///< (k+1)-sets with mu_j defects (= xi_j)
  std::int64_t plus_sets_mu1;  ///< (k+1)-sets with mu_j + 1 defects (= j - xi_j)
  std::int64_t cover_sets;     ///< covering independent k-sets (= r - j)

  std::int64_t total_defects(std::int64_t mu) const {
    return plus_sets_mu * mu + plus_sets_mu1 * (mu + 1);
  }
};

StructureCounts structure_accounting(std::int64_t r, std::int64_t j);

}  // namespace alphar
