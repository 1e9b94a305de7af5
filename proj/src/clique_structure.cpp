#include "alphar/clique_structure.hpp"

#include <algorithm>
#include <string>

#include "alphar/errors.hpp"

namespace alphar {
namespace {

void check_r(std::int64_t r) {
  if (r < 1 || r > kMaxR) throw RangeError("r must lie in [1, " + std::to_string(kMaxR) + "]");
}

}  // namespace

MuXi mu_xi(std::int64_t r, std::int64_t j) {
  check_r(r);
  if (j < 1 || j > r) throw RangeError("j must lie in [1, r]");
  const std::int64_t mu = (r - j) / j;
  return {mu, j * (mu + 2) - r};
}

JProfile j_set(std::int64_t r) {
  check_r(r);
  JProfile profile;
  profile.r = r;
  profile.mu.reserve(static_cast<std::size_t>(r));
  profile.xi.reserve(static_cast<std::size_t>(r));
  for (std::int64_t j = 1; j <= r; ++j) {
    const auto [mu, xi] = mu_xi(r, j);
    profile.mu.push_back(mu);
    profile.xi.push_back(xi);
  }
  for (std::int64_t j = 1; j <= r; ++j) {
    const std::int64_t next = j == r ? -1 : profile.mu_at(j + 1);
    if (profile.mu_at(j) != next) profile.breakpoints.push_back(j);
  }
  return profile;
}

std::vector<std::int64_t> interval_length_sequence(std::int64_t r) {
  const JProfile profile = j_set(r);
  std::vector<std::int64_t> lengths;
  std::int64_t previous = 0;
  for (const std::int64_t j : profile.breakpoints) {
    lengths.push_back(1);
    lengths.push_back(j - previous + 1);
    previous = j;
  }
  return lengths;
}

std::vector<std::int64_t> interval_length_set(std::int64_t r) {
  std::vector<std::int64_t> lengths = interval_length_sequence(r);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

StructureCounts structure_accounting(std::int64_t r, std::int64_t j) {
  const auto [mu, xi] = mu_xi(r, j);
  (void)mu;
  return {xi, j - xi, r - j};
}

}  // namespace alphar
