#include "guessbound/partition.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "guessbound/errors.hpp"

namespace guessbound {

namespace {

constexpr std::uint64_t kCountCap = std::numeric_limits<std::uint64_t>::max() / 2;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > kCountCap - b) ? kCountCap : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

// completions[i][b] = number of ways to extend a prefix that has used b
// blocks by i more positions, keeping at most k blocks overall.
std::vector<std::vector<std::uint64_t>> completion_table(int n, int k) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(k + 2, 0));
  for (int b = 0; b <= k + 1; ++b) c[0][b] = 1;
  for (int i = 1; i <= n; ++i)
    for (int b = 1; b <= k; ++b) {
      std::uint64_t ways = sat_mul(static_cast<std::uint64_t>(b), c[i - 1][b]);
      if (b < k) ways = sat_add(ways, c[i - 1][b + 1]);
      c[i][b] = ways;
    }
  return c;
}

}  // namespace

PartitionGen::PartitionGen(int n, int max_blocks) : n_(n), k_(max_blocks) {
  if (n < 1 || max_blocks < 1)
    throw Error(Errc::empty_alphabet, "partition enumeration needs n >= 1 and k >= 1");
  rgs_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

bool PartitionGen::advance() {
  // Find the rightmost position that can be incremented, then reset the
  // suffix to zeros.
  for (int i = n_ - 1; i >= 1; --i) {
    const int limit = std::min(prefix_max_[i - 1] + 1, k_ - 1);
    if (rgs_[i] < limit) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (int j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      prefix_max_back_ = prefix_max_[n_ - 1];
      return true;
    }
  }
  return false;
}

std::uint64_t count_partitions_up_to(int n, int k) {
  if (n < 1 || k < 1) return 0;
  const auto c = completion_table(n, std::min(n, k));
  return c[n - 1][1];  // first position is pinned to block 0
}

std::vector<int> unrank_partition(int n, int k, std::uint64_t rank) {
  k = std::min(n, k);
  const auto c = completion_table(n, k);
  std::vector<int> rgs(n, 0);
  int blocks = 1;
  for (int i = 1; i < n; ++i) {
    const int remaining = n - i - 1;
    const std::uint64_t per_existing = c[remaining][blocks];
    // labels 0..blocks-1 first (same completion count each), then a new block
    if (rank < static_cast<std::uint64_t>(blocks) * per_existing) {
      rgs[i] = static_cast<int>(rank / per_existing);
      rank %= per_existing;
    } else {
      rank -= static_cast<std::uint64_t>(blocks) * per_existing;
      rgs[i] = blocks;
      ++blocks;
    }
  }
  if (rank != 0)
    throw Error(Errc::validation_error, "partition rank out of range: " + std::to_string(rank));
  return rgs;
}

std::vector<int> canonicalize_rgs(const std::vector<int>& assignment) {
  std::vector<int> relabel(assignment.size(), -1);
  std::vector<int> out(assignment.size());
  int next = 0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    const int b = assignment[i];
    if (relabel[b] < 0) relabel[b] = next++;
    out[i] = relabel[b];
  }
  return out;
}

}  // namespace guessbound
