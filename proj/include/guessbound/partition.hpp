#pragma once

#include <cstdint>
#include <vector>

namespace guessbound {

// Set partitions of {0..n-1} into at most k blocks, encoded as restricted
// growth strings: a[0] = 0 and a[i] <= max(a[0..i-1]) + 1. Enumeration is
// lexicographic, yielding exactly one canonical representative per
// partition; the count is sum_{j=1..min(n,k)} S(n,j) (Stirling numbers of
// the second kind).
class PartitionGen {
 public:
  PartitionGen(int n, int max_blocks);

  const std::vector<int>& current() const { return rgs_; }
  int block_count() const { return prefix_max_back_ + 1; }

  // Advances to the next string in lexicographic order; false when the
  // current string was the last one.
  bool advance();

 private:
  int n_;
  int k_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;  // prefix_max_[i] = max(rgs_[0..i])
  int prefix_max_back_ = 0;
};

// Number of restricted growth strings of length n with at most k blocks,
// saturating at the cap (2^63-1) instead of overflowing.
std::uint64_t count_partitions_up_to(int n, int k);

// rank-th string (0-based, lexicographic order). rank must be below the
// exact count; intended for splitting the enumeration into contiguous
// chunks that independent workers can process.
std::vector<int> unrank_partition(int n, int k, std::uint64_t rank);

// Canonical relabeling of an arbitrary block-assignment vector: block labels
// appear in first-occurrence order and empty labels vanish.
std::vector<int> canonicalize_rgs(const std::vector<int>& assignment);

}  // namespace guessbound
