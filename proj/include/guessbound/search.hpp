#pragma once

#include <cstdint>
#include <optional>

#include "guessbound/encoder.hpp"

namespace guessbound {

// Candidate cap for exact enumeration; beyond it callers must opt into the
// local search explicitly.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchResult {
  enum class Method { exact, local_search };

  double best_value = 0.0;
  std::optional<Encoder> best_phi_x;
  std::optional<Encoder> best_phi_y;
  Estimator best_psi;
  Method method = Method::exact;
  std::uint64_t candidates_evaluated = 0;
  int restarts = 0;
};

inline const char* method_name(SearchResult::Method m) {
  return m == SearchResult::Method::exact ? "exact" : "local-search";
}

// Global maximum of sum_s max_x p_XS(x,s) over all partitions of Y into at
// most l_size blocks. Enumeration is over canonical restricted growth
// strings in lexicographic order; value ties keep the first (lex-smallest)
// string. The partition stream may be split into contiguous chunks processed
// by independent workers; the reduction is bit-identical to the serial scan.
SearchResult exact_case2(const JointDist& j, int l_size, std::uint64_t budget = kDefaultBudget,
                         int threads = 1);

// Global maximum over pairs (partition of X into <= m_size blocks, partition
// of Y into <= l_size blocks) of the jointly decoded correct probability.
SearchResult exact_case1(const JointDist& j, int m_size, int l_size,
                         std::uint64_t budget = kDefaultBudget);

// Best-improvement hill climbing over single-element block moves, restarted
// from seeded uniform random partitions. Deterministic given (input, seed,
// restarts); restarts == 0 is treated as one start.
SearchResult local_search_case2(const JointDist& j, int l_size, int restarts, std::uint64_t seed);

struct CaseOptima {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

// The three optima; checks P1 >= P2 >= P3 = p_max to 1e-12 before returning.
CaseOptima ordering_check(const JointDist& j, int m_size, int l_size,
                          std::uint64_t budget = kDefaultBudget);

}  // namespace guessbound
