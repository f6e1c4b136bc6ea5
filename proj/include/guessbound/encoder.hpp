#pragma once

#include <utility>
#include <vector>

#include "guessbound/dist.hpp"

namespace guessbound {

// Deterministic total function from a finite alphabet into a fixed label set
// {0, ..., range_size-1}. Need not be surjective. For the objectives in this
// library only the fiber partition of the map matters.
struct Encoder {
  int domain_size = 0;
  int range_size = 0;
  std::vector<int> map;  // length domain_size, values < range_size

  static Encoder identity(int n);
  static Encoder constant(int n);
  static Encoder from_map(std::vector<int> map, int range_size);

  int operator()(int v) const { return map[v]; }
};

// Decision table psi : M x L -> X. Case 2 is m_size == 1; Case 3 is
// m_size == l_size == 1.
struct Estimator {
  int m_size = 0;
  int l_size = 0;
  std::vector<int> table;  // row-major m_size * l_size, X-indices

  int operator()(int m, int l) const { return table[static_cast<size_t>(m) * l_size + l]; }
};

struct EvalResult {
  double p_correct = 0.0;
  double p_error = 0.0;
};

// Joint over X x S induced by S = phiY(Y): columns of p_XY merged by fiber.
JointDist induced_joint_xs(const JointDist& j, const Encoder& phi_y);

// P_c = sum_{x,y} p(x,y) [ psi(phiX(x), phiY(y)) == x ].
EvalResult eval_case1(const JointDist& j, const Encoder& phi_x, const Encoder& phi_y,
                      const Estimator& psi);

// Optimal decision for a fixed side-information channel: psi(s) = argmax_x
// p_XS(x,s), ties toward the smallest X-index; zero-mass columns get the
// prior argmax. Returns the estimator (with m_size == 1) and its exact value
// P_c = sum_s max_x p_XS(x,s).
std::pair<Estimator, EvalResult> map_estimator_case2(const JointDist& xs);

// Optimal decision given both encodings: psi(m,l) maximizes p_XS(x,l) over
// the fiber {x : phiX(x) = m}; empty fibers get index 0 (they carry no mass).
std::pair<Estimator, EvalResult> map_estimator_case1(const JointDist& j, const Encoder& phi_x,
                                                     const Encoder& phi_y);

}  // namespace guessbound
