#include "guessbound/encoder.hpp"

#include <numeric>
#include <string>

#include "guessbound/errors.hpp"

namespace guessbound {

namespace {

void check_encoder(const Encoder& e, int expected_domain, const char* which) {
  if (e.domain_size != expected_domain || static_cast<int>(e.map.size()) != e.domain_size)
    throw Error(Errc::dimension_mismatch,
                std::string(which) + " encoder domain does not match alphabet");
  for (int v : e.map)
    if (v < 0 || v >= e.range_size)
      throw Error(Errc::dimension_mismatch, std::string(which) + " encoder maps outside its range");
}

void check_estimator(const Estimator& psi, int m_size, int l_size, int x_size) {
  if (psi.m_size != m_size || psi.l_size != l_size ||
      static_cast<int>(psi.table.size()) != m_size * l_size)
    throw Error(Errc::dimension_mismatch, "estimator shape does not match encoder ranges");
  for (int v : psi.table)
    if (v < 0 || v >= x_size)
      throw Error(Errc::dimension_mismatch, "estimator output is not a valid X-index");
}

int argmax_smallest_index(const std::vector<double>& v) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

}  // namespace

Encoder Encoder::identity(int n) {
  Encoder e;
  e.domain_size = n;
  e.range_size = n;
  e.map.resize(n);
  std::iota(e.map.begin(), e.map.end(), 0);
  return e;
}

Encoder Encoder::constant(int n) {
  Encoder e;
  e.domain_size = n;
  e.range_size = 1;
  e.map.assign(n, 0);
  return e;
}

Encoder Encoder::from_map(std::vector<int> map, int range_size) {
  Encoder e;
  e.domain_size = static_cast<int>(map.size());
  e.range_size = range_size;
  e.map = std::move(map);
  check_encoder(e, e.domain_size, "given");
  return e;
}

JointDist induced_joint_xs(const JointDist& j, const Encoder& phi_y) {
  check_encoder(phi_y, j.y_size(), "side-information");
  const int nx = j.x_size();
  const int ns = phi_y.range_size;
  std::vector<double> merged(static_cast<size_t>(nx) * ns, 0.0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < j.y_size(); ++y)
      merged[static_cast<size_t>(x) * ns + phi_y(y)] += j.p(x, y);
  return JointDist::from_normalized(std::move(merged), nx, ns, j.x_labels());
}

EvalResult eval_case1(const JointDist& j, const Encoder& phi_x, const Encoder& phi_y,
                      const Estimator& psi) {
  check_encoder(phi_x, j.x_size(), "data");
  check_encoder(phi_y, j.y_size(), "side-information");
  check_estimator(psi, phi_x.range_size, phi_y.range_size, j.x_size());
  double pc = 0.0;
  for (int x = 0; x < j.x_size(); ++x)
    for (int y = 0; y < j.y_size(); ++y)
      if (psi(phi_x(x), phi_y(y)) == x) pc += j.p(x, y);
  return EvalResult{pc, 1.0 - pc};
}

std::pair<Estimator, EvalResult> map_estimator_case2(const JointDist& xs) {
  const int nx = xs.x_size();
  const int ns = xs.y_size();
  const auto px = marginal_x(xs);
  const int prior_guess = argmax_smallest_index(px);

  Estimator psi;
  psi.m_size = 1;
  psi.l_size = ns;
  psi.table.resize(ns);
  double pc = 0.0;
  for (int s = 0; s < ns; ++s) {
    int best = 0;
    double best_p = xs.p(0, s);
    for (int x = 1; x < nx; ++x)
      if (xs.p(x, s) > best_p) {
        best_p = xs.p(x, s);
        best = x;
      }
    if (best_p <= 0.0) {
      psi.table[s] = prior_guess;  // zero-mass column, contributes nothing
    } else {
      psi.table[s] = best;
      pc += best_p;
    }
  }
  return {std::move(psi), EvalResult{pc, 1.0 - pc}};
}

std::pair<Estimator, EvalResult> map_estimator_case1(const JointDist& j, const Encoder& phi_x,
                                                     const Encoder& phi_y) {
  check_encoder(phi_x, j.x_size(), "data");
  const JointDist xs = induced_joint_xs(j, phi_y);
  const int nm = phi_x.range_size;
  const int nl = phi_y.range_size;

  Estimator psi;
  psi.m_size = nm;
  psi.l_size = nl;
  psi.table.assign(static_cast<size_t>(nm) * nl, 0);
  double pc = 0.0;
  for (int m = 0; m < nm; ++m) {
    for (int l = 0; l < nl; ++l) {
      int best = 0;
      double best_p = -1.0;
      for (int x = 0; x < j.x_size(); ++x) {
        if (phi_x(x) != m) continue;
        if (xs.p(x, l) > best_p) {
          best_p = xs.p(x, l);
          best = x;
        }
      }
      psi.table[static_cast<size_t>(m) * nl + l] = best;  // empty fiber keeps index 0
      if (best_p > 0.0) pc += best_p;
    }
  }
  return {std::move(psi), EvalResult{pc, 1.0 - pc}};
}

}  // namespace guessbound
