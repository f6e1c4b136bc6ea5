#include "guessbound/dist.hpp"

#include <algorithm>
#include <cmath>

#include "guessbound/errors.hpp"

namespace guessbound {

namespace {

std::vector<std::string> default_labels(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

JointDist JointDist::make_joint(const std::vector<std::vector<double>>& table,
                                std::vector<std::string> x_labels,
                                std::vector<std::string> y_labels) {
  if (table.empty() || table[0].empty())
    throw Error(Errc::empty_alphabet, "joint table must have at least one row and column");
  const int nx = static_cast<int>(table.size());
  const int ny = static_cast<int>(table[0].size());
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(nx) * ny);
  double total = 0.0;
  for (int x = 0; x < nx; ++x) {
    if (static_cast<int>(table[x].size()) != ny)
      throw Error(Errc::validation_error,
                  "joint table is not rectangular at row " + std::to_string(x));
    for (int y = 0; y < ny; ++y) {
      double v = table[x][y];
      if (v < -1e-12)
        throw Error(Errc::negative_mass, "negative probability at (" + std::to_string(x) + "," +
                                             std::to_string(y) + "): " + std::to_string(v));
      if (v < 0) v = 0.0;
      flat.push_back(v);
      total += v;
    }
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw Error(Errc::not_normalized, "joint table mass is " + std::to_string(total));
  for (double& v : flat) v /= total;

  JointDist j;
  j.x_size_ = nx;
  j.y_size_ = ny;
  j.p_ = std::move(flat);
  j.x_labels_ = x_labels.empty() ? default_labels("x", nx) : std::move(x_labels);
  j.y_labels_ = y_labels.empty() ? default_labels("y", ny) : std::move(y_labels);
  if (static_cast<int>(j.x_labels_.size()) != nx || static_cast<int>(j.y_labels_.size()) != ny)
    throw Error(Errc::validation_error, "label count does not match table shape");
  return j;
}

JointDist JointDist::from_normalized(std::vector<double> row_major, int x_size, int y_size,
                                     std::vector<std::string> x_labels,
                                     std::vector<std::string> y_labels) {
  if (x_size < 1 || y_size < 1)
    throw Error(Errc::empty_alphabet, "joint table must have at least one row and column");
  if (row_major.size() != static_cast<size_t>(x_size) * y_size)
    throw Error(Errc::dimension_mismatch, "table size does not match shape");
  double total = 0.0;
  for (double v : row_major) {
    if (v < 0) throw Error(Errc::negative_mass, "negative probability in derived table");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw Error(Errc::not_normalized, "derived table mass is " + std::to_string(total));
  JointDist j;
  j.x_size_ = x_size;
  j.y_size_ = y_size;
  j.p_ = std::move(row_major);
  j.x_labels_ = x_labels.empty() ? default_labels("x", x_size) : std::move(x_labels);
  j.y_labels_ = y_labels.empty() ? default_labels("s", y_size) : std::move(y_labels);
  return j;
}

double CondDist::at(int out, int given) const {
  if (!support_[given])
    throw Error(Errc::validation_error,
                "conditional row " + std::to_string(given) + " has zero marginal");
  return rows_[static_cast<size_t>(given) * out_size_ + out];
}

void CondDist::set_row(int given, const std::vector<double>& row) {
  std::copy(row.begin(), row.end(), rows_.begin() + static_cast<size_t>(given) * out_size_);
  support_[given] = true;
}

std::vector<double> marginal_x(const JointDist& j) {
  std::vector<double> px(j.x_size(), 0.0);
  for (int x = 0; x < j.x_size(); ++x)
    for (int y = 0; y < j.y_size(); ++y) px[x] += j.p(x, y);
  return px;
}

std::vector<double> marginal_y(const JointDist& j) {
  std::vector<double> py(j.y_size(), 0.0);
  for (int x = 0; x < j.x_size(); ++x)
    for (int y = 0; y < j.y_size(); ++y) py[y] += j.p(x, y);
  return py;
}

double p_max(const JointDist& j) {
  const auto px = marginal_x(j);
  return *std::max_element(px.begin(), px.end());
}

CondDist conditional_x_given_s(const JointDist& xs) {
  const auto ps = marginal_y(xs);
  CondDist cond(xs.y_size(), xs.x_size());
  std::vector<double> row(xs.x_size());
  for (int s = 0; s < xs.y_size(); ++s) {
    if (ps[s] <= 0.0) continue;  // masked, never read
    for (int x = 0; x < xs.x_size(); ++x) row[x] = xs.p(x, s) / ps[s];
    cond.set_row(s, row);
  }
  return cond;
}

InfoValue mutual_information(const JointDist& xs) {
  const auto px = marginal_x(xs);
  const auto ps = marginal_y(xs);
  double bits = 0.0;
  for (int x = 0; x < xs.x_size(); ++x) {
    for (int s = 0; s < xs.y_size(); ++s) {
      const double pxs = xs.p(x, s);
      if (pxs <= 0.0) continue;
      bits += pxs * std::log2(pxs / (px[x] * ps[s]));
    }
  }
  return InfoValue{std::max(bits, 0.0)};
}

double relative_ic_spectrum_mass(const JointDist& xs, double nu) {
  const auto px = marginal_x(xs);
  const auto ps = marginal_y(xs);
  double mass = 0.0;
  for (int x = 0; x < xs.x_size(); ++x) {
    for (int s = 0; s < xs.y_size(); ++s) {
      const double pxs = xs.p(x, s);
      if (pxs <= 0.0) continue;
      const double density = std::log2(pxs / (px[x] * ps[s]));
      if (density >= nu) mass += pxs;
    }
  }
  return mass;
}

double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace guessbound
