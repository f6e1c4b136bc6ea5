#pragma once

#include <string>
#include <vector>

namespace guessbound {

// Finite discrete probability objects. All logarithms are base 2 and all
// information quantities are reported in bits. Everything here is immutable
// after construction and safe to share across threads.

class JointDist {
 public:
  // Validates and renormalizes a joint probability table (rows = X).
  // Entries in [-1e-12, 0) are clamped to zero; entries below that raise
  // NegativeMass. The total mass must be within 1e-9 of 1; the stored table
  // is divided by the exact sum.
  static JointDist make_joint(const std::vector<std::vector<double>>& table,
                              std::vector<std::string> x_labels = {},
                              std::vector<std::string> y_labels = {});

  // Trusted path for tables that are already normalized (sums of entries of
  // an existing JointDist). Checks sign and mass but does not rescale, so
  // derived tables preserve their entries bit for bit.
  static JointDist from_normalized(std::vector<double> row_major, int x_size, int y_size,
                                   std::vector<std::string> x_labels = {},
                                   std::vector<std::string> y_labels = {});

  int x_size() const { return x_size_; }
  int y_size() const { return y_size_; }
  double p(int x, int y) const { return p_[static_cast<size_t>(x) * y_size_ + y]; }
  const std::vector<double>& table() const { return p_; }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

 private:
  JointDist() = default;
  int x_size_ = 0;
  int y_size_ = 0;
  std::vector<double> p_;  // row-major, x_size * y_size
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
};

// Conditional table p(out | given). Rows are indexed by the conditioning
// value; rows whose conditioning value has zero marginal are undefined and
// must not be read (checked via supported()).
class CondDist {
 public:
  CondDist(int given_size, int out_size)
      : given_size_(given_size), out_size_(out_size),
        rows_(static_cast<size_t>(given_size) * out_size, 0.0), support_(given_size, false) {}

  int given_size() const { return given_size_; }
  int out_size() const { return out_size_; }
  bool supported(int given) const { return support_[given]; }
  double at(int out, int given) const;

  // Construction-time hooks; not for general mutation.
  void set_row(int given, const std::vector<double>& row);

 private:
  int given_size_;
  int out_size_;
  std::vector<double> rows_;  // given-major
  std::vector<bool> support_;
};

// Non-negative information quantity in bits.
struct InfoValue {
  double bits = 0.0;
};

std::vector<double> marginal_x(const JointDist& j);
std::vector<double> marginal_y(const JointDist& j);

// Largest X-marginal probability; the blind-guess optimum.
double p_max(const JointDist& j);

// p(X = x | S = s) for a joint over X x S, conditioning on columns.
CondDist conditional_x_given_s(const JointDist& xs);

// I(X;S) = sum p(x,s) log2( p(x,s) / (pX(x) pS(s)) ), with 0 log 0 = 0.
// Tiny negative round-off is clamped to zero.
InfoValue mutual_information(const JointDist& xs);

// Total p_XS-mass of pairs whose information density
// log2( p(x|s) / pX(x) ) is at least nu. Zero-probability pairs contribute
// nothing.
double relative_ic_spectrum_mass(const JointDist& xs, double nu);

// Shannon entropy of a probability vector, in bits.
double entropy_bits(const std::vector<double>& p);

}  // namespace guessbound
