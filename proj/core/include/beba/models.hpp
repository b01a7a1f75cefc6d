#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "beba/graph.hpp"

namespace beba {

/// Value range an opinion vector lives on: [0, 1] for DeGroot/BOF, [-1, 1]
/// for BEBA.
enum class Scale { Unit, Signed };

constexpr double scale_min(Scale s) noexcept { return s == Scale::Unit ? 0.0 : -1.0; }
constexpr double scale_max(Scale) noexcept { return 1.0; }

/// Maps between the two scales: y = 2x - 1.
constexpr double to_signed(double x) noexcept { return 2.0 * x - 1.0; }
constexpr double to_unit(double y) noexcept { return (y + 1.0) / 2.0; }

/// sgn with sgn(0) = 0.
constexpr double sgn(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

/// Per-node opinions tagged with their scale. Every value is finite and
/// inside the scale's range.
class OpinionVector {
 public:
  OpinionVector() = default;
  /// Throws InvalidArgument when a value is non-finite or out of range.
  OpinionVector(std::vector<double> values, Scale scale);

  static OpinionVector constant(std::size_t n, double value, Scale scale) {
    return OpinionVector(std::vector<double>(n, value), scale);
  }

  Scale scale() const noexcept { return scale_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  OpinionVector rescaled(Scale target) const;

  friend bool operator==(const OpinionVector&, const OpinionVector&) = default;

 private:
  std::vector<double> values_;
  Scale scale_ = Scale::Signed;
};

/// Per-node entrenchment beta_i >= 0; beta_i = 0 reduces BEBA to DeGroot.
struct BebaParams {
  std::vector<double> beta;

  static BebaParams uniform(std::size_t n, double value) {
    return BebaParams{std::vector<double>(n, value)};
  }
};

/// Per-node BOF bias b_i >= 0; b_i = 0 reduces BOF to DeGroot.
struct BofParams {
  std::vector<double> bias;

  static BofParams uniform(std::size_t n, double value) {
    return BofParams{std::vector<double>(n, value)};
  }
};

/// A single agent facing m neighbors whose opinions never change.
class FixedEnvironment {
 public:
  /// Throws InvalidArgument unless opinions is non-empty with values in
  /// [-1, 1], self_weight >= 0 and beta >= 0.
  FixedEnvironment(std::vector<double> opinions, double self_weight, double beta);

  const std::vector<double>& opinions() const noexcept { return opinions_; }
  /// Sum of squared environment opinions.
  double q() const noexcept { return q_; }
  /// Sum of environment opinions.
  double s() const noexcept { return s_; }
  std::size_t m() const noexcept { return opinions_.size(); }
  double self_weight() const noexcept { return w_; }
  double beta() const noexcept { return beta_; }

 private:
  std::vector<double> opinions_;
  double q_ = 0.0;
  double s_ = 0.0;
  double w_ = 1.0;
  double beta_ = 0.0;
};

// All step functions are pure and synchronous: every node reads the same
// input snapshot. Neighbor sums run in ascending neighbor id.

/// x_i' = (w_ii x_i + sum_j w_ij x_j) / (w_ii + sum_j w_ij), clipped to the
/// input's scale. Accepts either scale.
OpinionVector degroot_step(const Graph& g, const OpinionVector& x);

/// Biased opinion formation on [0, 1]: neighbor support for 1 is weighted by
/// x_i^b_i and support for 0 by (1 - x_i)^b_i (with 0^0 = 1). A node whose
/// denominator vanishes (w_ii = 0 at an extreme with fully agreeing support)
/// keeps its opinion.
OpinionVector bof_step(const Graph& g, const OpinionVector& x, const BofParams& params);

/// Dynamic edge weight beta_i * y_i * y_j + 1. Negative values are the
/// backfire regime.
constexpr double beba_weight(double beta_i, double y_i, double y_j) noexcept {
  return beta_i * y_i * y_j + 1.0;
}

/// One synchronous BEBA update on [-1, 1].
///
/// For each node the dynamic weights are w_ij(t) = s_ij * (beta_i y_i y_j) + s_ij
/// where s_ij is the static edge weight (1 on unweighted graphs, so this is
/// exactly beba_weight). If w_ii + sum_j w_ij(t) <= 0 the node jumps to
/// sgn(y_i); otherwise it takes the weighted average, clipped to [-1, 1].
/// Nodes where the sign guard fired are appended to `guard_hits` if given.
OpinionVector beba_step(const Graph& g, const OpinionVector& y, const BebaParams& params,
                        std::vector<NodeId>* guard_hits = nullptr);

/// One update of an agent in a fixed environment:
/// sgn(y) if w + beta s y + m <= 0, else (w y + beta q y + s) / (w + beta s y + m)
/// clipped to [-1, 1].
double fixed_env_step(double y, const FixedEnvironment& env);

struct FixedPoints {
  double attracting = 0.0;
  /// Absent when the map has a single fixed point (beta = 0 or all p_j = 0).
  std::optional<double> repelling;
};

/// Closed-form fixed points of fixed_env_step's rational branch:
/// y = (beta q - m +- sqrt(Delta)) / (2 beta s), Delta = (beta q - m)^2 + 4 beta s^2.
/// Throws PreconditionError for a balanced environment (s = 0, q > 0), which
/// the formula does not cover.
FixedPoints fixed_env_fixed_points(const FixedEnvironment& env);

namespace detail {

// Buffer-level kernels used by the step functions and by the iteration loop.
// `out` must have the same length as `in` and must not alias it.
void degroot_into(const Graph& g, std::span<const double> in, std::span<double> out, Scale scale);
void bof_into(const Graph& g, std::span<const double> in, std::span<double> out,
              std::span<const double> bias);
void beba_into(const Graph& g, std::span<const double> in, std::span<double> out,
               std::span<const double> beta, std::vector<NodeId>* guard_hits);

void validate(const Graph& g, const OpinionVector& x);
void validate(const Graph& g, const BebaParams& p);
void validate(const Graph& g, const BofParams& p);

}  // namespace detail

}  // namespace beba
