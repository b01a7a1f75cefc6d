#include "beba/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beba/error.hpp"

namespace beba {

OpinionVector::OpinionVector(std::vector<double> values, Scale scale)
    : values_(std::move(values)), scale_(scale) {
  const double lo = scale_min(scale_);
  const double hi = scale_max(scale_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v < lo || v > hi) {
      throw InvalidArgument("opinion of node " + std::to_string(i) + " (" + std::to_string(v) +
                            ") is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
}

OpinionVector OpinionVector::rescaled(Scale target) const {
  if (target == scale_) return *this;
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = target == Scale::Signed ? to_signed(values_[i]) : to_unit(values_[i]);
    out[i] = std::clamp(v, scale_min(target), scale_max(target));
  }
  return OpinionVector(std::move(out), target);
}

FixedEnvironment::FixedEnvironment(std::vector<double> opinions, double self_weight, double beta)
    : opinions_(std::move(opinions)), w_(self_weight), beta_(beta) {
  if (opinions_.empty()) throw InvalidArgument("fixed environment needs at least one neighbor");
  for (double p : opinions_) {
    if (!std::isfinite(p) || p < -1.0 || p > 1.0) {
      throw InvalidArgument("environment opinions must lie in [-1, 1]");
    }
    q_ += p * p;
    s_ += p;
  }
  if (!(self_weight >= 0.0) || !std::isfinite(self_weight)) {
    throw InvalidArgument("self-weight must be finite and >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("entrenchment must be finite and >= 0");
  }
}

namespace detail {

void validate(const Graph& g, const OpinionVector& x) {
  if (x.size() != g.node_count()) {
    throw InvalidArgument("opinion vector has " + std::to_string(x.size()) + " entries but graph has " +
                          std::to_string(g.node_count()) + " nodes");
  }
}

void validate(const Graph& g, const BebaParams& p) {
  if (p.beta.size() != g.node_count()) {
    throw InvalidArgument("entrenchment vector size does not match node count");
  }
  for (double b : p.beta) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw InvalidArgument("entrenchment must be finite and >= 0");
  }
}

void validate(const Graph& g, const BofParams& p) {
  if (p.bias.size() != g.node_count()) {
    throw InvalidArgument("bias vector size does not match node count");
  }
  for (double b : p.bias) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw InvalidArgument("bias must be finite and >= 0");
  }
}

void degroot_into(const Graph& g, std::span<const double> in, std::span<double> out, Scale scale) {
  const double lo = scale_min(scale);
  const double hi = scale_max(scale);
  for (NodeId i = 0; i < in.size(); ++i) {
    const double wii = g.self_weight(i);
    double num = wii * in[i];
    double den = wii;
    for (const Neighbor& nb : g.neighbors(i)) {
      num += nb.weight * in[nb.id];
      den += nb.weight;
    }
    // den > 0 unless an isolated node has w_ii = 0; it then keeps its value.
    out[i] = den > 0.0 ? std::clamp(num / den, lo, hi) : in[i];
  }
}

void bof_into(const Graph& g, std::span<const double> in, std::span<double> out,
              std::span<const double> bias) {
  for (NodeId i = 0; i < in.size(); ++i) {
    const double xi = in[i];
    const double wii = g.self_weight(i);
    double support = 0.0;  // s_i
    double degree = 0.0;   // d_i
    for (const Neighbor& nb : g.neighbors(i)) {
      support += nb.weight * in[nb.id];
      degree += nb.weight;
    }
    // std::pow(0, 0) == 1, so b_i = 0 gives DeGroot.
    const double toward_one = std::pow(xi, bias[i]) * support;
    const double toward_zero = std::pow(1.0 - xi, bias[i]) * (degree - support);
    const double den = wii + toward_one + toward_zero;
    out[i] = den > 0.0 ? std::clamp((wii * xi + toward_one) / den, 0.0, 1.0) : xi;
  }
}

void beba_into(const Graph& g, std::span<const double> in, std::span<double> out,
               std::span<const double> beta, std::vector<NodeId>* guard_hits) {
  for (NodeId i = 0; i < in.size(); ++i) {
    const double yi = in[i];
    const double wii = g.self_weight(i);
    double num = wii * yi;
    double den = wii;
    for (const Neighbor& nb : g.neighbors(i)) {
      const double yj = in[nb.id];
      const double w = nb.weight * (beta[i] * yi * yj) + nb.weight;
      num += w * yj;
      den += w;
    }
    if (den <= 0.0) {
      out[i] = sgn(yi);
      if (guard_hits != nullptr) guard_hits->push_back(i);
    } else {
      out[i] = std::clamp(num / den, -1.0, 1.0);
    }
  }
}

}  // namespace detail

OpinionVector degroot_step(const Graph& g, const OpinionVector& x) {
  detail::validate(g, x);
  std::vector<double> out(x.size());
  detail::degroot_into(g, x.values(), out, x.scale());
  return OpinionVector(std::move(out), x.scale());
}

OpinionVector bof_step(const Graph& g, const OpinionVector& x, const BofParams& params) {
  detail::validate(g, x);
  detail::validate(g, params);
  if (x.scale() != Scale::Unit) throw InvalidArgument("BOF operates on opinions in [0, 1]");
  std::vector<double> out(x.size());
  detail::bof_into(g, x.values(), out, params.bias);
  return OpinionVector(std::move(out), Scale::Unit);
}

OpinionVector beba_step(const Graph& g, const OpinionVector& y, const BebaParams& params,
                        std::vector<NodeId>* guard_hits) {
  detail::validate(g, y);
  detail::validate(g, params);
  if (y.scale() != Scale::Signed) throw InvalidArgument("BEBA operates on opinions in [-1, 1]");
  std::vector<double> out(y.size());
  detail::beba_into(g, y.values(), out, params.beta, guard_hits);
  return OpinionVector(std::move(out), Scale::Signed);
}

double fixed_env_step(double y, const FixedEnvironment& env) {
  const double w = env.self_weight();
  const double beta = env.beta();
  const double m = static_cast<double>(env.m());
  const double den = w + beta * env.s() * y + m;
  if (den <= 0.0) return sgn(y);
  return std::clamp((w * y + beta * env.q() * y + env.s()) / den, -1.0, 1.0);
}

FixedPoints fixed_env_fixed_points(const FixedEnvironment& env) {
  const double beta = env.beta();
  const double q = env.q();
  const double s = env.s();
  const double m = static_cast<double>(env.m());

  if (s == 0.0) {
    if (q == 0.0) return FixedPoints{0.0, std::nullopt};
    throw PreconditionError(
        "balanced environment (sum of opinions is 0): no closed-form fixed points");
  }
  if (beta == 0.0) {
    // Linear map (w y + s) / (w + m): the single fixed point is the mean.
    return FixedPoints{s / m, std::nullopt};
  }

  // Fixed points solve beta s y^2 + (m - beta q) y - s = 0; the roots multiply
  // to -1/beta. Take the root without cancellation and recover the other from
  // the product.
  const double b = beta * q - m;
  const double root_delta = std::sqrt(b * b + 4.0 * beta * s * s);
  FixedPoints fp;
  if (b >= 0.0) {
    fp.attracting = (b + root_delta) / (2.0 * beta * s);
    fp.repelling = -1.0 / (beta * fp.attracting);
  } else {
    const double repelling = (b - root_delta) / (2.0 * beta * s);
    fp.repelling = repelling;
    fp.attracting = -1.0 / (beta * repelling);
  }
  return fp;
}

}  // namespace beba
