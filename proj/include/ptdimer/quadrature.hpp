#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ptdimer/errors.hpp"

namespace ptdimer {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  std::size_t max_panels = std::size_t{1} << 16;
  /// Panels the interval is split into before any refinement.
  std::size_t initial_panels = 1;
};

template <std::size_t K>
struct QuadratureResult {
  std::array<double, K> value{};
  double error = 0.0;
  std::size_t panels = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss-Legendre rule.
// Odd-indexed abscissae are the Gauss nodes.
inline constexpr std::array<double, 11> kKronrodNodes{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kKronrodWeights{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980781617, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kGaussWeights{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t K>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::array<double, K> kronrod{};
  double error = 0.0;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <std::size_t K, typename F>
Panel<K> evaluate_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, K> kronrod{};
  std::array<double, K> gauss{};

  const std::array<double, K> mid = f(center);
  for (std::size_t c = 0; c < K; ++c) kronrod[c] = kKronrodWeights[10] * mid[c];

  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const std::array<double, K> lo = f(center - dx);
    const std::array<double, K> hi = f(center + dx);
    for (std::size_t c = 0; c < K; ++c) {
      const double sum = lo[c] + hi[c];
      kronrod[c] += kKronrodWeights[j] * sum;
      if (j % 2 == 1) gauss[c] += kGaussWeights[j / 2] * sum;
    }
  }

  Panel<K> panel{a, b, {}, 0.0};
  for (std::size_t c = 0; c < K; ++c) {
    panel.kronrod[c] = kronrod[c] * half;
    panel.error = std::max(panel.error, std::abs((kronrod[c] - gauss[c]) * half));
  }
  return panel;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G10/K21) integration of a vector-valued
/// integrand over [a, b].
///
/// `f(double) -> std::array<double, K>`. The panel with the largest
/// embedded error estimate (max over components) is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * max_c |I_c|).
template <std::size_t K, typename F>
QuadratureResult<K> integrate(F&& f, double a, double b, const QuadratureOptions& options = {}) {
  QuadratureResult<K> result;
  if (a == b) return result;
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw QuadratureError("integration interval must be finite with b >= a");
  }

  std::vector<detail::Panel<K>> heap;
  const std::size_t initial = std::max<std::size_t>(1, options.initial_panels);
  const double width = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == initial ? b : a + width * static_cast<double>(i + 1);
    heap.push_back(detail::evaluate_panel<K>(f, lo, hi));
  }
  std::make_heap(heap.begin(), heap.end());

  while (true) {
    std::array<double, K> value{};
    double error = 0.0;
    for (const auto& p : heap) {
      for (std::size_t c = 0; c < K; ++c) value[c] += p.kronrod[c];
      error += p.error;
    }
    double scale = 0.0;
    for (double v : value) {
      if (!std::isfinite(v)) throw QuadratureError("integrand produced non-finite values");
      scale = std::max(scale, std::abs(v));
    }
    if (error <= std::max(options.abs_tol, options.rel_tol * scale)) {
      result.value = value;
      result.error = error;
      result.panels = heap.size();
      return result;
    }
    if (heap.size() >= options.max_panels) {
      throw QuadratureError("adaptive quadrature did not converge within " +
                            std::to_string(options.max_panels) + " panels (error estimate " +
                            std::to_string(error) + ")");
    }
    std::pop_heap(heap.begin(), heap.end());
    const detail::Panel<K> worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(detail::evaluate_panel<K>(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(detail::evaluate_panel<K>(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());
  }
}

}  // namespace ptdimer
