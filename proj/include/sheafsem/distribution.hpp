#ifndef SHEAFSEM_DISTRIBUTION_HPP
#define SHEAFSEM_DISTRIBUTION_HPP

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <type_traits>
#include <vector>

#include "sheafsem/semiring.hpp"

namespace sheafsem {

// A finite-support semiring-valued weighting summing to one. Zero weights
// are never stored, so support and equality are decidable.
template <class S, class X>
class Distribution {
 public:
  using Value = typename S::Value;

  // An empty shell; every named constructor yields a normalized value.
  Distribution() = default;

  // Normalizes raw nonnegative weights by their semiring total.
  static Distribution from_weights(const std::map<X, Value>& raw) {
    if constexpr (requires(Value v) { S::nonnegative(v); }) {
      for (const auto& [x, w] : raw) {
        (void)x;
        if (!S::nonnegative(w)) {
          throw Error(ErrorKind::IllFormed, "negative weight in distribution input");
        }
      }
    }
    Value total = S::zero();
    for (const auto& [x, w] : raw) {
      (void)x;
      total = S::add(total, w);
    }
    if (S::eq(total, S::zero())) {
      throw Error(ErrorKind::AllZero, "no element carries positive weight");
    }
    Distribution out;
    for (const auto& [x, w] : raw) {
      if (S::eq(w, S::zero())) continue;
      out.weights_.emplace(x, S::div(w, total));
    }
    return out;
  }

  static Distribution point(const X& x) {
    Distribution out;
    out.weights_.emplace(x, S::one());
    return out;
  }

  // The boolean reading of a finite subset as a distribution.
  static Distribution from_support(const std::set<X>& support)
    requires std::is_same_v<S, BoolSemiring>
  {
    if (support.empty()) throw Error(ErrorKind::EmptySupport, "empty subset");
    Distribution out;
    for (const auto& x : support) out.weights_.emplace(x, true);
    return out;
  }

  const std::map<X, Value>& weights() const { return weights_; }

  Value at(const X& x) const {
    auto it = weights_.find(x);
    return it == weights_.end() ? S::zero() : it->second;
  }

  std::set<X> support() const {
    std::set<X> out;
    for (const auto& [x, w] : weights_) {
      (void)w;
      out.insert(x);
    }
    return out;
  }

  Value total() const {
    Value sum = S::zero();
    for (const auto& [x, w] : weights_) {
      (void)x;
      sum = S::add(sum, w);
    }
    return sum;
  }

  bool operator==(const Distribution& other) const {
    if (weights_.size() != other.weights_.size()) return false;
    auto it = other.weights_.begin();
    for (const auto& [x, w] : weights_) {
      if (x != it->first || !S::eq(w, it->second)) return false;
      ++it;
    }
    return true;
  }

  template <class S2, class X2>
  friend class Distribution;

  // Weight of y is the semiring sum over its preimage.
  template <class F>
  auto map_along(F&& f) const {
    using Y = std::decay_t<std::invoke_result_t<F, const X&>>;
    Distribution<S, Y> out;
    for (const auto& [x, w] : weights_) {
      Y y = std::invoke(f, x);
      auto [it, inserted] = out.weights_.emplace(std::move(y), w);
      if (!inserted) it->second = S::add(it->second, w);
    }
    return out;
  }

 private:
  std::map<X, Value> weights_;
};

template <class S, class X, class F>
  requires std::invocable<F&, const X&>
auto pushforward(F&& f, const Distribution<S, X>& d) {
  return d.map_along(std::forward<F>(f));
}

// Map-backed variant; a support element without an entry is a partial map.
template <class S, class X, class Y>
Distribution<S, Y> pushforward(const std::map<X, Y>& f, const Distribution<S, X>& d) {
  return d.map_along([&f](const X& x) -> const Y& {
    auto it = f.find(x);
    if (it == f.end()) {
      throw Error(ErrorKind::PartialMap, "no image for a support element");
    }
    return it->second;
  });
}

// Shannon entropy in bits, with 0 log 0 read as 0 (zero weights are not
// stored, so the sum simply skips them).
template <class S, class X>
  requires OrderedSemiring<S>
double entropy_bits(const Distribution<S, X>& d) {
  double h = 0.0;
  for (const auto& [x, w] : d.weights()) {
    (void)x;
    double p = S::to_real(w);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

// All elements attaining the maximal weight, in canonical key order.
template <class S, class X>
  requires OrderedSemiring<S>
std::vector<X> argmax(const Distribution<S, X>& d) {
  if (d.weights().empty()) {
    throw Error(ErrorKind::EmptySupport, "distribution has no support");
  }
  typename S::Value best = d.weights().begin()->second;
  for (const auto& [x, w] : d.weights()) {
    (void)x;
    if (S::less(best, w)) best = w;
  }
  std::vector<X> out;
  for (const auto& [x, w] : d.weights()) {
    if (!S::less(w, best)) out.push_back(x);
  }
  return out;
}

}  // namespace sheafsem

#endif
