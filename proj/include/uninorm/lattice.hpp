#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uninorm/errors.hpp"

namespace uninorm {

/// Handle to an element of one lattice: its position in the declared element list.
class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(std::size_t index) : index_(static_cast<std::uint32_t>(index)) {}
  constexpr std::size_t index() const noexcept { return index_; }
  constexpr auto operator<=>(const Elem&) const = default;

 private:
  std::uint32_t index_ = 0;
};

/// Element set kept in ascending declared order.
using ElemSet = std::vector<Elem>;

inline bool contains(const ElemSet& set, Elem x) {
  for (Elem y : set)
    if (y == x) return true;
  return false;
}

/// [low,high], ]low,high[ and the half-open variants.
struct IntervalSpec {
  Elem low;
  Elem high;
  bool low_open = false;
  bool high_open = false;

  static constexpr IntervalSpec closed(Elem a, Elem b) { return {a, b, false, false}; }
  static constexpr IntervalSpec open(Elem a, Elem b) { return {a, b, true, true}; }
  static constexpr IntervalSpec left_open(Elem a, Elem b) { return {a, b, true, false}; }
  static constexpr IntervalSpec right_open(Elem a, Elem b) { return {a, b, false, true}; }

  friend constexpr bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

class BoundedLattice;
using LatticePtr = std::shared_ptr<const BoundedLattice>;

/// A finite bounded lattice given by Hasse covers. Immutable once built; the
/// order, meet and join are stored as dense tables.
class BoundedLattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  const std::string& name(Elem x) const { return names_.at(x.index()); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const std::pair<Elem, Elem>> covers() const noexcept { return covers_; }

  std::optional<Elem> lookup(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return Elem(it->second);
  }
  Elem find(std::string_view id) const {
    if (auto x = lookup(id)) return *x;
    throw UnknownElement(std::string(id));
  }

  bool leq(Elem x, Elem y) const { return order_[x.index() * size() + y.index()] != 0; }
  bool leq(std::string_view x, std::string_view y) const { return leq(find(x), find(y)); }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }

  Elem meet(Elem x, Elem y) const { return meet_[x.index() * size() + y.index()]; }
  Elem join(Elem x, Elem y) const { return join_[x.index() * size() + y.index()]; }

  /// Every element, in declared order.
  ElemSet elements() const {
    ElemSet all;
    all.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) all.emplace_back(i);
    return all;
  }

  ElemSet interval(const IntervalSpec& spec) const {
    if (!leq(spec.low, spec.high))
      throw BoundsNotComparable("interval bounds '" + name(spec.low) + "' and '" +
                                name(spec.high) + "' are not ordered");
    ElemSet out;
    for (Elem x : elements()) {
      if (!leq(spec.low, x) || !leq(x, spec.high)) continue;
      if (spec.low_open && x == spec.low) continue;
      if (spec.high_open && x == spec.high) continue;
      out.push_back(x);
    }
    return out;
  }

  /// I_a: elements incomparable with `a`.
  ElemSet incomparables(Elem a) const {
    ElemSet out;
    for (Elem x : elements())
      if (!comparable(x, a)) out.push_back(x);
    return out;
  }

  /// Same ids in the same order with the same order relation.
  bool same_structure(const BoundedLattice& other) const {
    return names_ == other.names_ && order_ == other.order_ && bottom_ == other.bottom_ &&
           top_ == other.top_;
  }

  /// Length of the longest chain from the bottom up to `x`.
  std::size_t height(Elem x) const { return height_.at(x.index()); }

  friend LatticePtr build_lattice(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& covers,
                                  std::string_view bottom, std::string_view top);
  friend LatticePtr dual_lattice(const BoundedLattice& lat);

 private:
  BoundedLattice() = default;

  void index_names() {
    index_.clear();
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
  }

  void compute_heights() {
    // Longest path over the strict order; a linear extension is obtained by
    // sorting on the number of elements below.
    const std::size_t n = size();
    std::vector<std::size_t> below(n, 0), order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq(Elem(j), Elem(i))) ++below[i];
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    height_.assign(n, 0);
    for (std::size_t i : order)
      for (const auto& [lo, hi] : covers_)
        if (hi.index() == i) height_[i] = std::max(height_[i], height_[lo.index()] + 1);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<Elem, Elem>> covers_;
  std::vector<std::uint8_t> order_;
  std::vector<Elem> meet_, join_;
  std::vector<std::size_t> height_;
  Elem bottom_, top_;
};

/// Builds and certifies a bounded lattice from its cover relation.
///
/// The order is the reflexive-transitive closure of `covers`. Every pair is
/// checked for a unique meet and join; the first failing pair in declared
/// order is reported.
inline LatticePtr build_lattice(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                std::string_view bottom, std::string_view top) {
  if (elements.empty()) throw Error("a lattice needs at least one element");

  std::shared_ptr<BoundedLattice> lat(new BoundedLattice());
  lat->names_ = std::move(elements);
  lat->index_names();
  if (lat->index_.size() != lat->names_.size()) {
    for (std::size_t i = 0; i < lat->names_.size(); ++i)
      if (lat->index_.at(lat->names_[i]) != i)
        throw Error("duplicate element id '" + lat->names_[i] + "'");
  }

  const std::size_t n = lat->size();
  lat->order_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) lat->order_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    Elem a = lat->find(lo), b = lat->find(hi);
    if (a == b) throw NotAPartialOrder("cover '" + lo + "' < '" + hi + "' is a self-loop");
    lat->covers_.emplace_back(a, b);
    lat->order_[a.index() * n + b.index()] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lat->order_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (lat->order_[k * n + j]) lat->order_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lat->order_[i * n + j] && lat->order_[j * n + i])
        throw NotAPartialOrder("covers contain a cycle through '" + lat->names_[i] + "' and '" +
                               lat->names_[j] + "'");

  lat->bottom_ = lat->find(bottom);
  lat->top_ = lat->find(top);
  for (std::size_t i = 0; i < n; ++i) {
    if (!lat->leq(lat->bottom_, Elem(i)))
      throw NotBounded("declared bottom '" + std::string(bottom) + "' is not below '" +
                       lat->names_[i] + "'");
    if (!lat->leq(Elem(i), lat->top_))
      throw NotBounded("declared top '" + std::string(top) + "' is not above '" +
                       lat->names_[i] + "'");
  }

  // Greatest common lower bound (resp. least common upper bound), if unique.
  auto extremal = [&](Elem x, Elem y, bool lower) -> std::optional<Elem> {
    ElemSet bounds;
    for (std::size_t z = 0; z < n; ++z) {
      Elem c(z);
      bool ok = lower ? (lat->leq(c, x) && lat->leq(c, y)) : (lat->leq(x, c) && lat->leq(y, c));
      if (ok) bounds.push_back(c);
    }
    for (Elem c : bounds) {
      bool best = true;
      for (Elem d : bounds)
        if (lower ? !lat->leq(d, c) : !lat->leq(c, d)) {
          best = false;
          break;
        }
      if (best) return c;
    }
    return std::nullopt;
  };

  lat->meet_.assign(n * n, Elem());
  lat->join_.assign(n * n, Elem());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto m = extremal(Elem(i), Elem(j), true);
      if (!m) throw NotALattice(lat->names_[i], lat->names_[j], "meet");
      auto s = extremal(Elem(i), Elem(j), false);
      if (!s) throw NotALattice(lat->names_[i], lat->names_[j], "join");
      lat->meet_[i * n + j] = lat->meet_[j * n + i] = *m;
      lat->join_[i * n + j] = lat->join_[j * n + i] = *s;
    }

  lat->compute_heights();
  return lat;
}

/// Order dual: covers reversed, bounds swapped, meet and join exchanged.
inline LatticePtr dual_lattice(const BoundedLattice& lat) {
  std::shared_ptr<BoundedLattice> d(new BoundedLattice());
  const std::size_t n = lat.size();
  d->names_ = lat.names_;
  d->index_ = lat.index_;
  for (const auto& [lo, hi] : lat.covers_) d->covers_.emplace_back(hi, lo);
  d->order_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d->order_[i * n + j] = lat.order_[j * n + i];
  d->meet_ = lat.join_;
  d->join_ = lat.meet_;
  d->bottom_ = lat.top_;
  d->top_ = lat.bottom_;
  d->compute_heights();
  return d;
}

inline LatticePtr dual_lattice(const LatticePtr& lat) { return dual_lattice(*lat); }

}  // namespace uninorm
