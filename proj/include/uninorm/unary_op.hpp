#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"

namespace uninorm {

enum class OperatorKind { closure, interior };

inline const char* to_string(OperatorKind k) {
  return k == OperatorKind::closure ? "closure" : "interior";
}

inline OperatorKind flipped(OperatorKind k) {
  return k == OperatorKind::closure ? OperatorKind::interior : OperatorKind::closure;
}

/// First failed axiom of a candidate self-map, with the witness elements.
struct UnaryViolation {
  std::string axiom;  // CL1..CL4 or IN1..IN4
  std::vector<Elem> witnesses;
};

/// Checks CL1-CL3 (or IN1-IN3) and then the derived monotonicity CL4/IN4.
/// Scan order is declared element order, row-major for pairs.
inline std::optional<UnaryViolation> find_unary_violation(const BoundedLattice& lat,
                                                          OperatorKind kind,
                                                          std::span<const Elem> map) {
  const bool closure = kind == OperatorKind::closure;
  const char* p = closure ? "CL" : "IN";
  auto f = [&](Elem x) { return map[x.index()]; };
  const ElemSet all = lat.elements();

  for (Elem x : all)
    if (closure ? !lat.leq(x, f(x)) : !lat.leq(f(x), x))
      return UnaryViolation{std::string(p) + "1", {x}};
  for (Elem x : all)
    for (Elem y : all) {
      Elem lhs = closure ? f(lat.join(x, y)) : f(lat.meet(x, y));
      Elem rhs = closure ? lat.join(f(x), f(y)) : lat.meet(f(x), f(y));
      if (lhs != rhs) return UnaryViolation{std::string(p) + "2", {x, y}};
    }
  for (Elem x : all)
    if (f(f(x)) != f(x)) return UnaryViolation{std::string(p) + "3", {x}};
  for (Elem x : all)
    for (Elem y : all)
      if (lat.leq(x, y) && !lat.leq(f(x), f(y)))
        return UnaryViolation{std::string(p) + "4", {x, y}};
  return std::nullopt;
}

class UnaryOpTable;
UnaryOpTable validate_unary(LatticePtr lat, OperatorKind kind, std::vector<Elem> map);

/// A certified closure or interior operator stored as a total table.
class UnaryOpTable {
 public:
  const LatticePtr& lattice() const noexcept { return lattice_; }
  OperatorKind kind() const noexcept { return kind_; }
  Elem operator()(Elem x) const { return map_.at(x.index()); }
  std::span<const Elem> map() const noexcept { return map_; }

  friend bool operator==(const UnaryOpTable& a, const UnaryOpTable& b) {
    return a.kind_ == b.kind_ && a.map_ == b.map_ &&
           (a.lattice_ == b.lattice_ || a.lattice_->same_structure(*b.lattice_));
  }

  friend UnaryOpTable validate_unary(LatticePtr lat, OperatorKind kind, std::vector<Elem> map);

 private:
  UnaryOpTable(LatticePtr lat, OperatorKind kind, std::vector<Elem> map)
      : lattice_(std::move(lat)), kind_(kind), map_(std::move(map)) {}

  LatticePtr lattice_;
  OperatorKind kind_;
  std::vector<Elem> map_;
};

/// Certifies `map` as an operator of the given kind or throws AxiomViolation.
inline UnaryOpTable validate_unary(LatticePtr lat, OperatorKind kind, std::vector<Elem> map) {
  if (map.size() != lat->size())
    throw Error("operator map covers " + std::to_string(map.size()) + " of " +
                std::to_string(lat->size()) + " elements");
  for (Elem y : map)
    if (y.index() >= lat->size()) throw UnknownElement("#" + std::to_string(y.index()));
  if (auto v = find_unary_violation(*lat, kind, map)) {
    std::vector<std::string> names;
    for (Elem w : v->witnesses) names.push_back(lat->name(w));
    throw AxiomViolation(v->axiom, std::move(names));
  }
  return UnaryOpTable(std::move(lat), kind, std::move(map));
}

// Formula presets, expanded to tables.

inline std::vector<Elem> identity_map(const BoundedLattice& lat) { return lat.elements(); }

inline std::vector<Elem> join_with_map(const BoundedLattice& lat, Elem k) {
  std::vector<Elem> m;
  for (Elem x : lat.elements()) m.push_back(lat.join(x, k));
  return m;
}

inline std::vector<Elem> meet_with_map(const BoundedLattice& lat, Elem k) {
  std::vector<Elem> m;
  for (Elem x : lat.elements()) m.push_back(lat.meet(x, k));
  return m;
}

inline UnaryOpTable identity_operator(const LatticePtr& lat, OperatorKind kind) {
  return validate_unary(lat, kind, identity_map(*lat));
}

/// Outcome of a pointwise check over a region; `witnesses` lists every failing element.
struct RegionCheck {
  bool holds = true;
  ElemSet witnesses;
  explicit operator bool() const noexcept { return holds; }
};

namespace detail {
inline void require_same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a != b && !a->same_structure(*b)) throw MismatchedLattice();
}
}  // namespace detail

/// op1(x) <= op2(x) for every x in `region`.
inline RegionCheck pointwise_leq_on(const UnaryOpTable& op1, const UnaryOpTable& op2,
                                    const ElemSet& region) {
  detail::require_same_lattice(op1.lattice(), op2.lattice());
  const auto& lat = *op1.lattice();
  RegionCheck r;
  for (Elem x : region)
    if (!lat.leq(op1(x), op2(x))) r.witnesses.push_back(x);
  r.holds = r.witnesses.empty();
  return r;
}

/// op(x) lies outside `forbidden` for every x in `region`.
inline RegionCheck range_avoids(const UnaryOpTable& op, const ElemSet& region,
                                const IntervalSpec& forbidden) {
  const auto& lat = *op.lattice();
  for (Elem x : region)
    if (x.index() >= lat.size()) throw MismatchedLattice();
  const ElemSet bad = lat.interval(forbidden);
  RegionCheck r;
  for (Elem x : region)
    if (contains(bad, op(x))) r.witnesses.push_back(x);
  r.holds = r.witnesses.empty();
  return r;
}

/// The same table read on the dual lattice, with closure and interior swapped.
inline UnaryOpTable dualize_operator(const UnaryOpTable& op, LatticePtr dual_lat) {
  const auto& host = *op.lattice();
  if (!dual_lattice(host)->same_structure(*dual_lat)) throw MismatchedLattice();
  std::vector<Elem> m(op.map().begin(), op.map().end());
  return validate_unary(std::move(dual_lat), flipped(op.kind()), std::move(m));
}

}  // namespace uninorm
