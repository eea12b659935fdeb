#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"

namespace uninorm {

enum class BinopRole { tnorm, tconorm };

inline const char* to_string(BinopRole r) { return r == BinopRole::tnorm ? "tnorm" : "tconorm"; }

struct PartialViolation {
  std::string axiom;
  std::vector<Elem> witnesses;
};

namespace detail {

// Axiom scan shared by partial tables and the enumerator. `op` must be
// defined on `dom`; outputs are checked against `dom` first.
template <class Op>
std::optional<PartialViolation> scan_partial(const BoundedLattice& lat, const ElemSet& dom,
                                             Elem neutral, Op&& op) {
  for (Elem x : dom)
    for (Elem y : dom)
      if (!contains(dom, op(x, y))) return PartialViolation{"closedness", {x, y}};
  for (Elem x : dom)
    for (Elem y : dom)
      if (op(x, y) != op(y, x)) return PartialViolation{"commutativity", {x, y}};
  for (Elem x : dom)
    if (op(neutral, x) != x) return PartialViolation{"neutral", {x}};
  for (Elem x : dom)
    for (Elem y : dom)
      if (lat.leq(x, y))
        for (Elem z : dom)
          if (!lat.leq(op(x, z), op(y, z))) return PartialViolation{"monotonicity", {x, y, z}};
  for (Elem x : dom)
    for (Elem y : dom)
      for (Elem z : dom)
        if (op(x, op(y, z)) != op(op(x, y), z)) return PartialViolation{"associativity", {x, y, z}};
  return std::nullopt;
}

}  // namespace detail

class PartialBinOpTable;
PartialBinOpTable validate_partial(LatticePtr lat, IntervalSpec domain, BinopRole role,
                                   std::vector<Elem> table);

/// A certified t-norm or t-conorm on a closed subinterval. The table is
/// row-major over the interval's elements in declared order.
class PartialBinOpTable {
 public:
  const LatticePtr& lattice() const noexcept { return lattice_; }
  const IntervalSpec& domain() const noexcept { return domain_; }
  BinopRole role() const noexcept { return role_; }
  const ElemSet& elements() const noexcept { return members_; }
  bool in_domain(Elem x) const { return x.index() < pos_.size() && pos_[x.index()] >= 0; }

  Elem operator()(Elem x, Elem y) const {
    if (!in_domain(x) || !in_domain(y))
      throw Error("(" + lattice_->name(x) + ", " + lattice_->name(y) +
                  ") is outside the operation's domain");
    return table_[static_cast<std::size_t>(pos_[x.index()]) * members_.size() +
                  static_cast<std::size_t>(pos_[y.index()])];
  }

  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const PartialBinOpTable& a, const PartialBinOpTable& b) {
    return a.role_ == b.role_ && a.domain_ == b.domain_ && a.table_ == b.table_ &&
           (a.lattice_ == b.lattice_ || a.lattice_->same_structure(*b.lattice_));
  }

  friend PartialBinOpTable validate_partial(LatticePtr lat, IntervalSpec domain, BinopRole role,
                                            std::vector<Elem> table);

 private:
  PartialBinOpTable() = default;

  LatticePtr lattice_;
  IntervalSpec domain_;
  BinopRole role_ = BinopRole::tnorm;
  ElemSet members_;
  std::vector<int> pos_;
  std::vector<Elem> table_;
};

/// Certifies a t-norm (neutral = domain top) or t-conorm (neutral = domain bottom).
inline PartialBinOpTable validate_partial(LatticePtr lat, IntervalSpec domain, BinopRole role,
                                          std::vector<Elem> table) {
  if (domain.low_open || domain.high_open)
    throw Error("t-norm/t-conorm domains are closed intervals");
  PartialBinOpTable p;
  p.members_ = lat->interval(domain);
  const std::size_t m = p.members_.size();
  if (table.size() != m * m)
    throw Error("table has " + std::to_string(table.size()) + " cells, expected " +
                std::to_string(m * m));
  p.pos_.assign(lat->size(), -1);
  for (std::size_t i = 0; i < m; ++i) p.pos_[p.members_[i].index()] = static_cast<int>(i);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Elem v = table[i * m + j];
      if (v.index() >= lat->size() || p.pos_[v.index()] < 0)
        throw OutOfDomainOutput(lat->name(p.members_[i]), lat->name(p.members_[j]));
    }
  p.lattice_ = lat;
  p.domain_ = domain;
  p.role_ = role;
  p.table_ = std::move(table);

  Elem neutral = role == BinopRole::tnorm ? domain.high : domain.low;
  auto op = [&](Elem x, Elem y) { return p.table_[p.pos_[x.index()] * m + p.pos_[y.index()]]; };
  if (auto v = detail::scan_partial(*lat, p.members_, neutral, op)) {
    std::vector<std::string> names;
    for (Elem w : v->witnesses) names.push_back(lat->name(w));
    throw AxiomViolation(v->axiom, std::move(names));
  }
  return p;
}

/// Tabulates `fn` on the interval and certifies it.
template <class Fn>
PartialBinOpTable make_partial(const LatticePtr& lat, IntervalSpec domain, BinopRole role,
                               Fn&& fn) {
  std::vector<Elem> table;
  const ElemSet dom = lat->interval(domain);
  for (Elem x : dom)
    for (Elem y : dom) table.push_back(fn(x, y));
  return validate_partial(lat, domain, role, std::move(table));
}

/// S = join on [e,1].
inline PartialBinOpTable join_tconorm(const LatticePtr& lat, Elem e) {
  return make_partial(lat, IntervalSpec::closed(e, lat->top()), BinopRole::tconorm,
                      [&](Elem x, Elem y) { return lat->join(x, y); });
}

/// T = meet on [0,e].
inline PartialBinOpTable meet_tnorm(const LatticePtr& lat, Elem e) {
  return make_partial(lat, IntervalSpec::closed(lat->bottom(), e), BinopRole::tnorm,
                      [&](Elem x, Elem y) { return lat->meet(x, y); });
}

/// Same table on the dual lattice; the domain endpoints and the role swap.
inline PartialBinOpTable dualize_partial(const PartialBinOpTable& p, LatticePtr dual_lat) {
  if (!dual_lattice(*p.lattice())->same_structure(*dual_lat)) throw MismatchedLattice();
  // Declared order is preserved under duality, so the row-major table carries over.
  std::vector<Elem> table(p.table().begin(), p.table().end());
  IntervalSpec d = IntervalSpec::closed(p.domain().high, p.domain().low);
  return validate_partial(std::move(dual_lat), d,
                          p.role() == BinopRole::tnorm ? BinopRole::tconorm : BinopRole::tnorm,
                          std::move(table));
}

/// Pairs of elements, e.g. the strictness witnesses.
using ElemPairs = std::vector<std::pair<Elem, Elem>>;

struct StrictnessCheck {
  bool holds = true;
  bool vacuous = false;  // open interior of the domain is empty
  ElemPairs witnesses;
  explicit operator bool() const noexcept { return holds; }
};

/// t-conorm: S(x,y) != top of the domain on its open interior; t-norm: T(x,y) != bottom.
inline StrictnessCheck strictness_check(const PartialBinOpTable& p) {
  const auto& lat = *p.lattice();
  const ElemSet inner = lat.interval(IntervalSpec::open(p.domain().low, p.domain().high));
  const Elem absorbing = p.role() == BinopRole::tconorm ? p.domain().high : p.domain().low;
  StrictnessCheck r;
  r.vacuous = inner.empty();
  for (Elem x : inner)
    for (Elem y : inner)
      if (p(x, y) == absorbing) r.witnesses.emplace_back(x, y);
  r.holds = r.witnesses.empty();
  return r;
}

/// A total operation on L x L with a claimed neutral element. Carries no
/// certification; see validate_uninorm.
class FullBinOpTable {
 public:
  FullBinOpTable(LatticePtr lat, Elem neutral, std::vector<Elem> table)
      : lattice_(std::move(lat)), neutral_(neutral), table_(std::move(table)) {
    if (table_.size() != lattice_->size() * lattice_->size())
      throw Error("binary table is not total");
    for (Elem v : table_)
      if (v.index() >= lattice_->size()) throw UnknownElement("#" + std::to_string(v.index()));
  }

  template <class Fn>
  static FullBinOpTable tabulate(LatticePtr lat, Elem neutral, Fn&& fn) {
    std::vector<Elem> t;
    t.reserve(lat->size() * lat->size());
    for (Elem x : lat->elements())
      for (Elem y : lat->elements()) t.push_back(fn(x, y));
    return FullBinOpTable(std::move(lat), neutral, std::move(t));
  }

  const LatticePtr& lattice() const noexcept { return lattice_; }
  Elem neutral() const noexcept { return neutral_; }
  std::size_t size() const noexcept { return lattice_->size(); }
  Elem operator()(Elem x, Elem y) const { return table_[x.index() * size() + y.index()]; }
  std::span<const Elem> cells() const noexcept { return table_; }

  /// Copy with one cell overwritten.
  FullBinOpTable with_cell(Elem x, Elem y, Elem v) const {
    FullBinOpTable copy = *this;
    copy.table_.at(x.index() * size() + y.index()) = v;
    return copy;
  }

  friend bool operator==(const FullBinOpTable& a, const FullBinOpTable& b) {
    return a.neutral_ == b.neutral_ && a.table_ == b.table_ &&
           (a.lattice_ == b.lattice_ || a.lattice_->same_structure(*b.lattice_));
  }

 private:
  LatticePtr lattice_;
  Elem neutral_;
  std::vector<Elem> table_;
};

enum class WitnessMode { first, all };

/// One axiom's outcome. Each witness is a tuple of elements:
///   commutativity (x,y): U(x,y) != U(y,x)
///   associativity (x,y,z): U(x,U(y,z)) != U(U(x,y),z)
///   monotonicity (x,y,z): x <= y and U(x,z) !<= U(y,z) or U(z,x) !<= U(z,y)
///   neutral (x): U(e,x) != x or U(x,e) != x
struct AxiomCheck {
  bool holds = true;
  std::vector<std::vector<Elem>> witnesses;
  explicit operator bool() const noexcept { return holds; }
};

struct AxiomReport {
  AxiomCheck commutative;
  AxiomCheck associative;
  AxiomCheck monotone;
  AxiomCheck neutral;
  bool is_uninorm() const noexcept {
    return commutative.holds && associative.holds && monotone.holds && neutral.holds;
  }
};

/// Exhaustive check of the four uninorm axioms against `claimed_neutral`.
/// Scans are row-major in declared order; WitnessMode::first stops each scan
/// at its first failure.
inline AxiomReport validate_uninorm(const FullBinOpTable& u,
                                    WitnessMode mode = WitnessMode::first) {
  const auto& lat = *u.lattice();
  const ElemSet all = lat.elements();
  const Elem e = u.neutral();
  const bool all_witnesses = mode == WitnessMode::all;
  AxiomReport r;

  auto fail = [&](AxiomCheck& c, std::vector<Elem> w) {
    c.holds = false;
    c.witnesses.push_back(std::move(w));
    return !all_witnesses;
  };

  [&] {
    for (Elem x : all)
      for (Elem y : all)
        if (u(x, y) != u(y, x) && fail(r.commutative, {x, y})) return;
  }();
  [&] {
    for (Elem x : all)
      if ((u(e, x) != x || u(x, e) != x) && fail(r.neutral, {x})) return;
  }();
  [&] {
    for (Elem x : all)
      for (Elem y : all) {
        if (!lat.leq(x, y)) continue;
        for (Elem z : all)
          if ((!lat.leq(u(x, z), u(y, z)) || !lat.leq(u(z, x), u(z, y))) &&
              fail(r.monotone, {x, y, z}))
            return;
      }
  }();
  [&] {
    for (Elem x : all)
      for (Elem y : all) {
        const Elem xy = u(x, y);
        for (Elem z : all)
          if (u(x, u(y, z)) != u(xy, z) && fail(r.associative, {x, y, z})) return;
      }
  }();
  return r;
}

struct AssociativityCheck {
  bool holds = true;
  std::vector<Elem> witness;  // (x,y,z) with U(x,U(y,z)) != U(U(x,y),z)
  explicit operator bool() const noexcept { return holds; }
};

/// Associativity of a commutative table evaluated block-wise: all 3-block
/// combinations, then (i,i,j) and (i,j,j) for i<j, then each block alone.
/// Equivalent to the full triple scan for commutative tables.
inline AssociativityCheck check_associativity_partitioned(const FullBinOpTable& u,
                                                          const std::vector<ElemSet>& blocks) {
  const auto& lat = *u.lattice();
  std::vector<int> owner(lat.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Elem x : blocks[b]) {
      if (x.index() >= lat.size()) throw NotAPartition("block references an unknown element");
      if (owner[x.index()] >= 0)
        throw NotAPartition("element '" + lat.name(x) + "' appears in two blocks");
      owner[x.index()] = static_cast<int>(b);
    }
  for (Elem x : lat.elements())
    if (owner[x.index()] < 0)
      throw NotAPartition("element '" + lat.name(x) + "' is in no block");
  for (Elem x : lat.elements())
    for (Elem y : lat.elements())
      if (u(x, y) != u(y, x))
        throw NotCommutative("U(" + lat.name(x) + ", " + lat.name(y) + ") != U(" + lat.name(y) +
                             ", " + lat.name(x) + ")");

  AssociativityCheck r;
  auto assoc = [&](Elem x, Elem y, Elem z) {
    if (u(x, u(y, z)) == u(u(x, y), z)) return true;
    r.holds = false;
    r.witness = {x, y, z};
    return false;
  };
  const std::size_t n = blocks.size();

  // (i) three distinct blocks: U(x,U(y,z)) = U(U(x,y),z) = U(y,U(x,z)).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (Elem x : blocks[i])
          for (Elem y : blocks[j])
            for (Elem z : blocks[k]) {
              if (!assoc(x, y, z)) return r;
              // U(U(x,y),z) = U(y,U(x,z)) is associativity at (y,x,z).
              if (!assoc(y, x, z)) return r;
            }
  // (ii) x,y in A_i, z in A_j and (iii) x in A_i, y,z in A_j, for i<j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (Elem x : blocks[i])
        for (Elem y : blocks[i])
          for (Elem z : blocks[j])
            if (!assoc(x, y, z)) return r;
      for (Elem x : blocks[i])
        for (Elem y : blocks[j])
          for (Elem z : blocks[j])
            if (!assoc(x, y, z)) return r;
    }
  // (iv) within one block.
  for (const ElemSet& b : blocks)
    for (Elem x : b)
      for (Elem y : b)
        for (Elem z : b)
          if (!assoc(x, y, z)) return r;
  return r;
}

/// A cell (x, y) with its table value, used as a class-membership witness.
struct CellWitness {
  Elem x, y, value;
  friend bool operator==(const CellWitness&, const CellWitness&) = default;
};

struct ClassCheck {
  bool member = true;
  std::vector<CellWitness> witnesses;  // every failing cell, row-major
  explicit operator bool() const noexcept { return member; }
};

struct ClassMembership {
  ClassCheck u_min, u_max, u_min_star, u_max_star, u_min_r, u_max_r, u_min_1, u_max_0;

  std::array<std::pair<const char*, const ClassCheck*>, 8> entries() const {
    return {{{"U_min", &u_min},
             {"U_max", &u_max},
             {"U_min_star", &u_min_star},
             {"U_max_star", &u_max_star},
             {"U_min_r", &u_min_r},
             {"U_max_r", &u_max_r},
             {"U_min_1", &u_min_1},
             {"U_max_0", &u_max_0}}};
  }
};

/// Evaluates the eight class conditions directly on a certified uninorm.
inline ClassMembership classify(const FullBinOpTable& u) {
  if (!validate_uninorm(u).is_uninorm()) throw NotAUninorm("table is not a uninorm");
  const auto& lat = *u.lattice();
  const Elem e = u.neutral(), bot = lat.bottom(), top = lat.top();
  const ElemSet above = lat.interval(IntervalSpec::left_open(e, top));         // ]e,1]
  const ElemSet below = lat.interval(IntervalSpec::right_open(bot, e));        // [0,e[
  const ElemSet above_open = lat.interval(IntervalSpec::open(e, top));         // ]e,1[
  const ElemSet below_open = lat.interval(IntervalSpec::open(bot, e));         // ]0,e[
  const ElemSet up = lat.interval(IntervalSpec::closed(e, top));               // [e,1]
  const ElemSet down = lat.interval(IntervalSpec::closed(bot, e));             // [0,e]
  ElemSet not_up, not_down;                                                    // L\[e,1], L\[0,e]
  for (Elem x : lat.elements()) {
    if (!contains(up, x)) not_up.push_back(x);
    if (!contains(down, x)) not_down.push_back(x);
  }

  enum class Expect { first, second };
  auto rect = [&](ClassCheck& c, const ElemSet& rows, const ElemSet& cols, Expect want) {
    for (Elem x : rows)
      for (Elem y : cols) {
        Elem v = u(x, y);
        if (v != (want == Expect::first ? x : y)) {
          c.member = false;
          c.witnesses.push_back({x, y, v});
        }
      }
  };
  auto constant_row = [&](ClassCheck& c, Elem x, const ElemSet& cols, Elem value) {
    for (Elem y : cols)
      if (u(x, y) != value) {
        c.member = false;
        c.witnesses.push_back({x, y, u(x, y)});
      }
  };

  ClassMembership m;
  rect(m.u_min, above, not_up, Expect::second);
  rect(m.u_max, below, not_down, Expect::second);
  rect(m.u_min_star, above, below, Expect::second);
  rect(m.u_max_star, below, above, Expect::second);
  rect(m.u_min_r, above, not_up, Expect::first);
  rect(m.u_max_r, below, not_down, Expect::first);
  rect(m.u_min_1, above_open, not_up, Expect::second);
  if (e != top) constant_row(m.u_min_1, top, not_up, top);
  rect(m.u_max_0, below_open, not_down, Expect::second);
  if (e != bot) constant_row(m.u_max_0, bot, not_down, bot);
  return m;
}

}  // namespace uninorm
