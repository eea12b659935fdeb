#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uninorm/binary_op.hpp"
#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"

namespace uninorm {

/// The four construction families. Closure families take a t-conorm on [e,1]
/// and two closure operators; interior families are their order duals.
enum class Family { closure, interior, closure_strict, interior_strict };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::closure: return "clo2";
    case Family::interior: return "int2";
    case Family::closure_strict: return "clo2-strict";
    case Family::interior_strict: return "int2-strict";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "clo2") return Family::closure;
  if (s == "int2") return Family::interior;
  if (s == "clo2-strict") return Family::closure_strict;
  if (s == "int2-strict") return Family::interior_strict;
  return std::nullopt;
}

inline bool is_closure_family(Family f) {
  return f == Family::closure || f == Family::closure_strict;
}
inline bool is_strict_family(Family f) {
  return f == Family::closure_strict || f == Family::interior_strict;
}
inline OperatorKind operator_kind(Family f) {
  return is_closure_family(f) ? OperatorKind::closure : OperatorKind::interior;
}
inline BinopRole boundary_role(Family f) {
  return is_closure_family(f) ? BinopRole::tconorm : BinopRole::tnorm;
}

/// Region of an element in a family's case analysis.
enum class RegionLabel { zero, low_open, e, inc, high_halfopen, high_open, top };

inline const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::zero: return "ZERO";
    case RegionLabel::low_open: return "LOW_OPEN";
    case RegionLabel::e: return "E";
    case RegionLabel::inc: return "INC";
    case RegionLabel::high_halfopen: return "HIGH_HALFOPEN";
    case RegionLabel::high_open: return "HIGH_OPEN";
    case RegionLabel::top: return "TOP";
  }
  return "?";
}

/// Inputs of one construction. `op_low` is the operator used on ]0,e[
/// (closure families) or ]e,1[ (interior families); `op_inc` is used on I_e.
class ConstructionSpec {
 public:
  ConstructionSpec(Family family, Elem e, PartialBinOpTable boundary, UnaryOpTable op_low,
                   UnaryOpTable op_inc)
      : family_(family),
        e_(e),
        boundary_(std::move(boundary)),
        op_low_(std::move(op_low)),
        op_inc_(std::move(op_inc)) {
    const auto& lat = lattice();
    detail::require_same_lattice(boundary_.lattice(), op_low_.lattice());
    detail::require_same_lattice(boundary_.lattice(), op_inc_.lattice());
    if (e_.index() >= lat.size()) throw InvalidSpec("neutral element is not in the lattice");
    if (e_ == lat.bottom() || e_ == lat.top())
      throw InvalidSpec("neutral element must lie strictly between bottom and top");

    const ElemSet inc = lat.incomparables(e_);
    for (Elem x : lat.elements()) {
      RegionLabel r;
      if (contains(inc, x))
        r = RegionLabel::inc;
      else if (x == e_)
        r = RegionLabel::e;
      else if (x == lat.top() && family_ != Family::closure)
        r = RegionLabel::top;
      else if (x == lat.bottom())
        r = RegionLabel::zero;
      else if (lat.leq(x, e_))
        r = RegionLabel::low_open;
      else if (family_ == Family::closure)
        r = RegionLabel::high_halfopen;
      else
        r = RegionLabel::high_open;
      regions_.push_back(r);
    }
  }

  Family family() const noexcept { return family_; }
  Elem e() const noexcept { return e_; }
  const PartialBinOpTable& boundary() const noexcept { return boundary_; }
  const UnaryOpTable& op_low() const noexcept { return op_low_; }
  const UnaryOpTable& op_inc() const noexcept { return op_inc_; }
  const LatticePtr& lattice_ptr() const noexcept { return boundary_.lattice(); }
  const BoundedLattice& lattice() const noexcept { return *boundary_.lattice(); }

  RegionLabel region(Elem x) const { return regions_.at(x.index()); }

 private:
  Family family_;
  Elem e_;
  PartialBinOpTable boundary_;
  UnaryOpTable op_low_;
  UnaryOpTable op_inc_;
  std::vector<RegionLabel> regions_;
};

inline RegionLabel region_of(const ConstructionSpec& spec, Elem x) { return spec.region(x); }

struct ConditionRow {
  std::string name;
  std::string statement;
  bool passed = true;
  bool binding = true;   // false: reported, but not part of the iff
  bool vacuous = false;  // quantifier domain is empty
  std::vector<std::vector<Elem>> witnesses;
};

enum class ReportKind { hypotheses, characteristic };

struct ConditionReport {
  ReportKind kind = ReportKind::hypotheses;
  Family family = Family::closure;
  std::vector<ConditionRow> rows;
  std::vector<std::string> notes;

  /// Every binding row passes.
  bool passed() const {
    for (const auto& r : rows)
      if (r.binding && !r.passed) return false;
    return true;
  }
  const ConditionRow* find(std::string_view name) const {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {

inline ElemSet complement(const BoundedLattice& lat, const ElemSet& s) {
  ElemSet out;
  for (Elem x : lat.elements())
    if (!contains(s, x)) out.push_back(x);
  return out;
}

inline ConditionRow region_row(std::string name, std::string statement, const RegionCheck& c) {
  ConditionRow row{std::move(name), std::move(statement), c.holds, true, false, {}};
  for (Elem w : c.witnesses) row.witnesses.push_back({w});
  return row;
}

}  // namespace detail

/// Structural hypotheses of the family: operator kinds, boundary operation
/// placement, and pointwise comparability of the two operators.
inline ConditionReport check_hypotheses(const ConstructionSpec& spec) {
  const auto& lat = spec.lattice();
  const Family f = spec.family();
  const bool clo = is_closure_family(f);
  const Elem e = spec.e();
  ConditionReport rep;
  rep.kind = ReportKind::hypotheses;
  rep.family = f;

  const OperatorKind want = operator_kind(f);
  ConditionRow kinds{"operator-kinds",
                     std::string("op_low and op_inc are ") + to_string(want) + " operators",
                     spec.op_low().kind() == want && spec.op_inc().kind() == want,
                     true,
                     false,
                     {}};
  rep.rows.push_back(std::move(kinds));

  const IntervalSpec want_dom =
      clo ? IntervalSpec::closed(e, lat.top()) : IntervalSpec::closed(lat.bottom(), e);
  ConditionRow dom{"boundary-domain",
                   clo ? "boundary operation is a t-conorm on [e,1]"
                       : "boundary operation is a t-norm on [0,e]",
                   spec.boundary().role() == boundary_role(f) &&
                       spec.boundary().domain() == want_dom,
                   true,
                   false,
                   {}};
  rep.rows.push_back(std::move(dom));

  if (clo) {
    const ElemSet region = detail::complement(lat, lat.interval(want_dom));
    rep.rows.push_back(detail::region_row("comparability",
                                          "cl1(x) <= cl2(x) for all x in L\\[e,1]",
                                          pointwise_leq_on(spec.op_low(), spec.op_inc(), region)));
  } else {
    const ElemSet region = detail::complement(lat, lat.interval(want_dom));
    rep.rows.push_back(detail::region_row("comparability",
                                          "int2(x) <= int1(x) for all x in L\\[0,e]",
                                          pointwise_leq_on(spec.op_inc(), spec.op_low(), region)));
  }
  return rep;
}

/// The family's necessary-and-sufficient conditions. Requires a passing
/// hypothesis report for the same family.
///
/// For the strict families the emptiness of ]e,1[ (resp. ]0,e[) is recorded.
/// When it is empty the operators are never consulted by the construction,
/// so the range rows are kept for information but are not binding.
inline ConditionReport check_characteristic(const ConstructionSpec& spec,
                                            const ConditionReport& hypotheses) {
  if (hypotheses.kind != ReportKind::hypotheses || hypotheses.family != spec.family() ||
      !hypotheses.passed())
    throw HypothesesNotChecked();

  const auto& lat = spec.lattice();
  const Family f = spec.family();
  const Elem e = spec.e(), bot = lat.bottom(), top = lat.top();
  ConditionReport rep;
  rep.kind = ReportKind::characteristic;
  rep.family = f;

  const ElemSet inc = lat.incomparables(e);
  if (is_closure_family(f)) {
    const IntervalSpec forbidden = IntervalSpec::closed(e, top);
    rep.rows.push_back(detail::region_row(
        "low-range", "cl1(x) not in [e,1] for all x in ]0,e[",
        range_avoids(spec.op_low(), lat.interval(IntervalSpec::open(bot, e)), forbidden)));
    rep.rows.push_back(detail::region_row("inc-range", "cl2(x) not in [e,1] for all x in I_e",
                                          range_avoids(spec.op_inc(), inc, forbidden)));
  } else {
    const IntervalSpec forbidden = IntervalSpec::closed(bot, e);
    rep.rows.push_back(detail::region_row(
        "high-range", "int1(x) not in [0,e] for all x in ]e,1[",
        range_avoids(spec.op_low(), lat.interval(IntervalSpec::open(e, top)), forbidden)));
    rep.rows.push_back(detail::region_row("inc-range", "int2(x) not in [0,e] for all x in I_e",
                                          range_avoids(spec.op_inc(), inc, forbidden)));
  }

  if (is_strict_family(f)) {
    const bool clo = is_closure_family(f);
    const StrictnessCheck s = strictness_check(spec.boundary());
    ConditionRow row{"strictness",
                     clo ? "S(x,y) < 1 for all x,y in ]e,1[" : "0 < T(x,y) for all x,y in ]0,e[",
                     s.holds, true, s.vacuous, {}};
    for (const auto& [x, y] : s.witnesses) row.witnesses.push_back({x, y});
    rep.rows.push_back(std::move(row));

    const char* open_name = clo ? "]e,1[" : "]0,e[";
    if (s.vacuous) {
      for (auto& r : rep.rows)
        if (r.name != "strictness") r.binding = false;
      rep.notes.push_back(std::string(open_name) +
                          " is empty: the operators are never consulted, the strictness row is "
                          "vacuous and the range rows are sufficient but not necessary");
    } else {
      rep.notes.push_back(std::string(open_name) +
                          " is non-empty: strictness and both range rows are jointly necessary "
                          "and sufficient");
    }
  }
  return rep;
}

inline ConditionReport check_characteristic(const ConstructionSpec& spec) {
  return check_characteristic(spec, check_hypotheses(spec));
}

/// Builds the family's piecewise table. Construction does not depend on the
/// characteristic conditions; failing specs still produce a (non-uninorm) table.
inline FullBinOpTable construct(const ConstructionSpec& spec) {
  const auto& lat = spec.lattice();
  const Elem e = spec.e(), bot = lat.bottom(), top = lat.top();
  const auto& b = spec.boundary();
  const auto& low = spec.op_low();
  const auto& inc_op = spec.op_inc();
  using R = RegionLabel;
  auto in = [&](Elem x, std::initializer_list<R> rs) {
    const R r = spec.region(x);
    for (R c : rs)
      if (c == r) return true;
    return false;
  };
  // cl(x) ^ (x v e) and int(x) v (x ^ e)
  auto up_cell = [&](const UnaryOpTable& op, Elem x) { return lat.meet(op(x), lat.join(x, e)); };
  auto down_cell = [&](const UnaryOpTable& op, Elem x) {
    return lat.join(op(x), lat.meet(x, e));
  };

  std::function<Elem(Elem, Elem)> cell;
  switch (spec.family()) {
    case Family::closure:
      cell = [&](Elem x, Elem y) -> Elem {
        const auto upper = {R::e, R::high_halfopen};
        const auto low_or_inc = {R::low_open, R::inc};
        if (in(x, upper) && in(y, upper)) return b(x, y);
        if (in(x, low_or_inc) && y == e) return x;
        if (x == e && in(y, low_or_inc)) return y;
        if (in(x, {R::low_open}) && in(y, {R::high_halfopen})) return up_cell(low, x);
        if (in(x, {R::high_halfopen}) && in(y, {R::low_open})) return up_cell(low, y);
        if (in(x, {R::inc}) && in(y, {R::high_halfopen})) return up_cell(inc_op, x);
        if (in(x, {R::high_halfopen}) && in(y, {R::inc})) return up_cell(inc_op, y);
        return bot;
      };
      break;
    case Family::closure_strict:
      cell = [&](Elem x, Elem y) -> Elem {
        const auto upper = {R::e, R::high_open};
        const auto below_or_inc = {R::zero, R::low_open, R::inc};
        if (x == top || y == top) return top;
        if (in(x, upper) && in(y, upper)) return b(x, y);
        if (in(x, below_or_inc) && y == e) return x;
        if (x == e && in(y, below_or_inc)) return y;
        if (in(x, {R::low_open}) && in(y, {R::high_open})) return up_cell(low, x);
        if (in(x, {R::high_open}) && in(y, {R::low_open})) return up_cell(low, y);
        if (in(x, {R::inc}) && in(y, {R::high_open})) return up_cell(inc_op, x);
        if (in(x, {R::high_open}) && in(y, {R::inc})) return up_cell(inc_op, y);
        return bot;
      };
      break;
    case Family::interior:
      cell = [&](Elem x, Elem y) -> Elem {
        const auto lower = {R::zero, R::low_open, R::e};
        const auto below = {R::zero, R::low_open};
        const auto high_or_inc = {R::inc, R::high_open};
        if (in(x, lower) && in(y, lower)) return b(x, y);
        if (in(x, high_or_inc) && y == e) return x;
        if (x == e && in(y, high_or_inc)) return y;
        if (in(x, {R::inc}) && in(y, below)) return down_cell(inc_op, x);
        if (in(x, below) && in(y, {R::inc})) return down_cell(inc_op, y);
        if (in(x, {R::high_open}) && in(y, below)) return down_cell(low, x);
        if (in(x, below) && in(y, {R::high_open})) return down_cell(low, y);
        return top;
      };
      break;
    case Family::interior_strict:
      cell = [&](Elem x, Elem y) -> Elem {
        const auto lower = {R::low_open, R::e};
        const auto above_or_inc = {R::inc, R::high_open, R::top};
        if (x == bot || y == bot) return bot;
        if (in(x, lower) && in(y, lower)) return b(x, y);
        if (in(x, above_or_inc) && y == e) return x;
        if (x == e && in(y, above_or_inc)) return y;
        if (in(x, {R::high_open}) && in(y, {R::low_open})) return down_cell(low, x);
        if (in(x, {R::low_open}) && in(y, {R::high_open})) return down_cell(low, y);
        if (in(x, {R::inc}) && in(y, {R::low_open})) return down_cell(inc_op, x);
        if (in(x, {R::low_open}) && in(y, {R::inc})) return down_cell(inc_op, y);
        return top;
      };
      break;
  }
  return FullBinOpTable::tabulate(spec.lattice_ptr(), e, cell);
}

enum class KmSide { s, t };

/// The uninorms U_s (t-conorm on [e,1]) and U_t (t-norm on [0,e]) obtained
/// when both operators are the identity.
inline FullBinOpTable reference_karacal_mesiar(const LatticePtr& lat, Elem e,
                                               const PartialBinOpTable& boundary, KmSide side) {
  detail::require_same_lattice(lat, boundary.lattice());
  const Elem bot = lat->bottom(), top = lat->top();
  if (side == KmSide::s) {
    if (boundary.role() != BinopRole::tconorm ||
        boundary.domain() != IntervalSpec::closed(e, top))
      throw InvalidSpec("U_s needs a t-conorm on [e,1]");
    const ElemSet upper = lat->interval(IntervalSpec::closed(e, top));
    return FullBinOpTable::tabulate(lat, e, [&](Elem x, Elem y) {
      const bool xu = contains(upper, x), yu = contains(upper, y);
      if (xu && yu) return boundary(x, y);
      if (!xu && yu) return x;  // (I_e u [0,e[) x [e,1]
      if (xu && !yu) return y;
      return bot;
    });
  }
  if (boundary.role() != BinopRole::tnorm || boundary.domain() != IntervalSpec::closed(bot, e))
    throw InvalidSpec("U_t needs a t-norm on [0,e]");
  const ElemSet lower = lat->interval(IntervalSpec::closed(bot, e));
  return FullBinOpTable::tabulate(lat, e, [&](Elem x, Elem y) {
    const bool xl = contains(lower, x), yl = contains(lower, y);
    if (xl && yl) return boundary(x, y);
    if (!xl && yl) return x;  // (I_e u ]e,1]) x [0,e]
    if (xl && !yl) return y;
    return top;
  });
}

/// Lattice-shape side condition under which the construction is known to
/// land in a specific uninorm class.
struct StructuralPredicate {
  bool holds = false;
  std::string target_class;
  std::string reading;
};

namespace detail {
inline bool antichain(const BoundedLattice& lat, const ElemSet& s) {
  for (Elem x : s)
    for (Elem y : s)
      if (x != y && lat.comparable(x, y)) return false;
  return true;
}
}  // namespace detail

/// closure: ]0,e[ empty, a singleton or an antichain => U_min_star.
/// interior: same on ]e,1[ => U_max_star.
/// closure_strict: the ]0,e[ condition together with the same condition on I_e => U_min_1.
/// interior_strict: the ]e,1[ condition together with I_e => U_max_0.
inline StructuralPredicate structural_class_predicate(const ConstructionSpec& spec) {
  const auto& lat = spec.lattice();
  const Elem e = spec.e();
  const bool clo = is_closure_family(spec.family());
  const ElemSet open = clo ? lat.interval(IntervalSpec::open(lat.bottom(), e))
                           : lat.interval(IntervalSpec::open(e, lat.top()));
  const ElemSet inc = lat.incomparables(e);
  const char* open_name = clo ? "]0,e[" : "]e,1[";

  auto small = [](const ElemSet& s) { return s.size() <= 1; };
  StructuralPredicate p;
  if (!is_strict_family(spec.family())) {
    p.holds = small(open) || detail::antichain(lat, open);
    p.target_class = clo ? "U_min_star" : "U_max_star";
    p.reading = std::string(open_name) +
                " is empty or a singleton, or its distinct elements are pairwise incomparable";
  } else {
    p.holds = (small(open) && small(inc)) ||
              (detail::antichain(lat, open) && detail::antichain(lat, inc));
    p.target_class = clo ? "U_min_1" : "U_max_0";
    p.reading = std::string(open_name) +
                " and I_e are both empty-or-singleton, or both are antichains";
  }
  return p;
}

/// Single-operator instantiations of the two-operator families.
enum class Preset { single_clo, clo_id, km_s, single_int, int_id, km_t };

inline std::optional<Preset> parse_preset(std::string_view s) {
  if (s == "single-clo") return Preset::single_clo;
  if (s == "clo-id") return Preset::clo_id;
  if (s == "km-s") return Preset::km_s;
  if (s == "single-int") return Preset::single_int;
  if (s == "int-id") return Preset::int_id;
  if (s == "km-t") return Preset::km_t;
  return std::nullopt;
}

inline Family preset_family(Preset p) {
  switch (p) {
    case Preset::single_clo:
    case Preset::clo_id:
    case Preset::km_s: return Family::closure;
    default: return Family::interior;
  }
}

inline bool preset_needs_operator(Preset p) { return p != Preset::km_s && p != Preset::km_t; }

/// `op` is ignored for the km-* presets (pass std::nullopt).
inline ConstructionSpec make_preset_spec(Preset p, Elem e, PartialBinOpTable boundary,
                                         const std::optional<UnaryOpTable>& op) {
  const Family f = preset_family(p);
  const LatticePtr lat = boundary.lattice();
  const UnaryOpTable id = identity_operator(lat, operator_kind(f));
  if (preset_needs_operator(p) && !op) throw InvalidSpec("preset needs an operator");
  switch (p) {
    case Preset::single_clo:
    case Preset::single_int: return ConstructionSpec(f, e, std::move(boundary), *op, *op);
    case Preset::clo_id:
    case Preset::int_id: return ConstructionSpec(f, e, std::move(boundary), id, *op);
    case Preset::km_s:
    case Preset::km_t: return ConstructionSpec(f, e, std::move(boundary), id, id);
  }
  throw InvalidSpec("unknown preset");
}

}  // namespace uninorm
