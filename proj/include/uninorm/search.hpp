#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "uninorm/binary_op.hpp"
#include "uninorm/construct.hpp"
#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"

namespace uninorm {

// Size guards for the exhaustive searches.
inline constexpr std::size_t max_unary_search_size = 12;
inline constexpr std::size_t max_binop_domain_size = 5;
inline constexpr std::size_t max_uninorm_search_size = 5;

/// Filters applied during enumerate_unary.
struct SearchConstraints {
  OperatorKind kind = OperatorKind::closure;

  /// op(x) <= reference[x] on `region` (or >= when `below` is false).
  struct Comparability {
    ElemSet region;
    std::vector<Elem> reference;
    bool below = true;
  };
  std::optional<Comparability> comparability;

  /// op(x) outside `forbidden` for x in `region`.
  struct RangeAvoidance {
    ElemSet region;
    IntervalSpec forbidden;
  };
  std::optional<RangeAvoidance> range_avoidance;

  /// Prescribed values; empty or one entry per element.
  std::vector<std::optional<Elem>> fixed_points;
};

/// Visitors return true to continue the enumeration, false to stop.
using UnaryVisitor = std::function<bool(const UnaryOpTable&)>;

/// Every closure (or interior) operator satisfying `c`, in lexicographic
/// order of the value sequence over declared element order.
inline void enumerate_unary(const LatticePtr& lat, const SearchConstraints& c,
                            const UnaryVisitor& visit) {
  const auto& L = *lat;
  const std::size_t n = L.size();
  if (n > max_unary_search_size)
    throw LatticeTooLarge("operator search is limited to " +
                          std::to_string(max_unary_search_size) + " elements");
  auto check_ref = [&](Elem x) {
    if (x.index() >= n) throw UnknownElement("#" + std::to_string(x.index()));
  };
  if (c.comparability) {
    for (Elem x : c.comparability->region) check_ref(x);
    if (c.comparability->reference.size() != n)
      throw InvalidSpec("comparability reference must cover every element");
    for (Elem x : c.comparability->reference) check_ref(x);
  }
  if (c.range_avoidance) {
    for (Elem x : c.range_avoidance->region) check_ref(x);
    check_ref(c.range_avoidance->forbidden.low);
    check_ref(c.range_avoidance->forbidden.high);
  }
  if (!c.fixed_points.empty() && c.fixed_points.size() != n)
    throw InvalidSpec("fixed points must be given per element");
  for (const auto& v : c.fixed_points)
    if (v) check_ref(*v);

  const bool closure = c.kind == OperatorKind::closure;
  // Per-element admissible values (extensivity/contractivity plus filters).
  std::vector<std::vector<Elem>> cand(n);
  const ElemSet forbidden =
      c.range_avoidance ? L.interval(c.range_avoidance->forbidden) : ElemSet{};
  for (Elem x : L.elements()) {
    for (Elem v : L.elements()) {
      if (closure ? !L.leq(x, v) : !L.leq(v, x)) continue;
      if (!c.fixed_points.empty() && c.fixed_points[x.index()] && *c.fixed_points[x.index()] != v)
        continue;
      if (c.range_avoidance && contains(c.range_avoidance->region, x) && contains(forbidden, v))
        continue;
      if (c.comparability && contains(c.comparability->region, x)) {
        Elem r = c.comparability->reference[x.index()];
        if (c.comparability->below ? !L.leq(v, r) : !L.leq(r, v)) continue;
      }
      cand[x.index()].push_back(v);
    }
  }

  std::vector<Elem> map(n);
  bool stop = false;
  // Monotonicity and idempotence against already assigned elements.
  auto consistent = [&](std::size_t i) {
    const Elem x(i), v = map[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Elem y(j), w = map[j];
      if (L.leq(y, x) && !L.leq(w, v)) return false;
      if (L.leq(x, y) && !L.leq(v, w)) return false;
      if (w == x && v != x) return false;
    }
    if (v.index() < i && map[v.index()] != v) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (find_unary_violation(L, c.kind, map)) return;
      if (!visit(validate_unary(lat, c.kind, map))) stop = true;
      return;
    }
    for (Elem v : cand[i]) {
      map[i] = v;
      if (consistent(i)) rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<UnaryOpTable> collect_unary(const LatticePtr& lat, const SearchConstraints& c) {
  std::vector<UnaryOpTable> out;
  enumerate_unary(lat, c, [&](const UnaryOpTable& op) {
    out.push_back(op);
    return true;
  });
  return out;
}

inline std::vector<UnaryOpTable> all_operators(const LatticePtr& lat, OperatorKind kind) {
  SearchConstraints c;
  c.kind = kind;
  return collect_unary(lat, c);
}

struct AdmissiblePair {
  UnaryOpTable op_low;
  UnaryOpTable op_inc;
  bool characteristic_pass = false;
  ConditionReport report;
};

using PairVisitor = std::function<bool(const AdmissiblePair&)>;

inline PartialBinOpTable default_boundary(const LatticePtr& lat, Elem e, Family f) {
  return is_closure_family(f) ? join_tconorm(lat, e) : meet_tnorm(lat, e);
}

/// Every (op_low, op_inc) pair drawn from `pool` passing check_hypotheses for
/// the family, in pool order (op_low outer), tagged with the characteristic verdict.
inline void enumerate_admissible_pairs(Elem e, Family f, const PartialBinOpTable& boundary,
                                       const std::vector<UnaryOpTable>& pool,
                                       const PairVisitor& visit) {
  for (const auto& lo : pool)
    for (const auto& inc : pool) {
      ConstructionSpec spec(f, e, boundary, lo, inc);
      ConditionReport hyp = check_hypotheses(spec);
      if (!hyp.passed()) continue;
      ConditionReport ch = check_characteristic(spec, hyp);
      AdmissiblePair p{lo, inc, ch.passed(), std::move(ch)};
      if (!visit(p)) return;
    }
}

/// All admissible pairs over every operator of the family's kind, with the
/// family's default boundary operation (join on [e,1] or meet on [0,e]).
inline void enumerate_admissible_pairs(const LatticePtr& lat, Elem e, Family f,
                                       const PairVisitor& visit) {
  const auto pool = all_operators(lat, operator_kind(f));
  enumerate_admissible_pairs(e, f, default_boundary(lat, e, f), pool, visit);
}

using PartialVisitor = std::function<bool(const PartialBinOpTable&)>;

/// Every t-norm or t-conorm on the closed interval `domain`.
inline void enumerate_partial_binops(const LatticePtr& lat, IntervalSpec domain, BinopRole role,
                                     const PartialVisitor& visit) {
  const auto& L = *lat;
  const ElemSet dom = L.interval(domain);
  const std::size_t m = dom.size();
  if (m > max_binop_domain_size)
    throw DomainTooLarge("t-norm/t-conorm search is limited to domains of " +
                         std::to_string(max_binop_domain_size) + " elements");
  const Elem neutral = role == BinopRole::tnorm ? domain.high : domain.low;
  std::size_t ni = 0;
  while (dom[ni] != neutral) ++ni;

  std::vector<Elem> t(m * m);
  std::vector<bool> set(m * m, false);
  for (std::size_t i = 0; i < m; ++i) {
    t[ni * m + i] = t[i * m + ni] = dom[i];
    set[ni * m + i] = set[i * m + ni] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (i != ni && j != ni) free.emplace_back(i, j);

  // Monotone in each argument against every assigned cell.
  auto monotone_ok = [&] {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (!set[a * m + b]) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (!set[a * m + c] || !L.leq(dom[b], dom[c])) continue;
          if (!L.leq(t[a * m + b], t[a * m + c])) return false;
        }
      }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == free.size()) {
      auto op = [&](Elem x, Elem y) {
        std::size_t a = 0, b = 0;
        while (dom[a] != x) ++a;
        while (dom[b] != y) ++b;
        return t[a * m + b];
      };
      if (detail::scan_partial(L, dom, neutral, op)) return;
      if (!visit(validate_partial(lat, domain, role, t))) stop = true;
      return;
    }
    const auto [i, j] = free[k];
    // T(x,y) <= x ^ y and S(x,y) >= x v y follow from monotonicity and neutrality.
    const Elem bound = role == BinopRole::tnorm ? L.meet(dom[i], dom[j]) : L.join(dom[i], dom[j]);
    for (Elem v : dom) {
      if (role == BinopRole::tnorm ? !L.leq(v, bound) : !L.leq(bound, v)) continue;
      t[i * m + j] = t[j * m + i] = v;
      set[i * m + j] = set[j * m + i] = true;
      if (monotone_ok()) rec(k + 1);
      set[i * m + j] = set[j * m + i] = false;
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<PartialBinOpTable> collect_partial_binops(const LatticePtr& lat,
                                                             IntervalSpec domain, BinopRole role) {
  std::vector<PartialBinOpTable> out;
  enumerate_partial_binops(lat, domain, role, [&](const PartialBinOpTable& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

using FullVisitor = std::function<bool(const FullBinOpTable&)>;

/// Every uninorm on `lat` with neutral element `e`, lexicographic over the
/// upper triangle of the table in declared order.
inline void brute_force_uninorms(const LatticePtr& lat, Elem e, const FullVisitor& visit) {
  const auto& L = *lat;
  const std::size_t n = L.size();
  if (n > max_uninorm_search_size)
    throw LatticeTooLarge("uninorm search is limited to " +
                          std::to_string(max_uninorm_search_size) + " elements");
  if (e.index() >= n) throw UnknownElement("#" + std::to_string(e.index()));

  std::vector<Elem> t(n * n);
  std::vector<bool> set(n * n, false);
  const std::size_t ei = e.index();
  for (std::size_t i = 0; i < n; ++i) {
    t[ei * n + i] = t[i * n + ei] = Elem(i);
    set[ei * n + i] = set[i * n + ei] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (i != ei && j != ei) free.emplace_back(i, j);

  // Monotonicity along row i and row j involving the new cell (i,j).
  auto monotone_ok = [&](std::size_t i, std::size_t j) {
    for (auto [r, c] : {std::pair{i, j}, std::pair{j, i}})
      for (std::size_t k = 0; k < n; ++k) {
        if (!set[r * n + k]) continue;
        if (L.leq(Elem(k), Elem(c)) && !L.leq(t[r * n + k], t[r * n + c])) return false;
        if (L.leq(Elem(c), Elem(k)) && !L.leq(t[r * n + c], t[r * n + k])) return false;
      }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == free.size()) {
      FullBinOpTable u(lat, e, t);
      if (!validate_uninorm(u).is_uninorm()) return;
      if (!visit(u)) stop = true;
      return;
    }
    const auto [i, j] = free[k];
    for (Elem v : L.elements()) {
      t[i * n + j] = t[j * n + i] = v;
      set[i * n + j] = set[j * n + i] = true;
      if (monotone_ok(i, j)) rec(k + 1);
      set[i * n + j] = set[j * n + i] = false;
      if (stop) return;
    }
  };
  rec(0);
}

inline std::vector<FullBinOpTable> collect_uninorms(const LatticePtr& lat, Elem e) {
  std::vector<FullBinOpTable> out;
  brute_force_uninorms(lat, e, [&](const FullBinOpTable& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

}  // namespace uninorm
