#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uninorm/binary_op.hpp"
#include "uninorm/construct.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"

// Bundled lattices and operators. The three worked lattices carry a neutral
// element `e`; the small ones are the usual suspects for exhaustive tests.
namespace uninorm::fixtures {

using Covers = std::vector<std::pair<std::string, std::string>>;

inline LatticePtr chain(std::vector<std::string> names) {
  Covers c;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) c.emplace_back(names[i], names[i + 1]);
  std::string bot = names.front(), top = names.back();
  return build_lattice(std::move(names), c, bot, top);
}

inline LatticePtr chain2() { return chain({"0", "1"}); }
inline LatticePtr chain3() { return chain({"0", "e", "1"}); }
inline LatticePtr chain5() { return chain({"0", "a", "e", "b", "1"}); }

// 0 < a,b < 1
inline LatticePtr m2() {
  return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "0",
                       "1");
}

// 0 < a < b < 1, 0 < c < 1
inline LatticePtr n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}, "0", "1");
}

inline LatticePtr m3() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                       "0", "1");
}

// 0 < x < a,b < 1
inline LatticePtr diamond_tail() {
  return build_lattice({"0", "x", "a", "b", "1"},
                       {{"0", "x"}, {"x", "a"}, {"x", "b"}, {"a", "1"}, {"b", "1"}}, "0", "1");
}

// 0 < a,b < y < 1
inline LatticePtr diamond_head() {
  return build_lattice({"0", "a", "b", "y", "1"},
                       {{"0", "a"}, {"0", "b"}, {"a", "y"}, {"b", "y"}, {"y", "1"}}, "0", "1");
}

// 0 < a < e < 1 and 0 < i < 1: e is covered by 1, so ]e,1[ is empty.
inline LatticePtr strict_edge() {
  return build_lattice({"0", "a", "e", "i", "1"},
                       {{"0", "a"}, {"a", "e"}, {"e", "1"}, {"0", "i"}, {"i", "1"}}, "0", "1");
}

/// Every shipped lattice with at most five elements.
inline std::vector<std::pair<std::string, LatticePtr>> small_lattices() {
  return {{"chain2", chain2()},       {"chain3", chain3()},         {"m2", m2()},
          {"chain5", chain5()},       {"n5", n5()},                 {"m3", m3()},
          {"diamond_tail", diamond_tail()}, {"diamond_head", diamond_head()},
          {"strict_edge", strict_edge()}};
}

// ---- worked lattices ---------------------------------------------------------

inline LatticePtr l1() {
  return build_lattice({"0", "a", "b", "e", "m", "k", "s", "n", "j", "1"},
                       {{"0", "m"},
                        {"m", "k"},
                        {"m", "s"},
                        {"k", "n"},
                        {"s", "n"},
                        {"n", "j"},
                        {"0", "a"},
                        {"a", "b"},
                        {"b", "e"},
                        {"e", "j"},
                        {"j", "1"}},
                       "0", "1");
}

inline LatticePtr l2() {
  return build_lattice({"0", "a", "e", "m", "k", "s", "n", "b", "1"},
                       {{"0", "m"},
                        {"m", "k"},
                        {"m", "s"},
                        {"k", "n"},
                        {"s", "n"},
                        {"n", "1"},
                        {"0", "a"},
                        {"a", "e"},
                        {"e", "b"},
                        {"b", "1"}},
                       "0", "1");
}

inline LatticePtr l3() {
  return build_lattice({"0", "r", "a", "e", "l", "m", "n", "b", "c", "t", "1"},
                       {{"0", "l"},
                        {"l", "m"},
                        {"m", "n"},
                        {"n", "c"},
                        {"0", "r"},
                        {"r", "a"},
                        {"a", "b"},
                        {"b", "c"},
                        {"c", "1"},
                        {"a", "e"},
                        {"e", "t"},
                        {"t", "1"}},
                       "0", "1");
}

/// Operator given as values in declared element order.
inline UnaryOpTable op_from_names(const LatticePtr& lat, OperatorKind kind,
                                  const std::vector<std::string>& values) {
  std::vector<Elem> m;
  for (const auto& v : values) m.push_back(lat->find(v));
  return validate_unary(lat, kind, std::move(m));
}

inline UnaryOpTable l1_cl1(const LatticePtr& lat) {
  return op_from_names(lat, OperatorKind::closure, {"0", "b", "b", "e", "k", "k", "n", "n", "j", "1"});
}
inline UnaryOpTable l1_cl2(const LatticePtr& lat) {
  return op_from_names(lat, OperatorKind::closure, {"k", "j", "j", "j", "k", "k", "n", "n", "j", "1"});
}
inline UnaryOpTable l3_cl1(const LatticePtr& lat) {
  return op_from_names(lat, OperatorKind::closure,
                       {"0", "a", "a", "e", "n", "n", "n", "c", "c", "t", "1"});
}
inline UnaryOpTable l3_cl2(const LatticePtr& lat) {
  return op_from_names(lat, OperatorKind::closure,
                       {"a", "a", "a", "e", "c", "c", "c", "c", "c", "t", "1"});
}

/// L1 with its two closure operators and S = join on [e,1].
inline ConstructionSpec l1_spec() {
  auto lat = l1();
  const Elem e = lat->find("e");
  return ConstructionSpec(Family::closure, e, join_tconorm(lat, e), l1_cl1(lat), l1_cl2(lat));
}

/// L2 with op_low = identity and op_inc(x) = x v k.
inline ConstructionSpec l2_spec() {
  auto lat = l2();
  const Elem e = lat->find("e");
  return ConstructionSpec(Family::closure, e, join_tconorm(lat, e),
                          identity_operator(lat, OperatorKind::closure),
                          validate_unary(lat, OperatorKind::closure,
                                         join_with_map(*lat, lat->find("k"))));
}

/// L3 with its two closure operators, S = join on [e,1], strict family.
inline ConstructionSpec l3_spec() {
  auto lat = l3();
  const Elem e = lat->find("e");
  return ConstructionSpec(Family::closure_strict, e, join_tconorm(lat, e), l3_cl1(lat),
                          l3_cl2(lat));
}

}  // namespace uninorm::fixtures
