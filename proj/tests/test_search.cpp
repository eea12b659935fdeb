#include <gtest/gtest.h>

#include "support/bridge.hpp"

using namespace uninorm;

namespace {

std::vector<Elem> map_of(const UnaryOpTable& op) { return {op.map().begin(), op.map().end()}; }

}  // namespace

TEST(EnumerateUnary, MatchesExhaustiveOracle) {
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    const auto p = bridge::poset(*lat);
    for (auto kind : {OperatorKind::closure, OperatorKind::interior}) {
      auto want = oracle::all_maps(p, [&](const oracle::Unary& f) {
        return kind == OperatorKind::closure ? oracle::is_closure(p, f)
                                             : oracle::is_interior(p, f);
      });
      auto got = all_operators(lat, kind);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(bridge::unary(got[i]), want[i]);
    }
  }
}

TEST(EnumerateUnary, DiamondCount) {
  // exhausting all 4^4 self-maps of M2 gives 7 closure operators
  EXPECT_EQ(all_operators(fixtures::m2(), OperatorKind::closure).size(), 7u);
}

TEST(EnumerateUnary, IdentityAlwaysPresentAndOrderIsLexicographic) {
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    for (auto kind : {OperatorKind::closure, OperatorKind::interior}) {
      auto ops = all_operators(lat, kind);
      EXPECT_NE(std::find(ops.begin(), ops.end(), identity_operator(lat, kind)), ops.end());
      for (std::size_t i = 1; i < ops.size(); ++i) EXPECT_LT(map_of(ops[i - 1]), map_of(ops[i]));
      EXPECT_EQ(all_operators(lat, kind).size(), ops.size());
    }
  }
}

TEST(EnumerateUnary, Constraints) {
  auto lat = fixtures::l1();
  const Elem e = lat->find("e");
  SearchConstraints c;
  c.range_avoidance = SearchConstraints::RangeAvoidance{
      lat->interval(IntervalSpec::open(lat->bottom(), e)), IntervalSpec::closed(e, lat->top())};
  auto ops = collect_unary(lat, c);
  EXPECT_NE(std::find(ops.begin(), ops.end(), fixtures::l1_cl1(lat)), ops.end());
  for (const auto& op : ops) {
    EXPECT_FALSE(lat->leq(e, op(lat->find("a"))));
    EXPECT_FALSE(lat->leq(e, op(lat->find("b"))));
  }

  SearchConstraints below;
  ElemSet not_up;
  for (Elem x : lat->elements())
    if (!lat->leq(e, x)) not_up.push_back(x);
  below.comparability = SearchConstraints::Comparability{not_up, map_of(fixtures::l1_cl2(lat)), true};
  for (const auto& op : collect_unary(lat, below))
    EXPECT_TRUE(pointwise_leq_on(op, fixtures::l1_cl2(lat), not_up).holds);

  SearchConstraints fixed;
  fixed.fixed_points.assign(lat->size(), std::nullopt);
  fixed.fixed_points[lat->find("m").index()] = lat->find("k");
  for (const auto& op : collect_unary(lat, fixed)) EXPECT_EQ(lat->name(op(lat->find("m"))), "k");

  SearchConstraints bad;
  bad.fixed_points.assign(2, std::nullopt);
  EXPECT_THROW(collect_unary(lat, bad), InvalidSpec);
}

TEST(EnumerateUnary, SizeGuard) {
  std::vector<std::string> names;
  for (int i = 0; i < 13; ++i) names.push_back("c" + std::to_string(i));
  EXPECT_THROW(all_operators(fixtures::chain(names), OperatorKind::closure), LatticeTooLarge);
  names.pop_back();
  EXPECT_EQ(all_operators(fixtures::chain(names), OperatorKind::closure).size(), 2048u);
}

TEST(AdmissiblePairs, L1Examples) {
  auto lat = fixtures::l1();
  const Elem e = lat->find("e");
  auto cl1 = fixtures::l1_cl1(lat), cl2 = fixtures::l1_cl2(lat);
  auto join_e = validate_unary(lat, OperatorKind::closure, join_with_map(*lat, e));
  auto id = identity_operator(lat, OperatorKind::closure);
  int seen = 0;
  enumerate_admissible_pairs(lat, e, Family::closure, [&](const AdmissiblePair& p) {
    if (p.op_low == cl1 && p.op_inc == cl2) {
      EXPECT_TRUE(p.characteristic_pass);
      ++seen;
    }
    if (p.op_low == join_e && p.op_inc == join_e) {
      EXPECT_FALSE(p.characteristic_pass);
      const auto* row = p.report.find("low-range");
      EXPECT_EQ(row->witnesses.size(), 2u);
      ++seen;
    }
    if (p.op_low == id && p.op_inc == id) {
      EXPECT_TRUE(p.characteristic_pass);
      ++seen;
    }
    return true;
  });
  EXPECT_EQ(seen, 3);
}

TEST(PartialBinops, Counts) {
  auto lat = fixtures::l3();
  const Elem e = lat->find("e");
  auto two = collect_partial_binops(lat, IntervalSpec::closed(lat->find("t"), lat->top()),
                                    BinopRole::tconorm);
  EXPECT_EQ(two.size(), 1u);
  // exhausting all 3^9 tables on {e,t,1} gives two t-conorms
  auto three = collect_partial_binops(lat, IntervalSpec::closed(e, lat->top()), BinopRole::tconorm);
  EXPECT_EQ(three.size(), 2u);
  EXPECT_NE(std::find(three.begin(), three.end(), join_tconorm(lat, e)), three.end());
  auto tn = collect_partial_binops(lat, IntervalSpec::closed(lat->bottom(), e), BinopRole::tnorm);
  EXPECT_NE(std::find(tn.begin(), tn.end(), meet_tnorm(lat, e)), tn.end());
  EXPECT_THROW(collect_partial_binops(lat, IntervalSpec::closed(lat->bottom(), lat->top()),
                                      BinopRole::tnorm),
               DomainTooLarge);
}

// Symmetric tables on M2 with 1 as neutral element, checked axiom by axiom.
TEST(PartialBinops, MatchExhaustiveOracleOnDiamond) {
  auto lat = fixtures::m2();
  const auto p = bridge::poset(*lat);
  const auto& ns = p.names();
  const std::string one = p.top();
  std::vector<std::string> free;
  for (const auto& n : ns)
    if (n != one) free.push_back(n);
  std::vector<std::pair<std::string, std::string>> idx;
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = i; j < free.size(); ++j) idx.emplace_back(free[i], free[j]);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) combos *= ns.size();
  std::size_t want = 0;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    oracle::Table t;
    for (const auto& n : ns) t[{one, n}] = t[{n, one}] = n;
    for (const auto& [x, y] : idx) {
      t[{x, y}] = t[{y, x}] = ns[c % ns.size()];
      c /= ns.size();
    }
    bool ok = true;
    for (const auto& x : ns)
      for (const auto& y : ns)
        for (const auto& z : ns) {
          if (t[{x, t[{y, z}]}] != t[{t[{x, y}], z}]) ok = false;
          if (p.leq(x, y) && !p.leq(t[{x, z}], t[{y, z}])) ok = false;
        }
    want += ok;
  }
  auto got = collect_partial_binops(lat, IntervalSpec::closed(lat->bottom(), lat->top()),
                                    BinopRole::tnorm);
  EXPECT_EQ(got.size(), want);
  EXPECT_GT(want, 1u);
}

TEST(BruteForce, SmallCases) {
  auto c3 = fixtures::chain3();
  // all 3^9 tables on {0<e<1}: two uninorms with neutral e
  auto u = collect_uninorms(c3, c3->find("e"));
  EXPECT_EQ(u.size(), 2u);
  const auto s = join_tconorm(c3, c3->find("e"));
  const auto km = reference_karacal_mesiar(c3, c3->find("e"), s, KmSide::s);
  EXPECT_NE(std::find(u.begin(), u.end(), km), u.end());

  auto c2 = fixtures::chain2();
  EXPECT_EQ(collect_uninorms(c2, c2->top()).size(), 1u);

  auto m2 = fixtures::m2();
  const auto p = bridge::poset(*m2);
  auto all = collect_uninorms(m2, m2->find("a"));
  EXPECT_FALSE(all.empty());
  for (const auto& t : all) EXPECT_TRUE(oracle::is_uninorm(p, bridge::table(t), "a"));

  std::vector<std::string> names{"0", "a", "b", "c", "d", "1"};
  EXPECT_THROW(collect_uninorms(fixtures::chain(names), Elem(1)), LatticeTooLarge);
}

TEST(BruteForce, ChainThreeMatchesOracle) {
  auto lat = fixtures::chain3();
  const auto p = bridge::poset(*lat);
  const auto& ns = p.names();
  for (Elem e : lat->elements()) {
    std::size_t want = 0;
    for (std::size_t code = 0; code < 19683; ++code) {
      std::size_t c = code;
      oracle::Table t;
      for (std::size_t i = 0; i < 9; ++i) {
        t[{ns[i / 3], ns[i % 3]}] = ns[c % 3];
        c /= 3;
      }
      want += oracle::is_uninorm(p, t, lat->name(e));
    }
    EXPECT_EQ(collect_uninorms(lat, e).size(), want);
  }
}

// Every construction with passing conditions shows up among all uninorms.
TEST(BruteForce, ContainsConstructedUninorms) {
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    for (Elem e : lat->elements()) {
      if (e == lat->bottom() || e == lat->top()) continue;
      const auto all = collect_uninorms(lat, e);
      for (Family f : {Family::closure, Family::interior, Family::closure_strict,
                       Family::interior_strict})
        enumerate_admissible_pairs(lat, e, f, [&](const AdmissiblePair& p) {
          if (!p.characteristic_pass) return true;
          auto u = construct(ConstructionSpec(f, e, default_boundary(lat, e, f), p.op_low, p.op_inc));
          EXPECT_NE(std::find(all.begin(), all.end(), u), all.end());
          return true;
        });
    }
  }
}
