#include <random>

#include <gtest/gtest.h>

#include "support/bridge.hpp"

using namespace uninorm;

namespace {

PartialBinOpTable tconorm_from(const LatticePtr& lat, const std::string& lo, const std::string& hi,
                               const std::vector<std::string>& cells) {
  std::vector<Elem> t;
  for (const auto& c : cells) t.push_back(lat->find(c));
  return validate_partial(lat, IntervalSpec::closed(lat->find(lo), lat->find(hi)),
                          BinopRole::tconorm, std::move(t));
}

}  // namespace

TEST(Partial, JoinAndMeetAreCertified) {
  auto lat = fixtures::l1();
  const Elem e = lat->find("e");
  auto s = join_tconorm(lat, e);
  EXPECT_EQ(s.elements().size(), 3u);
  EXPECT_EQ(lat->name(s(lat->find("j"), lat->find("e"))), "j");
  EXPECT_THROW(s(lat->find("a"), e), Error);
  auto t = meet_tnorm(lat, e);
  EXPECT_EQ(t.role(), BinopRole::tnorm);
  EXPECT_EQ(lat->name(t(lat->find("a"), lat->find("b"))), "a");
}

TEST(Partial, RejectsBadTables) {
  auto lat = fixtures::l3();
  // domain {e, t, 1}
  EXPECT_THROW(tconorm_from(lat, "e", "1", {"e", "t", "1", "t", "c", "1", "1", "1", "1"}),
               OutOfDomainOutput);
  try {
    tconorm_from(lat, "e", "1", {"e", "t", "1", "t", "t", "1", "1", "t", "1"});
    FAIL();
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "commutativity");
    EXPECT_EQ(v.witnesses(), (std::vector<std::string>{"t", "1"}));
  }
  try {
    tconorm_from(lat, "e", "1", {"t", "t", "1", "t", "t", "1", "1", "1", "1"});
    FAIL();
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "neutral");
  }
  EXPECT_THROW(validate_partial(lat, IntervalSpec::left_open(lat->find("e"), lat->top()),
                                BinopRole::tconorm, {}),
               Error);
}

TEST(Partial, Strictness) {
  auto lat = fixtures::l3();
  auto join = tconorm_from(lat, "e", "1", {"e", "t", "1", "t", "t", "1", "1", "1", "1"});
  auto drastic = tconorm_from(lat, "e", "1", {"e", "t", "1", "t", "1", "1", "1", "1", "1"});
  auto sj = strictness_check(join);
  EXPECT_TRUE(sj.holds);
  EXPECT_FALSE(sj.vacuous);
  auto sd = strictness_check(drastic);
  EXPECT_FALSE(sd.holds);
  ASSERT_EQ(sd.witnesses.size(), 1u);
  EXPECT_EQ(lat->name(sd.witnesses[0].first), "t");

  auto edge = fixtures::strict_edge();
  auto s = strictness_check(join_tconorm(edge, edge->find("e")));
  EXPECT_TRUE(s.holds);
  EXPECT_TRUE(s.vacuous);
}

TEST(Partial, DualizationSwapsRole) {
  auto lat = fixtures::l3();
  auto d = dual_lattice(lat);
  auto s = join_tconorm(lat, lat->find("e"));
  auto t = dualize_partial(s, d);
  EXPECT_EQ(t.role(), BinopRole::tnorm);
  EXPECT_EQ(t, meet_tnorm(d, d->find("e")));
}

TEST(Uninorm, ValidatorAgreesWithOracleOnRandomTables) {
  std::mt19937 rng(20240611);
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    const auto p = bridge::poset(*lat);
    const std::size_t n = lat->size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const Elem e(pick(rng));
      // start from a real uninorm half of the time so both verdicts occur
      auto known = collect_uninorms(lat, e);
      std::vector<Elem> cells;
      if (!known.empty() && trial % 2 == 0) {
        const auto& base = known[pick(rng) % known.size()];
        cells.assign(base.cells().begin(), base.cells().end());
        if (trial % 4 == 0) cells[pick(rng) * n + pick(rng)] = Elem(pick(rng));
      } else {
        for (std::size_t i = 0; i < n * n; ++i) cells.emplace_back(pick(rng));
      }
      FullBinOpTable u(lat, e, cells);
      EXPECT_EQ(validate_uninorm(u).is_uninorm(),
                oracle::is_uninorm(p, bridge::table(u), lat->name(e)));
    }
  }
}

TEST(Uninorm, WitnessesRefuteByDirectEvaluation) {
  auto spec = fixtures::l1_spec();
  auto u = construct(spec);
  ASSERT_TRUE(validate_uninorm(u).is_uninorm());
  const auto& lat = *u.lattice();
  // Break one cell symmetrically.
  auto broken = u.with_cell(lat.find("j"), lat.find("m"), lat.find("n"))
                    .with_cell(lat.find("m"), lat.find("j"), lat.find("n"));
  auto r = validate_uninorm(broken, WitnessMode::all);
  ASSERT_FALSE(r.is_uninorm());
  for (const auto& w : r.associative.witnesses)
    EXPECT_NE(broken(w[0], broken(w[1], w[2])), broken(broken(w[0], w[1]), w[2]));
  for (const auto& w : r.monotone.witnesses) {
    ASSERT_TRUE(lat.leq(w[0], w[1]));
    EXPECT_TRUE(!lat.leq(broken(w[0], w[2]), broken(w[1], w[2])) ||
                !lat.leq(broken(w[2], w[0]), broken(w[2], w[1])));
  }
  EXPECT_TRUE(r.commutative.holds);
  EXPECT_TRUE(r.neutral.holds);
}

TEST(Uninorm, FirstModeStopsAtOneWitness) {
  auto lat = fixtures::m2();
  auto u = FullBinOpTable::tabulate(lat, lat->find("a"), [](Elem, Elem) { return Elem(0); });
  auto r = validate_uninorm(u, WitnessMode::first);
  EXPECT_EQ(r.neutral.witnesses.size(), 1u);
  auto all = validate_uninorm(u, WitnessMode::all);
  EXPECT_EQ(all.neutral.witnesses.size(), 3u);  // every x except 0
}

TEST(Uninorm, PartitionedAssociativityErrors) {
  auto spec = fixtures::l1_spec();
  auto u = construct(spec);
  const auto& lat = *u.lattice();
  EXPECT_THROW(check_associativity_partitioned(u, {lat.elements(), {lat.bottom()}}),
               NotAPartition);
  EXPECT_THROW(check_associativity_partitioned(u, {{lat.bottom()}}), NotAPartition);
  auto skew = u.with_cell(lat.find("a"), lat.find("j"), lat.find("a"));
  EXPECT_THROW(check_associativity_partitioned(skew, {lat.elements()}), NotCommutative);
  EXPECT_TRUE(check_associativity_partitioned(u, {lat.elements()}).holds);
}

TEST(Classes, L1Membership) {
  auto u = construct(fixtures::l1_spec());
  const auto& lat = *u.lattice();
  auto m = classify(u);
  EXPECT_FALSE(m.u_min_star.member);
  EXPECT_FALSE(m.u_min_1.member);
  const CellWitness ja{lat.find("j"), lat.find("a"), lat.find("b")};
  ASSERT_FALSE(m.u_min_star.witnesses.empty());
  EXPECT_EQ(m.u_min_star.witnesses.front(), ja);
  EXPECT_EQ(m.u_min_1.witnesses.front(), ja);
}

TEST(Classes, L2Membership) {
  auto u = construct(fixtures::l2_spec());
  const auto& lat = *u.lattice();
  auto m = classify(u);
  EXPECT_TRUE(m.u_min_star.member);
  EXPECT_FALSE(m.u_min.member);
  EXPECT_FALSE(m.u_max_r.member);
  auto has = [&](const ClassCheck& c, const char* x, const char* y, const char* v) {
    const CellWitness w{lat.find(x), lat.find(y), lat.find(v)};
    return std::find(c.witnesses.begin(), c.witnesses.end(), w) != c.witnesses.end();
  };
  EXPECT_TRUE(has(m.u_min, "b", "s", "n"));
  EXPECT_TRUE(has(m.u_max_r, "a", "s", "0"));
}

TEST(Classes, RejectsNonUninorms) {
  auto lat = fixtures::m2();
  auto u = FullBinOpTable::tabulate(lat, lat->find("a"), [](Elem, Elem) { return Elem(0); });
  EXPECT_THROW(classify(u), NotAUninorm);
}

// The class conditions evaluated through the oracle's region predicates.
TEST(Classes, AgreeWithOracleRegions) {
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    const auto p = bridge::poset(*lat);
    for (Elem e : lat->elements()) {
      if (e == lat->bottom() || e == lat->top()) continue;
      oracle::Regions r(p, lat->name(e));
      for (const auto& u : collect_uninorms(lat, e)) {
        const auto t = bridge::table(u);
        auto rect = [&](auto rows, auto cols, bool want_second) {
          for (const auto& x : p.names())
            for (const auto& y : p.names())
              if (rows(x) && cols(y) && t.at({x, y}) != (want_second ? y : x)) return false;
          return true;
        };
        auto hl = [&](const std::string& x) { return r.high_lopen(x); };
        auto lr = [&](const std::string& x) { return r.low_ropen(x); };
        auto not_up = [&](const std::string& x) { return !r.high_closed(x); };
        auto not_down = [&](const std::string& x) { return !r.low_closed(x); };
        auto m = classify(u);
        EXPECT_EQ(m.u_min.member, rect(hl, not_up, true));
        EXPECT_EQ(m.u_max.member, rect(lr, not_down, true));
        EXPECT_EQ(m.u_min_star.member, rect(hl, lr, true));
        EXPECT_EQ(m.u_max_star.member, rect(lr, hl, true));
        EXPECT_EQ(m.u_min_r.member, rect(hl, not_up, false));
        EXPECT_EQ(m.u_max_r.member, rect(lr, not_down, false));
      }
    }
  }
}
