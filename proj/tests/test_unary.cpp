#include <gtest/gtest.h>

#include "support/bridge.hpp"

using namespace uninorm;

TEST(Unary, TableOperatorsAreClosures) {
  auto l1 = fixtures::l1();
  auto p1 = bridge::poset(*l1);
  EXPECT_TRUE(oracle::is_closure(p1, bridge::unary(fixtures::l1_cl1(l1))));
  EXPECT_TRUE(oracle::is_closure(p1, bridge::unary(fixtures::l1_cl2(l1))));
  auto l3 = fixtures::l3();
  auto p3 = bridge::poset(*l3);
  EXPECT_TRUE(oracle::is_closure(p3, bridge::unary(fixtures::l3_cl1(l3))));
  EXPECT_TRUE(oracle::is_closure(p3, bridge::unary(fixtures::l3_cl2(l3))));
}

TEST(Unary, ReportsFirstFailedAxiom) {
  auto lat = fixtures::m2();
  // a -> 0 is not extensive
  try {
    fixtures::op_from_names(lat, OperatorKind::closure, {"0", "0", "b", "1"});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "CL1");
    EXPECT_EQ(e.witnesses(), (std::vector<std::string>{"a"}));
  }
  // join-preserving on a chain, but not idempotent at 0
  auto chain = fixtures::chain3();
  try {
    fixtures::op_from_names(chain, OperatorKind::closure, {"e", "1", "1"});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "CL3");
    EXPECT_EQ(e.witnesses(), (std::vector<std::string>{"0"}));
  }
  try {
    fixtures::op_from_names(lat, OperatorKind::interior, {"0", "a", "a", "1"});
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "IN1");
    EXPECT_EQ(e.witnesses(), (std::vector<std::string>{"b"}));
  }
}

TEST(Unary, AgreesWithOracleOnEverySelfMap) {
  for (const auto& [name, lat] : {std::pair{"m2", fixtures::m2()}, std::pair{"n5", fixtures::n5()}}) {
    SCOPED_TRACE(name);
    const auto p = bridge::poset(*lat);
    std::size_t agree = 0;
    oracle::all_maps(p, [&](const oracle::Unary& f) {
      std::vector<Elem> m;
      for (const auto& n : p.names()) m.push_back(lat->find(f.at(n)));
      for (auto kind : {OperatorKind::closure, OperatorKind::interior}) {
        const bool lib = !find_unary_violation(*lat, kind, m).has_value();
        const bool ref = kind == OperatorKind::closure ? oracle::is_closure(p, f)
                                                       : oracle::is_interior(p, f);
        EXPECT_EQ(lib, ref);
        agree += lib == ref;
      }
      return false;
    });
    EXPECT_GT(agree, 0u);
  }
}

TEST(Unary, PresetsExpand) {
  auto lat = fixtures::l2();
  auto op = validate_unary(lat, OperatorKind::closure, join_with_map(*lat, lat->find("k")));
  EXPECT_EQ(lat->name(op(lat->find("m"))), "k");
  EXPECT_EQ(lat->name(op(lat->find("s"))), "n");
  EXPECT_EQ(lat->name(op(lat->find("a"))), "1");
  auto in = validate_unary(lat, OperatorKind::interior, meet_with_map(*lat, lat->find("n")));
  EXPECT_EQ(lat->name(in(lat->find("b"))), "0");
  auto id = identity_operator(lat, OperatorKind::interior);
  for (Elem x : lat->elements()) EXPECT_EQ(id(x), x);
}

TEST(Unary, RegionChecks) {
  auto lat = fixtures::l1();
  const Elem e = lat->find("e");
  auto cl1 = fixtures::l1_cl1(lat), cl2 = fixtures::l1_cl2(lat);
  ElemSet not_upper;
  for (Elem x : lat->elements())
    if (!lat->leq(e, x)) not_upper.push_back(x);
  EXPECT_TRUE(pointwise_leq_on(cl1, cl2, not_upper).holds);
  EXPECT_FALSE(pointwise_leq_on(cl2, cl1, not_upper).holds);

  auto join_e = validate_unary(lat, OperatorKind::closure, join_with_map(*lat, e));
  auto r = range_avoids(join_e, lat->interval(IntervalSpec::open(lat->bottom(), e)),
                        IntervalSpec::closed(e, lat->top()));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witnesses, (ElemSet{lat->find("a"), lat->find("b")}));
  EXPECT_TRUE(range_avoids(cl1, lat->interval(IntervalSpec::open(lat->bottom(), e)),
                           IntervalSpec::closed(e, lat->top()))
                  .holds);
}

TEST(Unary, MismatchedLatticesAreRejected) {
  auto a = fixtures::l1(), b = fixtures::l2();
  auto op_a = identity_operator(a, OperatorKind::closure);
  auto op_b = identity_operator(b, OperatorKind::closure);
  EXPECT_THROW(pointwise_leq_on(op_a, op_b, a->elements()), MismatchedLattice);
  // Structurally equal lattices built twice are accepted.
  auto op_a2 = identity_operator(fixtures::l1(), OperatorKind::closure);
  EXPECT_NO_THROW(pointwise_leq_on(op_a, op_a2, a->elements()));
  EXPECT_EQ(op_a, op_a2);
}

TEST(Unary, DualizationFlipsKind) {
  auto lat = fixtures::l1();
  auto d = dual_lattice(lat);
  for (const auto& op : all_operators(lat, OperatorKind::closure)) {
    auto dop = dualize_operator(op, d);
    EXPECT_EQ(dop.kind(), OperatorKind::interior);
    EXPECT_EQ(dualize_operator(dop, lat), op);
  }
  EXPECT_THROW(dualize_operator(fixtures::l1_cl1(lat), lat), MismatchedLattice);
}

// cl(cl(x) ^ y) = cl(x) whenever x <= y, and dually int(int(x) v y) = int(x) for y <= x.
TEST(Unary, AbsorptionUnderComparablePairs) {
  for (const auto& [name, lat] : fixtures::small_lattices()) {
    SCOPED_TRACE(name);
    for (const auto& cl : all_operators(lat, OperatorKind::closure))
      for (Elem x : lat->elements())
        for (Elem y : lat->elements())
          if (lat->leq(x, y)) {
            EXPECT_EQ(cl(lat->meet(cl(x), y)), cl(x));
          }
    for (const auto& in : all_operators(lat, OperatorKind::interior))
      for (Elem x : lat->elements())
        for (Elem y : lat->elements())
          if (lat->leq(y, x)) {
            EXPECT_EQ(in(lat->join(in(x), y)), in(x));
          }
  }
}
