#include <gtest/gtest.h>

#include <algorithm>

#include "svol/jsj.hpp"
#include "test_support.hpp"

using namespace svol;

namespace {

GraphManifoldSpec two_pieces(GluingMatrix m, std::optional<Slope> killed = std::nullopt) {
  GraphManifoldSpec s;
  s.pieces.push_back({"A", PieceKind::Seifert, SeifertInvariants(1, {}, 1), "", 1});
  s.pieces.push_back({"B", PieceKind::Seifert, SeifertInvariants(1, {}, 1), "", 1});
  Edge e;
  e.a = {"A", 0};
  e.b = {"B", 0};
  e.gluing = m;
  e.killed_slope = killed;
  s.edges.push_back(e);
  return s;
}

const GluingMatrix kSwap{{{0, 1}, {1, 0}}};
const GluingMatrix kFlip{{{1, 0}, {0, -1}}};

PieceAssignment filled(const std::string& piece, Slope fill, Rational coeff) {
  return {piece, PieceAssignment::FilledSeifert{{fill}, coeff}};
}

}  // namespace

TEST(ValidateSpec, Motegi) {
  auto [spec, assignments] = motegi_spec(2, 3, 2, 5);
  EXPECT_TRUE(validate_spec(spec).ok());
  EXPECT_TRUE(is_closed(spec));
}

TEST(ValidateSpec, Violations) {
  EXPECT_FALSE(validate_spec(two_pieces(GluingMatrix{{{1, 0}, {0, 1}}})).ok());
  EXPECT_FALSE(validate_spec(two_pieces(kSwap, Slope{2, 2})).ok());

  auto reused = two_pieces(kSwap);
  reused.edges.push_back(reused.edges.front());
  EXPECT_FALSE(validate_spec(reused).ok());

  auto bad_slot = two_pieces(kSwap);
  bad_slot.edges[0].b.slot = 3;
  EXPECT_FALSE(validate_spec(bad_slot).ok());

  auto unknown = two_pieces(kSwap);
  unknown.edges[0].a.piece = "Q";
  EXPECT_FALSE(validate_spec(unknown).ok());
}

TEST(ValidateSpec, CrossEdgeKilledSlope) {
  auto s = two_pieces(kSwap, Slope{1, 2});
  s.edges[0].killed_slope_b = Slope{2, 1};
  EXPECT_TRUE(validate_spec(s).ok());
  s.edges[0].killed_slope_b = Slope{-2, -1};
  EXPECT_TRUE(validate_spec(s).ok());
  s.edges[0].killed_slope_b = Slope{1, 2};
  EXPECT_FALSE(validate_spec(s).ok());
}

TEST(Additivity, TwoFilledPieces) {
  // Killed slope (2,1) on A is (1,2) on B under the swap.
  auto s = two_pieces(kSwap, Slope{2, 1});
  SeifertInvariants a_piece(1, {{2, 1}}, 1);
  SeifertInvariants b_piece(1, {{1, 2}}, 1);
  s.pieces[0].seifert = a_piece;
  s.pieces[1].seifert = b_piece;
  // A closes to (1; 1/2, 1/2): volume set {0, 1/4, 1}.
  // B closes to (1; 2/1, 2/1): e = 4, chi = 0, not SL2~, only 0.
  auto v = additivity_sum(s, {filled("A", {2, 1}, Rational(1, 4)), filled("B", {1, 2}, 0)});
  EXPECT_EQ(v, VolumeValue::exact(Rational(1, 4)));
  EXPECT_THROW(additivity_sum(s, {filled("A", {2, 1}, Rational(1, 3)), filled("B", {1, 2}, 0)}), DomainError);
  EXPECT_THROW(additivity_sum(s, {filled("A", {2, 1}, 1), filled("B", {1, 2}, 1)}), DomainError);
  // Opposite orientation of the same slope is accepted.
  EXPECT_EQ(additivity_sum(s, {filled("A", {-2, -1}, 1), filled("B", {-1, -2}, 0)}), VolumeValue::exact(1));
  // Wrong slope is rejected.
  EXPECT_THROW(additivity_sum(s, {filled("A", {1, 1}, 0), filled("B", {1, 2}, 0)}), DomainError);
}

TEST(Additivity, DirectSum) {
  auto s = two_pieces(kFlip);
  auto v = additivity_sum(s, {{"A", PieceAssignment::Direct{VolumeValue::exact(Rational(1, 4))}},
                              {"B", PieceAssignment::Direct{VolumeValue::exact(1)}}});
  EXPECT_EQ(v, VolumeValue::exact(Rational(5, 4)));
}

TEST(Additivity, MotegiSmallImage) {
  auto [spec, assignments] = motegi_spec(2, 3, 2, 5);
  EXPECT_EQ(additivity_sum(spec, assignments), VolumeValue::exact(0));
}

TEST(Additivity, MissingOrDuplicateAssignments) {
  auto s = two_pieces(kFlip);
  EXPECT_THROW(additivity_sum(s, {{"A", PieceAssignment::SmallImage{}}}), DomainError);
  EXPECT_THROW(additivity_sum(s, {{"A", PieceAssignment::SmallImage{}},
                                  {"A", PieceAssignment::SmallImage{}},
                                  {"B", PieceAssignment::SmallImage{}}}),
               DomainError);
}

TEST(Additivity, SinglePieceMatchesVolumeSet) {
  testkit::Rng rng(81);
  testkit::SeifertBounds bounds{1, 2, 3, 2, 5, 5};
  for (int t = 0; t < 30; ++t) {
    auto closed = testkit::random_seifert(rng, bounds, testkit::is_sl2);
    auto pairs = closed.pairs();
    FiberPair last = pairs.back();
    pairs.pop_back();
    GraphManifoldSpec s;
    s.pieces.push_back({"P", PieceKind::Seifert, SeifertInvariants(closed.genus(), pairs, 1), "", 1});
    // The killed slope lives on an edge, so the piece gets a hyperbolic neighbour.
    s.pieces.push_back({"H", PieceKind::Hyperbolic, {}, "dummy", 1});
    Edge e;
    e.a = {"P", 0};
    e.b = {"H", 0};
    e.gluing = kFlip;
    e.killed_slope = Slope{last.a, last.b};
    s.edges.push_back(e);
    auto values = volume_set(closed);
    Rational coeff = rng.pick(values);
    auto v = additivity_sum(s, {filled("P", {last.a, last.b}, coeff), {"H", PieceAssignment::Direct{VolumeValue::exact(0)}}});
    EXPECT_EQ(v, VolumeValue::exact(coeff));

    GraphManifoldSpec lone;
    lone.pieces.push_back({"N", PieceKind::Seifert, closed, "", 0});
    EXPECT_TRUE(validate_spec(lone).ok());
    EXPECT_EQ(additivity_sum(lone, {{"N", PieceAssignment::FilledSeifert{{}, coeff}}}), VolumeValue::exact(coeff));
  }
}

TEST(Additivity, PermutationInvariant) {
  testkit::Rng rng(82);
  for (int t = 0; t < 50; ++t) {
    GraphManifoldSpec s;
    std::vector<PieceAssignment> as;
    std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = "P" + std::to_string(i);
      s.pieces.push_back({id, PieceKind::Hyperbolic, {}, "", 2});
      if (rng.coin(0.3))
        as.push_back({id, PieceAssignment::SmallImage{}});
      else if (rng.coin())
        as.push_back({id, PieceAssignment::Direct{VolumeValue::exact(Rational(Integer(rng.uniform(0, 9)), Integer(rng.uniform(1, 5))))}});
      else
        as.push_back({id, PieceAssignment::Direct{VolumeValue::numeric(static_cast<double>(rng.uniform(0, 100000)) / 997.0)}});
    }
    for (std::size_t i = 0; i < n; ++i) {
      Edge e;
      e.a = {"P" + std::to_string(i), 0};
      e.b = {"P" + std::to_string((i + 1) % n), 1};
      e.gluing = kFlip;
      s.edges.push_back(e);
    }
    auto base = additivity_sum(s, as);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      auto s2 = s;
      auto as2 = as;
      std::shuffle(s2.pieces.begin(), s2.pieces.end(), std::mt19937_64(rng.uniform(0, 1 << 30)));
      std::shuffle(s2.edges.begin(), s2.edges.end(), std::mt19937_64(rng.uniform(0, 1 << 30)));
      std::shuffle(as2.begin(), as2.end(), std::mt19937_64(rng.uniform(0, 1 << 30)));
      EXPECT_EQ(additivity_sum(s2, as2), base);
    }
  }
}

TEST(Additivity, AllSmallImageIsZero) {
  testkit::Rng rng(83);
  for (int t = 0; t < 30; ++t) {
    GraphManifoldSpec s;
    std::vector<PieceAssignment> as;
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    for (std::size_t i = 0; i < n; ++i) {
      std::string id = "P" + std::to_string(i);
      s.pieces.push_back({id, PieceKind::Seifert, SeifertInvariants(rng.uniform(0, 2), {}, 1), "", 1});
      as.push_back({id, PieceAssignment::SmallImage{}});
    }
    EXPECT_EQ(additivity_sum(s, as), VolumeValue::exact(0));
  }
}

TEST(RwConsistency, Triangles) {
  RatioGraph ok{3, {{0, 1, 2}, {1, 2, 3}, {2, 0, Rational(1, 6)}}};
  auto r = rw_consistency(ok);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.potentials, (std::vector<Rational>{1, 2, 6}));

  RatioGraph bad{3, {{0, 1, 2}, {1, 2, 3}, {2, 0, 1}}};
  auto w = rw_consistency(bad);
  ASSERT_FALSE(w.consistent);
  EXPECT_EQ(w.witness.size(), 3u);
  EXPECT_EQ(cycle_product(bad, w.witness), w.witness_product);
  Rational p = w.witness_product;
  EXPECT_TRUE(p == Rational(6) || p == Rational(1, 6));
}

TEST(RwConsistency, ForestsAreConsistent) {
  RatioGraph forest{6, {{0, 1, 5}, {1, 2, Rational(1, 7)}, {3, 4, 2}}};
  EXPECT_TRUE(rw_consistency(forest).consistent);
}

TEST(RwConsistency, SelfLoopAndParallelEdges) {
  RatioGraph loop{2, {{0, 1, 2}, {1, 1, 3}}};
  auto r = rw_consistency(loop);
  ASSERT_FALSE(r.consistent);
  EXPECT_EQ(r.witness_product, Rational(3));

  RatioGraph parallel{2, {{0, 1, 2}, {1, 0, Rational(1, 2)}, {0, 1, 4}}};
  auto q = rw_consistency(parallel);
  ASSERT_FALSE(q.consistent);
  EXPECT_EQ(cycle_product(parallel, q.witness), q.witness_product);
  EXPECT_NE(q.witness_product, Rational(1));
}

TEST(RwConsistency, AgreesWithCycleEnumeration) {
  testkit::Rng rng(84);
  for (int t = 0; t < 300; ++t) {
    auto g = testkit::random_ratio_graph(rng);
    auto r = rw_consistency(g);
    EXPECT_EQ(r.consistent, testkit::consistent_by_cycle_enumeration(g));
    if (r.consistent) {
      for (const auto& e : g.edges) EXPECT_EQ(r.potentials[e.from] * e.ratio, r.potentials[e.to]);
    } else {
      EXPECT_NE(cycle_product(g, r.witness), Rational(1));
    }
  }
}

TEST(RwConsistency, Preconditions) {
  EXPECT_THROW(rw_consistency(RatioGraph{2, {{0, 2, 1}}}), DomainError);
  EXPECT_THROW(rw_consistency(RatioGraph{2, {{0, 1, -1}}}), DomainError);
  RatioGraph g{3, {{0, 1, 2}, {1, 2, 3}}};
  EXPECT_THROW(cycle_product(g, {{0, true}, {1, true}}), DomainError);
}

TEST(CoverIntersection, Examples) {
  EXPECT_EQ(cover_intersection(1, 2, 3, 6), 1);
  EXPECT_EQ(cover_intersection(1, 1, 1, 1), 1);
  EXPECT_THROW(cover_intersection(1, 2, 2, 8), DomainError);
  EXPECT_THROW(cover_intersection(0, 1, 1, 1), DomainError);
}

TEST(CoverIntersection, MultiplicativeUnderComposition) {
  testkit::Rng rng(85);
  int chained = 0;
  for (int t = 0; t < 2000; ++t) {
    Integer i = rng.uniform(1, 4);
    Integer f1 = rng.uniform(1, 4), s1 = rng.uniform(1, 4), t1 = rng.uniform(1, 6);
    Integer f2 = rng.uniform(1, 4), s2 = rng.uniform(1, 4), t2 = rng.uniform(1, 6);
    if ((i * f1 * s1) % t1 != 0) continue;
    Integer mid = cover_intersection(i, f1, s1, t1);
    if ((mid * f2 * s2) % t2 != 0) continue;
    EXPECT_EQ(cover_intersection(mid, f2, s2, t2), cover_intersection(i, f1 * f2, s1 * s2, t1 * t2));
    ++chained;
  }
  EXPECT_GT(chained, 100);
}

TEST(Motegi, Cases) {
  auto a = motegi_case(2, 3, 2, 5);
  EXPECT_EQ(a.h1_order, 59);
  EXPECT_TRUE(a.nontrivial_graph_manifold);
  EXPECT_EQ(a.sv_coeff, Rational(0));
  EXPECT_TRUE(a.torus_knots);

  auto b = motegi_case(2, 3, 2, 3);
  EXPECT_EQ(b.h1_order, 35);
  EXPECT_TRUE(b.nontrivial_graph_manifold);

  auto c = motegi_case(2, 2, 2, 2);
  EXPECT_EQ(c.h1_order, 15);
  EXPECT_FALSE(c.nontrivial_graph_manifold);
  EXPECT_EQ(c.sv_coeff, Rational(0));
  EXPECT_FALSE(c.torus_knots);

  EXPECT_THROW(motegi_spec(2, 2, 2, 3), DomainError);
  EXPECT_THROW(motegi_spec(2, 3, 4, 6), DomainError);
  EXPECT_THROW(motegi_case(1, 3, 2, 5), DomainError);
}

TEST(Motegi, PieceData) {
  auto [spec, assignments] = motegi_spec(2, 3, 2, 5);
  ASSERT_EQ(spec.pieces.size(), 2u);
  EXPECT_EQ(to_string(spec.pieces[0].seifert), "(0; 1/2, -1/3)");
  EXPECT_EQ(to_string(spec.pieces[1].seifert), "(0; 1/2, -2/5)");
}
