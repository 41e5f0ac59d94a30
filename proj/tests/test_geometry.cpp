#include <gtest/gtest.h>

#include <map>
#include <queue>

#include <qtl/decomposition.hpp>
#include <qtl/geometry.hpp>

using namespace qtl;

namespace {

Geometry intro() { return Geometry(Params::make(3, 8, {0, 4, 6})); }
Geometry a1() { return Geometry(Params::make(2, 4, {0, 2})); }

/// BFS distances over wall-adjacency, restricted to alcoves of length <= max_len.
std::map<AlcoveKey, int> bfs(const Geometry& g, const AlcoveKey& from, int max_len) {
  std::map<AlcoveKey, int> dist{{from, 0}};
  std::queue<AlcoveKey> q;
  q.push(from);
  while (!q.empty()) {
    const AlcoveKey a = q.front();
    q.pop();
    for (const Hyperplane& h : g.walls(a)) {
      const AlcoveKey b = g.reflect_alcove(a, h);
      if (g.length(b) > max_len || dist.count(b)) continue;
      dist[b] = dist[a] + 1;
      q.push(b);
    }
  }
  return dist;
}

}  // namespace

TEST(Params, DerivedFields) {
  const Params p = Params::make(3, 8, {0, 4, 6});
  EXPECT_EQ(p.rho(), (std::vector<int>{8, 4, 2}));
  EXPECT_EQ(p.theta(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.g(), 3);
  EXPECT_EQ(Params::make(2, 4, {4, 6}).kappa(), (std::vector<int>{0, 2}));
}

TEST(Params, RejectsAdjacentCharges) {
  try {
    Params::make(2, 4, {0, 1});
    FAIL() << "expected InvalidParams";
  } catch (const InvalidParams& e) {
    EXPECT_NE(std::string(e.what()).find("κ_i ∉ {κ_j, κ_j+1}"), std::string::npos);
  }
  EXPECT_THROW(Params::make(2, 4, {2, 2}), InvalidParams);
  EXPECT_THROW(Params::make(3, 5, {0, 2, 4}), InvalidParams);  // 2l > e
  EXPECT_THROW(Params::make(2, 6, {0}), InvalidParams);
  EXPECT_THROW(Params::make(2, 6, {0, 3, 5}), InvalidParams);
}

TEST(Params, ValidMulticharges) {
  for (const auto& k : valid_multicharges(3, 8)) EXPECT_NO_THROW(Params::make(3, 8, k));
  EXPECT_TRUE(valid_multicharges(2, 3).empty());
  EXPECT_FALSE(valid_multicharges(2, 4).empty());
}

TEST(Classify, IntroPoints) {
  const Geometry g = intro();
  EXPECT_TRUE(g.is_regular({4, 6, 3}));
  EXPECT_TRUE(g.is_regular({0, 0, 0}));
  const auto hs = g.classify({4, 7, 2});
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0], (Hyperplane{0, 2, 1}));
}

TEST(ReflectPoint, IntroWall) {
  const Geometry g = intro();
  const Hyperplane h{0, 2, 1};
  EXPECT_EQ(g.reflect_point(h, {5, 6, 2}), (Point{4, 6, 3}));
  EXPECT_EQ(g.reflect_point(h, g.reflect_point(h, {3, 1, 7})), (Point{3, 1, 7}));
  const Point on{4, 7, 2};
  EXPECT_EQ(g.reflect_point({0, 2, 1}, on), on);
}

TEST(ReflectPoint, PreservesSizeAndOrbit) {
  const Geometry g = intro();
  const Point p{4, 6, 3};
  for (const Root& r : g.roots()) {
    for (long long m = -2; m <= 2; ++m) {
      const Point q = g.reflect_point({r.i, r.j, m}, p);
      EXPECT_EQ(q.total(), p.total());
      EXPECT_TRUE(same_orbit(g, p, q));
      EXPECT_EQ(g.is_regular(q), g.is_regular(p));
    }
  }
}

TEST(AlcoveOf, FundamentalAndA1) {
  const Geometry g = a1();
  EXPECT_EQ(g.alcove_of({0, 0}), g.fundamental());
  EXPECT_EQ(g.alcove_of({5, 6}), g.fundamental());
  EXPECT_EQ(g.separating_count(g.fundamental(), g.alcove_of({4, 7})), 1);
  EXPECT_EQ(level2_label(g, g.alcove_of({4, 7})), (Level2Label{1, true}));
  EXPECT_THROW(g.alcove_of({2, 0}), SingularPoint);
}

TEST(AlcoveOf, FloorsConstantOnAlcove) {
  const Geometry g = intro();
  const AlcoveKey a = g.alcove_of({4, 6, 3});
  // shifting every coordinate by the same amount leaves all pairings fixed
  EXPECT_EQ(g.alcove_of({5, 7, 4}), a);
  EXPECT_EQ(g.alcove_of(g.representative(a)), a);
}

TEST(Length, Examples) {
  EXPECT_EQ(intro().length(intro().fundamental()), 0);
  EXPECT_EQ(intro().length(intro().alcove_of({4, 9, 0})), 3);
  EXPECT_EQ(a1().length(a1().alcove_of({0, 11})), 3);
  const Geometry g = intro();
  for (const Point& p : g.orbit_points({4, 6, 3}, 13))
    if (g.is_regular(p)) { EXPECT_EQ(g.point_length(p), g.length(g.alcove_of(p))); }
}

TEST(SeparatingCount, MatchesBfsDistance) {
  for (const Geometry& g : {a1(), intro(), Geometry(Params::make(3, 6, {0, 2, 4}))}) {
    const auto from_origin = bfs(g, g.fundamental(), 6);
    EXPECT_GT(from_origin.size(), 5u);
    for (const auto& [a, d] : from_origin) {
      EXPECT_EQ(g.separating_count(a, g.fundamental()), d);
      EXPECT_EQ(g.length(a), d);
    }
    // distances from a few other sources inside the ball
    int sources = 0;
    for (const auto& [src, d0] : from_origin) {
      if (d0 != 2 || ++sources > 3) continue;
      for (const auto& [a, d] : bfs(g, src, 6)) {
        EXPECT_EQ(g.separating_count(src, a), d);
        EXPECT_EQ(g.separating_count(a, src), d);
      }
    }
  }
}

TEST(SeparatingCount, TriangleInequality) {
  const Geometry g = intro();
  const auto ball = bfs(g, g.fundamental(), 3);
  for (const auto& [a, da] : ball)
    for (const auto& [b, db] : ball)
      for (const auto& [c, dc] : ball)
        EXPECT_LE(g.separating_count(a, c), g.separating_count(a, b) + g.separating_count(b, c));
}

TEST(Star, GalleryStepAndInvolution) {
  const Geometry g = intro();
  const Gallery gal = g.minimal_gallery(g.alcove_of({4, 9, 0}));
  const auto ball = bfs(g, g.fundamental(), 4);
  for (std::size_t i = 0; i < gal.crossings(); ++i) {
    EXPECT_EQ(g.star(gal.alcoves[i], gal.alcoves[i], gal.walls[i]), gal.alcoves[i + 1]);
    for (const auto& [b, d] : ball) {
      const AlcoveKey s = g.star(b, gal.alcoves[i], gal.walls[i]);
      EXPECT_EQ(std::abs(g.length(s) - g.length(b)), 1);
      EXPECT_EQ(g.star(s, gal.alcoves[i], gal.walls[i]), b);
    }
  }
}

TEST(Star, A1TableCrossing) {
  const Geometry g = a1();
  const Gallery gal = g.minimal_gallery(g.alcove_of({0, 11}));
  ASSERT_EQ(gal.crossings(), 3u);
  const AlcoveKey& a2p = gal.alcoves[2];
  const Hyperplane& h = gal.walls[2];
  EXPECT_EQ(level2_label(g, a2p), (Level2Label{2, true}));
  EXPECT_EQ(level2_label(g, gal.alcoves[3]), (Level2Label{3, true}));
  std::map<Level2Label, AlcoveKey> by_label;
  for (const auto& [a, d] : bfs(g, g.fundamental(), 3)) by_label[level2_label(g, a)] = a;
  const auto star_label = [&](Level2Label x) { return level2_label(g, g.star(by_label.at(x), a2p, h)); };
  EXPECT_EQ(star_label({1, true}), (Level2Label{0, false}));
  EXPECT_EQ(star_label({0, false}), (Level2Label{1, true}));
  EXPECT_EQ(star_label({1, false}), (Level2Label{2, false}));
  EXPECT_EQ(star_label({2, false}), (Level2Label{1, false}));
}

TEST(Star, NotAWall) {
  const Geometry g = a1();
  EXPECT_THROW(g.star(g.fundamental(), g.fundamental(), Hyperplane{0, 1, 5}), NotAGalleryCrossing);
}

TEST(MinimalGallery, Examples) {
  const Geometry g = a1();
  EXPECT_EQ(g.minimal_gallery(g.fundamental()).crossings(), 0u);
  // the alcove two steps right of the origin
  std::map<Level2Label, AlcoveKey> by_label;
  for (const auto& [a, d] : bfs(g, g.fundamental(), 2)) by_label[level2_label(g, a)] = a;
  const Gallery gal = g.minimal_gallery(by_label.at({2, false}));
  ASSERT_EQ(gal.crossings(), 2u);
  EXPECT_EQ(level2_label(g, gal.alcoves[1]), (Level2Label{1, false}));
  const Geometry g3 = intro();
  for (const auto& [a, d] : bfs(g3, g3.fundamental(), 5)) {
    const Gallery x = g3.minimal_gallery(a);
    ASSERT_EQ(static_cast<int>(x.crossings()), d);
    for (std::size_t i = 0; i < x.alcoves.size(); ++i) EXPECT_EQ(g3.length(x.alcoves[i]), static_cast<int>(i));
    for (std::size_t i = 0; i < x.crossings(); ++i)
      EXPECT_EQ(g3.common_wall(x.alcoves[i], x.alcoves[i + 1]), x.walls[i]);
  }
}

TEST(OrbitPoints, Examples) {
  const Geometry g = intro();
  const auto orbit = g.orbit_points({4, 6, 3}, 13);
  for (const Point& p : {Point{4, 6, 3}, Point{5, 6, 2}, Point{5, 8, 0}, Point{4, 9, 0}}) EXPECT_TRUE(orbit.count(p));
  for (const Point& p : orbit) EXPECT_EQ(g.orbit_points(p, 13), orbit);
  const Geometry h = a1();
  const auto o2 = h.orbit_points({0, 11}, 11);
  for (const Point& p : {Point{0, 11}, Point{4, 7}, Point{5, 6}}) EXPECT_TRUE(o2.count(p));
}

TEST(OrbitPoints, MatchesResidueInvariant) {
  // exhaustive: orbit membership equals the sorted (x + rho mod e) invariant
  for (const Geometry& g : {a1(), intro()}) {
    const int n = g.rank() == 2 ? 12 : 9;
    std::vector<Point> all;
    if (g.rank() == 2) {
      for (int a = 0; a <= n; ++a) all.push_back(Point{a, n - a});
    } else {
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) all.push_back(Point{a, b, n - a - b});
    }
    for (const Point& p : all) {
      const auto orbit = g.orbit_points(p, n);
      for (const Point& q : all) EXPECT_EQ(orbit.count(q) == 1, same_orbit(g, p, q)) << p.to_string() << q.to_string();
      for (const Point& q : orbit) EXPECT_EQ(g.is_regular(q), g.is_regular(p));
    }
  }
}

TEST(AffineElement, ComposeAndInverse) {
  const Geometry g = intro();
  const AlcoveKey a = g.alcove_of({4, 9, 0});
  const AffineElement w = a.elem;
  const AffineElement id = w.compose(w.inverse());
  EXPECT_EQ(id.apply({3, -5, 11}), (std::vector<long long>{3, -5, 11}));
  const AffineElement s = AffineElement::reflection({0, 2, 1}, 3, 8);
  EXPECT_EQ(s.compose(s).apply({1, 2, 3}), (std::vector<long long>{1, 2, 3}));
}
