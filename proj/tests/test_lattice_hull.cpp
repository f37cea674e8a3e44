#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "obstructor/lattice_hull.hpp"
#include "support.hpp"

using namespace obstructor;
namespace ts = testing_support;

TEST(LatticeBall, CountsMatchEnumeration) {
  EXPECT_EQ(lattice_ball(2, 0).size(), 1u);
  EXPECT_EQ(lattice_ball(2, 1).size(), 5u);
  EXPECT_EQ(lattice_ball(2, 2).size(), 13u);
  for (std::int64_t r = 0; r <= 12; ++r) {
    EXPECT_EQ(lattice_ball(2, r).size(), ts::disk_points(r).size()) << r;
    EXPECT_EQ(lattice_ball(1, r).size(), static_cast<std::size_t>(2 * r + 1));
  }
  std::size_t cube = 0;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -3; z <= 3; ++z) cube += x * x + y * y + z * z <= 9;
  EXPECT_EQ(lattice_ball(3, 3).size(), cube);
}

TEST(LatticeBall, RejectsBadArguments) {
  EXPECT_THROW(lattice_ball(2, -1), std::invalid_argument);
  EXPECT_THROW(lattice_ball(4, 2), std::invalid_argument);
  EXPECT_THROW(lattice_ball(0, 2), std::invalid_argument);
}

TEST(PositiveHull, SmallRadiiExact) {
  EXPECT_EQ(positive_hull(1).vectors, (std::vector<Vec2>{{0, 1}, {1, 0}}));
  EXPECT_EQ(positive_hull(2).vectors, (std::vector<Vec2>{{0, 2}, {2, 0}}));
  EXPECT_EQ(positive_hull(3).vectors, (std::vector<Vec2>{{0, 3}, {2, 2}, {3, 0}}));
}

TEST(PositiveHull, MatchesTriangleOracle) {
  for (std::int64_t r = 1; r <= 6; ++r) EXPECT_EQ(positive_hull(r).vectors, ts::brute_force_hull(r)) << "r=" << r;
}

TEST(PositiveHull, MatchesGiftWrappingUpTo64) {
  for (std::int64_t r = 1; r <= 64; ++r) {
    const auto pts = ts::disk_points(r);
    EXPECT_EQ(positive_hull(r).vectors, ts::quadrant_of(ts::jarvis_hull(pts))) << "r=" << r;
  }
}

TEST(PositiveHull, ReflectionsContainTheDisk) {
  for (std::int64_t r = 1; r <= 64; ++r) {
    std::vector<Vec2> all;
    for (const auto& v : positive_hull(r).vectors)
      for (int sx : {-1, 1})
        for (int sy : {-1, 1}) all.push_back({sx * v[0], sy * v[1]});
    const auto poly = ts::jarvis_hull(all);
    for (const auto& p : ts::disk_points(r)) {
      bool inside = true;
      for (std::size_t i = 0; i < poly.size(); ++i)
        if (ts::orient(poly[i], poly[(i + 1) % poly.size()], p) < 0) inside = false;
      ASSERT_TRUE(inside) << "r=" << r << " point " << p[0] << "," << p[1];
    }
  }
}

TEST(PositiveHull, PropertiesHold) {
  for (std::int64_t r = 1; r <= 300; ++r) {
    const auto h = positive_hull(r);
    EXPECT_TRUE(verify_hull_properties(h).all_pass()) << r;
    EXPECT_EQ(h.vectors.front(), (Vec2{0, r}));
    EXPECT_EQ(h.vectors.back(), (Vec2{r, 0}));
  }
}

TEST(PositiveHull, RejectsRadiusZero) { EXPECT_THROW(positive_hull(0), std::invalid_argument); }

// Strict convexity: a sum of m members equals m*g only when every summand is g.
TEST(PositiveHull, SumsDecomposeUniquely) {
  for (std::int64_t r = 1; r <= 4; ++r) {
    const auto h = positive_hull(r).vectors;
    for (int m = 1; m <= 4; ++m) {
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        Vec2 sum{0, 0};
        for (auto i : idx) sum = {sum[0] + h[i][0], sum[1] + h[i][1]};
        for (std::size_t g = 0; g < h.size(); ++g)
          if (sum[0] == m * h[g][0] && sum[1] == m * h[g][1])
            for (auto i : idx) ASSERT_EQ(i, g) << "r=" << r << " m=" << m;
        int pos = m - 1;
        while (pos >= 0 && idx[pos] + 1 == h.size()) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < m; ++q) idx[q] = idx[pos];
      }
    }
  }
}

TEST(VerifyHull, ReportsHandcraftedFailures) {
  HullSet collinear{2, 2, {{0, 2}, {1, 1}, {2, 0}}};
  auto v = verify_hull_properties(collinear);
  EXPECT_FALSE(v.find("strict_convexity")->pass);

  HullSet shared{5, 2, {{0, 5}, {3, 4}, {3, 2}}};
  v = verify_hull_properties(shared);
  EXPECT_FALSE(v.find("coordinate_distinctness")->pass);
  EXPECT_FALSE(v.find("monotone_second_coordinate")->pass);

  HullSet outside{2, 2, {{0, 2}, {2, 1}}};
  v = verify_hull_properties(outside);
  EXPECT_FALSE(v.find("nonnegative_in_ball")->pass);

  HullSet negative{2, 2, {{-1, 1}, {1, 0}}};
  EXPECT_FALSE(verify_hull_properties(negative).find("nonnegative_in_ball")->pass);

  HullSet duplicate{3, 2, {{2, 2}, {2, 2}}};
  EXPECT_FALSE(verify_hull_properties(duplicate).all_pass());
}

TEST(GrowthExponent, InBandAndGuarded) {
  const double s = hull_growth_exponent({64, 128, 256, 512, 1024, 2048, 4096});
  EXPECT_GT(s, 0.55);
  EXPECT_LT(s, 0.78);
  EXPECT_LT(positive_hull(64).size(), positive_hull(4096).size());
  EXPECT_THROW(hull_growth_exponent({64, 128, 256}), std::invalid_argument);
  EXPECT_THROW(hull_growth_exponent({64, 64, 64, 64}), std::invalid_argument);
  EXPECT_THROW(hull_growth_exponent({0, 2, 4, 8}), std::invalid_argument);
  EXPECT_THROW(hull_growth_exponent({64, 128, 256, 100000}), std::invalid_argument);
}

TEST(HullFile, RoundTripAndErrors) {
  const auto h = positive_hull(17);
  std::stringstream ss;
  write_hull(ss, h);
  EXPECT_EQ(read_hull(ss), h);

  std::istringstream bad_size("hull r=2 d=2 size=3\n0 2\n2 0\n");
  EXPECT_THROW(read_hull(bad_size), std::runtime_error);
  std::istringstream bad_word("hall r=2\n");
  EXPECT_THROW(read_hull(bad_word), std::runtime_error);
  std::istringstream bad_dim("hull r=2 d=3\n");
  EXPECT_THROW(read_hull(bad_dim), std::runtime_error);
}
