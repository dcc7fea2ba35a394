#include <doctest.h>

#include <random>
#include <stdexcept>

#include "proxfield/body_model.hpp"

using namespace proxfield;

TEST_CASE("discomfort_from_mpp reproduces the published pressure ratios") {
  CHECK(discomfort_from_mpp(65.0) == 1.0);
  CHECK(std::abs(discomfort_from_mpp(110.0) - 0.591) < 5e-4);
  CHECK(discomfort_from_mpp(130.0) == doctest::Approx(0.500));
  CHECK(std::abs(discomfort_from_mpp(140.0) - 0.464) < 5e-4);
}

TEST_CASE("discomfort_from_mpp input handling") {
  CHECK_THROWS_AS(discomfort_from_mpp(0.0), std::invalid_argument);
  CHECK_THROWS_AS(discomfort_from_mpp(-5.0), std::invalid_argument);
  CHECK_THROWS_AS(discomfort_from_mpp(100.0, 0.0), std::invalid_argument);
  // reference above mpp would exceed 1; clamps instead of failing
  CHECK(discomfort_from_mpp(50.0, 65.0) == 1.0);
}

TEST_CASE("discomfort_from_mpp is strictly decreasing in mpp") {
  double prev = discomfort_from_mpp(66.0);
  for (double mpp = 70.0; mpp <= 300.0; mpp += 10.0) {
    const double cur = discomfort_from_mpp(mpp);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("region anchors") {
  CHECK(std::abs(region_anchor_height(Region::Head, 1.75) - 1.58) < 5e-3);
  CHECK(region_anchor_height(Region::Ground, 1.75) == 0.0);
  CHECK(region_anchor_height(Region::Top, 2.20) == doctest::Approx(2.95));
  CHECK_THROWS_AS(region_anchor_height(Region::Head, 0.0), std::invalid_argument);
  CHECK_FALSE(region_from_string("shoulders").has_value());
  CHECK(region_from_string("torso") == Region::Torso);
}

TEST_CASE("anchor scaling: body regions are linear in h, top is affine") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> h_dist(0.8, 2.4);
  std::uniform_real_distribution<double> a_dist(0.5, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double h = h_dist(rng);
    const double a = a_dist(rng);
    for (Region r : {Region::Legs, Region::Hips, Region::Torso, Region::Head}) {
      CHECK(region_anchor_height(r, a * h) ==
            doctest::Approx(a * region_anchor_height(r, h)).epsilon(1e-12));
    }
    CHECK(region_anchor_height(Region::Top, a * h) == doctest::Approx(a * h + 0.75));
  }
}

TEST_CASE("build_region_table defaults for h = 1.75") {
  const RegionTable table = build_region_table(1.75);
  CHECK(table.height() == 1.75);
  CHECK(table.region(Region::Legs).center == doctest::Approx(0.2485).epsilon(1e-9));
  CHECK(table.region(Region::Hips).center == doctest::Approx(0.75425).epsilon(1e-9));
  CHECK(table.region(Region::Torso).center == doctest::Approx(1.1025).epsilon(1e-9));
  CHECK(table.region(Region::Head).center == doctest::Approx(1.58025).epsilon(1e-9));
  CHECK(table.region(Region::Ground).center == 0.0);
  CHECK(table.region(Region::Top).center == doctest::Approx(2.5));

  CHECK(table.region(Region::Legs).discomfort == 0.500);
  CHECK(table.region(Region::Hips).discomfort == 0.464);
  CHECK(table.region(Region::Torso).discomfort == 0.591);
  CHECK(table.region(Region::Head).discomfort == 1.000);
  CHECK(table.region(Region::Ground).discomfort == 1.000);
  CHECK(table.region(Region::Top).discomfort == 0.000);

  CHECK(table.region(Region::Legs).sigma == 0.3);
  CHECK(table.region(Region::Hips).sigma == 0.3);
  CHECK(table.region(Region::Torso).sigma == 0.3);
  CHECK(table.region(Region::Head).sigma == 0.25);
  CHECK(table.region(Region::Ground).sigma == 0.1);
  CHECK(table.region(Region::Top).sigma == 0.3);
}

TEST_CASE("build_region_table for h = 1.30 places the head near 1.174") {
  const RegionTable table = build_region_table(1.30);
  CHECK(std::abs(table.region(Region::Head).center - 1.174) < 1e-3);
}

TEST_CASE("override equal to the default leaves the table unchanged") {
  RegionOverrides overrides;
  overrides[Region::Head].sigma = 0.25;
  const RegionTable a = build_region_table(1.75);
  const RegionTable b = build_region_table(1.75, overrides);
  for (std::size_t i = 0; i < a.regions().size(); ++i) {
    CHECK(a.regions()[i].center == b.regions()[i].center);
    CHECK(a.regions()[i].sigma == b.regions()[i].sigma);
    CHECK(a.regions()[i].discomfort == b.regions()[i].discomfort);
  }
}

TEST_CASE("build_region_table rejects invalid input") {
  CHECK_THROWS_AS(build_region_table(0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_region_table(-1.75), std::invalid_argument);

  RegionOverrides bad_sigma;
  bad_sigma[Region::Torso].sigma = 0.0;
  CHECK_THROWS_AS(build_region_table(1.75, bad_sigma), std::invalid_argument);

  RegionOverrides bad_c;
  bad_c[Region::Legs].discomfort = 1.5;
  CHECK_THROWS_AS(build_region_table(1.75, bad_c), std::invalid_argument);

  RegionOverrides bad_rh;
  bad_rh[Region::Ground].relative_height = 0.1;
  CHECK_THROWS_AS(build_region_table(1.75, bad_rh), std::invalid_argument);

  // legs pushed above the head breaks anchor ordering
  RegionOverrides unordered;
  unordered[Region::Legs].relative_height = 0.95;
  CHECK_THROWS_AS(build_region_table(1.75, unordered), std::invalid_argument);
}

TEST_CASE("anchors are strictly increasing for any height") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> h_dist(0.5, 2.5);
  for (int i = 0; i < 200; ++i) {
    const RegionTable table = build_region_table(h_dist(rng));
    const Region order[] = {Region::Ground, Region::Legs, Region::Hips,
                            Region::Torso, Region::Head, Region::Top};
    for (int k = 1; k < 6; ++k) {
      CHECK(table.region(order[k - 1]).center < table.region(order[k]).center);
    }
  }
}
