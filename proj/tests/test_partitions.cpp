#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "dt4/parallel.hpp"
#include "dt4/vertex.hpp"
#include "oracles.hpp"

using namespace dt4;

TEST_SUITE_BEGIN("partitions");

TEST_CASE("enumeration counts match the brute-force oracle for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    std::size_t expect = oracle::brute_force_count(n);
    std::vector<SolidPartition> got = enumerate_solid_partitions(n);
    CAPTURE(n);
    CHECK(got.size() == expect);
  }
}

TEST_CASE("small counts") {
  CHECK(enumerate_solid_partitions(0).size() == 1);
  CHECK(enumerate_solid_partitions(1).size() == 1);
  CHECK(enumerate_solid_partitions(2).size() == 4);
  CHECK(enumerate_solid_partitions(3).size() == 10);
  CHECK(enumerate_solid_partitions(6).size() == 140);
}

TEST_CASE("every yielded partition is downward-closed and sorted") {
  for (int n = 0; n <= 8; ++n)
    for (auto& p : enumerate_solid_partitions(n)) {
      CHECK(p.downward_closed());
      CHECK(std::is_sorted(p.boxes().begin(), p.boxes().end()));
      CHECK(p.size() == static_cast<std::size_t>(n));
      if (n > 0) CHECK(p.contains(Box{0, 0, 0, 0}));
    }
}

TEST_CASE("enumeration equals the oracle setwise, not just in count") {
  for (int n = 0; n <= 6; ++n) {
    auto expect = oracle::brute_force_partitions(n);
    std::set<std::string> exp_set;
    for (auto& s : expect)
      exp_set.insert(SolidPartition(std::vector<Box>(s.begin(), s.end())).str());
    std::set<std::string> got;
    for (auto& p : enumerate_solid_partitions(n)) got.insert(p.str());
    CHECK(got == exp_set);
  }
}

TEST_CASE("canonical order is stable across runs and sharding") {
  std::vector<SolidPartition> a = enumerate_solid_partitions(5);
  std::vector<SolidPartition> b = enumerate_solid_partitions(5);
  CHECK(a == b);
  // sharded traversal in index order reproduces the same sequence
  auto strs = parallel_map_indexed<std::string>(a.size(), 3,
                                                [&](std::size_t i) { return a[i].str(); });
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(strs[i] == a[i].str());
}

TEST_CASE("colour counts for the builtin actions") {
  GroupAction z2 = GroupAction::zr(2);
  SolidPartition p(std::vector<Box>{Box{0, 0, 0, 0}, Box{1, 0, 0, 0}});
  ColorProfile c = color_counts(p, z2);
  CHECK(c == ColorProfile{1, 1});

  GroupAction z3 = GroupAction::z3age2();
  SolidPartition p2(std::vector<Box>{Box{0, 0, 0, 0}, Box{0, 0, 1, 0}});
  CHECK(color_counts(p2, z3) == ColorProfile{1, 1, 0});

  CHECK(color_counts(SolidPartition{}, z3) == ColorProfile{0, 0, 0});
}

TEST_CASE("z2z2 colouring matches the coordinate labels") {
  GroupAction g = GroupAction::z2z2();
  CHECK(g.char_name(g.color_of(Box{1, 0, 0, 0})) == "10");
  CHECK(g.char_name(g.color_of(Box{0, 1, 0, 0})) == "01");
  CHECK(g.char_name(g.color_of(Box{0, 0, 1, 0})) == "11");
  CHECK(g.char_name(g.color_of(Box{0, 0, 0, 1})) == "00");
  CHECK(g.su4_condition_holds());
}

TEST_CASE("enumerate_colored: oracle decides the z2 profile (1,1)") {
  GroupAction z2 = GroupAction::zr(2);
  std::vector<SolidPartition> got = enumerate_colored(ColorProfile{1, 1}, z2);
  // brute force: bucket all size-2 partitions by colour
  std::vector<SolidPartition> expect;
  for (auto& s : oracle::brute_force_partitions(2)) {
    SolidPartition p(std::vector<Box>(s.begin(), s.end()));
    if (color_counts(p, z2) == ColorProfile{1, 1}) expect.push_back(p);
  }
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
  CHECK(got.size() == 2);
  CHECK(got[0].str() == "0,0,0,0;0,1,0,0");
  CHECK(got[1].str() == "0,0,0,0;1,0,0,0");
}

TEST_CASE("enumerate_colored: empty stream without the trivial colour") {
  GroupAction z2 = GroupAction::zr(2);
  CHECK(enumerate_colored(ColorProfile{0, 2}, z2).empty());
  GroupAction g22 = GroupAction::z2z2();
  std::vector<SolidPartition> single = enumerate_colored(ColorProfile{1, 0, 0, 0}, g22);
  CHECK(single.size() == 1);
  CHECK(single[0].str() == "0,0,0,0");
}

TEST_CASE("colored enumeration partitions the full stream") {
  for (const GroupAction& g :
       {GroupAction::zr(2), GroupAction::z3age2(), GroupAction::z2z2()}) {
    for (int n = 0; n <= 6; ++n) {
      std::map<ColorProfile, std::size_t> buckets;
      for (auto& p : enumerate_solid_partitions(n)) ++buckets[color_counts(p, g)];
      std::size_t total = 0;
      for (auto& [profile, count] : buckets) {
        CHECK(enumerate_colored(profile, g).size() == count);
        total += count;
      }
      CHECK(total == enumerate_solid_partitions(n).size());
    }
  }
}

TEST_CASE("character counts boxes at t=1 before reduction") {
  VarTablePtr un = cy_table({}, /*reduce_t4=*/false);
  for (auto& p : enumerate_solid_partitions(4)) {
    KClass z = character(p, *un);
    CHECK(z.rank() == static_cast<int64_t>(p.size()));
  }
  // reduced examples
  VarTablePtr vt = cy_table({});
  CHECK(character(SolidPartition{}, *vt).is_zero());
  KClass single = character(SolidPartition(std::vector<Box>{Box{0, 0, 0, 0}}), *vt);
  CHECK(single == KClass::one(vt->size()));
  KClass two = character(SolidPartition(std::vector<Box>{Box{0, 0, 0, 0}, Box{0, 0, 0, 1}}), *vt);
  KClass expect(vt->size());
  expect.add(vt->unit(), 1);
  expect.add(vt->mono({{"t1", -1}, {"t2", -1}, {"t3", -1}}), 1);
  CHECK(two == expect);
}

TEST_CASE("sign exponents") {
  SolidPartition origin(std::vector<Box>{Box{0, 0, 0, 0}});
  CHECK(sign_exponent(origin, nullptr) == 1);
  SolidPartition stick(std::vector<Box>{Box{0, 0, 0, 0}, Box{0, 0, 0, 1}});
  CHECK(sign_exponent(stick, nullptr) == 3);  // |pi| + one diagonal pair
  GroupAction z2 = GroupAction::zr(2);
  SolidPartition split(std::vector<Box>{Box{0, 0, 0, 0}, Box{1, 0, 0, 0}});
  CHECK(sign_exponent(split, &z2) == 1);
}

TEST_CASE("cache round trip") {
  std::string dir = std::filesystem::temp_directory_path() / "dt4-cache-test";
  std::filesystem::remove_all(dir);
  std::vector<SolidPartition> ps = enumerate_solid_partitions(4, dir);
  CHECK(std::filesystem::exists(cache_file(dir, 4)));
  auto cached = read_cache(dir, 4);
  REQUIRE(cached.has_value());
  CHECK(*cached == ps);
  // second call streams from disk
  CHECK(enumerate_solid_partitions(4, dir) == ps);
  std::filesystem::remove_all(dir);
}

TEST_CASE("custom group spec parsing and SU(4) check") {
  GroupAction g = GroupAction::parse("custom:orders=2,2;W=1,0,1,0;0,1,1,0");
  CHECK(g.num_chars() == 4);
  CHECK_THROWS_AS(GroupAction::parse("custom:orders=2;W=1,0,0,0"), error);
  CHECK_THROWS_AS(GroupAction::parse("what"), error);
}

TEST_SUITE_END();
