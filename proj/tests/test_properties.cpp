#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "support.hpp"

using namespace dpz;

namespace {

const std::vector<InvolutionClass>& catalog(int n) {
  static std::map<int, std::vector<InvolutionClass>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, involution_catalog(n)).first;
  return it->second;
}

}  // namespace

TEST(Property, VerdictInvariantUnderRandomConjugation) {
  std::mt19937_64 rng(1234);
  for (int n = 3; n <= 7; ++n) {
    for (const auto& c : catalog(n)) {
      Isometry g = make_isometry(del_pezzo(n), c.representative);
      for (int i = 0; i < 100; ++i) {
        IntMatrix w = random_weyl_element(n, rng);
        Isometry h = testing_support::conjugate(g, w);
        auto r = check_reducible(h);
        ASSERT_EQ(r.verdict, c.verdict->verdict) << "n=" << n << " class " << c.index;
        ASSERT_TRUE(verify_certificate(h, r));
      }
    }
  }
}

TEST(Property, VerdictOfNegation) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : catalog(n)) {
      Isometry g = make_isometry(del_pezzo(n), c.representative);
      auto r = check_reducible(negation_twist(g));
      EXPECT_EQ(r.verdict, c.verdict->verdict) << "n=" << n << " class " << c.index;
      EXPECT_TRUE(verify_certificate(negation_twist(g), r));
    }
}

TEST(Property, CertificatesSurviveJson) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : catalog(n)) {
      Isometry g = make_isometry(del_pezzo(n), c.representative);
      for (const auto& h : {g, negation_twist(g)}) {
        auto r = check_reducible(h);
        std::string text = to_json(r).dump();
        auto back = result_from_json(Json::parse(text));
        EXPECT_EQ(to_json(back).dump(), text);
        EXPECT_TRUE(verify_certificate(h, back)) << "n=" << n << " class " << c.index;
      }
    }
}

// For n <= 6 the invariant tuple separates exactly the conjugacy classes of all
// involutions in the explicitly enumerated group.
TEST(Property, InvariantPartitionEqualsConjugacyPartition) {
  for (int n = 3; n <= 6; ++n) {
    auto group = oracle::weyl_group_bfs(n);
    auto id = oracle::identity(static_cast<std::size_t>(n) + 1);
    std::vector<oracle::Mat> involutions;
    for (const auto& g : group)
      if (g != id && oracle::multiply(g, g) == id) involutions.push_back(g);

    std::map<oracle::Mat, std::size_t> orbit_of;
    std::size_t orbits = 0;
    for (const auto& g : involutions) {
      if (orbit_of.count(g)) continue;
      for (const auto& w : group) orbit_of[oracle::multiply(oracle::multiply(w, g), oracle::isometry_inverse(w))] = orbits;
      ++orbits;
    }

    std::map<InvolutionInvariants, std::size_t> orbit_of_invariants;
    Lattice l = del_pezzo(n);
    for (const auto& g : involutions) {
      auto inv = involution_invariants(make_isometry(l, testing_support::from_oracle(g)));
      auto [it, fresh] = orbit_of_invariants.emplace(inv, orbit_of.at(g));
      ASSERT_EQ(it->second, orbit_of.at(g)) << "invariants merge two classes, n=" << n;
    }
    EXPECT_EQ(orbit_of_invariants.size(), orbits) << "n=" << n;
  }
}
