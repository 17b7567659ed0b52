// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "../support.hpp"

using namespace dpz;
using testing_support::cls;
using testing_support::reflections;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::map<int, std::vector<InvolutionClass>> catalogs;

int report(const std::string& id, const std::string& title, double limit,
           const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double s = seconds_since(t);
  if (limit > 0 && s > limit) {
    o.ok = false;
    o.detail << " [over time limit " << limit << " s]";
  }
  std::cout << id << " " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  (" << std::fixed
            << std::setprecision(2) << s << " s)" << o.detail.str() << std::endl;
  return o.ok ? 0 : 1;
}

std::size_t irreducible_count(const std::vector<InvolutionClass>& cs) {
  std::size_t k = 0;
  for (const auto& c : cs) k += c.verdict && c.verdict->verdict == Verdict::Irreducible;
  return k;
}

std::map<int, int> carter_pattern(const std::vector<InvolutionClass>& cs) {
  std::map<int, int> m;
  for (const auto& c : cs) ++m[c.carter_exponent];
  return m;
}

}  // namespace

int main() {
  int failures = 0;

  failures += report("AC1", "irreducible involution classes per n", 0, [](Outcome& o) {
    const std::size_t expect[] = {0, 0, 0, 0, 0, 1, 0, 2, 1};
    auto t = Clock::now();
    for (int n = 1; n <= 7; ++n) catalogs[n] = involution_catalog(n);
    double small = seconds_since(t);
    t = Clock::now();
    catalogs[8] = involution_catalog(8);
    double eight = seconds_since(t);
    std::ostringstream counts;
    for (int n = 1; n <= 8; ++n) {
      std::size_t k = irreducible_count(catalogs[n]);
      counts << (n > 1 ? "," : "") << k;
      o.expect(k == expect[n], "n=" + std::to_string(n) + " count " + std::to_string(k));
    }
    o.expect(catalogs[5].size() > 0 && irreducible_involution_classes(5).at(0).realized_by == "DeJonquieres(3)",
             "n=5 realized by DeJonquieres(3)");
    o.expect(small < 60, "n<=7 under 60 s");
    o.expect(eight < 600, "n=8 under 10 min");
    o.detail << " counts n=1..8: " << counts.str() << "; n<=7 " << std::setprecision(2) << small << " s, n=8 "
             << eight << " s";
  });

  failures += report("AC2", "involution classes per Carter graph in W_7 and W_8", 0, [](Outcome& o) {
    auto p7 = carter_pattern(catalogs.at(7));
    auto p8 = carter_pattern(catalogs.at(8));
    o.expect(p7 == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 1}, {6, 1}, {7, 1}}, "W_7 pattern");
    o.expect(p8 == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}},
             "W_8 pattern");
    o.detail << " W_7 m:count";
    for (auto [m, k] : p7) o.detail << " " << m << ":" << k;
    o.detail << "; W_8 m:count";
    for (auto [m, k] : p8) o.detail << " " << m << ":" << k;
  });

  failures += report("AC3", "root counts n=3..8", 5, [](Outcome& o) {
    const std::size_t expect[] = {8, 20, 40, 72, 126, 240};
    for (int n = 3; n <= 8; ++n) {
      std::size_t got = roots(n).size();
      o.expect(got == expect[n - 3], "n=" + std::to_string(n));
      o.detail << " " << got;
    }
    for (int n = 3; n <= 6; ++n) o.expect(roots(n).size() == oracle::root_count_box(n), "box oracle n=" + std::to_string(n));
  });

  failures += report("AC4", "Weyl group orders n=3..8", 60, [](Outcome& o) {
    const Int expect[] = {12, 120, 1920, 51840, 2903040, 696729600};
    for (int n = 3; n <= 8; ++n) {
      Int got = weyl_order(n);
      o.expect(got == expect[n - 3], "n=" + std::to_string(n));
      o.detail << " " << got;
    }
    for (int n = 3; n <= 5; ++n)
      o.expect(static_cast<Int>(oracle::weyl_group_bfs(n).size()) == expect[n - 3], "BFS n=" + std::to_string(n));
  });

  failures += report("AC5", "model identities", 1, [](Outcome& o) {
    o.expect(geiser().involution.matrix == involution_from_roots(7, geiser_root_set()).matrix, "geiser");
    o.expect(bertini().involution.matrix == involution_from_roots(8, bertini_root_set()).matrix, "bertini");
    auto [plus, minus] = fixed_and_antifixed(de_jonquieres(5).involution);
    o.expect(plus.rank() == 2 && oracle::congruent_rank2(testing_support::to_oracle(plus.gram()), {{0, 2}, {2, -4}}, 6),
             "de Jonquieres fixed lattice");
  });

  failures += report("AC6", "Z[G]-module invariants", 1, [](Outcome& o) {
    auto z = [](const Isometry& g) { return zg_invariant(g); };
    o.expect(z(de_jonquieres(5).involution) == ZGInvariant{0, 2, 2}, "dJ5 (0,2,2)");
    o.expect(z(de_jonquieres(7).involution) == ZGInvariant{0, 4, 2}, "dJ7 (0,4,2)");
    o.expect(z(bertini().involution) == ZGInvariant{1, 8, 0}, "Bertini (1,8,0)");
    Isometry h1 = reflections(7, {"E1 - E2", "E3 - E4", "E6 - E7", "H - E1 - E2 - E5"});
    Isometry h2 = reflections(7, {"H - E1 - E2 - E3", "E2 - E3", "H - E1 - E4 - E5", "E4 - E5"});
    o.expect(z(h1) == ZGInvariant{0, 0, 4}, "(A1)^4 h1 (0,0,4)");
    o.expect(z(h2) == ZGInvariant{2, 2, 2}, "(A1)^4 h2 (2,2,2)");
  });

  failures += report("AC7", "signature defect sums of twisted models", 1, [](Outcome& o) {
    Int d5 = defect_sum(negation_twist(de_jonquieres(5).involution));
    Int d7 = defect_sum(negation_twist(de_jonquieres(7).involution));
    Int g = defect_sum(negation_twist(geiser().involution));
    Int b = defect_sum(negation_twist(bertini().involution));
    o.expect(d5 == -4 && d7 == -6, "de Jonquieres 1-n");
    o.expect(g == -8, "Geiser -8");
    o.expect(b == -9, "Bertini -9");
    o.detail << " " << d5 << " " << d7 << " " << g << " " << b;
  });

  failures += report("AC8", "property suites", 0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    // (i) random reflections
    {
      std::uniform_int_distribution<int> pick_n(0, 8), coef(-3, 3);
      int done = 0;
      bool ok = true;
      while (done < 1000) {
        int n = pick_n(rng);
        Lattice l = del_pezzo(n);
        Vector v(l.rank());
        for (auto& x : v) x = coef(rng);
        Int q = norm(l, v);
        if (q != 1 && q != -1 && q != 2 && q != -2) continue;
        IntMatrix r = reflection(l, v);
        ok = ok && r * r == IntMatrix::identity(l.rank()) && r.transpose() * l.gram * r == l.gram;
        ++done;
      }
      o.expect(ok, "(i) reflections");
    }
    // (ii)-(iv) over every catalogue class
    std::size_t conjugations = 0, certificates = 0;
    bool conj_ok = true, neg_ok = true, json_ok = true;
    auto roundtrip = [&](const Isometry& h, const ReducibilityResult& r) {
      ++certificates;
      json_ok = json_ok && verify_certificate(h, result_from_json(Json::parse(to_json(r).dump())));
    };
    for (int n = 1; n <= 8; ++n) {
      for (const auto& c : catalogs.at(n)) {
        Isometry g = make_isometry(del_pezzo(n), c.representative);
        Verdict v = c.verdict->verdict;
        roundtrip(g, *c.verdict);
        auto neg = check_reducible(negation_twist(g));
        neg_ok = neg_ok && neg.verdict == v;
        roundtrip(negation_twist(g), neg);
        if (n < 3) continue;
        for (int i = 0; i < 100; ++i) {
          Isometry h = testing_support::conjugate(g, random_weyl_element(n, rng));
          auto r = check_reducible(h);
          conj_ok = conj_ok && r.verdict == v;
          roundtrip(h, r);
          ++conjugations;
        }
      }
    }
    o.expect(conj_ok, "(ii) conjugation invariance");
    o.expect(neg_ok, "(iii) verdict(g) = verdict(-g)");
    o.expect(json_ok, "(iv) certificates re-verify from JSON");
    // (v) invariant partition equals conjugacy partition for n <= 6
    bool partition_ok = true;
    for (int n = 3; n <= 6; ++n) {
      auto group = oracle::weyl_group_bfs(n);
      auto id = oracle::identity(static_cast<std::size_t>(n) + 1);
      std::map<oracle::Mat, std::size_t> orbit_of;
      std::size_t orbits = 0;
      std::map<InvolutionInvariants, std::size_t> by_invariants;
      for (const auto& g : group) {
        if (g == id || oracle::multiply(g, g) != id) continue;
        if (!orbit_of.count(g)) {
          for (const auto& w : group) orbit_of[oracle::multiply(oracle::multiply(w, g), oracle::isometry_inverse(w))] = orbits;
          ++orbits;
        }
        auto inv = involution_invariants(make_isometry(del_pezzo(n), testing_support::from_oracle(g)));
        auto [it, fresh] = by_invariants.emplace(inv, orbit_of.at(g));
        partition_ok = partition_ok && it->second == orbit_of.at(g);
      }
      partition_ok = partition_ok && by_invariants.size() == orbits;
    }
    o.expect(partition_ok, "(v) invariant partition");
    o.detail << " " << conjugations << " conjugates, " << certificates << " certificates re-verified";
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
