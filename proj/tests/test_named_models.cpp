#include <gtest/gtest.h>

#include "support.hpp"

using namespace dpz;
using testing_support::cls;

TEST(DeJonquieres, ImagesOfExceptionalClasses) {
  NamedInvolution d = de_jonquieres(5);
  const Isometry& g = d.involution;
  EXPECT_EQ(d.label(), "DeJonquieres(3)");
  EXPECT_EQ(g.apply(cls(5, "E2")), cls(5, "H - E1 - E2"));
  EXPECT_EQ(g.apply(cls(5, "H - E1")), cls(5, "H - E1"));
  for (int k = 2; k <= 7; ++k) {
    NamedInvolution d7 = de_jonquieres(7);
    EXPECT_EQ(d7.involution.apply(cls(7, "E" + std::to_string(k))), cls(7, "H - E1 - E" + std::to_string(k)));
  }
  EXPECT_EQ(de_jonquieres(7).degree, 4);
  EXPECT_THROW(de_jonquieres(6), InputError);
  EXPECT_THROW(de_jonquieres(3), InputError);
}

TEST(DeJonquieres, ReflectionProduct) {
  Isometry expect = testing_support::reflections(
      5, {"H - E1 - E2 - E3", "E2 - E3", "H - E1 - E4 - E5", "E4 - E5"});
  EXPECT_EQ(de_jonquieres(5).involution.matrix, expect.matrix);
}

TEST(DeJonquieres, FixedLatticeGram) {
  auto [plus, minus] = fixed_and_antifixed(de_jonquieres(5).involution);
  ASSERT_EQ(plus.rank(), 2u);
  oracle::Mat target{{0, 2}, {2, -4}};
  EXPECT_TRUE(oracle::congruent_rank2(testing_support::to_oracle(plus.gram()), target, 6));
  EXPECT_EQ(minus.rank(), 4u);
}

TEST(DeJonquieres, ZGInvariants) {
  EXPECT_EQ(zg_invariant(de_jonquieres(5).involution), (ZGInvariant{0, 2, 2}));
  EXPECT_EQ(zg_invariant(de_jonquieres(7).involution), (ZGInvariant{0, 4, 2}));
}

TEST(DeJonquieresModel, QuadricBasis) {
  Lattice q = blown_up_quadric(5);
  Vector s2{0, 1, 0, 0, 0, 0};
  std::vector<Vector> v;
  for (std::size_t k = 2; k < 6; ++k) v.push_back(basis_vector(q, k));
  Isometry g = de_jonquieres_model(q, s2, v);
  EXPECT_TRUE(is_involution(g.matrix));
  EXPECT_EQ(g.apply(s2), s2);
  for (const auto& e : v) EXPECT_EQ(g.apply(e), sub(s2, e));
  // L+ = Z{S2, 2S1 - e1 - e2 - e3 - e4}
  auto [plus, minus] = fixed_and_antifixed(g);
  EXPECT_EQ(plus.rank(), 2u);
  EXPECT_TRUE(plus.contains(s2));
  EXPECT_TRUE(plus.contains(Vector{2, 0, -1, -1, -1, -1}));
  EXPECT_EQ(span(q, {s2, Vector{2, 0, -1, -1, -1, -1}}).basis.size(), 2u);
  EXPECT_EQ(std::abs(determinant(plus.gram())), 4);

  BasisChange t = quadric_basis_change(5);
  Isometry moved = transport(g, t);
  EXPECT_EQ(moved.apply(canonical_class(moved.lattice)), canonical_class(moved.lattice));
  EXPECT_TRUE(are_conjugate(moved.matrix, de_jonquieres(5).involution.matrix, 5));
}

TEST(DeJonquieresModel, HEBasisIsConjugateToProduct) {
  Lattice l = del_pezzo(5);
  std::vector<Vector> v;
  for (int k = 2; k <= 5; ++k) v.push_back(cls(5, "E" + std::to_string(k)));
  Isometry g = de_jonquieres_model(l, cls(5, "H - E1"), v);
  EXPECT_TRUE(are_conjugate(g.matrix, de_jonquieres(5).involution.matrix, 5));
  // A different admissible frame gives a conjugate involution.
  std::vector<Vector> w{cls(5, "E1"), cls(5, "E3"), cls(5, "E4"), cls(5, "E5")};
  Isometry h = de_jonquieres_model(l, cls(5, "H - E2"), w);
  EXPECT_TRUE(are_conjugate(g.matrix, h.matrix, 5));
  EXPECT_THROW(de_jonquieres_model(l, cls(5, "H"), v), InputError);
}

TEST(QuadricBasisChange, IntertwinesForms) {
  for (int n = 2; n <= 8; ++n) {
    BasisChange b = quadric_basis_change(n);
    EXPECT_EQ(b.matrix.transpose() * b.target.gram * b.matrix, b.source.gram) << "n=" << n;
    EXPECT_EQ(std::abs(determinant(b.matrix)), 1);
    EXPECT_EQ(b.matrix.column(0), cls(n, "H - E1"));
    EXPECT_EQ(b.matrix.column(1), cls(n, "H - E2"));
    EXPECT_EQ(b.matrix.column(2), cls(n, "H - E1 - E2"));
  }
}

TEST(GeiserBertini, EqualRootProducts) {
  EXPECT_EQ(geiser().involution.matrix, involution_from_roots(7, geiser_root_set()).matrix);
  EXPECT_EQ(bertini().involution.matrix, involution_from_roots(8, bertini_root_set()).matrix);
  EXPECT_EQ(geiser_root_set().size(), 7u);
  EXPECT_EQ(bertini_root_set().size(), 8u);
}

TEST(GeiserBertini, ActionOnCanonicalClass) {
  Isometry g = geiser().involution;
  Vector k = canonical_class(g.lattice);
  EXPECT_EQ(g.apply(k), k);
  EXPECT_EQ(g.matrix.trace(), -6);
  for (const auto& r : roots(7)) EXPECT_EQ(g.apply(r), negate(r));
  Isometry b = bertini().involution;
  EXPECT_EQ(b.apply(cls(8, "3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8")),
            cls(8, "3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8"));
  EXPECT_EQ(zg_invariant(b), (ZGInvariant{1, 8, 0}));
  EXPECT_EQ(zg_invariant(g), (ZGInvariant{0, 6, 1}));
}

TEST(NamedModel, Lookup) {
  EXPECT_EQ(named_model("geiser").label(), "Geiser");
  EXPECT_EQ(named_model("bertini").n, 8);
  EXPECT_EQ(named_model("dejonquieres", 7).label(), "DeJonquieres(4)");
  EXPECT_THROW(named_model("cremona"), InputError);
}

TEST(Defect, TwistedModels) {
  EXPECT_EQ(defect_sum(negation_twist(de_jonquieres(5).involution)), -4);
  EXPECT_EQ(defect_sum(negation_twist(de_jonquieres(7).involution)), -6);
  EXPECT_EQ(defect_sum(negation_twist(geiser().involution)), -8);
  EXPECT_EQ(defect_sum(negation_twist(bertini().involution)), -9);
}

TEST(Defect, Identity) {
  for (int n = 0; n <= 8; ++n) {
    Isometry id = make_isometry(del_pezzo(n), IntMatrix::identity(static_cast<std::size_t>(n) + 1));
    EXPECT_EQ(quotient_signature(id), 1 - n);
    EXPECT_EQ(defect_sum(id), 1 - n);
  }
  EXPECT_THROW(defect_sum(testing_support::reflections(3, {"E1 - E2", "E2 - E3"})), InputError);
}
