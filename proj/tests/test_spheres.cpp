#include <gtest/gtest.h>

#include "qsuper/spheres.hpp"

using namespace qsuper;

namespace {
const Algebra& A() { return Algebra::standard(Ring::Asigma); }
Element w(std::vector<Gen> word, Scalar c = Scalar(1)) { return A().normal_form(word, c); }
Scalar T() { return Scalar::t() + Scalar::t_pow(-1); }

std::string first_failure(const Report& r) {
  if (r.failures.empty()) return "";
  return r.failures[0].input + ": " + r.failures[0].lhs + " vs " + r.failures[0].rhs;
}

SphereParams alpha(long a, long b, long c) { return SphereParams::finite({Scalar(a), Scalar(b), Scalar(c)}); }

const std::vector<RelationKind> kAllKinds = {RelationKind::Quadratic, RelationKind::QuadraticSigma,
                                             RelationKind::Lower, RelationKind::Upper};
}  // namespace

TEST(Spheres, MatrixEntries) {
  Matrix3 M = build_M();
  EXPECT_EQ(M[0][0], w({Gen::A, Gen::A}));
  EXPECT_EQ(M[1][1], A().gen(Gen::Sigma) - w({Gen::B, Gen::C}, T()));
  EXPECT_EQ(M[2][2], w({Gen::D, Gen::D}));
  EXPECT_EQ(M[0][2], w({Gen::B, Gen::B}, Scalar::i()));
}

TEST(Spheres, MatrixCorepresentationAndUnitarity) {
  Report r = verify_M({-2.0, -0.5});
  EXPECT_TRUE(r.ok()) << first_failure(r);
  EXPECT_EQ(r.checked, 9u * 3 + 2);
}

TEST(Spheres, CenterEntryCoproduct) {
  // Row (x) column form: (rho ac, x0, i t rho db) (x) (rho ab, x0, -i t rho dc).
  const HopfStructure& H = HopfStructure::standard(Ring::Asigma);
  Matrix3 M = build_M();
  Scalar rho2 = Scalar(1) + Scalar::t_pow(-2), q = Scalar::q();
  Tensor expected = Tensor::product(A(), w({Gen::A, Gen::C}), A(), w({Gen::A, Gen::B}, rho2)) +
                    Tensor::product(A(), M[1][1], A(), M[1][1]) +
                    Tensor::product(A(), w({Gen::D, Gen::B}), A(), w({Gen::D, Gen::C}, Scalar(1) - q));
  EXPECT_EQ(H.coproduct(M[1][1]), expected);
}

TEST(Spheres, Params) {
  SphereParams p = SphereParams::finite({Scalar(), Scalar(2), Scalar(4)});
  ASSERT_FALSE(p.is_infinity());
  EXPECT_EQ((*p.alpha)[1], Scalar(1));
  EXPECT_EQ((*p.alpha)[2], Scalar(2));
  EXPECT_THROW(SphereParams::finite({Scalar(), Scalar(), Scalar()}), Error);
  EXPECT_TRUE(SphereParams::infinity().is_infinity());
}

TEST(Spheres, XVectors) {
  Triple x = x_vector(alpha(1, 0, 0));
  EXPECT_EQ(x[0], w({Gen::A, Gen::A}));
  EXPECT_EQ(x[1], w({Gen::A, Gen::B}, Scalar::rho()));
  EXPECT_EQ(x[2], w({Gen::B, Gen::B}, Scalar::i()));
  Triple mid = x_vector(alpha(0, 1, 0));
  Matrix3 M = build_M();
  for (int j = 0; j < 3; ++j) EXPECT_EQ(mid[j], M[1][j]);
  Triple inf = x_vector(SphereParams::infinity());
  EXPECT_EQ(inf[1], A().gen(Gen::Sigma) - w({Gen::B, Gen::C}, T()));
  EXPECT_EQ(inf[0], w({Gen::A, Gen::C}, Scalar::kappa()));
}

TEST(Spheres, RightCoideal) {
  for (auto p : {alpha(1, 0, 0), alpha(1, 2, 3), alpha(0, 1, 0)}) {
    Report r = verify_coideal(p);
    EXPECT_TRUE(r.ok()) << first_failure(r);
  }
  Report inf = verify_coideal(SphereParams::infinity());
  EXPECT_TRUE(inf.ok()) << first_failure(inf);
  // At infinity the coaction matrix is a diagonal conjugate of M, not M.
  EXPECT_EQ(verify_coideal(SphereParams::infinity(), true).failure_count, 3u);
}

TEST(Spheres, InfinityRelations) {
  Report corrected = verify_infinity_relations(Reading::Corrected);
  EXPECT_TRUE(corrected.ok()) << first_failure(corrected);
  Report printed = verify_infinity_relations(Reading::Printed);
  EXPECT_EQ(printed.checked, 4u);
  EXPECT_EQ(printed.failure_count, 2u);
}

TEST(Spheres, SolverReproducesInfinityRelations) {
  // Each corrected relation lies in the solution space the solver finds.
  for (auto& rel : infinity_relations(Reading::Corrected)) {
    RelationWitness w = find_relations(SphereParams::infinity(), rel.kind);
    ASSERT_TRUE(w.exists()) << rel.label;
    Matrix m;
    for (auto& s : w.solutions) m.push_back(s);
    std::size_t r0 = rank(m);
    m.push_back(rel.coeffs);
    EXPECT_EQ(rank(m), r0) << rel.label;
  }
  // The unit relation is also a sigma-free instance of the sigma shape.
  auto rels = infinity_relations(Reading::Corrected);
  std::vector<Scalar> as_sigma = rels[1].coeffs;
  as_sigma.insert(as_sigma.begin() + 3, Scalar());
  EXPECT_TRUE(substitute_relation(x_vector(SphereParams::infinity()), RelationKind::QuadraticSigma, as_sigma)
                  .is_zero());
}

TEST(Spheres, WitnessesResubstitute) {
  for (auto p : {SphereParams::infinity(), alpha(0, 1, 0), alpha(1, 0, 1)})
    for (auto k : kAllKinds) {
      RelationWitness w = find_relations(p, k);
      Triple x = x_vector(p);
      for (auto& s : w.solutions) EXPECT_TRUE(substitute_relation(x, k, s).is_zero());
      if (w.exists()) {
        EXPECT_TRUE(substitute_relation(x, k, *w.witness).is_zero());
        for (auto& c : *w.witness) EXPECT_FALSE(c.is_zero());
      }
    }
}

TEST(Spheres, NoLowerRelationWhenMiddleCoordinateVanishes) {
  for (auto p : {alpha(1, 0, 1), alpha(1, 0, 2), alpha(1, 0, 0), alpha(0, 0, 1)}) {
    EXPECT_FALSE(find_relations(p, RelationKind::Lower).exists());
    EXPECT_FALSE(find_relations(p, RelationKind::Upper).exists());
  }
}

TEST(Spheres, WitnessesWithNonzeroMiddleCoordinate) {
  for (auto k : kAllKinds) EXPECT_TRUE(find_relations(alpha(0, 1, 0), k).exists()) << relation_name(k);
  // A generic point has no quadratic relation at all.
  EXPECT_EQ(find_relations(alpha(2, 1, 3), RelationKind::Quadratic).nullity(), 0u);
}

TEST(Spheres, BasisIndependence) {
  for (int d = 0; d <= 3; ++d) {
    Report r = sphere_basis_check(SphereParams::infinity(), d);
    EXPECT_TRUE(r.ok()) << "degree " << d << ": " << first_failure(r);
  }
  Report mid = sphere_basis_check(alpha(0, 1, 0), 3);
  EXPECT_TRUE(mid.ok()) << first_failure(mid);
}

TEST(Spheres, CharactersAtInfinity) {
  CharacterReport c = characters_of_S_infinity();
  EXPECT_TRUE(c.report.ok()) << first_failure(c.report);
  ASSERT_EQ(c.characters.size(), 2u);
  std::array<Scalar, 3> plus{Scalar(), Scalar(1), Scalar()}, minus{Scalar(), Scalar(-1), Scalar()};
  EXPECT_NE(std::find(c.characters.begin(), c.characters.end(), plus), c.characters.end());
  EXPECT_NE(std::find(c.characters.begin(), c.characters.end(), minus), c.characters.end());
  // A nonzero y1 would need y0^2 = -((1+q)/(1-q))^2.
  Scalar q = Scalar::q(), r = (Scalar(1) + q) / (Scalar(1) - q);
  EXPECT_EQ(c.forced_y0_squared, -(r * r));
}
