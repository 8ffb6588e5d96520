#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qsuper/dual.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/qfun.hpp"
#include "qsuper/repn.hpp"
#include "qsuper/spheres.hpp"

namespace qsuper {

/// Associativity of multiply on random triples of basis monomials of degree
/// <= max_degree, and idempotence of the normal form on random words.
inline Report verify_algebra(int max_degree, int triples = 1000, unsigned seed = 2024, Ring ring = Ring::Asigma) {
  Report rep;
  rep.name = std::string("algebra ") + ring_name(ring);
  const Algebra& A = Algebra::standard(ring);
  std::mt19937 rng(seed);
  auto mono = basis_monomials(ring, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, mono.size() - 1);
  auto show = [](const Element& e) { return to_string(e); };
  for (int n = 0; n < triples; ++n) {
    Element x = A.monomial(mono[pick(rng)]), y = A.monomial(mono[pick(rng)]), z = A.monomial(mono[pick(rng)]);
    rep.expect_eq("(" + to_string(x) + ")(" + to_string(y) + ")(" + to_string(z) + ")",
                  A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)), show);
  }
  std::uniform_int_distribution<int> len(0, 2 * max_degree), letter(0, has_sigma(ring) ? 4 : 3);
  for (int n = 0; n < triples / 4; ++n) {
    std::vector<Gen> w(len(rng));
    for (auto& g : w) g = static_cast<Gen>(letter(rng));
    Element x = A.normal_form(w);
    rep.expect_eq("normal form idempotent on " + to_string(x), A.renormalize(x), x, show);
  }
  return rep;
}

/// A named verification suite. `degree` is the suite's size parameter; its
/// meaning is given in `parameter`.
struct Suite {
  std::string name;
  std::string parameter;
  int default_degree;
  std::function<Report(int)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"algebra", "monomial degree", 4,
       [](int d) {
         Report r = verify_algebra(d);
         r.merge(verify_algebra(d, 300, 7, Ring::B));
         r.merge(verify_algebra(d, 300, 8, Ring::Bsigma));
         return r;
       }},
      {"hopf", "monomial degree", 4, [](int d) { return verify_hopf(d); }},
      {"plane", "plane monomial degree", 5,
       [](int d) {
         Report r = PlaneCoaction(Side::Left).verify(d);
         r.merge(PlaneCoaction(Side::Right).verify(d));
         // The nilpotent plane y^2 = 0 must not be a comodule algebra.
         if (PlaneCoaction(Side::Left, Ring::PlaneNil).verify(std::min(d, 2)).ok())
           r.fail("plane with y^2 = 0", "comodule algebra", "not a comodule algebra");
         else r.pass();
         return r;
       }},
      {"dual", "monomial degree", 5, [](int d) { return verify_uq_relations(d); }},
      {"dual-hopf", "random samples", 20, [](int d) { return verify_dual_hopf(d); }},
      {"gram", "word bound (degree bound is twice this)", 3,
       [](int d) {
         GramReport g = pairing_gram_rank(d, 2 * d);
         Report r = g.report;
         r.name = "gram rank";
         if (g.rank == g.bound) r.pass();
         else r.fail("rank", std::to_string(g.rank), std::to_string(g.bound));
         return r;
       }},
      {"qfun", "binomial size", 6,
       [](int d) {
         Report r = pascal_check(d, Scalar::t_pow(-2));
         r.merge(pascal_check(d, Scalar::q()));
         r.merge(qbinomial_theorem_check(d));
         return r;
       }},
      {"closed-form", "twice the spin", 5, [](int d) { return verify_closed_form(d); }},
      {"integral", "monomial degree", 5, [](int d) { return verify_integral(d).report; }},
      {"haar", "power of zeta", 8,
       [](int d) {
         Report r;
         r.name = "haar two routes";
         for (int n = 0; n <= d; ++n)
           for (int e = 0; e <= 1; ++e)
             r.expect_eq("h(zeta^" + std::to_string(n) + (e ? " sigma)" : ")"), haar_by_decomposition(n, e),
                         haar_zeta_power(n), [](const Scalar& s) { return to_string(s); });
         r.merge(verify_haar_uniqueness(std::min(d, 4)));
         return r;
       }},
      {"peter-weyl", "twice the spin", 3, [](int d) { return verify_peter_weyl(d).report; }},
      {"powers", "power", 6,
       [](int d) {
         Report r = verify_power_formulas(d, std::max(d - 1, 0));
         r.merge(verify_e_products(std::min(d, 3), Reading::Corrected));
         return r;
       }},
      {"completeness", "monomial degree", 4, [](int d) { return verify_completeness(d, d); }},
      {"spheres", "basis degree", 3,
       [](int d) {
         Report r = verify_M();
         r.merge(verify_infinity_relations());
         r.merge(verify_coideal(SphereParams::infinity()));
         r.merge(characters_of_S_infinity().report);
         r.merge(sphere_basis_check(SphereParams::infinity(), d));
         r.name = "spheres";
         return r;
       }},
  };
  return all;
}

inline const Suite* find_suite(const std::string& name) {
  for (auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace qsuper
