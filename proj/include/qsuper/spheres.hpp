#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/hopf.hpp"
#include "qsuper/linalg.hpp"

namespace qsuper {

/// 3x3 array of elements, rows and columns indexed by -1, 0, 1 (stored at 0, 1, 2).
using Matrix3 = std::array<std::array<Element, 3>, 3>;
using Triple = std::array<Element, 3>;

/// The spin-one corepresentation matrix
///   ( a^2        rho ab             i b^2        )
///   ( rho ac     ad + t^-1 cb       i t rho db   )
///   ( i c^2     -i t rho dc         d^2          )
/// with rho = sqrt(1 - q^-1) = sqrt(1 + t^-2) and sqrt(1 - q) = t rho.
inline Matrix3 build_M() {
  const Algebra& A = Algebra::standard(Ring::Asigma);
  auto w = [&](std::vector<Gen> word, Scalar c = Scalar(1)) { return A.normal_form(word, c); };
  Scalar rho = Scalar::rho(), i = Scalar::i(), trho = Scalar::t() * rho;
  using G = Gen;
  Element center = w({G::A, G::D}) + w({G::C, G::B}, Scalar::t().inv());
  return {{{w({G::A, G::A}), w({G::A, G::B}, rho), w({G::B, G::B}, i)},
           {w({G::A, G::C}, rho), center, w({G::D, G::B}, i * trho)},
           {w({G::C, G::C}, i), w({G::D, G::C}, -i * trho), w({G::D, G::D})}}};
}

/// Corepresentation laws, antipode = transposed star, and unitarity
/// evaluated numerically at the given (negative) values of q.
inline Report verify_M(const std::vector<double>& q_samples = {-2.0, -0.5}, double tolerance = 1e-9) {
  Report rep;
  rep.name = "spin-one matrix";
  const HopfStructure& H = HopfStructure::standard(Ring::Asigma);
  const Algebra& A = H.algebra();
  Matrix3 M = build_M();
  auto show = [](const Tensor& x) { return to_string(x); };
  auto showe = [](const Element& x) { return to_string(x); };
  auto shows = [](const Scalar& x) { return to_string(x); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string in = "(" + std::to_string(i - 1) + "," + std::to_string(j - 1) + ")";
      Tensor rhs({&A, &A});
      for (int k = 0; k < 3; ++k) rhs += Tensor::product(A, M[i][k], A, M[k][j]);
      rep.expect_eq("coproduct " + in, H.coproduct(M[i][j]), rhs, show);
      rep.expect_eq("counit " + in, H.counit(M[i][j]), Scalar(i == j ? 1 : 0), shows);
      rep.expect_eq("antipode = transposed star " + in, H.antipode(M[i][j]), H.star(M[j][i]), showe);
    }
  for (double q : q_samples) {
    double residual = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Element e = i == j ? -A.one() : Element(Ring::Asigma);
        for (int k = 0; k < 3; ++k) e += A.multiply(M[i][k], H.star(M[j][k]));
        for (auto& [m, c] : e.terms()) residual = std::max(residual, std::abs(eval_numeric(c, q)));
      }
    std::string in = "unitarity residual at q=" + std::to_string(q);
    if (residual < tolerance) rep.pass();
    else rep.fail(in, std::to_string(residual), "< " + std::to_string(tolerance));
    rep.note(in + ": " + std::to_string(residual));
  }
  return rep;
}

/// A point of CP^2, or the distinguished point infinity.
struct SphereParams {
  std::optional<std::array<Scalar, 3>> alpha;  // empty means infinity

  static SphereParams infinity() { return {}; }
  /// Projective point scaled so that its first nonzero coordinate is 1.
  static SphereParams finite(std::array<Scalar, 3> a) {
    int first = -1;
    for (int k = 0; k < 3; ++k)
      if (!a[k].is_zero()) {
        first = k;
        break;
      }
    if (first < 0) throw Error("sphere parameter alpha must be nonzero");
    Scalar inv = a[first].inv();
    for (auto& x : a) x *= inv;
    return {a};
  }
  bool is_infinity() const { return !alpha.has_value(); }
};

/// x(alpha) = alpha . M, or the triple (kappa ac, ad + t^-1 cb, kappa db) at infinity.
inline Triple x_vector(const SphereParams& p) {
  const Algebra& A = Algebra::standard(Ring::Asigma);
  if (p.is_infinity()) {
    Scalar kappa = Scalar::kappa();
    return {A.normal_form({Gen::A, Gen::C}, kappa),
            A.normal_form({Gen::A, Gen::D}) + A.normal_form({Gen::C, Gen::B}, Scalar::t().inv()),
            A.normal_form({Gen::D, Gen::B}, kappa)};
  }
  Matrix3 M = build_M();
  Triple x{Element(Ring::Asigma), Element(Ring::Asigma), Element(Ring::Asigma)};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) x[j] += M[i][j] * (*p.alpha)[i];
  return x;
}

/// Matrix of the right coaction on x(p): M itself for finite alpha. At
/// infinity the triple is the middle row of M rescaled by
/// D = diag(kappa/rho, 1, kappa/(i t rho)), so the coaction matrix is D^-1 M D.
inline Matrix3 coaction_matrix(const SphereParams& p) {
  Matrix3 M = build_M();
  if (!p.is_infinity()) return M;
  Scalar rho = Scalar::rho(), kappa = Scalar::kappa();
  std::array<Scalar, 3> D{kappa / rho, Scalar(1), kappa / (Scalar::i() * Scalar::t() * rho)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M[i][j] *= D[j] / D[i];
  return M;
}

/// Right coideal property Delta x_j = sum_i x_i (x) N_ij, with N = M for
/// finite alpha. With `literal_M` the matrix M is used at infinity too.
inline Report verify_coideal(const SphereParams& p, bool literal_M = false) {
  Report rep;
  rep.name = "right coideal";
  const HopfStructure& H = HopfStructure::standard(Ring::Asigma);
  const Algebra& A = H.algebra();
  Matrix3 N = literal_M ? build_M() : coaction_matrix(p);
  Triple x = x_vector(p);
  for (int j = 0; j < 3; ++j) {
    Tensor rhs({&A, &A});
    for (int i = 0; i < 3; ++i) rhs += Tensor::product(A, x[i], A, N[i][j]);
    rep.expect_eq("x_" + std::to_string(j - 1), H.coproduct(x[j]), rhs,
                  [](const Tensor& t) { return to_string(t); });
  }
  return rep;
}

/// Relation shapes:
///   Quadratic:      c1 x_-1 x_1 + c2 x_1 x_-1 + c3 x_0^2 = b1
///   QuadraticSigma: c4 x_-1 x_1 + c5 x_1 x_-1 + c6 x_0^2 = b2 sigma x_0 + b3
///   Lower:          m1 x_-1 x_0 + m2 x_0 x_-1 = m3 sigma x_-1
///   Upper:          n1 x_1 x_0 + n2 x_0 x_1 = n3 sigma x_1
enum class RelationKind { Quadratic, QuadraticSigma, Lower, Upper };

inline const char* relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::Quadratic: return "quadratic";
    case RelationKind::QuadraticSigma: return "quadratic-sigma";
    case RelationKind::Lower: return "lower";
    case RelationKind::Upper: return "upper";
  }
  return "?";
}

inline std::optional<RelationKind> relation_from_name(const std::string& s) {
  for (auto k : {RelationKind::Quadratic, RelationKind::QuadraticSigma, RelationKind::Lower, RelationKind::Upper})
    if (s == relation_name(k)) return k;
  return std::nullopt;
}

/// Solution space of one relation shape, and a relation with every
/// coefficient nonzero when one exists.
struct RelationWitness {
  RelationKind kind;
  std::vector<std::vector<Scalar>> solutions;  // basis, first nonzero entry scaled to 1
  std::optional<std::vector<Scalar>> witness;
  bool exists() const { return witness.has_value(); }
  std::size_t nullity() const { return solutions.size(); }
};

/// Terms of the relation, each moved to the left-hand side.
inline std::vector<Element> relation_terms(const Triple& x, RelationKind kind) {
  const Algebra& A = Algebra::standard(Ring::Asigma);
  auto mul = [&](const Element& u, const Element& v) { return A.multiply(u, v); };
  Element sigma = A.gen(Gen::Sigma), one = A.one();
  const Element &xm = x[0], &x0 = x[1], &xp = x[2];
  switch (kind) {
    case RelationKind::Quadratic: return {mul(xm, xp), mul(xp, xm), mul(x0, x0), -one};
    case RelationKind::QuadraticSigma: return {mul(xm, xp), mul(xp, xm), mul(x0, x0), -mul(sigma, x0), -one};
    case RelationKind::Lower: return {mul(xm, x0), mul(x0, xm), -mul(sigma, xm)};
    case RelationKind::Upper: return {mul(xp, x0), mul(x0, xp), -mul(sigma, xp)};
  }
  return {};
}

/// Sum of coefficient * term: zero exactly when the coefficients form a relation.
inline Element substitute_relation(const Triple& x, RelationKind kind, const std::vector<Scalar>& coeffs) {
  std::vector<Element> terms = relation_terms(x, kind);
  if (coeffs.size() != terms.size()) throw Error("relation coefficient count mismatch");
  Element r(Ring::Asigma);
  for (std::size_t k = 0; k < terms.size(); ++k) r += terms[k] * coeffs[k];
  return r;
}

/// Expand the relation in the monomial basis and solve the homogeneous system.
inline RelationWitness find_relations(const SphereParams& p, RelationKind kind) {
  Triple x = x_vector(p);
  std::vector<Element> terms = relation_terms(x, kind);
  std::map<Monomial, std::size_t> rows;
  for (auto& e : terms)
    for (auto& [m, c] : e.terms()) rows.emplace(m, rows.size());
  Matrix mat(rows.size(), Vector(terms.size()));
  for (std::size_t k = 0; k < terms.size(); ++k)
    for (auto& [m, c] : terms[k].terms()) mat[rows.at(m)][k] = c;
  RelationWitness w{kind, {}, std::nullopt};
  for (Vector v : nullspace(mat, terms.size())) {
    for (auto& c : v)
      if (!c.is_zero()) {
        Scalar inv = c.inv();
        for (auto& d : v) d *= inv;
        break;
      }
    w.solutions.push_back(v);
  }
  // A coordinate vanishing on every basis vector vanishes on the whole space.
  // Otherwise some combination with small integer weights avoids all zeros.
  for (std::size_t k = 0; k < terms.size(); ++k) {
    bool some = false;
    for (auto& s : w.solutions) some = some || !s[k].is_zero();
    if (!some) return w;
  }
  for (int base = 2; base < 2 + 8 && !w.witness; ++base) {
    Vector v(terms.size());
    long weight = 1;
    for (auto& s : w.solutions) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += s[k] * Scalar(weight);
      weight *= base;
    }
    bool nz = true;
    for (auto& c : v) nz = nz && !c.is_zero();
    if (nz) w.witness = v;
  }
  if (!w.witness) throw InternalError("no all-nonzero combination found");
  return w;
}

/// The four relations at infinity as coefficient vectors of the shapes above.
/// Corrected: the sign of the commutator in the sigma relation is reversed,
/// and the quadratic coefficients of the unit relation are (1+q^-1), -(1+q).
struct InfinityRelation {
  std::string label;
  RelationKind kind;
  std::vector<Scalar> coeffs;
};

inline std::vector<InfinityRelation> infinity_relations(Reading reading = Reading::Corrected) {
  Scalar q = Scalar::q(), one(1);
  Scalar qi = q.inv();
  std::vector<InfinityRelation> rels;
  if (reading == Reading::Printed) {
    rels.push_back({"x0^2 - x-1 x1 + x1 x-1 = sigma x0", RelationKind::QuadraticSigma,
                    {-one, one, one, one, Scalar()}});
    rels.push_back({"x0^2 + q^-1(1+q^-1) x-1 x1 - (1+q^-1) x1 x-1 = 1", RelationKind::Quadratic,
                    {qi * (one + qi), -(one + qi), one, one}});
  } else {
    rels.push_back({"x0^2 + x-1 x1 - x1 x-1 = sigma x0", RelationKind::QuadraticSigma,
                    {one, -one, one, one, Scalar()}});
    rels.push_back({"x0^2 + (1+q^-1) x-1 x1 - (1+q) x1 x-1 = 1", RelationKind::Quadratic,
                    {one + qi, -(one + q), one, one}});
  }
  rels.push_back({"q x0 x-1 - x-1 x0 = (1+q) sigma x-1", RelationKind::Lower, {-one, q, one + q}});
  rels.push_back({"x0 x1 - q x1 x0 = (1+q) sigma x1", RelationKind::Upper, {-q, one, one + q}});
  return rels;
}

inline Report verify_infinity_relations(Reading reading = Reading::Corrected) {
  Report rep;
  rep.name = "relations at infinity";
  Triple x = x_vector(SphereParams::infinity());
  for (auto& r : infinity_relations(reading))
    rep.expect_eq(r.label, substitute_relation(x, r.kind, r.coeffs), Element(Ring::Asigma),
                  [](const Element& e) { return to_string(e); });
  return rep;
}

/// Linear independence of x0^m x-1^n sigma^s (m, n >= 0) and x0^m x1^n sigma^s
/// (m >= 0, n >= 1) with m + n <= max_degree, by exact rank.
inline Report sphere_basis_check(const SphereParams& p, int max_degree) {
  Report rep;
  rep.name = "sphere basis";
  const Algebra& A = Algebra::standard(Ring::Asigma);
  Triple x = x_vector(p);
  std::vector<Element> elems;
  std::vector<std::string> names;
  for (int side : {-1, 1})
    for (int m = 0; m <= max_degree; ++m)
      for (int n = (side == -1 ? 0 : 1); m + n <= max_degree; ++n)
        for (int s = 0; s <= 1; ++s) {
          Element e = A.multiply(A.power(x[1], m), A.power(x[side == -1 ? 0 : 2], n));
          if (s) e = A.multiply(e, A.gen(Gen::Sigma));
          elems.push_back(e);
          names.push_back("x0^" + std::to_string(m) + " x" + std::to_string(side) + "^" + std::to_string(n) +
                          (s ? " sigma" : ""));
        }
  // Columns are the candidate basis elements. A common radical factor of an
  // element (kappa^n at infinity) is divided out; this does not change the rank.
  std::map<Monomial, std::size_t> rows;
  for (auto& e : elems)
    for (auto& [m, c] : e.terms()) rows.emplace(m, rows.size());
  Matrix mat(rows.size(), Vector(elems.size()));
  for (std::size_t k = 0; k < elems.size(); ++k) {
    std::optional<int> mask;
    bool single = true;
    for (auto& [m, c] : elems[k].terms())
      for (int b = 0; b < 4; ++b)
        if (!c.part(b).is_zero()) {
          if (mask && *mask != b) single = false;
          mask = b;
        }
    Scalar unit(1);
    if (single && mask && *mask) {
      if (*mask & 1) unit *= Scalar::rho();
      if (*mask & 2) unit *= Scalar::kappa();
    }
    Scalar inv = unit.inv();
    for (auto& [m, c] : elems[k].terms()) mat[rows.at(m)][k] = c * inv;
  }
  std::optional<std::size_t> r = specialized_rank(mat, GaussRat(mpq_class(3, 7)));
  if (!r || *r < elems.size()) r = rank(mat);
  std::string in = std::to_string(elems.size()) + " monomials up to degree " + std::to_string(max_degree);
  if (*r == elems.size()) rep.pass();
  else rep.fail(in, "rank " + std::to_string(*r), "rank " + std::to_string(elems.size()));
  return rep;
}

/// Characters of the sphere at infinity: values (y-1, y0, y1) of an algebra
/// map to C, with u_k the value on sigma x_k. Constraints, from the corrected
/// relations (coefficients read off infinity_relations()) and from
/// (sigma x0)^2 = x0^2, (sigma x+-1)^2 = -x+-1^2 (checked in the algebra):
///   sigma relation:  y0^2 = u0 and u0^2 = y0^2, so y0 in {0, 1, -1};
///   lower relation:  (m1+m2) y0 y-1 = m3 u-1; squaring, y-1 ((m1+m2)^2 y0^2 + m3^2) = 0;
///   upper relation:  likewise for y1;
///   unit relation:   c3 y0^2 + (c1 + c2) y-1 y1 = b1.
/// A nonzero y+-1 needs y0^2 = -m3^2/(m1+m2)^2, which is not 0 or 1.
struct CharacterReport {
  std::vector<std::array<Scalar, 3>> characters;
  Scalar forced_y0_squared;  // what a nonzero y1 would force
  Report report;             // identities the derivation relies on
};

inline CharacterReport characters_of_S_infinity() {
  CharacterReport out;
  Report& rep = out.report;
  rep.name = "characters at infinity";
  const Algebra& A = Algebra::standard(Ring::Asigma);
  rep.merge(verify_infinity_relations(Reading::Corrected));
  Triple x = x_vector(SphereParams::infinity());
  Element sigma = A.gen(Gen::Sigma);
  for (int k = 0; k < 3; ++k) {
    Element sx = A.multiply(sigma, x[k]);
    Element xx = A.multiply(x[k], x[k]);
    rep.expect_eq("(sigma x" + std::to_string(k - 1) + ")^2", A.multiply(sx, sx), k == 1 ? xx : -xx,
                  [](const Element& e) { return to_string(e); });
  }
  auto rels = infinity_relations(Reading::Corrected);
  const std::vector<Scalar>& sig = rels[0].coeffs;   // c4 c5 c6 b2 b3
  const std::vector<Scalar>& unit = rels[1].coeffs;  // c1 c2 c3 b1
  const std::vector<Scalar>& lower = rels[2].coeffs;
  const std::vector<Scalar>& upper = rels[3].coeffs;
  // On characters the commutator terms cancel only if c4 + c5 = 0.
  rep.expect_eq("sigma relation is commutator-free on characters", sig[0] + sig[1], Scalar(),
                [](const Scalar& c) { return to_string(c); });
  rep.expect_eq("sigma relation has no constant", sig[4], Scalar(), [](const Scalar& c) { return to_string(c); });
  Scalar lower_lin = lower[0] + lower[1], upper_lin = upper[0] + upper[1];
  out.forced_y0_squared = -(upper[2] * upper[2]) / (upper_lin * upper_lin);
  if (out.forced_y0_squared == -(lower[2] * lower[2]) / (lower_lin * lower_lin)) rep.pass();
  else rep.fail("forced y0^2", "lower and upper relations", "agree");
  for (Scalar y0 : {Scalar(), Scalar(1), Scalar(-1)}) {
    Scalar y0sq = y0 * y0;
    // c6 y0^2 = b2 u0 with u0^2 = y0^2: u0 = c6 y0^2 / b2 must square to y0^2.
    Scalar u0 = sig[2] * y0sq / sig[3];
    if (u0 * u0 != y0sq) continue;
    bool free_lower = (lower_lin * lower_lin * y0sq + lower[2] * lower[2]).is_zero();
    bool free_upper = (upper_lin * upper_lin * y0sq + upper[2] * upper[2]).is_zero();
    if (free_lower || free_upper) {
      rep.fail("y0=" + to_string(y0), "nonzero off-diagonal values allowed", "y-1 = y1 = 0");
      continue;
    }
    if (unit[2] * y0sq == unit[3]) out.characters.push_back({Scalar(), y0, Scalar()});
  }
  bool admissible = out.forced_y0_squared.is_zero() || out.forced_y0_squared == Scalar(1);
  if (admissible) rep.fail("y1 != 0", "y0^2 = " + to_string(out.forced_y0_squared), "not in {0, 1}");
  else rep.pass();
  return out;
}

}  // namespace qsuper
