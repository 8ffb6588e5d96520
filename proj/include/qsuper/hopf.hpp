#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qsuper/report.hpp"
#include "qsuper/tensor.hpp"

namespace qsuper {

/// Coproduct, counit, antipode and star over one multiplication engine.
///
///   Delta(a) = a(x)a + b(x)c    Delta(b) = a(x)b + b(x)d
///   Delta(c) = c(x)a + d(x)c    Delta(d) = c(x)b + d(x)d    Delta(sigma) = sigma(x)sigma
///   S:  a -> d sigma, b -> -t^-1 b sigma, c -> t c sigma, d -> a sigma, sigma -> sigma
///   *:  a -> d sigma, b -> t c sigma, c -> -t^-1 b sigma, d -> a sigma, sigma -> sigma
///
/// S is a graded anti-automorphism, S(xy) = (-1)^{p(x)p(y)} S(y)S(x); star is
/// anti-linear and anti-multiplicative without a sign.
class HopfStructure {
 public:
  explicit HopfStructure(const Algebra& alg) : alg_(alg) {}
  HopfStructure(const HopfStructure&) = delete;
  HopfStructure& operator=(const HopfStructure&) = delete;

  static const HopfStructure& standard(Ring r) {
    static const HopfStructure b(Algebra::standard(Ring::B)),
        bs(Algebra::standard(Ring::Bsigma)), as(Algebra::standard(Ring::Asigma));
    switch (r) {
      case Ring::B: return b;
      case Ring::Bsigma: return bs;
      case Ring::Asigma: return as;
      default: throw Error("no coalgebra structure on the quantum plane");
    }
  }

  const Algebra& algebra() const { return alg_; }
  Ring ring() const { return alg_.ring(); }

  Tensor coproduct(const Monomial& m) const {
    if (m.is_one()) return Tensor::pure({&alg_, &alg_}, {Monomial{}, Monomial{}});
    {
      std::lock_guard lock(mu_);
      auto it = delta_cache_.find(m);
      if (it != delta_cache_.end()) return it->second;
    }
    auto [g, rest] = split_first(m);
    Tensor r = generator_coproduct(g) * coproduct(rest);
    std::lock_guard lock(mu_);
    delta_cache_.emplace(m, r);
    return r;
  }

  Tensor coproduct(const Element& x) const {
    alg_.check(x);
    Tensor r({&alg_, &alg_});
    for (auto& [m, c] : x.terms()) r += coproduct(m) * c;
    return r;
  }

  static Scalar counit(const Monomial& m) {
    return (m.e[1] == 0 && m.e[2] == 0) ? Scalar(1) : Scalar();
  }
  Scalar counit(const Element& x) const {
    alg_.check(x);
    Scalar r;
    for (auto& [m, c] : x.terms())
      if (m.e[1] == 0 && m.e[2] == 0) r += c;
    return r;
  }

  Element antipode(const Monomial& m) const {
    require_asigma("antipode");
    if (m.is_one()) return alg_.one();
    {
      std::lock_guard lock(mu_);
      auto it = s_cache_.find(m);
      if (it != s_cache_.end()) return it->second;
    }
    auto [g, rest] = split_first(m);
    Element r = alg_.multiply(antipode(rest), generator_antipode(g));
    if (gen_parity(g) && rest.parity()) r = -r;
    std::lock_guard lock(mu_);
    s_cache_.emplace(m, r);
    return r;
  }
  Element antipode(const Element& x) const {
    alg_.check(x);
    Element r(alg_.ring());
    for (auto& [m, c] : x.terms()) r += antipode(m) * c;
    return r;
  }

  Element star(const Monomial& m) const {
    require_asigma("star");
    if (m.is_one()) return alg_.one();
    {
      std::lock_guard lock(mu_);
      auto it = star_cache_.find(m);
      if (it != star_cache_.end()) return it->second;
    }
    auto [g, rest] = split_first(m);
    Element r = alg_.multiply(star(rest), generator_star(g));
    std::lock_guard lock(mu_);
    star_cache_.emplace(m, r);
    return r;
  }
  Element star(const Element& x) const {
    alg_.check(x);
    Element r(alg_.ring());
    for (auto& [m, c] : x.terms()) r += star(m) * c.conj();
    return r;
  }

  /// (star (x) star) on a two-leg tensor, graded: x (x) y -> (-1)^{p(x)p(y)} x* (x) y*.
  Tensor star_tensor(const Tensor& x) const {
    Tensor conjugated({&alg_, &alg_});
    for (auto& [k, c] : x.terms())
      conjugated.add_term(k, (k[0].parity() & k[1].parity()) ? -c.conj() : c.conj());
    auto leg_star = [this](const Monomial& m) {
      Element e = star(m);
      Tensor t({&alg_});
      for (auto& [mm, cc] : e.terms()) t.add_term({mm}, cc);
      return t;
    };
    return conjugated.apply_leg(0, leg_star).apply_leg(1, leg_star);
  }

  /// Delta applied to one leg of a tensor.
  Tensor coproduct_on_leg(const Tensor& x, std::size_t leg) const {
    return x.apply_leg(leg, [this](const Monomial& m) { return coproduct(m); });
  }

  /// Generator word with the first letter split off: (g, rest).
  std::pair<Gen, Monomial> split_first(const Monomial& m) const {
    Monomial rest = m;
    for (int q = 0; q < 5; ++q)
      if (rest.e[q] > 0) {
        --rest.e[q];
        return {static_cast<Gen>(q), rest};
      }
    throw Error("split_first on the unit monomial");
  }

  Tensor generator_coproduct(Gen g) const {
    Tensor t({&alg_, &alg_});
    auto add = [&](Monomial x, Monomial y) { t.add_term({x, y}, Scalar(1)); };
    const Monomial A{1, 0, 0, 0, 0}, B{0, 1, 0, 0, 0}, C{0, 0, 1, 0, 0}, D{0, 0, 0, 1, 0},
        S{0, 0, 0, 0, 1};
    switch (g) {
      case Gen::A: add(A, A), add(B, C); break;
      case Gen::B: add(A, B), add(B, D); break;
      case Gen::C: add(C, A), add(D, C); break;
      case Gen::D: add(C, B), add(D, D); break;
      case Gen::Sigma: add(S, S); break;
      default: throw Error("plane generator has no coproduct");
    }
    return t;
  }

  Element generator_antipode(Gen g) const {
    switch (g) {
      case Gen::A: return alg_.normal_form({Gen::D, Gen::Sigma});
      case Gen::B: return alg_.normal_form({Gen::B, Gen::Sigma}, -Scalar::t_pow(-1));
      case Gen::C: return alg_.normal_form({Gen::C, Gen::Sigma}, Scalar::t());
      case Gen::D: return alg_.normal_form({Gen::A, Gen::Sigma});
      case Gen::Sigma: return alg_.gen(Gen::Sigma);
      default: throw Error("plane generator has no antipode");
    }
  }

  Element generator_star(Gen g) const {
    switch (g) {
      case Gen::A: return alg_.normal_form({Gen::D, Gen::Sigma});
      case Gen::B: return alg_.normal_form({Gen::C, Gen::Sigma}, Scalar::t());
      case Gen::C: return alg_.normal_form({Gen::B, Gen::Sigma}, -Scalar::t_pow(-1));
      case Gen::D: return alg_.normal_form({Gen::A, Gen::Sigma});
      case Gen::Sigma: return alg_.gen(Gen::Sigma);
      default: throw Error("plane generator has no star");
    }
  }

 private:
  void require_asigma(const char* what) const {
    if (alg_.ring() != Ring::Asigma)
      throw RingMismatch(std::string(what) + " is only defined on ring Asigma");
  }

  const Algebra& alg_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, Tensor> delta_cache_;
  mutable std::map<Monomial, Element> s_cache_;
  mutable std::map<Monomial, Element> star_cache_;
};

inline Tensor coproduct(const Element& x) { return HopfStructure::standard(x.ring()).coproduct(x); }
inline Scalar counit(const Element& x) { return HopfStructure::standard(x.ring()).counit(x); }
inline Element antipode(const Element& x) { return HopfStructure::standard(x.ring()).antipode(x); }
inline Element star(const Element& x) { return HopfStructure::standard(x.ring()).star(x); }

/// Checks the Hopf superalgebra and star axioms on every basis monomial of
/// degree <= max_degree, using the given engine (ring Asigma).
inline Report verify_hopf(int max_degree, const HopfStructure& H) {
  Report rep;
  rep.name = "hopf";
  const Algebra& A = H.algebra();
  auto show_t = [](const Tensor& x) { return to_string(x); };
  auto show_e = [](const Element& x) { return to_string(x); };
  const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::Sigma};
  for (const Monomial& m : basis_monomials(A.ring(), max_degree)) {
    std::string in = monomial_string(m, A.ring());
    if (in.empty()) in = "1";
    Element x = A.monomial(m);
    Tensor dx = H.coproduct(m);
    Element eps_one = A.scalar(H.counit(m));

    rep.expect_eq("coassociativity at " + in, H.coproduct_on_leg(dx, 0), H.coproduct_on_leg(dx, 1),
                  show_t);
    rep.expect_eq("left counit at " + in,
                  dx.contract_leg(0, [](const Monomial& y) { return HopfStructure::counit(y); })
                      .to_element(),
                  x, show_e);
    rep.expect_eq("right counit at " + in,
                  dx.contract_leg(1, [](const Monomial& y) { return HopfStructure::counit(y); })
                      .to_element(),
                  x, show_e);

    auto as_tensor = [&A](const Element& e) {
      Tensor t({&A});
      for (auto& [mm, cc] : e.terms()) t.add_term({mm}, cc);
      return t;
    };
    auto s_leg = [&](const Monomial& y) { return as_tensor(H.antipode(y)); };
    rep.expect_eq("m(S (x) id)Delta at " + in, dx.apply_leg(0, s_leg).multiply_out(), eps_one,
                  show_e);
    rep.expect_eq("m(id (x) S)Delta at " + in, dx.apply_leg(1, s_leg).multiply_out(), eps_one,
                  show_e);

    Element sx = H.antipode(m);
    Element xs = H.star(m);
    for (Gen g : gens) {
      Monomial gm;
      gm.e[static_cast<int>(g)] = 1;
      Element xg = A.multiply(x, A.gen(g));
      Element rhs = A.multiply(H.generator_antipode(g), sx);
      if (m.parity() && gen_parity(g)) rhs = -rhs;
      rep.expect_eq("S anti-automorphism at " + in + "*" + monomial_string(gm, A.ring()),
                    H.antipode(xg), rhs, show_e);
      rep.expect_eq("star anti-multiplicative at " + in + "*" + monomial_string(gm, A.ring()),
                    H.star(xg), A.multiply(H.generator_star(g), xs), show_e);
    }

    rep.expect_eq("star^2 at " + in, H.star(xs), x, show_e);
    rep.expect_eq("(star (x) star)Delta at " + in, H.star_tensor(dx), H.coproduct(xs), show_t);
    rep.expect_eq("eps(star x) at " + in, H.counit(xs), H.counit(m).conj(),
                  [](const Scalar& s) { return to_string(s); });
    rep.expect_eq("star S star S at " + in, H.star(H.antipode(H.star(sx))), x, show_e);
    rep.expect_eq("S star S star at " + in, H.antipode(H.star(H.antipode(xs))), x, show_e);
  }
  return rep;
}

inline Report verify_hopf(int max_degree) {
  return verify_hopf(max_degree, HopfStructure::standard(Ring::Asigma));
}

/// Negative control: the engine with sigma b = +b sigma.
inline Report verify_hopf_broken(int max_degree) {
  static const Algebra broken(Ring::Asigma, RewriteOptions{+1});
  static const HopfStructure H(broken);
  Report r = verify_hopf(max_degree, H);
  r.name = "hopf (sigma commuting with b, c)";
  return r;
}

// ---------------------------------------------------------------------------
// Quantum super plane x y = t y x and its coactions.

enum class Side { Left, Right };

/// psi_L(x) = a(x)x + b(x)y, psi_L(y) = c(x)x + d(x)y   (B (x) plane)
/// psi_R(x) = x(x)a + y(x)c, psi_R(y) = x(x)b + y(x)d   (plane (x) B)
class PlaneCoaction {
 public:
  PlaneCoaction(Side side, Ring plane_ring = Ring::Plane)
      : side_(side),
        mat_(Algebra::standard(Ring::B)),
        plane_(Algebra::standard(plane_ring)),
        H_(HopfStructure::standard(Ring::B)) {
    if (!is_plane(plane_ring)) throw RingMismatch("coaction target must be a plane ring");
  }

  Side side() const { return side_; }
  const Algebra& plane() const { return plane_; }
  const Algebra& matrix() const { return mat_; }
  std::size_t plane_leg() const { return side_ == Side::Left ? 1 : 0; }
  std::size_t matrix_leg() const { return side_ == Side::Left ? 0 : 1; }

  std::vector<const Algebra*> legs() const {
    if (side_ == Side::Left) return {&mat_, &plane_};
    return {&plane_, &mat_};
  }

  Tensor generator_image(Gen g) const {
    const Monomial X = Monomial::plane(1, 0), Y = Monomial::plane(0, 1);
    const Monomial A{1, 0, 0, 0, 0}, B{0, 1, 0, 0, 0}, C{0, 0, 1, 0, 0}, D{0, 0, 0, 1, 0};
    Tensor t(legs());
    auto add = [&](const Monomial& mat, const Monomial& pl) {
      if (side_ == Side::Left) t.add_term({mat, pl}, Scalar(1));
      else t.add_term({pl, mat}, Scalar(1));
    };
    bool is_x = g == Gen::X;
    if (side_ == Side::Left) {
      add(is_x ? A : C, X);
      add(is_x ? B : D, Y);
    } else {
      add(is_x ? A : B, X);
      add(is_x ? C : D, Y);
    }
    return t;
  }

  Tensor apply(const Monomial& m) const {
    Tensor r = Tensor::pure(legs(), {Monomial{}, Monomial{}});
    for (Gen g : m.word(plane_.ring())) r = r * generator_image(g);
    return r;
  }
  Tensor apply(const Element& p) const {
    plane_.check(p);
    Tensor r(legs());
    for (auto& [m, c] : p.terms()) r += apply(m) * c;
    return r;
  }

  /// Comodule-algebra laws on plane monomials x^m y^n with m + n <= max_degree.
  Report verify(int max_degree) const {
    Report rep;
    rep.name = std::string(side_ == Side::Left ? "left" : "right") + " coaction on " +
               ring_name(plane_.ring());
    auto show_t = [](const Tensor& x) { return to_string(x); };
    auto show_e = [](const Element& x) { return to_string(x); };
    auto mono = basis_monomials(plane_.ring(), max_degree);
    for (const Monomial& m : mono) {
      std::string in = monomial_string(m, plane_.ring());
      if (in.empty()) in = "1";
      Tensor pm = apply(m);
      // coassociativity
      Tensor lhs, rhs;
      auto psi_leg = [this](const Monomial& y) { return apply(y); };
      auto delta_leg = [this](const Monomial& y) { return H_.coproduct(y); };
      if (side_ == Side::Left) {
        lhs = pm.apply_leg(1, psi_leg);
        rhs = pm.apply_leg(0, delta_leg);
      } else {
        lhs = pm.apply_leg(0, psi_leg);
        rhs = pm.apply_leg(1, delta_leg);
      }
      rep.expect_eq("coassociativity at " + in, lhs, rhs, show_t);
      Element back = pm.contract_leg(matrix_leg(), [](const Monomial& y) {
                         return HopfStructure::counit(y);
                       }).to_element();
      rep.expect_eq("counit at " + in, back, plane_.monomial(m), show_e);
      // multiplicativity on pairs
      for (const Monomial& m2 : mono) {
        if (m.degree() + m2.degree() > max_degree) continue;
        std::string in2 = monomial_string(m2, plane_.ring());
        if (in2.empty()) in2 = "1";
        rep.expect_eq("psi(p q) = psi(p) psi(q) at " + in + " * " + in2,
                      apply(plane_.mono_times(m, m2)), pm * apply(m2), show_t);
      }
    }
    return rep;
  }

 private:
  Side side_;
  const Algebra& mat_;
  const Algebra& plane_;
  const HopfStructure& H_;
};

}  // namespace qsuper
