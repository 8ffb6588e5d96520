#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "qsuper/hopf.hpp"
#include "qsuper/linalg.hpp"

namespace qsuper {

/// Letter of a dual word: k^power (power may be negative), e or f.
struct Letter {
  enum Kind { K, E, F } kind = K;
  int power = 1;

  static Letter k(int p = 1) { return {K, p}; }
  static Letter e() { return {E, 1}; }
  static Letter f() { return {F, 1}; }
  int parity() const { return kind == K ? 0 : 1; }

  friend bool operator<(const Letter& x, const Letter& y) {
    return x.kind != y.kind ? x.kind < y.kind : x.power < y.power;
  }
  friend bool operator==(const Letter& x, const Letter& y) {
    return x.kind == y.kind && x.power == y.power;
  }
};

using Word = std::vector<Letter>;

inline int word_parity(const Word& w) {
  int p = 0;
  for (auto& l : w) p ^= l.parity();
  return p;
}

/// Merge adjacent k-powers and drop k^0.
inline Word canonical_word(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (l.kind == Letter::K && !out.empty() && out.back().kind == Letter::K) {
      out.back().power += l.power;
      if (out.back().power == 0) out.pop_back();
    } else if (!(l.kind == Letter::K && l.power == 0)) {
      out.push_back(l);
    }
  }
  return out;
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (n) s += "*";
    const Letter& l = w[n];
    if (l.kind == Letter::E) s += "e";
    else if (l.kind == Letter::F) s += "f";
    else s += l.power == 1 ? "k" : "k^" + std::to_string(l.power);
  }
  return s;
}

/// Linear combination of dual words. The empty word is the counit.
class Functional {
 public:
  using Terms = std::map<Word, Scalar>;

  Functional() = default;
  Functional(Word w, Scalar c = Scalar(1)) { add(canonical_word(w), c); }  // NOLINT

  static Functional counit() { return Functional(Word{}); }
  static Functional k(int p = 1) { return Functional(Word{Letter::k(p)}); }
  static Functional e() { return Functional(Word{Letter::e()}); }
  static Functional f() { return Functional(Word{Letter::f()}); }

  const Terms& terms() const { return terms_; }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Functional& operator+=(const Functional& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Functional& operator-=(const Functional& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend Functional operator+(Functional a, const Functional& b) { return a += b; }
  friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
  friend Functional operator*(const Functional& a, const Scalar& s) {
    Functional r;
    for (auto& [w, c] : a.terms_) r.add(w, c * s);
    return r;
  }
  /// Convolution product: concatenation of words.
  friend Functional operator*(const Functional& a, const Functional& b) {
    Functional r;
    for (auto& [w1, c1] : a.terms_)
      for (auto& [w2, c2] : b.terms_) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(canonical_word(w), c1 * c2);
      }
    return r;
  }

 private:
  Terms terms_;
};

inline std::string to_string(const Functional& f) {
  if (f.terms().empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : f.terms()) {
    auto [neg, pre] = coefficient_prefix(c);
    std::string body = pre + to_string(w);
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

/// The value of e(b) as printed, before calibration: (t - t^-1)/(q - q^-1).
inline Scalar e_of_b_printed() {
  Scalar t = Scalar::t(), q = Scalar::q();
  return (t - t.inv()) / (q - q.inv());
}

/// Evaluation of dual words on an algebra, with the sign convention
/// (phi (x) psi)(x (x) y) = (-1)^{p(x)p(psi)} phi(x) psi(y).
///
/// Single letters: k^p is the algebra morphism a -> t^p, d -> (-t^-1)^p,
/// sigma -> (-1)^p, b, c -> 0; e and f are the twisted derivations
///   e(xy) = e(x) eps(y) + (-1)^{p(x)} k(x) e(y),   e(b) = sign * e_of_b_printed()
///   f(xy) = f(x) k^-1(y) + (-1)^{p(x)} eps(x) f(y), f(c) = 1,
/// both vanishing on the other generators and on 1.
class DualPairing {
 public:
  DualPairing(Ring ring, int e_sign)
      : H_(HopfStructure::standard(ring)), e_sign_(e_sign), e_b_(e_of_b_printed() * Scalar(e_sign)) {}
  DualPairing(const DualPairing&) = delete;
  DualPairing& operator=(const DualPairing&) = delete;

  int e_sign() const { return e_sign_; }
  const HopfStructure& hopf() const { return H_; }
  const Algebra& algebra() const { return H_.algebra(); }

  Scalar k_power(int p, const Monomial& m) const {
    if (m.e[1] || m.e[2]) return Scalar();
    Scalar r = Scalar::t_pow(p * (m.e[0] - m.e[3]));
    if (((p * m.e[3] + p * m.e[4]) & 1) != 0) r = -r;
    return r;
  }

  Scalar letter(const Letter& l, const Monomial& m) const {
    if (l.kind == Letter::K) return k_power(l.power, m);
    if (m.is_one()) return Scalar();
    {
      std::lock_guard lock(mu_);
      auto it = letter_cache_.find({l, m});
      if (it != letter_cache_.end()) return it->second;
    }
    auto [g, rest] = H_.split_first(m);
    Monomial gm;
    gm.e[static_cast<int>(g)] = 1;
    Scalar r;
    if (l.kind == Letter::E) {
      Scalar eg = g == Gen::B ? e_b_ : Scalar();
      r = eg * HopfStructure::counit(rest);
      Scalar kg = k_power(1, gm);
      if (!kg.is_zero()) {
        Scalar tail = letter(l, rest);
        r += (gen_parity(g) ? -kg : kg) * tail;
      }
    } else {
      Scalar fg = g == Gen::C ? Scalar(1) : Scalar();
      r = fg * k_power(-1, rest);
      Scalar eg = HopfStructure::counit(gm);
      if (!eg.is_zero()) {
        Scalar tail = letter(l, rest);
        r += (gen_parity(g) ? -eg : eg) * tail;
      }
    }
    std::lock_guard lock(mu_);
    letter_cache_.emplace(std::make_pair(l, m), r);
    return r;
  }

  /// Word evaluated on a monomial via the iterated coproduct.
  Scalar word(const Word& w, const Monomial& m) const {
    if (w.empty()) return HopfStructure::counit(m);
    if (w.size() == 1) return letter(w.front(), m);
    {
      std::lock_guard lock(mu_);
      auto it = word_cache_.find({w, m});
      if (it != word_cache_.end()) return it->second;
    }
    Word rest(w.begin() + 1, w.end());
    int prest = word_parity(rest);
    Scalar r;
    Tensor d = H_.coproduct(m);
    for (auto& [k, c] : d.terms()) {
      Scalar v1 = letter(w.front(), k[0]);
      if (v1.is_zero()) continue;
      Scalar v2 = word(rest, k[1]);
      if (v2.is_zero()) continue;
      Scalar term = c * v1 * v2;
      if (prest && k[0].parity()) term = -term;
      r += term;
    }
    std::lock_guard lock(mu_);
    word_cache_.emplace(std::make_pair(w, m), r);
    return r;
  }

  Scalar eval(const Functional& phi, const Monomial& m) const {
    Scalar r;
    for (auto& [w, c] : phi.terms()) r += c * word(w, m);
    return r;
  }
  Scalar eval(const Functional& phi, const Element& x) const {
    algebra().check(x);
    Scalar r;
    for (auto& [m, c] : x.terms()) r += c * eval(phi, m);
    return r;
  }

  /// (phi (x) psi) on a two-leg tensor, graded.
  Scalar eval_tensor(const Functional& phi, const Functional& psi, const Tensor& x) const {
    Scalar r;
    for (auto& [wp, cp] : psi.terms()) {
      int p = word_parity(wp);
      for (auto& [k, c] : x.terms()) {
        Scalar v = eval(phi, k[0]);
        if (v.is_zero()) continue;
        Scalar term = c * cp * v * word(wp, k[1]);
        if (p && k[0].parity()) term = -term;
        r += term;
      }
    }
    return r;
  }

 private:
  const HopfStructure& H_;
  int e_sign_;
  Scalar e_b_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Letter, Monomial>, Scalar> letter_cache_;
  mutable std::map<std::pair<Word, Monomial>, Scalar> word_cache_;
};

/// (k - k^-1)/(q - q^-1).
inline Functional cartan_quotient() {
  Scalar q = Scalar::q();
  return (Functional::k(1) - Functional::k(-1)) * (q - q.inv()).inv();
}

/// Returns the sign s for which (ef + fe)(a) = ((k - k^-1)/(q - q^-1))(a)
/// when e(b) = s * (t - t^-1)/(q - q^-1).
inline int calibrate_e_sign() {
  const Monomial a{1, 0, 0, 0, 0};
  for (int s : {+1, -1}) {
    DualPairing P(Ring::B, s);
    Functional ef = Functional::e() * Functional::f() + Functional::f() * Functional::e();
    if (P.eval(ef, a) == P.eval(cartan_quotient(), a)) return s;
  }
  throw Error("no sign of e(b) satisfies ef + fe = (k - k^-1)/(q - q^-1) at a");
}

/// The calibrated sign, computed once.
inline int e_sign() {
  static const int s = calibrate_e_sign();
  return s;
}

inline const DualPairing& standard_pairing(Ring r = Ring::Asigma) {
  static const DualPairing b(Ring::B, e_sign()), bs(Ring::Bsigma, e_sign()),
      as(Ring::Asigma, e_sign());
  switch (r) {
    case Ring::B: return b;
    case Ring::Bsigma: return bs;
    default: return as;
  }
}

/// kk^-1 = k^-1k = eps, kek^-1 = qe, kfk^-1 = q^-1 f, ef + fe = (k-k^-1)/(q-q^-1)
/// on all basis monomials of degree <= max_degree.
inline Report verify_uq_relations(int max_degree, const DualPairing& P) {
  Report rep;
  rep.name = "U_q relations (e sign " + std::to_string(P.e_sign()) + ")";
  Scalar q = Scalar::q();
  Functional e = Functional::e(), f = Functional::f();
  // Words are evaluated unmerged, so k k^-1 really goes through the coproduct.
  auto word = [&P](Word w) { return [&P, w](const Monomial& m) { return P.word(w, m); }; };
  auto func = [&P](Functional phi) { return [&P, phi](const Monomial& m) { return P.eval(phi, m); }; };
  struct Rel {
    const char* name;
    std::function<Scalar(const Monomial&)> lhs, rhs;
  };
  const Rel rels[] = {
      {"k k^-1 = eps", word({Letter::k(1), Letter::k(-1)}), func(Functional::counit())},
      {"k^-1 k = eps", word({Letter::k(-1), Letter::k(1)}), func(Functional::counit())},
      {"k e k^-1 = q e", word({Letter::k(1), Letter::e(), Letter::k(-1)}), func(e * q)},
      {"k f k^-1 = q^-1 f", word({Letter::k(1), Letter::f(), Letter::k(-1)}), func(f * q.inv())},
      {"ef + fe = (k - k^-1)/(q - q^-1)", func(e * f + f * e), func(cartan_quotient())},
  };
  auto show = [](const Scalar& s) { return to_string(s); };
  for (const Monomial& m : basis_monomials(P.algebra().ring(), max_degree)) {
    std::string in = monomial_string(m, P.algebra().ring());
    if (in.empty()) in = "1";
    for (const Rel& r : rels) rep.expect_eq(std::string(r.name) + " at " + in, r.lhs(m), r.rhs(m), show);
  }
  return rep;
}

inline Report verify_uq_relations(int max_degree) {
  return verify_uq_relations(max_degree, standard_pairing(Ring::Asigma));
}

/// The dual Hopf structure against the algebra: Delta(phi)(x (x) y) = phi(xy),
/// eps(phi) = phi(1), S(phi)(x) = phi(S(x)) for phi in {k, k^-1, e, f}.
inline Report verify_dual_hopf(int samples, unsigned seed = 1) {
  const DualPairing& P = standard_pairing(Ring::Asigma);
  const Algebra& A = P.algebra();
  const HopfStructure& H = P.hopf();
  Report rep;
  rep.name = "dual Hopf structure";
  Functional k = Functional::k(1), ki = Functional::k(-1), e = Functional::e(),
             f = Functional::f(), one = Functional::counit();
  struct Gen1 {
    const char* name;
    Functional phi;
    std::vector<std::pair<Functional, Functional>> delta;
    Functional antipode;
    Scalar counit;
  };
  const Gen1 gens[] = {
      {"k", k, {{k, k}}, ki, Scalar(1)},
      {"k^-1", ki, {{ki, ki}}, k, Scalar(1)},
      {"e", e, {{e, one}, {k, e}}, (ki * e) * Scalar(-1), Scalar()},
      {"f", f, {{f, ki}, {one, f}}, (f * k) * Scalar(-1), Scalar()},
  };
  auto mono = basis_monomials(Ring::Asigma, 3);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, mono.size() - 1);
  auto show = [](const Scalar& s) { return to_string(s); };
  for (const Gen1& g : gens) {
    rep.expect_eq(std::string("eps(") + g.name + ")", P.eval(g.phi, Monomial{}), g.counit, show);
    for (int n = 0; n < samples; ++n) {
      Monomial x = mono[pick(rng)], y = mono[pick(rng)];
      Tensor xy = Tensor::pure({&A, &A}, {x, y});
      Scalar lhs;
      for (auto& [p1, p2] : g.delta) lhs += P.eval_tensor(p1, p2, xy);
      std::string in = monomial_string(x, A.ring()) + " (x) " + monomial_string(y, A.ring());
      rep.expect_eq(std::string("Delta(") + g.name + ") at " + in, lhs, P.eval(g.phi, A.mono_times(x, y)),
                    show);
      rep.expect_eq(std::string("S(") + g.name + ") at " + monomial_string(x, A.ring()),
                    P.eval(g.antipode, x), P.eval(g.phi, H.antipode(x)), show);
    }
  }
  return rep;
}

/// Rank of the evaluation matrix of the words f^a k^b e^c (0 <= a, c <= word_bound,
/// |b| <= word_bound) against the basis monomials of B of degree <= degree_bound.
///
/// Rows only pair with columns of matching weight: f^a k^b e^c vanishes on
/// b^j c^k-type monomials unless j - k = c - a. The attainable rank is the sum
/// over weights of min(rows, columns), reported as `bound`.
struct GramReport {
  std::size_t rows = 0, cols = 0, rank = 0, bound = 0;
  bool zero_row = false;
  bool specialized = false;  // rank certified at a rational value of t
  Report report;
};

inline GramReport pairing_gram_rank(int word_bound, int degree_bound, Ring ring = Ring::B) {
  const DualPairing& P = standard_pairing(ring);
  GramReport g;
  g.report.name = "pairing Gram rank";
  auto mono = basis_monomials(ring, degree_bound);
  std::map<int, std::vector<Word>> rows_by_weight;
  std::map<int, std::vector<Monomial>> cols_by_weight;
  for (int a = 0; a <= word_bound; ++a)
    for (int b = -word_bound; b <= word_bound; ++b)
      for (int c = 0; c <= word_bound; ++c) {
        Word w(a, Letter::f());
        if (b) w.push_back(Letter::k(b));
        w.insert(w.end(), c, Letter::e());
        rows_by_weight[c - a].push_back(w);
      }
  for (const Monomial& m : mono) cols_by_weight[m.e[1] - m.e[2]].push_back(m);
  g.cols = mono.size();
  for (auto& [wt, rows] : rows_by_weight) {
    g.rows += rows.size();
    auto& cols = cols_by_weight[wt];
    g.bound += std::min(rows.size(), cols.size());
  }
  // Full matrix, with a weight check on the off-block entries.
  Matrix m;
  for (auto& [wt, rows] : rows_by_weight)
    for (const Word& w : rows) {
      Vector row;
      bool nonzero = false;
      for (const Monomial& x : mono) {
        Scalar v = P.word(w, x);
        if (!v.is_zero()) {
          nonzero = true;
          if (x.e[1] - x.e[2] != wt)
            g.report.fail("weight of " + to_string(w), monomial_string(x, ring), "nonzero off-block");
        }
        row.push_back(v);
      }
      if (!nonzero) g.zero_row = true;
      m.push_back(std::move(row));
    }
  std::optional<std::size_t> sr = specialized_rank(m, GaussRat(mpq_class(3, 7)));
  if (sr && *sr == g.bound) {
    g.rank = *sr;
    g.specialized = true;
  } else {
    g.rank = rank(m);
  }
  if (g.rank == g.bound) g.report.pass();
  else g.report.fail("rank", std::to_string(g.rank), std::to_string(g.bound));
  if (g.zero_row) g.report.fail("zero row", "present", "absent");
  return g;
}

}  // namespace qsuper
