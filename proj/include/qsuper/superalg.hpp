#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsuper/scalar.hpp"

namespace qsuper {

/// B: <a,b,c,d> with the quadratic relations; Bsigma: B plus the grading
/// element sigma; Asigma: Bsigma / (ad + t bc = sigma). Plane is the quantum
/// super plane xy = t yx and PlaneNil the same with y^2 = 0.
enum class Ring { B, Bsigma, Asigma, Plane, PlaneNil };

inline const char* ring_name(Ring r) {
  switch (r) {
    case Ring::B: return "B";
    case Ring::Bsigma: return "Bsigma";
    case Ring::Asigma: return "Asigma";
    case Ring::Plane: return "Plane";
    case Ring::PlaneNil: return "PlaneNil";
  }
  return "?";
}
inline std::optional<Ring> ring_from_name(const std::string& s) {
  if (s == "B") return Ring::B;
  if (s == "Bsigma") return Ring::Bsigma;
  if (s == "Asigma") return Ring::Asigma;
  if (s == "Plane") return Ring::Plane;
  if (s == "PlaneNil") return Ring::PlaneNil;
  return std::nullopt;
}
inline bool is_plane(Ring r) { return r == Ring::Plane || r == Ring::PlaneNil; }
inline bool has_sigma(Ring r) { return r == Ring::Bsigma || r == Ring::Asigma; }

enum class Gen { A, B, C, D, Sigma, X, Y };

inline int gen_parity(Gen g) { return (g == Gen::B || g == Gen::C || g == Gen::Y) ? 1 : 0; }

/// Normal-form monomial a^i b^j c^k d^l sigma^s. Plane monomials x^m y^n are
/// stored as (m, n, 0, 0, 0), so parity is (j + k) mod 2 for every ring.
struct Monomial {
  std::array<int, 5> e{0, 0, 0, 0, 0};

  Monomial() = default;
  Monomial(int i, int j, int k, int l, int s) : e{i, j, k, l, s} {}
  static Monomial plane(int m, int n) { return {m, n, 0, 0, 0}; }

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  int parity() const { return (e[1] + e[2]) & 1; }
  bool is_one() const { return e == std::array<int, 5>{0, 0, 0, 0, 0}; }

  /// Word of generators, left to right.
  std::vector<Gen> word(Ring r) const {
    std::vector<Gen> w;
    if (is_plane(r)) {
      w.insert(w.end(), e[0], Gen::X);
      w.insert(w.end(), e[1], Gen::Y);
      return w;
    }
    w.insert(w.end(), e[0], Gen::A);
    w.insert(w.end(), e[1], Gen::B);
    w.insert(w.end(), e[2], Gen::C);
    w.insert(w.end(), e[3], Gen::D);
    w.insert(w.end(), e[4], Gen::Sigma);
    return w;
  }

  /// Degree-lex order: total degree first, then larger powers of the
  /// earlier generators first, sigma last.
  friend bool operator<(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int q = 0; q < 4; ++q)
      if (x.e[q] != y.e[q]) return x.e[q] > y.e[q];
    return x.e[4] < y.e[4];
  }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.e == y.e; }
  friend bool operator!=(const Monomial& x, const Monomial& y) { return x.e != y.e; }
};

/// Finite linear combination of normal-form monomials of one ring.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  explicit Element(Ring r) : ring_(r) {}
  Element(Ring r, Scalar c) : ring_(r) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
  }
  Element(Ring r, const Monomial& m, Scalar c = Scalar(1)) : ring_(r) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }

  Ring ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    check_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_ring(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element operator-() const {
    Element r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Element& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Parity if homogeneous, nullopt otherwise (0 for the zero element).
  std::optional<int> parity() const {
    std::optional<int> p;
    for (auto& [m, c] : terms_) {
      if (p && *p != m.parity()) return std::nullopt;
      p = m.parity();
    }
    return p.value_or(0);
  }

  void check_ring(const Element& o) const {
    if (ring_ != o.ring_)
      throw RingMismatch(std::string("ring mismatch: ") + ring_name(ring_) + " vs " +
                         ring_name(o.ring_));
  }

 private:
  Ring ring_ = Ring::Asigma;
  Terms terms_;
};

/// Rewrite options. `sigma_odd_sign` is the sign in sigma*b = sign*b*sigma
/// (and likewise for c); only negative controls change it.
struct RewriteOptions {
  int sigma_odd_sign = -1;
};

/// The multiplication engine of one ring: left multiplication of a
/// normal-form monomial by a generator, extended to products of Elements.
///
/// Rules, with b a = t^-1 a b, c a = t^-1 a c, c b = -b c, d b = -t^-1 b d,
/// d c = -t^-1 c d:
///   d a = a d - (t^-1 - t) b c             in B, Bsigma
///   d a = sigma - t^-1 b c                 in Asigma
///   a b^j c^k d^l = t^(j+k) b^j c^k (sigma - t b c) d^(l-1)   in Asigma
/// The last rule only fires on monomials without a, so every step strictly
/// reduces min(i, l).
class Algebra {
 public:
  explicit Algebra(Ring r, RewriteOptions opts = {}) : ring_(r), opts_(opts) {}
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  /// Shared engine with the standard relations.
  static const Algebra& standard(Ring r) {
    static const Algebra b(Ring::B), bs(Ring::Bsigma), as(Ring::Asigma), pl(Ring::Plane),
        pn(Ring::PlaneNil);
    switch (r) {
      case Ring::B: return b;
      case Ring::Bsigma: return bs;
      case Ring::Asigma: return as;
      case Ring::Plane: return pl;
      case Ring::PlaneNil: return pn;
    }
    return as;
  }

  Ring ring() const { return ring_; }
  const RewriteOptions& options() const { return opts_; }

  Element one() const { return Element(ring_, Scalar(1)); }
  Element gen(Gen g) const { return gen_times(g, Monomial{}); }
  Element scalar(const Scalar& s) const { return Element(ring_, s); }
  Element monomial(const Monomial& m) const { return Element(ring_, m); }

  /// g * m, normalized.
  Element gen_times(Gen g, const Monomial& m) const {
    {
      std::lock_guard lock(mu_);
      auto it = gen_cache_.find({g, m});
      if (it != gen_cache_.end()) return it->second;
    }
    Element r = compute_gen_times(g, m);
    std::lock_guard lock(mu_);
    if (cache_limit_ && gen_cache_.size() >= cache_limit_) gen_cache_.clear();
    gen_cache_.emplace(std::make_pair(g, m), r);
    return r;
  }

  Element gen_times(Gen g, const Element& x) const {
    check(x);
    Element r(ring_);
    for (auto& [m, c] : x.terms()) {
      Element p = gen_times(g, m);
      for (auto& [pm, pc] : p.terms()) r.add_term(pm, pc * c);
    }
    return r;
  }

  /// m1 * m2, normalized.
  Element mono_times(const Monomial& m1, const Monomial& m2) const {
    if (m1.is_one()) return monomial(m2);
    {
      std::lock_guard lock(mu_);
      auto it = mono_cache_.find({m1, m2});
      if (it != mono_cache_.end()) return it->second;
    }
    std::vector<Gen> w = m1.word(ring_);
    Element r = monomial(m2);
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = gen_times(*it, r);
    std::lock_guard lock(mu_);
    if (cache_limit_ && mono_cache_.size() >= cache_limit_) mono_cache_.clear();
    mono_cache_.emplace(std::make_pair(m1, m2), r);
    return r;
  }

  Element multiply(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r(ring_);
    for (auto& [m1, c1] : x.terms())
      for (auto& [m2, c2] : y.terms()) {
        Element p = mono_times(m1, m2);
        Scalar c = c1 * c2;
        for (auto& [pm, pc] : p.terms()) r.add_term(pm, pc * c);
      }
    return r;
  }

  Element power(const Element& x, int n) const {
    Element r = one();
    for (int k = 0; k < n; ++k) r = multiply(r, x);
    return r;
  }

  /// Normal form of a word of generators with a scalar coefficient.
  Element normal_form(const std::vector<Gen>& word, const Scalar& coeff = Scalar(1)) const {
    Element r = scalar(coeff);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = gen_times(*it, r);
    return r;
  }

  /// Rebuild from the monomial words; identity on normal forms.
  Element renormalize(const Element& x) const {
    check(x);
    Element r(ring_);
    for (auto& [m, c] : x.terms()) r += normal_form(m.word(ring_), c);
    return r;
  }

  void check(const Element& x) const {
    if (x.ring() != ring_)
      throw RingMismatch(std::string("element of ring ") + ring_name(x.ring()) +
                         " used with engine of ring " + ring_name(ring_));
  }

  /// Clears the memo tables when they exceed `max_entries`.
  void trim_cache(std::size_t max_entries) const {
    std::lock_guard lock(mu_);
    if (gen_cache_.size() > max_entries) gen_cache_.clear();
    if (mono_cache_.size() > max_entries) mono_cache_.clear();
  }
  /// Bound on each memo table; a full table is cleared before inserting. 0 means unbounded.
  void set_cache_limit(std::size_t max_entries) const {
    std::lock_guard lock(mu_);
    cache_limit_ = max_entries;
  }

 private:
  Element compute_gen_times(Gen g, const Monomial& m) const {
    const auto& [i, j, k, l, s] = m.e;
    Element r(ring_);
    if (is_plane(ring_)) {
      if (g == Gen::X) {
        r.add_term(Monomial::plane(i + 1, j), Scalar(1));
      } else if (g == Gen::Y) {
        // y x^m = t^-m x^m y
        if (ring_ == Ring::PlaneNil && j + 1 >= 2) return r;
        r.add_term(Monomial::plane(i, j + 1), Scalar::t_pow(-i));
      } else {
        throw Error("generator not in the quantum plane");
      }
      return r;
    }
    switch (g) {
      case Gen::A:
        if (ring_ == Ring::Asigma && i == 0 && l > 0) {
          // a b^j c^k d^l = t^(j+k) b^j c^k (sigma - t b c) d^(l-1)
          r.add_term({0, j, k, l - 1, s ^ 1}, Scalar::t_pow(j + k));
          Scalar c2 = Scalar::t_pow(j + k + 1) * Scalar((k % 2) ? 1 : -1);
          r.add_term({0, j + 1, k + 1, l - 1, s}, c2);
        } else {
          r.add_term({i + 1, j, k, l, s}, Scalar(1));
        }
        return r;
      case Gen::B:
        r.add_term({i, j + 1, k, l, s}, Scalar::t_pow(-i));
        return r;
      case Gen::C:
        r.add_term({i, j, k + 1, l, s}, Scalar::t_pow(-i) * Scalar((j % 2) ? -1 : 1));
        return r;
      case Gen::D: {
        if (i == 0) {
          int n = j + k;
          r.add_term({0, j, k, l + 1, s}, Scalar::t_pow(-n) * Scalar((n % 2) ? -1 : 1));
          return r;
        }
        Monomial rest{i - 1, j, k, l, s};
        Element bc_rest = gen_times(Gen::B, gen_times(Gen::C, rest));
        if (ring_ == Ring::Asigma) {
          // d a = sigma - t^-1 b c
          r += gen_times(Gen::Sigma, rest);
          r -= bc_rest * Scalar::t_pow(-1);
        } else {
          // d a = a d - (t^-1 - t) b c
          r += gen_times(Gen::A, gen_times(Gen::D, rest));
          r -= bc_rest * (Scalar::t_pow(-1) - Scalar::t());
        }
        return r;
      }
      case Gen::Sigma: {
        if (!has_sigma(ring_)) throw Error("sigma is not a generator of ring B");
        int sign = ((j + k) % 2 && opts_.sigma_odd_sign < 0) ? -1 : 1;
        r.add_term({i, j, k, l, s ^ 1}, Scalar(sign));
        return r;
      }
      default:
        throw Error("plane generator used in a matrix ring");
    }
  }

  Ring ring_;
  RewriteOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Gen, Monomial>, Element> gen_cache_;
  mutable std::map<std::pair<Monomial, Monomial>, Element> mono_cache_;
  mutable std::size_t cache_limit_ = 0;
};

inline Element operator*(const Element& x, const Element& y) {
  x.check_ring(y);
  return Algebra::standard(x.ring()).multiply(x, y);
}

inline Element gen(Ring r, Gen g) { return Algebra::standard(r).gen(g); }

/// zeta = t b c sigma.
inline Element zeta(Ring r = Ring::Asigma) {
  const Algebra& alg = Algebra::standard(r);
  return alg.normal_form({Gen::B, Gen::C, Gen::Sigma}, Scalar::t());
}

inline Element power(const Element& x, int n) { return Algebra::standard(x.ring()).power(x, n); }

// ---------------------------------------------------------------------------
// Bigrading from the torus coactions.

struct BiDegree {
  int m = 0;
  int n = 0;
  bool mixed = false;
  friend bool operator==(const BiDegree& x, const BiDegree& y) {
    return x.mixed == y.mixed && (x.mixed || (x.m == y.m && x.n == y.n));
  }
};

/// a -> (1,1), b -> (1,-1), c -> (-1,1), d -> (-1,-1), sigma -> (0,0).
inline BiDegree bigrade(const Monomial& x) {
  const auto& e = x.e;
  return {e[0] + e[1] - e[2] - e[3], e[0] - e[1] + e[2] - e[3], false};
}

/// Bidegree of an element; "mixed" when its terms disagree. Zero has (0,0).
inline BiDegree bigrade(const Element& x) {
  std::optional<BiDegree> d;
  for (auto& [m, c] : x.terms()) {
    BiDegree dm = bigrade(m);
    if (d && !(*d == dm)) return {0, 0, true};
    d = dm;
  }
  return d.value_or(BiDegree{});
}

/// Rank-one generator e_{mn} of the (m,n) component; requires m = n mod 2.
inline Element e_basis(int m, int n, Ring r = Ring::Asigma) {
  if (((m - n) % 2 + 2) % 2 != 0) throw Error("e_basis: m and n must have equal parity");
  Monomial mono;
  if (m + n >= 0 && m <= n) mono = {(m + n) / 2, 0, (n - m) / 2, 0, 0};
  else if (m + n >= 0) mono = {(m + n) / 2, (m - n) / 2, 0, 0, 0};
  else if (m >= n) mono = {0, (m - n) / 2, 0, (-n - m) / 2, 0};
  else mono = {0, 0, (n - m) / 2, (-n - m) / 2, 0};
  return Element(r, mono);
}

/// Projection onto the (0,0) component.
inline Element project_00(const Element& x) {
  Element r(x.ring());
  for (auto& [m, c] : x.terms()) {
    BiDegree d = bigrade(m);
    if (d.m == 0 && d.n == 0) r.add_term(m, c);
  }
  return r;
}

/// All normal-form monomials of the ring with total degree <= max_degree.
inline std::vector<Monomial> basis_monomials(Ring r, int max_degree) {
  std::vector<Monomial> out;
  int smax = has_sigma(r) ? 1 : 0;
  if (is_plane(r)) {
    for (int deg = 0; deg <= max_degree; ++deg)
      for (int n = 0; n <= deg; ++n) {
        if (r == Ring::PlaneNil && n >= 2) continue;
        out.push_back(Monomial::plane(deg - n, n));
      }
    return out;
  }
  for (int deg = 0; deg <= max_degree; ++deg)
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        for (int k = 0; i + j + k <= deg; ++k) {
          int l = deg - i - j - k;
          if (r == Ring::Asigma && i > 0 && l > 0) continue;
          for (int s = 0; s <= smax; ++s) out.push_back({i, j, k, l, s});
        }
  return out;
}

}  // namespace qsuper
