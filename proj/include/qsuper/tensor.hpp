#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsuper/format.hpp"
#include "qsuper/superalg.hpp"

namespace qsuper {

/// Finite linear combination of n-fold tensors of normal-form monomials.
/// Each leg carries its own multiplication engine (matrix ring or plane).
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Terms = std::map<Key, Scalar>;

  Tensor() = default;
  explicit Tensor(std::vector<const Algebra*> legs) : legs_(std::move(legs)) {}

  static Tensor pure(std::vector<const Algebra*> legs, Key key, Scalar c = Scalar(1)) {
    Tensor t(std::move(legs));
    t.add_term(key, c);
    return t;
  }
  /// x (x) y for Elements.
  static Tensor product(const Algebra& l, const Element& x, const Algebra& r, const Element& y) {
    Tensor t({&l, &r});
    for (auto& [mx, cx] : x.terms())
      for (auto& [my, cy] : y.terms()) t.add_term({mx, my}, cx * cy);
    return t;
  }

  std::size_t arity() const { return legs_.size(); }
  const std::vector<const Algebra*>& legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    if (legs_.empty()) legs_ = o.legs_;
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    if (legs_.empty()) legs_ = o.legs_;
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// Graded product: (x1 (x) .. (x) xn)(y1 (x) .. (x) yn) =
  /// (-1)^{sum_{i>j} p(x_i) p(y_j)} x1 y1 (x) .. (x) xn yn.
  friend Tensor operator*(const Tensor& x, const Tensor& y) {
    Tensor r(x.legs_.empty() ? y.legs_ : x.legs_);
    std::size_t n = r.legs_.size();
    for (auto& [kx, cx] : x.terms_)
      for (auto& [ky, cy] : y.terms_) {
        int sign_exp = 0, odd_x_after = 0;
        // sum over i > j of p(x_i) p(y_j): scan j from the right.
        for (std::size_t j = n; j-- > 0;) {
          sign_exp += odd_x_after * ky[j].parity();
          odd_x_after += kx[j].parity();
        }
        Scalar c = cx * cy;
        if (sign_exp & 1) c = -c;
        // Expand the product leg by leg.
        std::vector<std::pair<Key, Scalar>> partial{{Key{}, c}};
        for (std::size_t leg = 0; leg < n; ++leg) {
          Element p = r.legs_[leg]->mono_times(kx[leg], ky[leg]);
          std::vector<std::pair<Key, Scalar>> next;
          next.reserve(partial.size() * p.size());
          for (auto& [key, pc] : partial)
            for (auto& [m, mc] : p.terms()) {
              Key k2 = key;
              k2.push_back(m);
              next.emplace_back(std::move(k2), pc * mc);
            }
          partial = std::move(next);
        }
        for (auto& [k, pc] : partial) r.add_term(k, pc);
      }
    return r;
  }

  /// Replace leg `leg` by the tensor f(monomial); f must be an even map.
  Tensor apply_leg(std::size_t leg, const std::function<Tensor(const Monomial&)>& f) const {
    Tensor r;
    bool legs_set = false;
    for (auto& [k, c] : terms_) {
      Tensor img = f(k[leg]);
      if (!legs_set) {
        r.legs_.assign(legs_.begin(), legs_.begin() + leg);
        r.legs_.insert(r.legs_.end(), img.legs_.begin(), img.legs_.end());
        r.legs_.insert(r.legs_.end(), legs_.begin() + leg + 1, legs_.end());
        legs_set = !img.legs_.empty();
      }
      for (auto& [ik, ic] : img.terms_) {
        Key nk(k.begin(), k.begin() + leg);
        nk.insert(nk.end(), ik.begin(), ik.end());
        nk.insert(nk.end(), k.begin() + leg + 1, k.end());
        r.add_term(nk, c * ic);
      }
    }
    return r;
  }

  /// Apply a scalar-valued map to leg `leg`, removing it.
  Tensor contract_leg(std::size_t leg, const std::function<Scalar(const Monomial&)>& f) const {
    Tensor r;
    r.legs_ = legs_;
    r.legs_.erase(r.legs_.begin() + leg);
    for (auto& [k, c] : terms_) {
      Scalar v = f(k[leg]);
      if (v.is_zero()) continue;
      Key nk = k;
      nk.erase(nk.begin() + leg);
      r.add_term(nk, c * v);
    }
    return r;
  }

  /// Multiply the legs together (all legs must share one engine).
  Element multiply_out() const {
    const Algebra& alg = *legs_.front();
    Element r(alg.ring());
    for (auto& [k, c] : terms_) {
      Element p = alg.monomial(k.front());
      for (std::size_t j = 1; j < k.size(); ++j) p = alg.multiply(p, alg.monomial(k[j]));
      r += p * c;
    }
    return r;
  }

  /// One-leg tensor as an Element.
  Element to_element() const {
    Element r(legs_.front()->ring());
    for (auto& [k, c] : terms_) r.add_term(k.front(), c);
    return r;
  }

  /// Coefficient of monomial `m` in leg `leg`, as a tensor over the remaining legs.
  Tensor slice(std::size_t leg, const Monomial& m) const {
    Tensor r;
    r.legs_ = legs_;
    r.legs_.erase(r.legs_.begin() + leg);
    for (auto& [k, c] : terms_) {
      if (k[leg] != m) continue;
      Key nk = k;
      nk.erase(nk.begin() + leg);
      r.add_term(nk, c);
    }
    return r;
  }

 private:
  std::vector<const Algebra*> legs_;
  Terms terms_;
};

inline std::string to_string(const Tensor& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : x.terms()) {
    auto [neg, pre] = coefficient_prefix(c);
    std::string body = pre;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (j) body += " (x) ";
      std::string ms = monomial_string(k[j], x.legs()[j]->ring());
      body += ms.empty() ? "1" : ms;
    }
    if (!pre.empty() && k.size() > 1) body = pre + "[" + body.substr(pre.size()) + "]";
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

}  // namespace qsuper
