#pragma once

#include <map>

#include "qmod/cyclotomic.hpp"
#include "qmod/lie.hpp"
#include "qmod/qratfn.hpp"
#include "qmod/weyl.hpp"

namespace qmod {

inline QRatFn conjugate(const QRatFn& x) { return x.bar(); }
inline CycNum conjugate(const CycNum& x) { return x.conj(); }

/// Finitely supported element Σ c_μ e^μ of the group ring of P.
template <class C>
struct WPoly {
  std::map<Weight, C> terms;

  WPoly() = default;
  static WPoly monomial(const Weight& w, C c = C(1)) {
    WPoly p;
    if (!c.is_zero()) p.terms.emplace(w, std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  C coefficient(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? C() : it->second;
  }
  void add_term(const Weight& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  WPoly& operator+=(const WPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  WPoly& operator-=(const WPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const C& s, const WPoly& p) {
    WPoly out;
    if (s.is_zero()) return out;
    for (const auto& [w, c] : p.terms) out.terms.emplace(w, s * c);
    return out;
  }
  friend WPoly operator*(const WPoly& a, const WPoly& b) {
    WPoly out;
    for (const auto& [x, c] : a.terms)
      for (const auto& [y, d] : b.terms) out.add_term(x + y, c * d);
    return out;
  }
  friend bool operator==(const WPoly& a, const WPoly& b) { return a.terms == b.terms; }
};

/// Σ conj(c_μ) e^{μ*}, μ* = -w₀(μ).
template <class C>
WPoly<C> bar(const RootSystemData& rs, const WPoly<C>& p) {
  WPoly<C> out;
  for (const auto& [w, c] : p.terms) out.terms.emplace(star(rs, w), conjugate(c));
  return out;
}

template <class C>
bool is_symmetric(const RootSystemData& rs, const WPoly<C>& p) {
  for (int i = 0; i < rs.rank; ++i)
    for (const auto& [w, c] : p.terms) {
      auto it = p.terms.find(simple_reflection(rs, i, w));
      if (it == p.terms.end() || it->second != c) return false;
    }
  return true;
}

/// Monomial symmetric sum over the W-orbit of a dominant weight.
template <class C>
WPoly<C> orbit_sum(const RootSystemData& rs, const Weight& lambda) {
  WPoly<C> out;
  for (const auto& w : weyl_group(rs)) out.terms[w.apply(lambda)] = C(1);
  return out;
}

}  // namespace qmod
