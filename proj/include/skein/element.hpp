#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/laurent.hpp"
#include "skein/polyseq.hpp"

namespace skein {

// Basis label of a simple multicurve on one of the basic surfaces: an
// optional slope (multiplicity = gcd, i.e. that many parallel copies of the
// primitive curve) and the exponents of the N central peripheral curves.
// In flavor P the label stands for P_d(primitive) * prod_i P_{periph[i]}(gamma_i).
template <std::size_t N>
struct Label {
  std::optional<CurveClass> slope;
  std::array<int, N> periph{};

  static Label Empty() { return {}; }
  static Label Curve(const CurveClass& c) { return {c, {}}; }
  static Label Peripheral(std::array<int, N> exps) { return {std::nullopt, exps}; }

  bool is_empty() const {
    if (slope) return false;
    for (int e : periph)
      if (e != 0) return false;
    return true;
  }
  int slope_degree() const { return slope ? static_cast<int>(slope->multiplicity()) : 0; }

  friend auto operator<=>(const Label&, const Label&) = default;
};

// Finite R-linear combination of labels in one declared basis flavor.
template <std::size_t N>
class Element {
 public:
  using LabelType = Label<N>;
  using Terms = std::map<LabelType, LaurentPoly>;

  explicit Element(SeqPtr flavor) : flavor_(std::move(flavor)) {}

  static Element Of(const LabelType& label, const LaurentPoly& coeff, SeqPtr flavor) {
    Element e(std::move(flavor));
    e.add(label, coeff);
    return e;
  }
  static Element Unit(SeqPtr flavor) { return Of(LabelType::Empty(), 1, std::move(flavor)); }

  const SeqPtr& flavor() const { return flavor_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coeff(const LabelType& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add(const LabelType& label, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& other) {
    CheckFlavor(other);
    for (const auto& [l, c] : other.terms_) add(l, c);
    return *this;
  }
  Element& operator-=(const Element& other) {
    CheckFlavor(other);
    for (const auto& [l, c] : other.terms_) add(l, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const LaurentPoly& c, const Element& x) {
    Element out(x.flavor_);
    if (c.is_zero()) return out;
    for (const auto& [l, v] : x.terms_) out.terms_.emplace_hint(out.terms_.end(), l, c * v);
    return out;
  }
  Element operator-() const { return LaurentPoly(-1) * *this; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.flavor_->id() == b.flavor_->id() && a.terms_ == b.terms_;
  }

  bool same_flavor(const Element& other) const { return flavor_->id() == other.flavor_->id(); }

 private:
  void CheckFlavor(const Element& other) const {
    if (!same_flavor(other))
      throw Error(ErrorKind::kFlavorMismatch,
                  "cannot combine elements in flavors " + flavor_->name() + " and " + other.flavor_->name());
  }

  SeqPtr flavor_;
  Terms terms_;
};

namespace detail {

// Tensor-expands each factor P_d of a label through `coeffs_for(d)`.
template <std::size_t N, class CoeffsFor>
std::vector<std::pair<Label<N>, LaurentPoly>> ExpandLabel(const Label<N>& label, CoeffsFor&& coeffs_for) {
  std::vector<std::pair<Label<N>, LaurentPoly>> acc{{Label<N>{}, LaurentPoly(1)}};
  if (label.slope) {
    const auto& v = coeffs_for(label.slope_degree());
    std::vector<std::pair<Label<N>, LaurentPoly>> next;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& [l, c] : acc) {
        Label<N> nl = l;
        if (k > 0) nl.slope = label.slope->scaled_primitive(static_cast<std::int64_t>(k));
        next.emplace_back(nl, c * v[k]);
      }
    }
    acc = std::move(next);
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (label.periph[i] == 0) continue;
    const auto& v = coeffs_for(label.periph[i]);
    std::vector<std::pair<Label<N>, LaurentPoly>> next;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& [l, c] : acc) {
        Label<N> nl = l;
        nl.periph[i] = static_cast<int>(k);
        next.emplace_back(nl, c * v[k]);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

// Exact change of basis flavor, factor by factor.
template <std::size_t N>
Element<N> convert(const Element<N>& x, const SeqPtr& target) {
  if (x.flavor()->id() == target->id()) return x;
  const PolySeq& from = *x.flavor();
  Element<N> out(target);
  for (const auto& [label, c] : x.terms()) {
    auto expanded = detail::ExpandLabel(label, [&](int d) -> const std::vector<LaurentPoly>& {
      return target->expansion_of(from, d);
    });
    for (const auto& [l, v] : expanded) out.add(l, c * v);
  }
  return out;
}

// Product of two labels that commute: same primitive slope or at least one
// without a slope. Computed in R[x] for each curve, in flavor `f`.
template <std::size_t N>
Element<N> commuting_product(const Label<N>& a, const Label<N>& b, const SeqPtr& f) {
  if (a.slope && b.slope && a.slope->primitive() != b.slope->primitive())
    throw Error(ErrorKind::kInvalidArgument, "commuting_product: slopes " + a.slope->ToString() + " and " +
                                                 b.slope->ToString() + " differ");
  Element<N> out(f);
  const std::optional<CurveClass> slope = a.slope ? a.slope : b.slope;
  std::vector<std::pair<Label<N>, LaurentPoly>> acc{{Label<N>{}, LaurentPoly(1)}};
  auto fold = [&](int da, int db, auto&& assign) {
    const auto& v = f->product(da, db);
    std::vector<std::pair<Label<N>, LaurentPoly>> next;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& [l, c] : acc) {
        Label<N> nl = l;
        assign(nl, static_cast<int>(k));
        next.emplace_back(nl, c * v[k]);
      }
    }
    acc = std::move(next);
  };
  if (slope) {
    fold(a.slope_degree(), b.slope_degree(), [&](Label<N>& l, int k) {
      if (k > 0) l.slope = slope->scaled_primitive(k);
    });
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (a.periph[i] == 0 && b.periph[i] == 0) continue;
    fold(a.periph[i], b.periph[i], [&](Label<N>& l, int k) { l.periph[i] = k; });
  }
  for (const auto& [l, c] : acc) out.add(l, c);
  return out;
}

// Multiplies every term of x by the central peripheral monomial `periph`.
template <std::size_t N>
Element<N> times_peripheral(const Element<N>& x, const std::array<int, N>& periph) {
  bool trivial = true;
  for (int e : periph) trivial = trivial && e == 0;
  if (trivial) return x;
  Element<N> out(x.flavor());
  const Label<N> p = Label<N>::Peripheral(periph);
  for (const auto& [l, c] : x.terms()) {
    Label<N> bare = l;
    bare.slope.reset();
    Element<N> prod = commuting_product(bare, p, x.flavor());
    for (const auto& [pl, pc] : prod.terms()) {
      Label<N> nl = pl;
      nl.slope = l.slope;
      out.add(nl, c * pc);
    }
  }
  return out;
}

// Bilinear extension of a slope product rule. `rule(a, b)` is called only
// for two slopes with different primitives and returns an element in the
// flavor of x; everything else is handled through commuting_product, with
// the central peripheral factors carried along.
template <std::size_t N, class Rule>
Element<N> multiply_with(const Element<N>& x, const Element<N>& y, Rule&& rule) {
  if (!x.same_flavor(y))
    throw Error(ErrorKind::kFlavorMismatch,
                "cannot multiply elements in flavors " + x.flavor()->name() + " and " + y.flavor()->name());
  Element<N> out(x.flavor());
  for (const auto& [la, ca] : x.terms()) {
    for (const auto& [lb, cb] : y.terms()) {
      const LaurentPoly coeff = ca * cb;
      if (!la.slope || !lb.slope || la.slope->primitive() == lb.slope->primitive()) {
        out += coeff * commuting_product(la, lb, x.flavor());
        continue;
      }
      Element<N> slope_part = rule(*la.slope, *lb.slope);
      slope_part = times_peripheral(slope_part, la.periph);
      slope_part = times_peripheral(slope_part, lb.periph);
      out += coeff * slope_part;
    }
  }
  return out;
}

// p(curve) in flavor f: expand p in f and place degree k on k * curve.
template <std::size_t N>
Element<N> on_curve(const Poly1& p, const CurveClass& curve, const SeqPtr& f) {
  Element<N> out(f);
  const auto coeffs = expand_in(p, *f);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Label<N> l;
    if (k > 0) l.slope = curve.scaled_primitive(static_cast<std::int64_t>(k));
    out.add(l, coeffs[k]);
  }
  return out;
}

// Applies a mapping class to every slope, permuting peripheral exponents by
// `perm` (new position i takes old position perm[i]).
template <std::size_t N>
Element<N> transport(const Element<N>& x, const MappingClass& m, const std::array<std::size_t, N>& perm) {
  Element<N> out(x.flavor());
  for (const auto& [l, c] : x.terms()) {
    Label<N> nl;
    if (l.slope) nl.slope = m.apply(*l.slope);
    for (std::size_t i = 0; i < N; ++i) nl.periph[i] = l.periph[perm[i]];
    out.add(nl, c);
  }
  return out;
}

// Groups by power of q: result[e] has integer coefficients and
// x = sum_e q^e result[e].
template <std::size_t N>
std::map<LaurentPoly::Exponent, Element<N>> split_by_q_exponent(const Element<N>& x) {
  std::map<LaurentPoly::Exponent, Element<N>> out;
  for (const auto& [l, c] : x.terms())
    for (const auto& [e, v] : c.terms()) out.try_emplace(e, x.flavor()).first->second.add(l, LaurentPoly(v));
  return out;
}

// Coefficients mapped through q -> 1.
template <std::size_t N>
Element<N> specialize_q1(const Element<N>& x) {
  Element<N> out(x.flavor());
  for (const auto& [l, c] : x.terms()) out.add(l, LaurentPoly(c.at_q1()));
  return out;
}

}  // namespace skein
