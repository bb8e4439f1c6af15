#pragma once

#include <cstddef>
#include <string>

#include "skein/element.hpp"
#include "skein/report.hpp"

namespace skein {

enum class Surface { kTorus, kPTorus, kS04 };

template <std::size_t N>
constexpr Surface surface_of() {
  static_assert(N == 0 || N == 1 || N == 4, "no basic surface with this many punctures");
  if constexpr (N == 0) return Surface::kTorus;
  else if constexpr (N == 1) return Surface::kPTorus;
  else return Surface::kS04;
}

// "t10", "t11", "s04".
const char* surface_tag(Surface s);
// Short marker for labels in a flavor: "T" (that, t), "S", "" (monomial), "P" (tables).
std::string flavor_tag(const PolySeq& f);

std::string label_text(const Label<0>& l, const PolySeq& f);
std::string label_text(const Label<1>& l, const PolySeq& f);
std::string label_text(const Label<4>& l, const PolySeq& f);

// Coefficient-and-label rendering, labels in canonical order, e.g.
// "q^-2 (2,0)_T + q^2 (2,2)_T".
template <std::size_t N>
std::string to_text(const Element<N>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [l, c] : x.terms()) {
    const std::string label = label_text(l, *x.flavor());
    std::string cs = c.ToString();
    std::string term;
    if (l.is_empty()) {
      term = c.is_monomial() || out.empty() ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      term = label;
    } else if (cs == "-1") {
      term = "-" + label;
    } else if (c.is_monomial()) {
      term = cs + " " + label;
    } else {
      term = "(" + cs + ") " + label;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string to_text(const PositivityReport& r);

}  // namespace skein
