#pragma once

#include <random>
#include <string>

#include "skein/element.hpp"
#include "skein/laurent.hpp"

namespace skein::testing {

inline LaurentPoly L(const std::string& text) { return LaurentPoly::Parse(text); }

inline LaurentPoly RandomLaurent(std::mt19937& rng, int terms = 4, int span = 5, int coeff = 6) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(c(rng), e(rng));
  return p;
}

inline LaurentPoly RandomPositive(std::mt19937& rng, int terms = 4, int span = 5) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(0, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(c(rng), e(rng));
  return p;
}

inline CurveClass RandomSlope(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    const int r = d(rng);
    const int s = d(rng);
    if (r != 0 || s != 0) return {r, s};
  }
}

}  // namespace skein::testing
