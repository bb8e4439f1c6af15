#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace skein {

// Unoriented slope (r, s) != (0, 0), identified with (-r, -s). Stored in the
// canonical representative: s > 0, or s == 0 and r > 0. Non-primitive slopes
// are allowed; gcd(r, s) is the multiplicity of the primitive curve.
class CurveClass {
 public:
  CurveClass(std::int64_t r, std::int64_t s);

  std::int64_t r() const { return r_; }
  std::int64_t s() const { return s_; }
  std::int64_t multiplicity() const;
  bool is_primitive() const { return multiplicity() == 1; }
  CurveClass primitive() const;

  // Multiplicity times this slope's primitive. k must be >= 1.
  CurveClass scaled_primitive(std::int64_t k) const;

  std::string ToString() const;
  // "(r,s)", whitespace tolerated.
  static CurveClass Parse(std::string_view text);

  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  std::int64_t r_;
  std::int64_t s_;
};

// r_a s_b - s_a r_b, computed on the canonical representatives.
std::int64_t det(const CurveClass& a, const CurveClass& b);

struct GcdDecomposition {
  std::int64_t d;
  CurveClass primitive;
};
GcdDecomposition gcd_decompose(const CurveClass& c);

// Geometric intersection of primitive torus slopes, |r v - s u|.
std::int64_t intersection_number(const CurveClass& a, const CurveClass& b);

// Element of SL2(Z) acting linearly on slopes.
class MappingClass {
 public:
  MappingClass(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static MappingClass Identity() { return {1, 0, 0, 1}; }
  // Half twist / Dehn twist along (1,0): [[1,1],[0,1]].
  static MappingClass Sigma() { return {1, 1, 0, 1}; }
  static MappingClass Rotation() { return {0, -1, 1, 0}; }
  // Sigma^k for any integer k.
  static MappingClass SigmaPower(std::int64_t k) { return {1, k, 0, 1}; }

  MappingClass inverse() const { return {d_, -b_, -c_, a_}; }
  friend MappingClass operator*(const MappingClass& x, const MappingClass& y);
  CurveClass apply(const CurveClass& c) const;

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

 private:
  std::int64_t a_, b_, c_, d_;
};

inline CurveClass mcg_apply(const MappingClass& m, const CurveClass& c) { return m.apply(c); }

}  // namespace skein
