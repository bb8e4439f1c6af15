#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace skein {

using Integer = mpz_class;

// Exact element of Z[q, q^-1]. Terms are kept canonical: no zero
// coefficients are ever stored, so structural equality is value equality.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  // c * q^e
  static LaurentPoly Monomial(const Integer& c, Exponent e);
  // q^e
  static LaurentPoly Q(Exponent e = 1) { return Monomial(1, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(Exponent e) const;

  // Empty for the zero polynomial.
  std::optional<std::pair<Exponent, Exponent>> degree_range() const;
  bool is_positive() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Integer at_q1() const;

  // Multiplication by q^e.
  LaurentPoly shifted(Exponent e) const;
  // The q^e part only, as a polynomial.
  LaurentPoly part(Exponent e) const;

  void add_term(const Integer& c, Exponent e);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Exponents ascending, e.g. "-q^-2 + 3 + 2q". The output re-parses with
  // Parse().
  std::string ToString(std::string_view var = "q") const;
  // Accepts sums of terms like "3q^-2+1", "-q", "2*q^3", "(q^2 + q^-2)".
  static LaurentPoly Parse(std::string_view text, char var = 'q');

 private:
  Terms terms_;
};

// Free-function spellings of the ring operations.
inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline bool is_positive(const LaurentPoly& a) { return a.is_positive(); }
inline auto q_degree_range(const LaurentPoly& a) { return a.degree_range(); }
inline Integer specialize_q1(const LaurentPoly& a) { return a.at_q1(); }

// [i] = q^{2i-2} + q^{2i-6} + ... + q^{2-2i}; throws for i < 1.
LaurentPoly quantum_int(int i);

}  // namespace skein
