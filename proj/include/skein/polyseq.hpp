#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// One-variable polynomial in x with coefficients in Z[q, q^-1].
// coeffs()[k] is the coefficient of x^k; the leading entry is never zero.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<LaurentPoly> coeffs);
  Poly1(const LaurentPoly& constant);  // NOLINT(google-explicit-constructor)

  static Poly1 X(int power = 1);

  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& coeff(int k) const;
  bool is_monic() const;
  // True when every coefficient is a plain integer (no q).
  bool is_integral() const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& other);
  Poly1& operator-=(const Poly1& other);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const LaurentPoly& c, const Poly1& p);
  friend bool operator==(const Poly1&, const Poly1&) = default;

  // Composition p(inner).
  Poly1 compose(const Poly1& inner) const;

  std::string ToString() const;

 private:
  void Trim();
  std::vector<LaurentPoly> coeffs_;
};

inline Poly1 poly_mul(const Poly1& a, const Poly1& b) { return a * b; }

// p(t + t^-1) as a Laurent polynomial in t; p must be q-free.
LaurentPoly substitute_t(const Poly1& p);

enum class ChebyshevKind { kT, kTHat, kS };
Poly1 chebyshev(ChebyshevKind kind, int n);

class PolySeq;
using SeqPtr = std::shared_ptr<const PolySeq>;

// A sequence (P_n) of one-variable polynomials, evaluated lazily and
// memoized. Builtins are infinite; table sequences end at their last row.
//
// Besides the polynomials themselves the sequence memoizes the two tables
// every basis change needs: the expansion of another sequence's members in
// this basis, and the structure constants of the one-variable algebra R[x]
// in this basis.
class PolySeq {
 public:
  enum class Kind { kMonomial, kTHat, kS, kT, kTable };

  static SeqPtr Monomial();
  static SeqPtr THat();
  static SeqPtr S();
  static SeqPtr T();
  static SeqPtr Table(std::string name, std::vector<Poly1> rows);
  // Builtin name ("monomial", "that", "s", "t") or "file:PATH".
  static SeqPtr Named(const std::string& spec);
  static SeqPtr LoadFile(const std::filesystem::path& path);
  static SeqPtr ParseTable(std::string name, const std::string& text);

  Kind kind() const { return kind_; }
  // Identifier used in the CLI and JSON ("that", "s", "file:PATH", ...).
  const std::string& name() const { return name_; }
  // Human-readable name used in report headers ("That", "S", ...).
  std::string display_name() const;
  std::uint64_t id() const { return id_; }
  // Index of the last available member, or nullopt when unbounded.
  std::optional<int> last_index() const;
  bool normalized() const { return kind_ != Kind::kT; }
  bool has_integer_coefficients() const;

  // P_n. Throws kOutOfRange past the end of a table.
  const Poly1& at(int n) const;

  // Coefficients of from.at(d) in this basis.
  const std::vector<LaurentPoly>& expansion_of(const PolySeq& from, int d) const;
  // Coefficients of P_i * P_j in this basis.
  const std::vector<LaurentPoly>& product(int i, int j) const;

 private:
  PolySeq(Kind kind, std::string name, std::vector<Poly1> rows = {});

  Kind kind_;
  std::string name_;
  std::uint64_t id_;

  mutable std::mutex mu_;
  mutable std::deque<Poly1> members_;
  mutable std::map<std::pair<std::uint64_t, int>, std::vector<LaurentPoly>> expansions_;
  mutable std::map<std::pair<int, int>, std::vector<LaurentPoly>> products_;
};

// Coefficients (c_0..c_d) with p = sum c_k basis_k, by descending elimination.
std::vector<LaurentPoly> expand_in(const Poly1& p, const PolySeq& basis);

struct OrderWitness {
  int n;
  int k;
  LaurentPoly coeff;
};

struct OrderResult {
  bool holds;
  int n_max;
  std::optional<OrderWitness> witness;
};

// (P) <= (Q) up to n_max: every Q_n is an R_+-combination of P_0..P_n.
// The first violation in (n, k) order is returned as the witness.
OrderResult seq_leq(const PolySeq& p, const PolySeq& q, int n_max, bool at_q1 = false);

}  // namespace skein
