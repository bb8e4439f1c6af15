#include "skein/curves.hpp"

#include <cctype>
#include <numeric>

#include "skein/error.hpp"

namespace skein {

CurveClass::CurveClass(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
  if (r == 0 && s == 0) throw Error(ErrorKind::kInvalidArgument, "(0,0) is not a curve class");
  if (s_ < 0 || (s_ == 0 && r_ < 0)) {
    r_ = -r_;
    s_ = -s_;
  }
}

std::int64_t CurveClass::multiplicity() const { return std::gcd(r_, s_); }

CurveClass CurveClass::primitive() const {
  const std::int64_t d = multiplicity();
  return {r_ / d, s_ / d};
}

CurveClass CurveClass::scaled_primitive(std::int64_t k) const {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "multiplicity must be >= 1");
  const CurveClass p = primitive();
  return {p.r_ * k, p.s_ * k};
}

std::string CurveClass::ToString() const {
  return "(" + std::to_string(r_) + "," + std::to_string(s_) + ")";
}

CurveClass CurveClass::Parse(std::string_view text) {
  const std::string input(text);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= input.size() || input[pos] != ch)
      throw ParseError(input, pos, std::string("expected '") + ch + "'");
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    std::size_t start = pos;
    if (pos < input.size() && (input[pos] == '-' || input[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
    if (pos == digits) throw ParseError(input, digits, "expected an integer");
    try {
      return std::stoll(input.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError(input, start, "integer out of range");
    }
  };
  expect('(');
  const std::int64_t r = integer();
  expect(',');
  const std::int64_t s = integer();
  expect(')');
  skip();
  if (pos != input.size()) throw ParseError(input, pos, "trailing characters after slope");
  if (r == 0 && s == 0) throw ParseError(input, 0, "(0,0) is not a curve class");
  return {r, s};
}

std::int64_t det(const CurveClass& a, const CurveClass& b) { return a.r() * b.s() - a.s() * b.r(); }

GcdDecomposition gcd_decompose(const CurveClass& c) { return {c.multiplicity(), c.primitive()}; }

std::int64_t intersection_number(const CurveClass& a, const CurveClass& b) {
  if (!a.is_primitive() || !b.is_primitive())
    throw Error(ErrorKind::kInvalidArgument,
                "intersection_number needs primitive slopes, got " + a.ToString() + " and " + b.ToString());
  const std::int64_t v = det(a, b);
  return v < 0 ? -v : v;
}

MappingClass::MappingClass(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw Error(ErrorKind::kInvalidArgument, "mapping class must have determinant 1");
}

MappingClass operator*(const MappingClass& x, const MappingClass& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

CurveClass MappingClass::apply(const CurveClass& c) const {
  return {a_ * c.r() + b_ * c.s(), c_ * c.r() + d_ * c.s()};
}

}  // namespace skein
