#include "skein/laurent.hpp"

#include <cctype>

#include "skein/error.hpp"

namespace skein {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::Monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Integer LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<std::pair<LaurentPoly::Exponent, LaurentPoly::Exponent>>
LaurentPoly::degree_range() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.begin()->first, terms_.rbegin()->first);
}

bool LaurentPoly::is_positive() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Integer LaurentPoly::at_q1() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::shifted(Exponent e) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
  return out;
}

LaurentPoly LaurentPoly::part(Exponent e) const {
  return Monomial(coeff(e), e);
}

void LaurentPoly::add_term(const Integer& c, Exponent e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_monomial()) {
    const auto& [eb, cb] = *b.terms_.begin();
    for (const auto& [ea, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ea + eb, ca * cb);
    return out;
  }
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(prod, ea + eb);
    }
  }
  return out;
}

std::string LaurentPoly::ToString(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, char var) : text_(text), var_(var) {}

  LaurentPoly Run() {
    LaurentPoly p = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& msg) const {
    throw ParseError(std::string(text_), pos_, msg);
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Accept(char ch) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool AtDigit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer Digits() {
    std::size_t start = pos_;
    while (AtDigit()) ++pos_;
    if (start == pos_) Fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly Expr() {
    SkipSpace();
    bool negate = false;
    if (Accept('-')) negate = true;
    else Accept('+');
    LaurentPoly acc = Term();
    if (negate) acc = -acc;
    for (;;) {
      if (Accept('+')) acc += Term();
      else if (Accept('-')) acc -= Term();
      else break;
    }
    return acc;
  }

  LaurentPoly Term() {
    SkipSpace();
    if (Accept('(')) {
      LaurentPoly inner = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return inner;
    }
    Integer c = 1;
    bool have_coeff = false;
    if (AtDigit()) {
      c = Digits();
      have_coeff = true;
      Accept('*');
      SkipSpace();
    }
    if (pos_ < text_.size() && text_[pos_] == var_) {
      ++pos_;
      LaurentPoly::Exponent e = 1;
      if (Accept('^')) {
        SkipSpace();
        bool neg = false;
        if (Accept('-')) neg = true;
        else Accept('+');
        SkipSpace();
        std::size_t at = pos_;
        Integer mag = Digits();
        if (!mag.fits_slong_p()) {
          pos_ = at;
          Fail("exponent out of range");
        }
        e = mag.get_si();
        if (neg) e = -e;
      }
      return LaurentPoly::Monomial(c, e);
    }
    if (!have_coeff) Fail(std::string("expected a coefficient, '") + var_ + "' or '('");
    return LaurentPoly(c);
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::Parse(std::string_view text, char var) {
  return LaurentParser(text, var).Run();
}

LaurentPoly quantum_int(int i) {
  if (i < 1) throw Error(ErrorKind::kInvalidArgument, "quantum_int: i must be >= 1, got " + std::to_string(i));
  LaurentPoly out;
  for (int e = 2 * i - 2; e >= 2 - 2 * i; e -= 4) out.add_term(1, e);
  return out;
}

}  // namespace skein
