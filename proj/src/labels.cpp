#include "skein/labels.hpp"

#include <cctype>
#include <string>

#include "skein/render.hpp"

namespace skein {

namespace {

class LabelParser {
 public:
  LabelParser(std::string_view text, const PolySeq& flavor) : text_(text), tag_(flavor_tag(flavor)) {}

  template <std::size_t N>
  Label<N> Run(bool allow_suffix_tag) {
    Label<N> out;
    SkipSpace();
    if (AcceptWord("1")) {
      End();
      return out;
    }
    do {
      SkipSpace();
      const std::size_t start = pos_;
      if (Peek() == '(' || (std::isupper(static_cast<unsigned char>(Peek())) && Peek() != 'U')) {
        if (out.slope) Fail(start, "a label has at most one slope");
        out.slope = Slope(allow_suffix_tag);
      } else if (N == 1 && Peek() == 'U') {
        ++pos_;
        out.periph[0] += Exponent();
      } else if (N == 4 && Peek() == 'g') {
        ++pos_;
        const char d = Peek();
        if (d < '1' || d > '4') Fail(pos_, "expected puncture index 1..4");
        ++pos_;
        out.periph[static_cast<std::size_t>(d - '1')] += Exponent();
      } else {
        Fail(start, N == 0 ? "expected a slope (r,s) or 1"
                    : N == 1 ? "expected a slope (r,s), U or 1"
                             : "expected a slope (r,s), g1..g4 or 1");
      }
      SkipSpace();
    } while (Accept('*'));
    End();
    return out;
  }

 private:
  [[noreturn]] void Fail(std::size_t at, const std::string& msg) const {
    throw ParseError(std::string(text_), at, msg);
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Accept(char ch) {
    SkipSpace();
    if (Peek() != ch) return false;
    ++pos_;
    return true;
  }

  void Expect(char ch) {
    if (!Accept(ch)) Fail(pos_, std::string("expected '") + ch + "'");
  }

  bool AcceptWord(std::string_view w) {
    if (text_.substr(pos_).substr(0, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
    if (after != text_.size()) return false;
    pos_ = after;
    return true;
  }

  void End() {
    SkipSpace();
    if (pos_ != text_.size()) Fail(pos_, "unexpected character");
  }

  std::int64_t Integer() {
    SkipSpace();
    const std::size_t start = pos_;
    if (Peek() == '-' || Peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    if (digits == pos_) Fail(digits, "expected an integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      Fail(start, "integer out of range");
    }
  }

  int Exponent() {
    if (!Accept('^')) return 1;
    const std::size_t at = pos_;
    const std::int64_t k = Integer();
    if (k < 0 || k > 1000000) Fail(at, "exponent must be a nonnegative integer");
    return static_cast<int>(k);
  }

  void CheckTag(const std::string& tag, std::size_t at) const {
    if (tag != tag_)
      Fail(at, "flavor '" + tag + "' does not match the basis (expected " +
                   (tag_.empty() ? std::string("no flavor letter") : "'" + tag_ + "'") + ")");
  }

  CurveClass Slope(bool allow_suffix_tag) {
    const std::size_t start = pos_;
    if (Peek() != '(') {
      const std::string tag(1, Peek());
      ++pos_;
      CheckTag(tag, start);
    }
    Expect('(');
    const std::int64_t r = Integer();
    Expect(',');
    const std::int64_t s = Integer();
    Expect(')');
    if (r == 0 && s == 0) Fail(start, "(0,0) is not a curve class");
    if (allow_suffix_tag && Peek() == '_') {
      const std::size_t at = pos_++;
      std::string tag;
      while (std::isupper(static_cast<unsigned char>(Peek()))) tag += text_[pos_++];
      CheckTag(tag, at);
    }
    return {r, s};
  }

  std::string_view text_;
  std::string tag_;
  std::size_t pos_ = 0;
};

}  // namespace

Label<0> parse_torus_label(std::string_view text, const PolySeq& flavor) {
  return LabelParser(text, flavor).Run<0>(true);
}

Label<1> parse_ptorus_label(std::string_view text, const PolySeq& flavor) {
  return LabelParser(text, flavor).Run<1>(false);
}

Label<4> parse_s04_label(std::string_view text, const PolySeq& flavor) {
  return LabelParser(text, flavor).Run<4>(false);
}

}  // namespace skein
