#include "skein/render.hpp"

namespace skein {

const char* surface_tag(Surface s) {
  switch (s) {
    case Surface::kTorus: return "t10";
    case Surface::kPTorus: return "t11";
    case Surface::kS04: return "s04";
  }
  return "?";
}

std::string flavor_tag(const PolySeq& f) {
  switch (f.kind()) {
    case PolySeq::Kind::kTHat:
    case PolySeq::Kind::kT: return "T";
    case PolySeq::Kind::kS: return "S";
    case PolySeq::Kind::kMonomial: return "";
    case PolySeq::Kind::kTable: return "P";
  }
  return "";
}

namespace {

std::string Power(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string SlopePart(const std::optional<CurveClass>& slope, const PolySeq& f) {
  if (!slope) return "";
  return flavor_tag(f) + slope->ToString();
}

}  // namespace

std::string label_text(const Label<0>& l, const PolySeq& f) {
  if (!l.slope) return "1";
  const std::string tag = flavor_tag(f);
  return l.slope->ToString() + (tag.empty() ? "" : "_" + tag);
}

std::string label_text(const Label<1>& l, const PolySeq& f) {
  std::string out = SlopePart(l.slope, f);
  if (l.periph[0] > 0) {
    if (!out.empty()) out += "*";
    out += Power("U", l.periph[0]);
  }
  return out.empty() ? "1" : out;
}

std::string label_text(const Label<4>& l, const PolySeq& f) {
  std::string out = SlopePart(l.slope, f);
  for (std::size_t i = 0; i < 4; ++i) {
    if (l.periph[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += Power("g" + std::to_string(i + 1), l.periph[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const PositivityReport& r) {
  std::string out = r.check + " on " + r.surface + ", sequence " + r.sequence + ", " + r.bound_name + " = " +
                    std::to_string(r.bound) + "\n";
  for (const auto& [k, v] : r.details) out += "  " + k + ": " + v + "\n";
  out += std::string("verdict: ") + verdict_name(r.verdict) + "\n";
  for (const auto& w : r.witnesses) {
    out += "  witness: " + w.product;
    if (!w.label.empty()) out += " -> coefficient of " + w.label + " = " + w.coeff.ToString();
    out += "\n";
  }
  return out;
}

}  // namespace skein
