#include "skein/torus.hpp"

#include "skein/render.hpp"

namespace skein::torus {

namespace {

void AddFgTerm(Element& out, std::int64_t r, std::int64_t s, std::int64_t d) {
  if (r == 0 && s == 0) {
    out.add(Label::Empty(), LaurentPoly::Monomial(2, d));
  } else {
    out.add(Label::Curve(CurveClass(r, s)), LaurentPoly::Q(d));
  }
}

}  // namespace

Element fg_mul(const Label& a, const Label& b) {
  const SeqPtr that = PolySeq::THat();
  if (!a.slope) return Element::Of(b, 1, that);
  if (!b.slope) return Element::Of(a, 1, that);
  const CurveClass& x = *a.slope;
  const CurveClass& y = *b.slope;
  const std::int64_t d = det(x, y);
  Element out(that);
  AddFgTerm(out, x.r() + y.r(), x.s() + y.s(), d);
  AddFgTerm(out, x.r() - y.r(), x.s() - y.s(), -d);
  return out;
}

Element mul(const Element& x, const Element& y) {
  const SeqPtr that = PolySeq::THat();
  if (x.flavor()->id() != that->id() || y.flavor()->id() != that->id())
    throw Error(ErrorKind::kFlavorMismatch, "torus product needs both factors in the that flavor (got " +
                                                x.flavor()->name() + ", " + y.flavor()->name() + ")");
  Element out(that);
  for (const auto& [la, ca] : x.terms())
    for (const auto& [lb, cb] : y.terms()) out += (ca * cb) * fg_mul(la, lb);
  return out;
}

Element mul_any(const Element& x, const Element& y) {
  const SeqPtr that = PolySeq::THat();
  return convert(mul(convert(x, that), convert(y, that)), x.flavor());
}

Element structure_constants(const SeqPtr& p, const Label& a, const Label& b) {
  return mul_any(Element::Of(a, 1, p), Element::Of(b, 1, p));
}

std::vector<Label> labels_in_box(int bound) {
  std::vector<Label> out{Label::Empty()};
  for (int r = -bound; r <= bound; ++r)
    for (int s = 0; s <= bound; ++s) {
      if (s == 0 && r <= 0) continue;
      out.push_back(Label::Curve(CurveClass(r, s)));
    }
  return out;
}

PositivityReport positivity_scan(const SeqPtr& p, int bound, bool at_q1, std::size_t max_witnesses) {
  if (bound < 1) throw Error(ErrorKind::kInvalidArgument, "scan bound must be >= 1");
  PositivityReport report;
  report.surface = surface_tag(Surface::kTorus);
  report.sequence = p->name();
  report.check = "scan";
  report.bound_name = "bound";
  report.bound = bound;
  const auto labels = labels_in_box(bound);
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (const Label& a : labels) {
    for (const Label& b : labels) {
      ++pairs;
      const Element prod = structure_constants(p, a, b);
      for (const auto& [l, c] : prod.terms()) {
        const bool ok = at_q1 ? c.at_q1() >= 0 : c.is_positive();
        if (ok) continue;
        ++violations;
        if (report.witnesses.size() >= max_witnesses) continue;
        const Label target = l;
        report.witnesses.push_back(Witness{
            label_text(a, *p) + " * " + label_text(b, *p), label_text(l, *p),
            at_q1 ? LaurentPoly(c.at_q1()) : c, [p, a, b, target, at_q1] {
              const LaurentPoly v = structure_constants(p, a, b).coeff(target);
              return at_q1 ? LaurentPoly(v.at_q1()) : v;
            }});
      }
    }
  }
  report.verdict = violations == 0 ? Verdict::kCertified : Verdict::kViolation;
  report.details.emplace_back("labels", std::to_string(labels.size()));
  report.details.emplace_back("pairs", std::to_string(pairs));
  report.details.emplace_back("violations", std::to_string(violations));
  if (at_q1) report.details.emplace_back("ring", "Z (q = 1)");
  return report;
}

Element transport(const Element& x, const MappingClass& m) { return skein::transport<0>(x, m, {}); }

}  // namespace skein::torus
