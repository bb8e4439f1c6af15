#include "skein/positivity.hpp"

#include <stdexcept>
#include <string>

#include "skein/render.hpp"
#include "skein/s04.hpp"
#include "skein/torus.hpp"

namespace skein::positivity {

namespace {

std::string DeltaText(const std::vector<int>& delta) {
  std::string out = "(";
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(delta[i]);
  }
  return out + ")";
}

bool NextDelta(std::vector<int>& delta, int box) {
  for (std::size_t i = delta.size(); i-- > 0;) {
    if (delta[i] < box) {
      ++delta[i];
      return true;
    }
    delta[i] = -box;
  }
  return false;
}

std::optional<Witness> TorusWitness(const SeqPtr& p, const torus::Label& a, const torus::Label& b,
                                    const std::string& desc) {
  const torus::Element prod = torus::structure_constants(p, a, b);
  for (const auto& [l, c] : prod.terms()) {
    if (c.is_positive()) continue;
    const torus::Label target = l;
    return Witness{desc, label_text(l, *p), c,
                   [p, a, b, target] { return torus::structure_constants(p, a, b).coeff(target); }};
  }
  return std::nullopt;
}

std::optional<Witness> AnnulusWitness(const SeqPtr& p, int i, int j, const std::string& desc) {
  const auto& coeffs = p->product(i, j);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_positive()) continue;
    return Witness{desc, "P_" + std::to_string(k) + "(z)", coeffs[k],
                   [p, i, j, k] { return expand_in(p->at(i) * p->at(j), *p)[k]; }};
  }
  return std::nullopt;
}

}  // namespace

SeqPtr perturbed_that(int level, const std::vector<int>& delta) {
  if (level < 1 || delta.size() != static_cast<std::size_t>(level))
    throw Error(ErrorKind::kInvalidArgument, "perturbation needs one delta per lower degree");
  const SeqPtr that = PolySeq::THat();
  std::vector<Poly1> rows;
  for (int i = 0; i < level; ++i) rows.push_back(that->at(i));
  Poly1 top = that->at(level);
  for (int i = 0; i < level; ++i) top += LaurentPoly(delta[static_cast<std::size_t>(i)]) * that->at(i);
  rows.push_back(top);
  return PolySeq::Table("that+" + DeltaText(delta), std::move(rows));
}

std::optional<Witness> kill_perturbation(int level, const std::vector<int>& delta) {
  const SeqPtr p = perturbed_that(level, delta);
  const std::string k = std::to_string(level);
  const std::string tag = "P = " + p->name() + ": ";
  using torus::Label;
  if (auto w = TorusWitness(p, Label::Curve(CurveClass(level, 0)), Label::Curve(CurveClass(0, 1)),
                            tag + "P_" + k + "((1,0)) * P_1((0,1))"))
    return w;
  if (auto w = TorusWitness(p, Label::Curve(CurveClass(level, 1)), Label::Curve(CurveClass(0, 1)),
                            tag + "P_1((" + k + ",1)) * P_1((0,1))"))
    return w;
  if (auto w = AnnulusWitness(p, 1, level - 1, tag + "P_1(z) * P_" + std::to_string(level - 1) + "(z)")) return w;
  if (level >= 2)
    if (auto w = AnnulusWitness(p, 2, level - 2, tag + "P_2(z) * P_" + std::to_string(level - 2) + "(z)"))
      return w;
  return std::nullopt;
}

PositivityReport torus_uniqueness(int n_max, int box) {
  if (n_max < 2) throw Error(ErrorKind::kInvalidArgument, "torus-unique needs n_max >= 2");
  if (box < 0) throw Error(ErrorKind::kInvalidArgument, "torus-unique needs box >= 0");
  PositivityReport report;
  report.surface = surface_tag(Surface::kTorus);
  report.sequence = "that";
  report.check = "torus-unique";
  report.bound = n_max;
  report.details.emplace_back("box", std::to_string(box));
  bool that_clean = true;
  for (int level = 2; level <= n_max; ++level) {
    std::vector<int> zero(static_cast<std::size_t>(level), 0);
    if (auto w = kill_perturbation(level, zero)) {
      that_clean = false;
      report.witnesses.push_back(*w);
    }
    std::size_t total = 0;
    std::size_t killed = 0;
    std::vector<int> delta(static_cast<std::size_t>(level), -box);
    do {
      bool nonzero = false;
      for (int d : delta) nonzero = nonzero || d != 0;
      if (!nonzero) continue;
      ++total;
      if (kill_perturbation(level, delta)) {
        ++killed;
      } else {
        report.witnesses.push_back(
            {"level " + std::to_string(level) + ": P_" + std::to_string(level) + " = T-hat + " +
                 DeltaText(delta) + " . T-hat survives every witness product",
             "", {}, nullptr});
      }
    } while (NextDelta(delta, box));
    report.details.emplace_back("level " + std::to_string(level),
                                std::to_string(killed) + "/" + std::to_string(total) + " perturbations killed");
  }
  report.details.emplace_back("unperturbed that", that_clean ? "no violation" : "VIOLATION");
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  return report;
}

PositivityReport lower_bound_certify(const SeqPtr& p, int n_max) {
  if (!p->normalized()) throw Error(ErrorKind::kNotNormalized, p->name() + " is not normalized");
  if (p->at(1) != Poly1::X(1))
    throw Error(ErrorKind::kInvalidArgument, "lower bound needs P_1 = x, got " + p->at(1).ToString());
  const SeqPtr that = PolySeq::THat();
  PositivityReport report;
  report.surface = surface_tag(Surface::kS04);
  report.sequence = p->name();
  report.check = "lower-bound";
  report.bound = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const auto& delta = that->expansion_of(*p, n);
    s04::Element prod(that);
    for (std::size_t k = 0; k < delta.size(); ++k) {
      if (delta[k].is_zero()) continue;
      if (k == 0) prod += s04::Element::Of(s04::Slope(0, 1), delta[k], that);
      else prod += delta[k] * s04::mul_tna_b(static_cast<int>(k));
    }
    bool curve_route_ok = true;
    for (int i = -n; i <= n; ++i) {
      const s04::Label target = s04::Slope(i, 1);
      const LaurentPoly c = prod.coeff(target);
      if (c.is_positive()) continue;
      curve_route_ok = false;
      report.witnesses.push_back(Witness{
          "P_" + std::to_string(n) + "(a) * P_1(b)", label_text(target, *that), c, [p, n, target] {
            const SeqPtr th = PolySeq::THat();
            const auto& d = th->expansion_of(*p, n);
            s04::Element e(th);
            for (std::size_t k = 0; k < d.size(); ++k) {
              if (d[k].is_zero()) continue;
              if (k == 0) e += s04::Element::Of(s04::Slope(0, 1), d[k], th);
              else e += d[k] * s04::mul_tna_b(static_cast<int>(k));
            }
            return e.coeff(target);
          }});
    }
    bool expand_route_ok = true;
    for (const auto& d : delta) expand_route_ok = expand_route_ok && d.is_positive();
    if (curve_route_ok != expand_route_ok)
      throw std::logic_error("lower bound routes disagree at n = " + std::to_string(n));
  }
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  report.details.emplace_back("claim", "(That) <= (" + p->display_name() + ")");
  report.details.emplace_back("cross-check", "expand_in over That agrees");
  return report;
}

PositivityReport sandwich_check(const SeqPtr& p, int n_max) {
  if (!p->normalized()) throw Error(ErrorKind::kNotNormalized, p->name() + " is not normalized");
  if (!p->has_integer_coefficients())
    throw Error(ErrorKind::kInvalidArgument, "sandwich check needs integer coefficients");
  const SeqPtr that = PolySeq::THat();
  const SeqPtr s = PolySeq::S();
  PositivityReport report;
  report.surface = "any";
  report.sequence = p->name();
  report.check = "sandwich";
  report.bound = n_max;
  auto record = [&](const PolySeq& lo, const PolySeq& hi, const OrderResult& r) {
    const std::string rel = "(" + lo.display_name() + ") <= (" + hi.display_name() + ")";
    report.details.emplace_back(rel, r.holds ? "holds" : "fails");
    if (r.holds) return;
    const OrderWitness w = *r.witness;
    const SeqPtr lo_ptr = lo.id() == p->id() ? p : (lo.id() == that->id() ? that : s);
    const SeqPtr hi_ptr = hi.id() == p->id() ? p : (hi.id() == that->id() ? that : s);
    report.witnesses.push_back(Witness{rel + " at n = " + std::to_string(w.n),
                                       lo.display_name() + "_" + std::to_string(w.k), w.coeff,
                                       [lo_ptr, hi_ptr, w] { return lo_ptr->expansion_of(*hi_ptr, w.n)[w.k]; }});
  };
  record(*that, *p, seq_leq(*that, *p, n_max));
  record(*p, *s, seq_leq(*p, *s, n_max));
  report.verdict = report.witnesses.empty() ? Verdict::kCertified : Verdict::kViolation;
  return report;
}

}  // namespace skein::positivity
