#include "skein/skein.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "skein/error.hpp"
#include "skein/json_io.hpp"
#include "skein/labels.hpp"
#include "skein/polyseq.hpp"
#include "skein/positivity.hpp"
#include "skein/ptorus.hpp"
#include "skein/render.hpp"
#include "skein/s04.hpp"
#include "skein/torus.hpp"

struct skein_seq {
  skein::SeqPtr seq;
  std::string display;
};

struct skein_result {
  std::string text;
  std::string json;
  skein_verdict verdict = SKEIN_VERDICT_NONE;
};

namespace {

using skein::Error;
using skein::ErrorKind;
using skein::LaurentPoly;
using skein::SeqPtr;
using Json = skein::json_io::Json;

thread_local std::string g_last_error;

skein_status StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return SKEIN_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse: return SKEIN_ERR_PARSE;
    case ErrorKind::kNotNormalized: return SKEIN_ERR_NOT_NORMALIZED;
    case ErrorKind::kNoProductRule: return SKEIN_ERR_NO_PRODUCT_RULE;
    case ErrorKind::kFlavorMismatch: return SKEIN_ERR_FLAVOR_MISMATCH;
    case ErrorKind::kOutOfRange: return SKEIN_ERR_OUT_OF_RANGE;
    case ErrorKind::kIo: return SKEIN_ERR_IO;
  }
  return SKEIN_ERR_INTERNAL;
}

template <typename F>
skein_status Guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SKEIN_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return StatusOf(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return SKEIN_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SKEIN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return SKEIN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal error";
    return SKEIN_ERR_INTERNAL;
  }
}

void Require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, msg);
}

void RequireOut(const void* out) { Require(out != nullptr, "output pointer is null"); }

const SeqPtr& SeqOf(const skein_seq* s) {
  Require(s != nullptr, "sequence handle is null");
  return s->seq;
}

const SeqPtr& BasisOf(const skein_seq* s) {
  const SeqPtr& seq = SeqOf(s);
  if (!seq->normalized())
    throw Error(ErrorKind::kNotNormalized,
                "basis '" + seq->name() + "' is not normalized (P_0 must be 1); use 'that' instead of 't'");
  return seq;
}

std::string Str(const char* s, const char* what) {
  Require(s != nullptr, std::string(what) + " is null");
  return s;
}

skein_result* Emit(std::string text, const Json& json, skein_verdict verdict = SKEIN_VERDICT_NONE) {
  auto* r = new skein_result;
  r->text = std::move(text);
  if (r->text.empty() || r->text.back() != '\n') r->text += '\n';
  r->json = json.dump(2) + "\n";
  r->verdict = verdict;
  return r;
}

skein_verdict VerdictOf(const skein::PositivityReport& report) {
  return report.certified() ? SKEIN_VERDICT_CERTIFIED : SKEIN_VERDICT_VIOLATION;
}

skein_result* EmitReport(const skein::PositivityReport& report) {
  return Emit(skein::to_text(report), skein::json_io::to_json(report), VerdictOf(report));
}

template <std::size_t N>
skein_result* EmitElement(const skein::Element<N>& x) {
  return Emit(skein::to_text(x), skein::json_io::to_json(x));
}

template <std::size_t N>
skein_result* EmitExtraction(const std::string& surface, const SeqPtr& seq, int n, LaurentPoly::Exponent e,
                             const skein::Element<N>& x) {
  const std::string tag = skein::flavor_tag(*seq);
  std::string text = "lowest q-part of " + tag + "(" + std::to_string(n) + ",1) * " + tag +
                     "(0,1) in basis " + seq->display_name() + ": q^" + std::to_string(e) + " (" +
                     skein::to_text(x) + ")";
  Json j{{"surface", surface}, {"sequence", seq->name()}, {"n", n}, {"exponent", e},
         {"element", skein::json_io::to_json(x)}};
  return Emit(std::move(text), j);
}

}  // namespace

extern "C" {

const char* skein_last_error(void) { return g_last_error.c_str(); }

const char* skein_status_name(skein_status status) {
  switch (status) {
    case SKEIN_OK: return "ok";
    case SKEIN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SKEIN_ERR_PARSE: return "parse error";
    case SKEIN_ERR_NOT_NORMALIZED: return "sequence not normalized";
    case SKEIN_ERR_NO_PRODUCT_RULE: return "no product rule";
    case SKEIN_ERR_FLAVOR_MISMATCH: return "flavor mismatch";
    case SKEIN_ERR_OUT_OF_RANGE: return "out of range";
    case SKEIN_ERR_IO: return "i/o error";
    case SKEIN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* skein_version(void) { return "1.0.0"; }

skein_status skein_seq_open(const char* spec, skein_seq** out) {
  return Guard([&] {
    RequireOut(out);
    SeqPtr seq = skein::PolySeq::Named(Str(spec, "sequence spec"));
    std::string display = seq->display_name();
    *out = new skein_seq{std::move(seq), std::move(display)};
  });
}

void skein_seq_free(skein_seq* seq) { delete seq; }

const char* skein_seq_name(const skein_seq* seq) { return seq ? seq->seq->name().c_str() : ""; }

const char* skein_seq_display_name(const skein_seq* seq) { return seq ? seq->display.c_str() : ""; }

const char* skein_result_text(const skein_result* result) { return result ? result->text.c_str() : ""; }

const char* skein_result_json(const skein_result* result) { return result ? result->json.c_str() : ""; }

skein_verdict skein_result_verdict(const skein_result* result) {
  return result ? result->verdict : SKEIN_VERDICT_NONE;
}

void skein_result_free(skein_result* result) { delete result; }

skein_status skein_tor_mul(const char* a, const char* b, const skein_seq* basis, int q1, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& p = BasisOf(basis);
    const auto la = skein::parse_torus_label(Str(a, "left label"), *p);
    const auto lb = skein::parse_torus_label(Str(b, "right label"), *p);
    skein::torus::Element prod = skein::torus::structure_constants(p, la, lb);
    if (q1) prod = skein::specialize_q1(prod);
    *out = EmitElement(prod);
  });
}

skein_status skein_tor_scan(const skein_seq* basis, int bound, int q1, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = EmitReport(skein::torus::positivity_scan(BasisOf(basis), bound, q1 != 0));
  });
}

skein_status skein_ptor_mul(const char* a, const char* b, const skein_seq* basis, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& p = BasisOf(basis);
    using E = skein::ptorus::Element;
    const E x = E::Of(skein::parse_ptorus_label(Str(a, "left label"), *p), 1, p);
    const E y = E::Of(skein::parse_ptorus_label(Str(b, "right label"), *p), 1, p);
    *out = EmitElement(skein::ptorus::mul_any(x, y));
  });
}

skein_status skein_ptor_verify(const char* check, int n_max, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const std::string c = Str(check, "check name");
    if (c == "g-closed") *out = EmitReport(skein::ptorus::verify_g_closed(n_max));
    else if (c == "induction") *out = EmitReport(skein::ptorus::verify_induction(n_max));
    else if (c == "extract") *out = EmitReport(skein::ptorus::verify_extraction(skein::PolySeq::S(), n_max));
    else throw Error(ErrorKind::kInvalidArgument, "unknown check '" + c + "' (g-closed, induction, extract)");
  });
}

skein_status skein_ptor_extract(const skein_seq* seq, int n, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& p = BasisOf(seq);
    const auto ex = skein::ptorus::upper_bound_extract(p, n);
    *out = EmitExtraction(skein::surface_tag(skein::Surface::kPTorus), p, n, ex.exponent, ex.element);
  });
}

skein_status skein_s04_mul(const char* a, const char* b, const skein_seq* basis, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& p = BasisOf(basis);
    using E = skein::s04::Element;
    const E x = E::Of(skein::parse_s04_label(Str(a, "left label"), *p), 1, p);
    const E y = E::Of(skein::parse_s04_label(Str(b, "right label"), *p), 1, p);
    *out = EmitElement(skein::s04::mul_any(x, y));
  });
}

skein_status skein_s04_verify(const char* check, int n_max, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const std::string c = Str(check, "check name");
    if (c == "h-bounds") *out = EmitReport(skein::s04::verify_h_bounds(n_max));
    else if (c == "lowest-term") *out = EmitReport(skein::s04::verify_lowest_term(n_max));
    else throw Error(ErrorKind::kInvalidArgument, "unknown check '" + c + "' (h-bounds, lowest-term)");
  });
}

skein_status skein_s04_extract(int n, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const auto ex = skein::s04::lowest_q_term(n);
    *out = EmitExtraction(skein::surface_tag(skein::Surface::kS04), skein::PolySeq::S(), n, ex.exponent,
                          ex.element);
  });
}

skein_status skein_s04_force_p1(int64_t delta, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const auto w = skein::s04::p1_forcing_witness(delta);
    const auto& f = *w.product.flavor();
    const std::string gl = skein::label_text(w.gamma_label, f);
    const std::string al = skein::label_text(w.a_label, f);
    std::string text = "P_1 = x " + std::string(delta < 0 ? "- " : "+ ") + std::to_string(delta < 0 ? -delta : delta) +
                       " on s04\n  P(1,0) * P(0,1) = " + skein::to_text(w.product) + "\n  coefficient of " + gl +
                       " = " + w.gamma_coeff.ToString() + "\n  coefficient of " + al + " = " +
                       w.a_coeff.ToString() + "\nverdict: " +
                       skein::verdict_name(w.violated ? skein::Verdict::kViolation : skein::Verdict::kCertified);
    Json j{{"surface", "s04"},
           {"delta", delta},
           {"product", skein::json_io::to_json(w.product)},
           {"gamma", Json{{"label", skein::json_io::label_to_json(w.gamma_label)},
                          {"coeff", skein::json_io::to_json(w.gamma_coeff)}}},
           {"a", Json{{"label", skein::json_io::label_to_json(w.a_label)},
                      {"coeff", skein::json_io::to_json(w.a_coeff)}}},
           {"verdict", skein::verdict_name(w.violated ? skein::Verdict::kViolation : skein::Verdict::kCertified)}};
    *out = Emit(std::move(text), j, w.violated ? SKEIN_VERDICT_VIOLATION : SKEIN_VERDICT_CERTIFIED);
  });
}

skein_status skein_certify_torus_unique(int n_max, int box, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = EmitReport(skein::positivity::torus_uniqueness(n_max, box));
  });
}

skein_status skein_certify_sandwich(const skein_seq* seq, int n_max, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = EmitReport(skein::positivity::sandwich_check(BasisOf(seq), n_max));
  });
}

skein_status skein_cheb(const skein_seq* seq, int n, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& p = SeqOf(seq);
    Require(n >= 0, "member index must be >= 0");
    const skein::Poly1& poly = p->at(n);
    std::string text = p->display_name() + "_" + std::to_string(n) + "(x) = " + poly.ToString();
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(skein::json_io::to_json(c));
    Json j{{"sequence", p->name()}, {"n", n}, {"poly", poly.ToString()}, {"coeffs", coeffs}};
    if (poly.is_integral()) {
      const LaurentPoly t = skein::substitute_t(poly);
      text += "\n  at x = t + t^-1: " + t.ToString("t");
      j["at_t_plus_inverse"] = skein::json_io::to_json(t);
    }
    *out = Emit(std::move(text), j);
  });
}

skein_status skein_order_leq(const skein_seq* p, const skein_seq* q, int n_max, int q1, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const SeqPtr& ps = SeqOf(p);
    const SeqPtr& qs = SeqOf(q);
    Require(n_max >= 0, "n_max must be >= 0");
    const skein::OrderResult r = skein::seq_leq(*ps, *qs, n_max, q1 != 0);
    const std::string rel = "(" + ps->display_name() + ") <= (" + qs->display_name() + ")";
    std::string text;
    Json j{{"relation", "leq"}, {"p", ps->name()}, {"q", qs->name()}, {"n_max", n_max},
           {"ring", q1 ? "Z" : "Z[q,q^-1]"}, {"holds", r.holds},
           {"verdict", skein::verdict_name(r.holds ? skein::Verdict::kCertified : skein::Verdict::kViolation)}};
    if (r.holds) {
      text = rel + " certified to n=" + std::to_string(n_max);
    } else {
      const auto& w = *r.witness;
      text = rel + " fails at n=" + std::to_string(w.n) + ": coefficient of " + ps->display_name() + "_" +
             std::to_string(w.k) + " in " + qs->display_name() + "_" + std::to_string(w.n) + " is " +
             w.coeff.ToString();
      j["witness"] = Json{{"n", w.n}, {"k", w.k}, {"coeff", skein::json_io::to_json(w.coeff)}};
    }
    *out = Emit(std::move(text), j, r.holds ? SKEIN_VERDICT_CERTIFIED : SKEIN_VERDICT_VIOLATION);
  });
}

skein_status skein_element_read(const char* json, skein_result** out) {
  return Guard([&] {
    RequireOut(out);
    const Json j = Json::parse(Str(json, "JSON text"));
    const auto any = skein::json_io::element_from_json(j);
    *out = std::visit([](const auto& x) { return EmitElement(x); }, any);
  });
}

}  // extern "C"
