#include "skein/json_io.hpp"

#include <limits>

#include "skein/error.hpp"

namespace skein::json_io {

namespace {

const Integer kMaxExact = (Integer(1) << 53) - 1;

Json CoeffValue(const Integer& c) {
  if (abs(c) <= kMaxExact) return Json(c.get_si());
  return Json(c.get_str());
}

Integer CoeffFrom(const Json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::kParse, "bad coefficient string '" + v.get<std::string>() + "'");
    return out;
  }
  throw Error(ErrorKind::kParse, "coefficient must be an integer or a decimal string");
}

std::optional<CurveClass> SlopeFrom(const Json& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw Error(ErrorKind::kParse, "slope must be a string like \"(1,0)\" or null");
  return CurveClass::Parse(v.get<std::string>());
}

Json SlopeJson(const std::optional<CurveClass>& s) { return s ? Json(s->ToString()) : Json(nullptr); }

template <std::size_t N>
Element<N> TermsFrom(const Json& j, const SeqPtr& flavor) {
  Element<N> out(flavor);
  for (const auto& t : j.at("terms")) {
    const Json& lj = t.at("label");
    Label<N> l;
    if constexpr (N == 0) {
      const std::string s = lj.get<std::string>();
      if (s != "1") l.slope = CurveClass::Parse(s);
    } else if constexpr (N == 1) {
      l.slope = SlopeFrom(lj.at("slope"));
      l.periph[0] = lj.at("u").get<int>();
    } else {
      l.slope = SlopeFrom(lj.at("slope"));
      const Json& g = lj.at("g");
      if (!g.is_array() || g.size() != 4) throw Error(ErrorKind::kParse, "\"g\" must have four entries");
      for (std::size_t i = 0; i < 4; ++i) l.periph[i] = g[i].get<int>();
    }
    for (int e : l.periph)
      if (e < 0) throw Error(ErrorKind::kParse, "peripheral exponents must be nonnegative");
    out.add(l, laurent_from_json(t.at("coeff")));
  }
  return out;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = CoeffValue(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "Laurent polynomial must be a JSON object");
  LaurentPoly out;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || k.empty()) throw Error(ErrorKind::kParse, "bad exponent key '" + k + "'");
    out.add_term(CoeffFrom(v), e);
  }
  return out;
}

Json label_to_json(const Label<0>& l) { return l.slope ? Json(l.slope->ToString()) : Json("1"); }

Json label_to_json(const Label<1>& l) { return Json{{"slope", SlopeJson(l.slope)}, {"u", l.periph[0]}}; }

Json label_to_json(const Label<4>& l) {
  return Json{{"slope", SlopeJson(l.slope)}, {"g", Json(std::vector<int>(l.periph.begin(), l.periph.end()))}};
}

AnyElement element_from_json(const Json& j) {
  try {
    const std::string surface = j.at("surface").get<std::string>();
    const SeqPtr flavor = PolySeq::Named(j.at("basis").get<std::string>());
    if (!flavor->normalized()) throw Error(ErrorKind::kNotNormalized, "basis " + flavor->name() + " is not normalized");
    if (surface == "t10") return TermsFrom<0>(j, flavor);
    if (surface == "t11") return TermsFrom<1>(j, flavor);
    if (surface == "s04") return TermsFrom<4>(j, flavor);
    throw Error(ErrorKind::kParse, "unknown surface '" + surface + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed element JSON: ") + e.what());
  }
}

Json to_json(const PositivityReport& r) {
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj{{"product", w.product}};
    if (!w.label.empty()) {
      wj["label"] = w.label;
      wj["coeff"] = to_json(w.coeff);
    }
    witnesses.push_back(std::move(wj));
  }
  return Json{{"surface", r.surface},   {"sequence", r.sequence},           {"check", r.check},
              {r.bound_name, r.bound},  {"verdict", verdict_name(r.verdict)}, {"details", details},
              {"witnesses", witnesses}};
}

}  // namespace skein::json_io
