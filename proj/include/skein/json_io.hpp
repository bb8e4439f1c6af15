#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include <json.hpp>

#include "skein/element.hpp"
#include "skein/render.hpp"
#include "skein/report.hpp"

namespace skein::json_io {

using Json = nlohmann::ordered_json;

// {"-2": 1, "2": 1}: exponent keys ascending; coefficients beyond 53 bits
// are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json label_to_json(const Label<0>& l);
Json label_to_json(const Label<1>& l);
Json label_to_json(const Label<4>& l);

template <std::size_t N>
Json to_json(const Element<N>& x) {
  Json terms = Json::array();
  for (const auto& [l, c] : x.terms()) terms.push_back(Json{{"label", label_to_json(l)}, {"coeff", to_json(c)}});
  return Json{{"surface", surface_tag(surface_of<N>())}, {"basis", x.flavor()->name()}, {"terms", terms}};
}

using AnyElement = std::variant<Element<0>, Element<1>, Element<4>>;
AnyElement element_from_json(const Json& j);

Json to_json(const PositivityReport& r);

}  // namespace skein::json_io
