#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

enum class Verdict { kCertified, kViolation };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::kCertified ? "certified-positive-up-to-bound" : "violation";
}

// One offending structure constant: the product that was expanded, the basis
// label whose coefficient failed, and that coefficient. `replay` recomputes
// the coefficient from scratch.
struct Witness {
  std::string product;
  std::string label;
  LaurentPoly coeff;
  std::function<LaurentPoly()> replay;
};

struct PositivityReport {
  std::string surface;
  std::string sequence;
  std::string check;
  std::string bound_name = "n_max";
  int bound = 0;
  Verdict verdict = Verdict::kCertified;
  std::vector<Witness> witnesses;
  // Extra facts for the report body, in display order.
  std::vector<std::pair<std::string, std::string>> details;

  bool certified() const { return verdict == Verdict::kCertified; }
};

}  // namespace skein
