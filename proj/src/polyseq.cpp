#include "skein/polyseq.hpp"

#include <fstream>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

// ---- Poly1 -----------------------------------------------------------------

Poly1::Poly1(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

Poly1::Poly1(const LaurentPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly1 Poly1::X(int power) {
  std::vector<LaurentPoly> c(static_cast<std::size_t>(power) + 1);
  c.back() = 1;
  return Poly1(std::move(c));
}

void Poly1::Trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const LaurentPoly& Poly1::coeff(int k) const {
  static const LaurentPoly kZero;
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool Poly1::is_monic() const { return !coeffs_.empty() && coeffs_.back() == LaurentPoly(1); }

bool Poly1::is_integral() const {
  for (const auto& c : coeffs_)
    for (const auto& [e, v] : c.terms())
      if (e != 0) return false;
  return true;
}

Poly1 Poly1::operator-() const {
  Poly1 out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly1& Poly1::operator+=(const Poly1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  Trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  Trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly1(std::move(out));
}

Poly1 operator*(const LaurentPoly& c, const Poly1& p) {
  std::vector<LaurentPoly> out;
  out.reserve(p.coeffs_.size());
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return Poly1(std::move(out));
}

Poly1 Poly1::compose(const Poly1& inner) const {
  Poly1 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly1(*it);
  return acc;
}

std::string Poly1::ToString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const LaurentPoly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.ToString();
    bool negative_monomial = c.is_monomial() && c.terms().begin()->second < 0;
    if (!out.empty()) out += negative_monomial ? " - " : " + ";
    else if (negative_monomial) out += "-";
    if (negative_monomial) cs = (-c).ToString();
    if (k == 0) {
      out += c.is_monomial() ? cs : "(" + cs + ")";
      continue;
    }
    if (cs != "1") out += c.is_monomial() ? cs : "(" + cs + ")";
    out += "x";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

LaurentPoly substitute_t(const Poly1& p) {
  if (!p.is_integral())
    throw Error(ErrorKind::kInvalidArgument, "substitute_t: polynomial has q-dependent coefficients");
  const LaurentPoly y = LaurentPoly::Q(1) + LaurentPoly::Q(-1);
  LaurentPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * y + p.coeff(k);
  return acc;
}

Poly1 chebyshev(ChebyshevKind kind, int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "chebyshev: n must be >= 0");
  switch (kind) {
    case ChebyshevKind::kT: return PolySeq::T()->at(n);
    case ChebyshevKind::kTHat: return PolySeq::THat()->at(n);
    case ChebyshevKind::kS: return PolySeq::S()->at(n);
  }
  return {};
}

// ---- PolySeq ---------------------------------------------------------------

namespace {
std::atomic<std::uint64_t> next_seq_id{1};
}

PolySeq::PolySeq(Kind kind, std::string name, std::vector<Poly1> rows)
    : kind_(kind), name_(std::move(name)), id_(next_seq_id.fetch_add(1)),
      members_(rows.begin(), rows.end()) {}

SeqPtr PolySeq::Monomial() {
  static const SeqPtr s(new PolySeq(Kind::kMonomial, "monomial"));
  return s;
}
SeqPtr PolySeq::THat() {
  static const SeqPtr s(new PolySeq(Kind::kTHat, "that"));
  return s;
}
SeqPtr PolySeq::S() {
  static const SeqPtr s(new PolySeq(Kind::kS, "s"));
  return s;
}
SeqPtr PolySeq::T() {
  static const SeqPtr s(new PolySeq(Kind::kT, "t"));
  return s;
}

SeqPtr PolySeq::Table(std::string name, std::vector<Poly1> rows) {
  if (rows.empty()) throw Error(ErrorKind::kInvalidArgument, "sequence table " + name + " is empty");
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].degree() != static_cast<int>(n) || !rows[n].is_monic())
      throw Error(ErrorKind::kNotNormalized, "sequence " + name + ": P_" + std::to_string(n) +
                                                 " = " + rows[n].ToString() + " is not monic of degree " +
                                                 std::to_string(n));
  }
  return SeqPtr(new PolySeq(Kind::kTable, std::move(name), std::move(rows)));
}

SeqPtr PolySeq::Named(const std::string& spec) {
  if (spec == "monomial") return Monomial();
  if (spec == "that") return THat();
  if (spec == "s") return S();
  if (spec == "t") return T();
  if (spec.rfind("file:", 0) == 0) return LoadFile(spec.substr(5));
  throw ParseError(spec, 0, "unknown sequence (expected monomial, that, s, t or file:PATH)");
}

SeqPtr PolySeq::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open sequence file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseTable("file:" + path.string(), buf.str());
}

SeqPtr PolySeq::ParseTable(std::string name, const std::string& text) {
  std::map<int, Poly1> rows;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(line, 0, where + "expected 'n: c0 c1 ... cn'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(body.substr(0, colon), &used);
      if (body.substr(0, colon).find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(line, 0, where + "expected a nonnegative row index before ':'");
    }
    if (n < 0) throw ParseError(line, 0, where + "row index must be nonnegative");
    if (rows.count(n)) throw ParseError(line, 0, where + "duplicate row " + std::to_string(n));
    std::vector<LaurentPoly> coeffs;
    std::size_t pos = colon + 1;
    while (true) {
      pos = body.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      std::size_t end = body.find_first_of(" \t\r", pos);
      std::string token = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      try {
        coeffs.push_back(LaurentPoly::Parse(token));
      } catch (const ParseError& e) {
        throw ParseError(line, pos + e.position(), where + "bad coefficient '" + token + "'");
      }
      if (end == std::string::npos) break;
      pos = end;
    }
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
      throw ParseError(line, colon, where + "row " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                        " coefficients, got " + std::to_string(coeffs.size()));
    rows.emplace(n, Poly1(std::move(coeffs)));
  }
  std::vector<Poly1> ordered;
  for (auto& [n, p] : rows) {
    if (n != static_cast<int>(ordered.size()))
      throw Error(ErrorKind::kParse, "sequence " + name + ": missing row " + std::to_string(ordered.size()));
    ordered.push_back(std::move(p));
  }
  return Table(std::move(name), std::move(ordered));
}

std::string PolySeq::display_name() const {
  switch (kind_) {
    case Kind::kMonomial: return "Monomial";
    case Kind::kTHat: return "That";
    case Kind::kS: return "S";
    case Kind::kT: return "T";
    case Kind::kTable: return name_;
  }
  return name_;
}

std::optional<int> PolySeq::last_index() const {
  if (kind_ != Kind::kTable) return std::nullopt;
  std::lock_guard lock(mu_);
  return static_cast<int>(members_.size()) - 1;
}

bool PolySeq::has_integer_coefficients() const {
  if (kind_ != Kind::kTable) return true;
  std::lock_guard lock(mu_);
  for (const auto& p : members_)
    if (!p.is_integral()) return false;
  return true;
}

const Poly1& PolySeq::at(int n) const {
  if (n < 0) throw Error(ErrorKind::kOutOfRange, "sequence index must be >= 0");
  std::lock_guard lock(mu_);
  if (kind_ == Kind::kTable) {
    if (static_cast<std::size_t>(n) >= members_.size())
      throw Error(ErrorKind::kOutOfRange, "sequence " + name_ + " has no member P_" + std::to_string(n) +
                                              " (table ends at " + std::to_string(members_.size() - 1) + ")");
    return members_[static_cast<std::size_t>(n)];
  }
  const Poly1 x = Poly1::X(1);
  while (members_.size() <= static_cast<std::size_t>(n)) {
    const std::size_t k = members_.size();
    Poly1 next;
    if (kind_ == Kind::kMonomial) {
      next = Poly1::X(static_cast<int>(k));
    } else if (k == 0) {
      next = Poly1(LaurentPoly(kind_ == Kind::kT ? 2 : 1));
    } else if (k == 1) {
      next = x;
    } else if (k == 2 && kind_ == Kind::kTHat) {
      // The recurrence runs on T, whose constant term is 2, not 1.
      next = Poly1::X(2) - Poly1(LaurentPoly(2));
    } else {
      next = x * members_[k - 1] - members_[k - 2];
    }
    members_.push_back(std::move(next));
  }
  return members_[static_cast<std::size_t>(n)];
}

const std::vector<LaurentPoly>& PolySeq::expansion_of(const PolySeq& from, int d) const {
  const auto key = std::make_pair(from.id(), d);
  {
    std::lock_guard lock(mu_);
    auto it = expansions_.find(key);
    if (it != expansions_.end()) return it->second;
  }
  std::vector<LaurentPoly> coeffs;
  if (from.id() == id_) {
    at(d);
    coeffs.assign(static_cast<std::size_t>(d) + 1, LaurentPoly());
    coeffs.back() = 1;
  } else {
    coeffs = expand_in(from.at(d), *this);
  }
  std::lock_guard lock(mu_);
  return expansions_.emplace(key, std::move(coeffs)).first->second;
}

const std::vector<LaurentPoly>& PolySeq::product(int i, int j) const {
  const auto key = std::make_pair(std::min(i, j), std::max(i, j));
  {
    std::lock_guard lock(mu_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  std::vector<LaurentPoly> coeffs = expand_in(at(i) * at(j), *this);
  std::lock_guard lock(mu_);
  return products_.emplace(key, std::move(coeffs)).first->second;
}

std::vector<LaurentPoly> expand_in(const Poly1& p, const PolySeq& basis) {
  if (!basis.normalized())
    throw Error(ErrorKind::kNotNormalized, "cannot expand in " + basis.name() + ": sequence is not normalized");
  std::vector<LaurentPoly> out(static_cast<std::size_t>(p.degree() + 1));
  Poly1 rest = p;
  for (int k = p.degree(); k >= 0; --k) {
    const LaurentPoly c = rest.coeff(k);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(k)] = c;
    rest -= c * basis.at(k);
  }
  return out;
}

OrderResult seq_leq(const PolySeq& p, const PolySeq& q, int n_max, bool at_q1) {
  if (!p.normalized() || !q.normalized())
    throw Error(ErrorKind::kNotNormalized, "seq_leq needs normalized sequences");
  OrderResult result{true, n_max, std::nullopt};
  for (int n = 0; n <= n_max; ++n) {
    const auto& coeffs = p.expansion_of(q, n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const bool ok = at_q1 ? coeffs[k].at_q1() >= 0 : coeffs[k].is_positive();
      if (!ok) {
        result.holds = false;
        result.witness = OrderWitness{n, static_cast<int>(k), coeffs[k]};
        return result;
      }
    }
  }
  return result;
}

}  // namespace skein
