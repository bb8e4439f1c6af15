#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skein/skein.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitViolation = 2;

struct SeqDeleter {
  void operator()(skein_seq* s) const { skein_seq_free(s); }
};
struct ResultDeleter {
  void operator()(skein_result* r) const { skein_result_free(r); }
};
using SeqHandle = std::unique_ptr<skein_seq, SeqDeleter>;
using ResultHandle = std::unique_ptr<skein_result, ResultDeleter>;

struct Failure {
  std::string message;
};

void Check(skein_status st) {
  if (st == SKEIN_ERR_PARSE) throw Failure{skein_last_error()};
  if (st != SKEIN_OK) throw Failure{std::string(skein_status_name(st)) + ": " + skein_last_error()};
}

SeqHandle OpenSeq(const std::string& spec) {
  skein_seq* s = nullptr;
  Check(skein_seq_open(spec.c_str(), &s));
  return SeqHandle(s);
}

struct Options {
  std::string basis;
  std::string seq = "s";
  std::string a, b;
  std::string check;
  std::string p_name, q_name;
  std::string file;
  int n_max = 20;
  int unique_levels = 3;
  int bound = 3;
  int box = 2;
  int n = 20;
  std::int64_t delta = 1;
  bool json = false;
  bool q1 = false;
};

using Action = std::function<skein_status(skein_result**)>;

int Print(const ResultHandle& r, bool json) {
  std::fputs(json ? skein_result_json(r.get()) : skein_result_text(r.get()), stdout);
  return skein_result_verdict(r.get()) == SKEIN_VERDICT_VIOLATION ? kExitViolation : kExitOk;
}

std::string ReadInput(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  buf << in.rdbuf();
  return buf.str();
}

CLI::App* Leaf(CLI::App* parent, const std::string& name, const std::string& desc, Options& o) {
  CLI::App* sub = parent->add_subcommand(name, desc);
  sub->add_flag("--json", o.json, "Emit JSON instead of text");
  return sub;
}

void AddBasis(CLI::App* sub, Options& o, const std::string& fallback) {
  sub->add_option("--basis", o.basis, "Basis: that, s, monomial or file:PATH")->default_str(fallback);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in skein algebras of the torus, the once-punctured torus and the "
               "four-punctured sphere"};
  app.require_subcommand(1);
  app.set_version_flag("--version", skein_version());
  Options o;
  Action action;

  CLI::App* tor = app.add_subcommand("tor", "Closed torus")->require_subcommand(1);
  {
    CLI::App* mul = Leaf(tor, "mul", "Product of two basis elements, expanded in the basis", o);
    mul->add_option("a", o.a, "Left label, e.g. (2,1)")->required();
    mul->add_option("b", o.b, "Right label, e.g. (0,1)")->required();
    AddBasis(mul, o, "that");
    mul->add_flag("--q1", o.q1, "Specialize to q = 1");
    mul->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle basis = OpenSeq(o.basis.empty() ? "that" : o.basis);
        return skein_tor_mul(o.a.c_str(), o.b.c_str(), basis.get(), o.q1, r);
      };
    });

    CLI::App* scan = Leaf(tor, "scan", "Positivity of all structure constants in a box of slopes", o);
    AddBasis(scan, o, "that");
    scan->add_option("--bound", o.bound, "Box |r|,|s| <= bound")->capture_default_str();
    scan->add_flag("--q1", o.q1, "Specialize to q = 1 before checking signs");
    scan->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle basis = OpenSeq(o.basis.empty() ? "that" : o.basis);
        return skein_tor_scan(basis.get(), o.bound, o.q1, r);
      };
    });
  }

  CLI::App* ptor = app.add_subcommand("ptor", "Once-punctured torus")->require_subcommand(1);
  {
    CLI::App* mul = Leaf(ptor, "mul", "Product of two basis elements", o);
    mul->add_option("a", o.a, "Left label, e.g. T(3,1) or (1,0)*U")->required();
    mul->add_option("b", o.b, "Right label")->required();
    AddBasis(mul, o, "that");
    mul->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle basis = OpenSeq(o.basis.empty() ? "that" : o.basis);
        return skein_ptor_mul(o.a.c_str(), o.b.c_str(), basis.get(), r);
      };
    });

    CLI::App* verify = Leaf(ptor, "verify", "Check an identity for all n up to --n-max", o);
    verify->add_option("check", o.check, "g-closed, induction or extract")
        ->required()
        ->check(CLI::IsMember({"g-closed", "induction", "extract"}));
    verify->add_option("--n-max", o.n_max, "Largest n checked")->capture_default_str();
    verify->callback([&] {
      action = [&](skein_result** r) { return skein_ptor_verify(o.check.c_str(), o.n_max, r); };
    });

    CLI::App* extract = Leaf(ptor, "extract", "Lowest q-power of P((n,1)) P((0,1))", o);
    extract->add_option("--seq", o.seq, "Sequence with P_1 = x and integer coefficients")->capture_default_str();
    extract->add_option("--n", o.n, "n")->capture_default_str();
    extract->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle seq = OpenSeq(o.seq);
        return skein_ptor_extract(seq.get(), o.n, r);
      };
    });
  }

  CLI::App* s04 = app.add_subcommand("s04", "Four-punctured sphere")->require_subcommand(1);
  {
    CLI::App* mul = Leaf(s04, "mul", "Product of two basis elements", o);
    mul->add_option("a", o.a, "Left label, e.g. S(2,1) or g1*g2")->required();
    mul->add_option("b", o.b, "Right label")->required();
    AddBasis(mul, o, "s");
    mul->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle basis = OpenSeq(o.basis.empty() ? "s" : o.basis);
        return skein_s04_mul(o.a.c_str(), o.b.c_str(), basis.get(), r);
      };
    });

    CLI::App* verify = Leaf(s04, "verify", "Check an identity for all n up to --n-max", o);
    verify->add_option("check", o.check, "h-bounds or lowest-term")
        ->required()
        ->check(CLI::IsMember({"h-bounds", "lowest-term"}));
    verify->add_option("--n-max", o.n_max, "Largest n checked")->capture_default_str();
    verify->callback([&] {
      action = [&](skein_result** r) { return skein_s04_verify(o.check.c_str(), o.n_max, r); };
    });

    CLI::App* extract = Leaf(s04, "extract", "Lowest q-power of S((n,1)) S((0,1))", o);
    extract->add_option("--n", o.n, "n")->capture_default_str();
    extract->callback([&] {
      action = [&](skein_result** r) { return skein_s04_extract(o.n, r); };
    });

    CLI::App* force = Leaf(s04, "force-p1", "Negative coefficient forced by P_1 = x + delta", o);
    force->add_option("--delta", o.delta, "Nonzero shift")->capture_default_str();
    force->callback([&] {
      action = [&](skein_result** r) { return skein_s04_force_p1(o.delta, r); };
    });
  }

  CLI::App* certify = app.add_subcommand("certify", "Bounded positivity certificates")->require_subcommand(1);
  {
    CLI::App* uniq = Leaf(certify, "torus-unique", "Every perturbation of T-hat in a box fails positivity", o);
    uniq->add_option("--n-max", o.unique_levels, "Highest perturbed level")->capture_default_str();
    uniq->add_option("--box", o.box, "Perturbation coefficients |delta_i| <= box")->capture_default_str();
    uniq->callback([&] {
      action = [&](skein_result** r) { return skein_certify_torus_unique(o.unique_levels, o.box, r); };
    });

    CLI::App* sandwich = Leaf(certify, "sandwich", "(That) <= (P) <= (S) up to --n-max", o);
    sandwich->add_option("--seq", o.seq, "Sequence P")->required();
    sandwich->add_option("--n-max", o.n_max, "Largest n checked")->capture_default_str();
    sandwich->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle seq = OpenSeq(o.seq);
        return skein_certify_sandwich(seq.get(), o.n_max, r);
      };
    });
  }

  CLI::App* cheb = Leaf(&app, "cheb", "Show member n of a sequence", o);
  cheb->add_option("seq", o.seq, "that, s, t, monomial or file:PATH")->required();
  cheb->add_option("n", o.n, "Index")->required();
  cheb->callback([&] {
    action = [&](skein_result** r) {
      SeqHandle seq = OpenSeq(o.seq);
      return skein_cheb(seq.get(), o.n, r);
    };
  });

  CLI::App* order = app.add_subcommand("order", "Partial order on sequences")->require_subcommand(1);
  {
    CLI::App* leq = Leaf(order, "leq", "(P) <= (Q): each Q_n is a positive combination of P_0..P_n", o);
    leq->add_option("p", o.p_name, "Sequence P")->required();
    leq->add_option("q", o.q_name, "Sequence Q")->required();
    leq->add_option("--n-max", o.n_max, "Largest n checked")->capture_default_str();
    leq->add_flag("--q1", o.q1, "Compare over Z at q = 1");
    leq->callback([&] {
      action = [&](skein_result** r) {
        SeqHandle p = OpenSeq(o.p_name);
        SeqHandle q = OpenSeq(o.q_name);
        return skein_order_leq(p.get(), q.get(), o.n_max, o.q1, r);
      };
    });
  }

  CLI::App* read = Leaf(&app, "read", "Parse an element JSON document and print it", o);
  read->add_option("file", o.file, "Path, or - for standard input")->required();
  read->callback([&] {
    action = [&](skein_result** r) {
      const std::string text = ReadInput(o.file);
      return skein_element_read(text.c_str(), r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFailure;
  }

  try {
    skein_result* raw = nullptr;
    Check(action(&raw));
    return Print(ResultHandle(raw), o.json);
  } catch (const Failure& f) {
    std::cerr << "skein: " << f.message << "\n";
    return kExitFailure;
  }
}
