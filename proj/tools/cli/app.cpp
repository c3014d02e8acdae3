#include "cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "cli/properties.hpp"
#include "cli/session.hpp"
#include "transint/complexes.hpp"
#include "transint/error.hpp"
#include "transint/gallery.hpp"
#include "transint/parse.hpp"
#include "transint/simplicial.hpp"

namespace transint::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string session_path;
  bool json_output = false;
  std::uint64_t seed = 1;
  std::size_t max_vars = kMaxVariables;
  double timeout_secs = 0;

  std::string lhs, rhs, ideal, poly, by, seq, against, name, name2;
  bool parallel = false;
  std::size_t count = 20;
  std::string case_id;
  std::map<std::string, std::int64_t> params;
};

/// Ends the process with exit code 2 when the deadline passes first.
class Watchdog {
 public:
  Watchdog(double secs, std::ostream& err) {
    if (secs <= 0) return;
    thread_ = std::thread([this, secs, &err] {
      std::unique_lock lock(mutex_);
      auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(secs);
      if (cv_.wait_until(lock, deadline, [this] { return done_; })) return;
      err << "error: timed out after " << secs << " s" << std::endl;
      std::fflush(nullptr);
      std::_Exit(kUsage);
    });
  }
  ~Watchdog() {
    if (!thread_.joinable()) return;
    {
      std::lock_guard lock(mutex_);
      done_ = true;
    }
    cv_.notify_all();
    thread_.join();
  }

 private:
  std::thread thread_;
  std::mutex mutex_;
  std::condition_variable cv_;
  bool done_ = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read session file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json strings(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string(order));
  return a;
}

std::string joined(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  std::string s = "<";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) s += ", ";
    s += ps[k].to_string(order);
  }
  return s + ">";
}

json ranks_json(const FreeComplex& c) {
  json a = json::array();
  for (auto r : c.ranks()) a.push_back(r);
  return a;
}

std::string ranks_text(const FreeComplex& c) {
  std::string s;
  for (auto r : c.ranks()) s += (s.empty() ? "" : " ") + std::to_string(r);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void load() {
    if (o_.session_path.empty()) throw DomainError("this command needs --session FILE");
    auto text = read_text(o_.session_path);
    s_ = parse_session(text);
    if (s_->ring->size() > o_.max_vars) {
      throw DomainError("ring has " + std::to_string(s_->ring->size()) + " variables; --max-vars is " +
                        std::to_string(o_.max_vars));
    }
  }

  bool loaded() const { return s_.has_value(); }
  const MonomialOrder& order() const { return s_->order; }

  MonomialIdeal monomial(const std::string& name) const {
    auto m = as_monomial_ideal(s_->ideal(name));
    if (!m) throw DomainError("ideal '" + name + "' is not generated by monomials");
    if (m->is_unit()) throw DomainError("ideal '" + name + "' is the unit ideal");
    return *m;
  }

  int emit(const json& j, const std::string& text, int code) {
    if (o_.json_output) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
    return code;
  }

  int check_transversal() {
    const auto& i = s_->ideal(o_.lhs);
    const auto& j = s_->ideal(o_.rhs);
    auto cert = transversal(i, j, order());
    json doc = {{"command", "check-transversal"},
                {"lhs", o_.lhs},
                {"rhs", o_.rhs},
                {"order", order().to_string(*s_->ring)},
                {"intersection", strings(cert.intersection.basis, order())},
                {"product", strings(cert.product.basis, order())},
                {"transversal", cert.equal}};
    std::string text = "intersection: " + joined(cert.intersection.basis, order()) + "\n" +
                       "product: " + joined(cert.product.basis, order()) + "\n";
    auto mi = as_monomial_ideal(i);
    auto mj = as_monomial_ideal(j);
    if (mi && mj && !mi->is_unit() && !mj->is_unit()) {
      auto mono = is_transversal_monomial(*mi, *mj);
      if (mono.transversal != cert.equal) {
        throw ConsistencyError("monomial and Groebner transversality tests disagree");
      }
      doc["support_disjoint"] = mono.support_disjoint;
      text += std::string("support disjoint: ") + yes_no(mono.support_disjoint) + "\n";
    }
    text += std::string("transversal: ") + yes_no(cert.equal) + "\n";
    return emit(doc, text, cert.equal ? kTrue : kFalse);
  }

  int ideal_result(const std::string& command, const std::vector<Polynomial>& basis) {
    json doc = {{"command", command}, {"order", order().to_string(*s_->ring)}, {"basis", strings(basis, order())}};
    std::string text;
    for (const auto& g : basis) text += g.to_string(order()) + "\n";
    return emit(doc, text, kTrue);
  }

  int intersect() {
    return ideal_result("intersect", elim_intersect(s_->ideal(o_.name), s_->ideal(o_.name2), order()).generators());
  }

  int product() {
    auto p = ideal_product(s_->ideal(o_.name), s_->ideal(o_.name2));
    return ideal_result("product", buchberger(p, order()).basis);
  }

  int groebner() {
    BuchbergerOptions opts;
    opts.parallel = o_.parallel;
    return ideal_result("groebner", buchberger(s_->ideal(o_.name), order(), opts).basis);
  }

  int quotient() {
    auto f = parse_polynomial(o_.by, s_->ring);
    return ideal_result("quotient", ideal_quotient(s_->ideal(o_.ideal), f, order()).generators());
  }

  int nzd() {
    auto f = parse_polynomial(o_.poly, s_->ring);
    bool ok = is_nzd(f, s_->ideal(o_.ideal), order());
    json doc = {{"command", "nzd"}, {"ideal", o_.ideal}, {"poly", f.to_string(order())}, {"nonzerodivisor", ok}};
    return emit(doc, std::string("nonzerodivisor: ") + yes_no(ok) + "\n", ok ? kTrue : kFalse);
  }

  int regseq() {
    auto seq = parse_polynomial_list(o_.seq, s_->ring);
    auto res = is_regular_sequence(seq, s_->ideal(o_.ideal), order());
    json doc = {{"command", "regseq"},
                {"ideal", o_.ideal},
                {"sequence", strings(seq, order())},
                {"regular", res.regular},
                {"failed_stage", res.failed_stage},
                {"reason", res.reason}};
    std::string text = std::string("regular: ") + yes_no(res.regular) + "\n";
    if (!res.regular) text += "stage " + std::to_string(res.failed_stage) + ": " + res.reason + "\n";
    return emit(doc, text, res.regular ? kTrue : kFalse);
  }

  static void require_complex(const FreeComplex& c) {
    if (auto check = verify_complex(c); !check) throw ConsistencyError("d∘d ≠ 0: " + check.message);
  }

  int taylor_cmd() {
    auto m = monomial(o_.name);
    auto t = taylor(m);
    require_complex(t);
    bool acyclic = static_cast<bool>(is_acyclic_multigraded(t, m));
    if (!acyclic) throw ConsistencyError("Taylor complex is not acyclic");
    json doc = to_json(t);
    doc["command"] = "taylor";
    doc["acyclic"] = acyclic;
    doc["minimal"] = is_minimal(t);
    std::string text = "ranks: " + ranks_text(t) + "\nacyclic: yes\nminimal: " + yes_no(is_minimal(t)) + "\n";
    return emit(doc, text, kTrue);
  }

  int tensor_cmd() {
    auto a = monomial(o_.name);
    auto b = monomial(o_.name2);
    auto t = tensor(taylor(a), taylor(b));
    require_complex(t);
    bool disjoint = is_transversal_monomial(a, b).support_disjoint;
    json doc = {{"command", "tensor"}, {"ranks", ranks_json(t)}, {"support_disjoint", disjoint}};
    std::string text = "ranks: " + ranks_text(t) + "\n";
    if (disjoint) {
      if (auto check = taylor_iso_check(a, b); !check) throw ConsistencyError("ψ check failed: " + check.message);
      doc["isomorphic_to_taylor_of_sum"] = true;
      text += "isomorphic to the Taylor complex of the sum: yes\n";
    }
    bool acyclic = static_cast<bool>(is_acyclic_multigraded(t, sum(a, b)));
    doc["acyclic"] = acyclic;
    text += std::string("resolves the sum: ") + yes_no(acyclic) + "\n";
    return emit(doc, text, acyclic ? kTrue : kFalse);
  }

  int prune_cmd() {
    auto m = monomial(o_.name);
    auto p = prune(taylor(m));
    std::string betti;
    json b = json::array();
    for (auto r : betti_numbers(p)) {
      betti += (betti.empty() ? "" : " ") + std::to_string(r);
      b.push_back(r);
    }
    json doc = {{"command", "prune"}, {"betti", b}, {"minimal", is_minimal(p)}, {"complex", to_json(p)}};
    return emit(doc, "betti: " + betti + "\n" + betti_table(p), kTrue);
  }

  int acyclic_cmd() {
    auto against = monomial(o_.against);
    if (s_->has_simplicial(o_.name)) {
      auto res = supported_resolution_check(against, s_->simplicial(o_.name));
      json doc = {{"command", "acyclic"},
                  {"complex", o_.name},
                  {"against", o_.against},
                  {"is_complex", res.is_complex},
                  {"acyclic", res.acyclic},
                  {"minimal", res.minimal}};
      std::string text = std::string("complex: ") + yes_no(res.is_complex) + "\nacyclic: " + yes_no(res.acyclic) +
                         "\nminimal: " + yes_no(res.minimal) + "\n";
      return emit(doc, text, res.is_complex && res.acyclic ? kTrue : kFalse);
    }
    auto t = taylor(monomial(o_.name));
    auto res = is_acyclic_multigraded(t, against);
    json doc = {{"command", "acyclic"}, {"complex", o_.name}, {"against", o_.against}, {"acyclic", res.acyclic}};
    std::string text = std::string("acyclic: ") + yes_no(res.acyclic) + "\n";
    if (!res.acyclic && res.failing_degree) {
      doc["failing_degree"] = res.failing_degree->to_string(*s_->ring);
      doc["position"] = res.position;
      text += "homology at position " + std::to_string(res.position) + " in degree " +
              res.failing_degree->to_string(*s_->ring) + "\n";
    }
    return emit(doc, text, res.acyclic ? kTrue : kFalse);
  }

  int dimension_cmd() {
    auto d = dimension(s_->ideal(o_.name), order());
    json doc = {{"command", "dimension"}, {"ideal", o_.name}, {"dimension", d}};
    return emit(doc, "dimension: " + std::to_string(d) + "\n", kTrue);
  }

  int verify_cmd() {
    FamilySpec spec{o_.case_id, o_.params};
    auto report = verify(spec);
    return emit(report.to_json(), report.to_text(), report.passed() ? kTrue : kFalse);
  }

  int selftest() {
    std::vector<SuiteResult> results = {
        disjoint_equivalence_suite(o_.seed, o_.count), taylor_suite(o_.seed, o_.count),
        taylor_tensor_suite(o_.seed, o_.count),        minimal_tensor_suite(o_.seed, o_.count),
        join_suite(o_.seed, o_.count),                 supported_suite(o_.seed, o_.count),
        dissup_suite(o_.seed, o_.count),
    };
    bool ok = true;
    json doc = {{"command", "selftest"}, {"seed", std::to_string(o_.seed)}, {"suites", json::array()}};
    std::string text;
    for (const auto& r : results) {
      ok = ok && r.ok();
      doc["suites"].push_back({{"name", r.name},
                               {"cases", r.cases},
                               {"failures", r.failures},
                               {"skipped", r.skipped},
                               {"first_failure", r.first_failure}});
      text += (r.ok() ? "ok   " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases";
      if (r.skipped) text += ", " + std::to_string(r.skipped) + " skipped";
      text += ")\n";
      if (!r.first_failure.empty()) text += "     " + r.first_failure + "\n";
    }
    doc["passed"] = ok;
    return emit(doc, text, ok ? kTrue : kConsistency);
  }

  int session_cmd() {
    json doc = {{"command", "session"}, {"text", print_session(*s_)}};
    return emit(doc, print_session(*s_), kTrue);
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::optional<Session> s_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decides and certifies transversal intersections of polynomial ideals.", "transint"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-s,--session", o.session_path, "Session file with ring, order and declarations ('-' for stdin)");
  app.add_flag("--json", o.json_output, "Print JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--max-vars", o.max_vars, "Reject sessions with more variables")->check(CLI::Range(1, 64));
  app.add_option("--timeout-secs", o.timeout_secs, "Abort with exit code 2 after this many seconds")
      ->check(CLI::NonNegativeNumber);

  auto* ct = app.add_subcommand("check-transversal", "Decide I ∩ J = I·J");
  ct->add_option("--lhs", o.lhs, "First ideal")->required();
  ct->add_option("--rhs", o.rhs, "Second ideal")->required();

  auto* in = app.add_subcommand("intersect", "Reduced Groebner basis of I ∩ J");
  in->add_option("lhs", o.name, "First ideal")->required();
  in->add_option("rhs", o.name2, "Second ideal")->required();

  auto* pr = app.add_subcommand("product", "Reduced Groebner basis of I·J");
  pr->add_option("lhs", o.name, "First ideal")->required();
  pr->add_option("rhs", o.name2, "Second ideal")->required();

  auto* gb = app.add_subcommand("groebner", "Reduced Groebner basis");
  gb->add_option("name", o.name, "Ideal")->required();
  gb->add_flag("--parallel", o.parallel, "Reduce S-pairs of equal degree concurrently");

  auto* qu = app.add_subcommand("quotient", "Ideal quotient (I : f)");
  qu->add_option("--ideal", o.ideal, "Ideal")->required();
  qu->add_option("--by", o.by, "Polynomial")->required();

  auto* nz = app.add_subcommand("nzd", "Is f a nonzerodivisor on R/I");
  nz->add_option("--ideal", o.ideal, "Ideal")->required();
  nz->add_option("--poly", o.poly, "Polynomial")->required();

  auto* rs = app.add_subcommand("regseq", "Is f1, ..., fk a regular sequence on R/I");
  rs->add_option("--ideal", o.ideal, "Ideal")->required();
  rs->add_option("--seq", o.seq, "Comma separated polynomials")->required();

  auto* ta = app.add_subcommand("taylor", "Taylor complex of a monomial ideal");
  ta->add_option("name", o.name, "Monomial ideal")->required();

  auto* te = app.add_subcommand("tensor", "Tensor product of two Taylor complexes");
  te->add_option("lhs", o.name, "First monomial ideal")->required();
  te->add_option("rhs", o.name2, "Second monomial ideal")->required();

  auto* pu = app.add_subcommand("prune", "Minimal resolution by pruning the Taylor complex");
  pu->add_option("name", o.name, "Monomial ideal")->required();

  auto* ac = app.add_subcommand("acyclic", "Is the complex a resolution of R/I");
  ac->add_option("name", o.name, "Simplicial complex or monomial ideal")->required();
  ac->add_option("--against", o.against, "Monomial ideal")->required();

  auto* di = app.add_subcommand("dimension", "Krull dimension of R/I");
  di->add_option("name", o.name, "Ideal")->required();

  auto* ve = app.add_subcommand("verify", "Verify a named family instance");
  ve->add_option("--case", o.case_id, "rnc, rnc-sum, xy, hankel-h or power")->required();
  for (const char* p : {"n", "a", "b", "c", "r", "p", "q", "i"}) {
    ve->add_option_function<std::int64_t>(std::string("--") + p, [&o, p](std::int64_t v) { o.params[p] = v; },
                                          "Family parameter");
  }

  auto* st = app.add_subcommand("selftest", "Run the seeded property suites");
  st->add_option("--count", o.count, "Instances per suite")->check(CLI::Range(1, 10000));

  auto* se = app.add_subcommand("session", "Parse a session and print it canonically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Watchdog watchdog(o.timeout_secs, err);
  Runner runner(o, out);
  try {
    auto* cmd = app.get_subcommands().front();
    if (cmd == ve) return runner.verify_cmd();
    if (cmd == st) return runner.selftest();
    runner.load();
    if (cmd == ct) return runner.check_transversal();
    if (cmd == in) return runner.intersect();
    if (cmd == pr) return runner.product();
    if (cmd == gb) return runner.groebner();
    if (cmd == qu) return runner.quotient();
    if (cmd == nz) return runner.nzd();
    if (cmd == rs) return runner.regseq();
    if (cmd == ta) return runner.taylor_cmd();
    if (cmd == te) return runner.tensor_cmd();
    if (cmd == pu) return runner.prune_cmd();
    if (cmd == ac) return runner.acyclic_cmd();
    if (cmd == di) return runner.dimension_cmd();
    if (cmd == se) return runner.session_cmd();
    err << "error: unknown command\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency violation: " << e.what() << "\n";
    return kConsistency;
  } catch (const ParseError& e) {
    // positions before the session is loaded refer to the session file
    err << "parse error: " << (runner.loaded() ? "" : o.session_path + ":") << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kConsistency;
  }
}

}  // namespace transint::cli
