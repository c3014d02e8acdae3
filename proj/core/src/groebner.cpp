#include "transint/groebner.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "transint/error.hpp"

namespace transint {

namespace {

using TermList = std::vector<Term>;  // sorted descending in the active order

class Engine {
 public:
  Engine(const RingPtr& ring, const MonomialOrder& order) : ring_(ring), field_(ring->field()), order_(order) {
    order_.validate(ring->size());
  }

  bool greater(const Monomial& a, const Monomial& b) const { return order_.compare(a, b) > 0; }

  TermList sorted(const Polynomial& f) const {
    TermList t = f.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return greater(a.mono, b.mono); });
    return t;
  }

  Polynomial to_poly(const TermList& t) const { return Polynomial::from_terms(ring_, t); }

  // p[from..] - c·m·g[1..], assuming the leading terms cancel.
  TermList cancel_lead(const TermList& p, std::size_t from, const Coefficient& c, const Monomial& m,
                       const TermList& g) const {
    TermList out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from + 1, j = 1;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Monomial gm = g[j].mono * m;
      if (i < p.size()) {
        auto cmp = order_.compare(p[i].mono, gm);
        if (cmp > 0) {
          out.push_back(p[i++]);
          continue;
        }
        if (cmp == 0) {
          Coefficient v = field_.sub(p[i].coeff, field_.mul(c, g[j].coeff));
          if (v != 0) out.push_back(Term{std::move(v), std::move(gm)});
          ++i;
          ++j;
          continue;
        }
      }
      out.push_back(Term{field_.neg(field_.mul(c, g[j].coeff)), std::move(gm)});
      ++j;
    }
    return out;
  }

  TermList reduce(TermList p, const std::vector<const TermList*>& divisors) const {
    TermList rem;
    std::size_t head = 0;
    while (head < p.size()) {
      const Term& lead = p[head];
      const TermList* hit = nullptr;
      for (const auto* g : divisors) {
        if (divides(g->front().mono, lead.mono)) {
          hit = g;
          break;
        }
      }
      if (!hit) {
        rem.push_back(lead);
        ++head;
        continue;
      }
      Coefficient c = field_.div(lead.coeff, hit->front().coeff);
      Monomial m = quotient(lead.mono, hit->front().mono);
      p = cancel_lead(p, head, c, m, *hit);
      head = 0;
    }
    return rem;
  }

  TermList monic(TermList p) const {
    if (p.empty()) return p;
    Coefficient inv = field_.inverse(p.front().coeff);
    for (auto& t : p) t.coeff = field_.mul(t.coeff, inv);
    return p;
  }

  TermList spoly(const TermList& f, const TermList& g) const {
    Monomial l = lcm(f.front().mono, g.front().mono);
    Monomial mf = quotient(l, f.front().mono);
    Monomial mg = quotient(l, g.front().mono);
    // (l/lm f)·f/lc f − (l/lm g)·g/lc g
    Coefficient cf = field_.inverse(f.front().coeff);
    Coefficient cg = field_.inverse(g.front().coeff);
    TermList a;
    a.reserve(f.size());
    for (const auto& t : f) a.push_back(Term{field_.mul(t.coeff, cf), t.mono * mf});
    TermList b;
    b.reserve(g.size());
    for (const auto& t : g) b.push_back(Term{field_.mul(t.coeff, cg), t.mono * mg});
    return cancel_lead(a, 0, Coefficient(1), Monomial::one(ring_->size()), b);
  }

  const MonomialOrder& order() const { return order_; }
  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  const Field& field_;
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t degree;
};

class Buchberger {
 public:
  Buchberger(const Engine& engine, const BuchbergerOptions& options, BuchbergerStats& stats)
      : eng_(engine), opt_(options), stats_(stats) {}

  void add(TermList g) {
    std::size_t idx = basis_.size();
    basis_.push_back(std::move(g));
    for (std::size_t k = 0; k < idx; ++k) {
      Monomial l = lcm(basis_[k].front().mono, basis_[idx].front().mono);
      auto d = l.degree();
      pairs_.push_back(Pair{k, idx, std::move(l), d});
      pending_.insert({k, idx});
      ++stats_.pairs_created;
    }
  }

  void run() {
    while (!pairs_.empty()) {
      std::vector<Pair> batch = take_batch();
      std::vector<Pair> live;
      for (auto& p : batch) {
        pending_.erase({p.i, p.j});
        if (skip(p)) continue;
        live.push_back(std::move(p));
      }
      std::vector<TermList> remainders(live.size());
      auto snapshot = divisor_view();
      if (opt_.parallel && live.size() > 1) {
        std::vector<std::future<TermList>> jobs;
        for (const auto& p : live) {
          jobs.push_back(std::async(std::launch::async, [this, &p, &snapshot] {
            return eng_.reduce(eng_.spoly(basis_[p.i], basis_[p.j]), snapshot);
          }));
        }
        for (std::size_t k = 0; k < jobs.size(); ++k) remainders[k] = jobs[k].get();
      } else {
        for (std::size_t k = 0; k < live.size(); ++k) {
          remainders[k] = eng_.reduce(eng_.spoly(basis_[live[k].i], basis_[live[k].j]), snapshot);
        }
      }
      for (auto& r : remainders) {
        if (opt_.parallel) r = eng_.reduce(std::move(r), divisor_view());
        if (r.empty()) {
          ++stats_.zero_reductions;
          continue;
        }
        add(eng_.monic(std::move(r)));
      }
    }
  }

  std::vector<TermList>& basis() { return basis_; }

 private:
  std::vector<const TermList*> divisor_view() const {
    std::vector<const TermList*> v;
    v.reserve(basis_.size());
    for (const auto& g : basis_) v.push_back(&g);
    return v;
  }

  // Normal strategy: smallest lcm degree, then smallest lcm in the order,
  // then creation indices. In parallel mode every pair of that degree.
  std::vector<Pair> take_batch() {
    auto better = [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      auto c = eng_.order().compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::sort(pairs_.begin(), pairs_.end(), better);
    std::size_t take = 1;
    if (opt_.parallel) {
      while (take < pairs_.size() && pairs_[take].degree == pairs_.front().degree) ++take;
    }
    std::vector<Pair> batch(std::make_move_iterator(pairs_.begin()),
                            std::make_move_iterator(pairs_.begin() + static_cast<std::ptrdiff_t>(take)));
    pairs_.erase(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(take));
    return batch;
  }

  bool skip(const Pair& p) {
    const auto& lf = basis_[p.i].front().mono;
    const auto& lg = basis_[p.j].front().mono;
    if (opt_.coprime_criterion && coprime(lf, lg)) {
      ++stats_.skipped_coprime;
      return true;
    }
    if (opt_.chain_criterion) {
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == p.i || k == p.j) continue;
        if (pending_.count(ordered(p.i, k)) || pending_.count(ordered(p.j, k))) continue;
        if (divides(basis_[k].front().mono, p.lcm)) {
          ++stats_.skipped_chain;
          return true;
        }
      }
    }
    return false;
  }

  static std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  const Engine& eng_;
  const BuchbergerOptions& opt_;
  BuchbergerStats& stats_;
  std::vector<TermList> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

// Minimal, interreduced, monic, sorted descending by leading monomial.
std::vector<TermList> reduce_basis(const Engine& eng, std::vector<TermList> g) {
  std::sort(g.begin(), g.end(), [&](const TermList& a, const TermList& b) { return eng.greater(b.front().mono, a.front().mono); });
  std::vector<TermList> minimal;
  for (auto& f : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const TermList& h) { return divides(h.front().mono, f.front().mono); });
    if (!redundant) minimal.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const TermList*> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(&minimal[k]);
    }
    TermList lead{minimal[i].front()};
    TermList tail(minimal[i].begin() + 1, minimal[i].end());
    TermList rest = eng.reduce(std::move(tail), others);
    lead.insert(lead.end(), rest.begin(), rest.end());
    minimal[i] = eng.monic(std::move(lead));
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const TermList& a, const TermList& b) { return eng.greater(a.front().mono, b.front().mono); });
  return minimal;
}

}  // namespace

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("ideal without a ring");
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::string Ideal::to_string(const MonomialOrder& order) const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string(order);
  }
  return s + ">";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, std::uint32_t r) {
  if (r == 0) return Ideal(a.ring(), {Polynomial::constant(a.ring(), 1)});
  const auto& g = a.generators();
  std::vector<Polynomial> out;
  // multisets of size r over indices 0..k-1, as non-decreasing index tuples
  std::vector<std::size_t> idx(r, 0);
  if (g.empty()) return Ideal(a.ring());
  for (;;) {
    Polynomial p = Polynomial::constant(a.ring(), 1);
    for (auto i : idx) p = p * g[i];
    out.push_back(std::move(p));
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == g.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < r; ++k) idx[k] = idx[pos - 1];
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal from_monomial_ideal(const MonomialIdeal& m) {
  std::vector<Polynomial> gens;
  for (const auto& g : m.generators()) gens.push_back(Polynomial::monomial(m.ring(), g));
  return Ideal(m.ring(), std::move(gens));
}

std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal) {
  std::vector<Monomial> ms;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) return std::nullopt;
    ms.push_back(g.terms().front().mono);
  }
  return MonomialIdeal(ideal.ring(), std::move(ms));
}

bool GroebnerBasis::is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }

MonomialIdeal GroebnerBasis::lt_ideal() const {
  std::vector<Monomial> lts;
  for (const auto& g : basis) lts.push_back(g.leading_term(order).mono);
  return MonomialIdeal(ring, std::move(lts));
}

std::string GroebnerBasis::to_string() const {
  std::string s;
  for (const auto& g : basis) s += g.to_string(order) + "\n";
  return s;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  require_same_ring(a.ring, b.ring, "compare bases");
  return a.order == b.order && a.basis == b.basis;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  Engine eng(f.ring(), order);
  std::vector<TermList> g;
  for (const auto& d : divisors) {
    require_same_ring(f.ring(), d.ring(), "normal_form");
    if (d.is_zero()) throw DomainError("normal_form: zero divisor polynomial");
    g.push_back(eng.sorted(d));
  }
  std::vector<const TermList*> view;
  for (const auto& x : g) view.push_back(&x);
  return eng.to_poly(eng.reduce(eng.sorted(f), view));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial of zero");
  Engine eng(f.ring(), order);
  return eng.to_poly(eng.spoly(eng.sorted(f), eng.sorted(g)));
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& options,
                         BuchbergerStats* stats) {
  Engine eng(ideal.ring(), order);
  BuchbergerStats local;
  Buchberger bb(eng, options, stats ? *stats : local);
  for (const auto& g : ideal.generators()) {
    // reduce incoming generators against what is already there; pairs still
    // account for the unreduced ones since the reduced ones generate the same ideal
    std::vector<const TermList*> view;
    for (const auto& h : bb.basis()) view.push_back(&h);
    TermList r = eng.reduce(eng.sorted(g), view);
    if (!r.empty()) bb.add(eng.monic(std::move(r)));
  }
  bb.run();
  GroebnerBasis out{ideal.ring(), {}, order, true};
  for (auto& t : reduce_basis(eng, std::move(bb.basis()))) out.basis.push_back(eng.to_poly(t));
  return out;
}

bool is_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  require_same_ring(f.ring(), ideal.ring(), "is_member");
  auto gb = buchberger(ideal, order);
  return normal_form(f, gb.basis, order).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  require_same_ring(a.ring(), b.ring(), "ideal_equal");
  return buchberger(a, order).basis == buchberger(b, order).basis;
}

bool is_proper(const Ideal& ideal, const MonomialOrder& order) { return !buchberger(ideal, order).is_unit(); }

namespace {

MonomialOrder with_leading_block(const MonomialOrder& order, std::size_t n) {
  std::vector<std::pair<std::vector<std::size_t>, MonomialOrder>> groups;
  groups.push_back({{0}, MonomialOrder::lex()});
  if (order.kind() == MonomialOrder::Kind::Block) {
    for (const auto& g : order.groups()) {
      std::vector<std::size_t> shifted;
      for (auto v : g.vars) shifted.push_back(v + 1);
      groups.push_back({std::move(shifted), g.inner.front()});
    }
  } else {
    std::vector<std::size_t> rest(n);
    for (std::size_t i = 0; i < n; ++i) rest[i] = i + 1;
    groups.push_back({std::move(rest), order});
  }
  return MonomialOrder::block(std::move(groups));
}

}  // namespace

Ideal elim_intersect(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  require_same_ring(a.ring(), b.ring(), "elim_intersect");
  const auto& ring = a.ring();
  order.validate(ring->size());
  if (a.is_zero() || b.is_zero()) return Ideal(ring);

  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  auto ext = Ring::make(std::move(names), ring->field(), /*allow_reserved=*/true);
  std::vector<std::size_t> up(ring->size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = i + 1;

  auto t = Polynomial::variable(ext, 0);
  auto one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * embed(f, ext, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, ext, up));

  auto elim_order = with_leading_block(order, ring->size());
  auto gb = buchberger(Ideal(ext, std::move(gens)), elim_order);

  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    bool t_free = std::all_of(g.terms().begin(), g.terms().end(), [](const Term& x) { return x.mono[0] == 0; });
    if (!t_free) continue;
    std::vector<Term> terms;
    for (const auto& x : g.terms()) {
      auto e = x.mono.exponents();
      terms.push_back(Term{x.coeff, Monomial(std::vector<Exponent>(e.begin() + 1, e.end()))});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const MonomialOrder& order) {
  require_same_ring(g.ring(), f.ring(), "exact_divide");
  if (f.is_zero()) throw DomainError("exact_divide by zero");
  Engine eng(g.ring(), order);
  TermList divisor = eng.sorted(f);
  TermList p = eng.sorted(g);
  std::vector<Term> q;
  const auto& field = g.ring()->field();
  while (!p.empty()) {
    if (!divides(divisor.front().mono, p.front().mono)) {
      throw ConsistencyError("exact_divide: " + f.to_string(order) + " does not divide " + g.to_string(order));
    }
    Coefficient c = field.div(p.front().coeff, divisor.front().coeff);
    Monomial m = quotient(p.front().mono, divisor.front().mono);
    p = eng.cancel_lead(p, 0, c, m, divisor);
    q.push_back(Term{std::move(c), std::move(m)});
  }
  return Polynomial::from_terms(g.ring(), std::move(q));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const MonomialOrder& order) {
  require_same_ring(ideal.ring(), f.ring(), "ideal_quotient");
  if (f.is_zero()) throw DomainError("ideal_quotient by the zero polynomial");
  Ideal meet = elim_intersect(ideal, Ideal(ideal.ring(), {f}), order);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f, order));
  return Ideal(ideal.ring(), std::move(gens));
}

bool is_nzd(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  require_same_ring(f.ring(), ideal.ring(), "is_nzd");
  if (f.is_zero()) throw DomainError("is_nzd: zero polynomial");
  if (!is_proper(ideal, order)) throw DomainError("is_nzd: the ideal is the unit ideal");
  return ideal_equal(ideal_quotient(ideal, f, order), ideal, order);
}

RegularSequenceResult is_regular_sequence(std::span<const Polynomial> seq, const Ideal& ideal,
                                          const MonomialOrder& order) {
  Ideal current = ideal;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    require_same_ring(seq[i].ring(), ideal.ring(), "is_regular_sequence");
    RegularSequenceResult fail{false, i + 1, {}};
    if (!is_proper(current, order)) {
      fail.reason = "quotient ring is zero at stage " + std::to_string(i + 1);
      return fail;
    }
    if (seq[i].is_zero()) {
      fail.reason = "element " + std::to_string(i + 1) + " is zero";
      return fail;
    }
    if (!is_nzd(seq[i], current, order)) {
      fail.reason = "element " + std::to_string(i + 1) + " is a zero divisor";
      return fail;
    }
    current = ideal_sum(current, Ideal(ideal.ring(), {seq[i]}));
  }
  if (!is_proper(current, order)) {
    return {false, seq.size(), "the sequence generates the unit ideal modulo I"};
  }
  return {true, 0, {}};
}

bool lt_support_transversal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  require_same_ring(a.ring(), b.ring(), "lt_support_transversal");
  auto la = buchberger(a, order).lt_ideal();
  auto lb = buchberger(b, order).lt_ideal();
  std::uint64_t sa = 0, sb = 0;
  for (const auto& m : la.generators()) sa |= m.support_mask();
  for (const auto& m : lb.generators()) sb |= m.support_mask();
  return (sa & sb) == 0;
}

TransversalCertificate transversal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  require_same_ring(a.ring(), b.ring(), "transversal");
  TransversalCertificate cert;
  cert.intersection = buchberger(elim_intersect(a, b, order), order);
  cert.product = buchberger(ideal_product(a, b), order);
  cert.equal = cert.intersection.basis == cert.product.basis;
  return cert;
}

TransversalCertificate power_transversal(const Ideal& ideal, std::span<const Polynomial> gs, std::uint32_t r,
                                         const MonomialOrder& order) {
  if (r == 0) throw DomainError("power_transversal: r must be positive");
  auto reg = is_regular_sequence(gs, ideal, order);
  if (!reg.regular) throw PreconditionError("not a regular sequence on R/I: " + reg.reason, reg.failed_stage);
  Ideal j(ideal.ring(), std::vector<Polynomial>(gs.begin(), gs.end()));
  return transversal(ideal, ideal_power(j, r), order);
}

std::size_t dimension(const Ideal& ideal, const MonomialOrder& order) {
  const auto n = ideal.ring()->size();
  if (n > kMaxDimensionVariables) {
    throw DomainError("dimension: at most " + std::to_string(kMaxDimensionVariables) + " variables supported");
  }
  auto gb = buchberger(ideal, order);
  if (gb.is_unit()) throw DomainError("dimension of the unit ideal");
  std::vector<std::uint64_t> masks;
  auto lt = gb.lt_ideal();
  for (const auto& m : lt.generators()) masks.push_back(m.support_mask());
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (size <= best) continue;
    bool independent = std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & ~s) != 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace transint
