#include "transint/polynomial.hpp"

#include <algorithm>

#include "transint/error.hpp"

namespace transint {

namespace {

bool by_mono(const Term& a, const Term& b) { return a.mono < b.mono; }

// Merge of two sorted term lists, b negated when subtracting.
std::vector<Term> merge(const Field& field, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back(subtract ? Term{field.neg(b[j].coeff), b[j].mono} : b[j]);
      ++j;
    } else {
      Coefficient c = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back(Term{std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  auto n = ring->size();
  return monomial(std::move(ring), Monomial::one(n), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Coefficient& c) {
  if (m.size() != ring->size()) throw ContextMismatch("monomial does not fit the ring");
  Polynomial p(ring);
  Coefficient v = ring->field().normalize(c);
  if (v != 0) p.terms_.push_back(Term{std::move(v), std::move(m)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  auto n = ring->size();
  return monomial(std::move(ring), Monomial::variable(n, i));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(ring);
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->size()) throw ContextMismatch("term does not fit the ring");
  }
  std::sort(terms.begin(), terms.end(), by_mono);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      p.terms_.push_back(Term{field.normalize(std::move(t.coeff)), std::move(t.mono)});
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.mono);
  return out;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Coefficient Polynomial::constant_coefficient() const {
  // the unit monomial is the smallest exponent tuple
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  order.validate(ring_->size());
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{ring_->field().neg(t.coeff), t.mono});
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "add");
  terms_ = merge(ring_->field(), terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "sub");
  terms_ = merge(ring_->field(), terms_, other.terms_, true);
  return *this;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return order.compare(a->mono, b->mono) > 0; });
  std::string out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto& t = *sorted[k];
    Coefficient c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit_mono = t.mono.is_one();
    if (unit_mono) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += t.mono.to_string(*ring_);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "compare");
  return a.terms_ == b.terms_;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r += g;
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r -= g;
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "mul");
  const auto& field = f.ring()->field();
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) prod.push_back(Term{field.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return Polynomial::from_terms(f.ring(), std::move(prod));
}

Polynomial scale(const Coefficient& c, const Polynomial& f) {
  return mul_term(f, c, Monomial::one(f.ring()->size()));
}

Polynomial mul_term(const Polynomial& f, const Coefficient& c, const Monomial& m) {
  const auto& field = f.ring()->field();
  Coefficient v = field.normalize(c);
  std::vector<Term> out;
  if (v != 0) {
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{field.mul(t.coeff, v), t.mono * m});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial pow(const Polynomial& f, std::uint32_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->size()) throw DomainError("substitute: wrong number of images");
  for (const auto& im : images) require_same_ring(im.ring(), target, "substitute");
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i]) term = term * pow(images[i], t.mono[i]);
    }
    out += term;
  }
  return out;
}

Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.ring()->size()) throw DomainError("embed: wrong variable map size");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target->size()) throw DomainError("embed: target index out of range");
      e[var_map[i]] += t.mono[i];
    }
    terms.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace transint
