#include "transint/monomial.hpp"

#include <algorithm>
#include <limits>

#include "transint/error.hpp"

namespace transint {

namespace {

void require_same_size(const Monomial& a, const Monomial& b, const char* op) {
  if (a.size() != b.size()) {
    throw ContextMismatch(std::string(op) + ": monomials of different contexts (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                          " variables)");
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw OverflowError("exponent overflow");
  return a + b;
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent e) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Monomial m(nvars);
  m.exps_[i] = e;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b, "mul");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_size(a, b, "divides");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b, "lcm");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b, "gcd");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw DomainError("quotient: divisor does not divide dividend");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_size(a, b, "coprime");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Monomial pow(const Monomial& m, std::uint32_t k) {
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t v = std::uint64_t{m[i]} * k;
    if (v > std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow");
    e[i] = static_cast<Exponent>(v);
  }
  return Monomial(std::move(e));
}

std::vector<std::size_t> support(std::span<const Monomial> ms) {
  std::uint64_t mask = 0;
  for (const auto& m : ms) mask |= m.support_mask();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> support(const Monomial& m) { return support(std::span(&m, 1)); }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace transint
