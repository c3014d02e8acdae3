#include "transint/ring.hpp"

#include <cctype>

#include "transint/error.hpp"

namespace transint {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Coefficient Field::normalize(Coefficient c) const {
  if (characteristic_ == 0) {
    c.canonicalize();
    return c;
  }
  mpz_class p = characteristic_;
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw DomainError("denominator divisible by the field characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  return Coefficient(r);
}

Coefficient Field::inverse(const Coefficient& a) const {
  if (a == 0) throw DomainError("division by zero");
  if (characteristic_ == 0) return Coefficient(1) / a;
  mpz_class p = characteristic_;
  mpz_class v = normalize(a).get_num();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Coefficient(inv);
}

std::string Field::to_string() const {
  return characteristic_ == 0 ? "Q" : "Fp(" + std::to_string(characteristic_) + ")";
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

Ring::Ring(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(field) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

RingPtr Ring::make(std::vector<std::string> names, Field field, bool allow_reserved) {
  if (names.empty()) throw DomainError("a ring needs at least one variable");
  if (names.size() > kMaxVariables) {
    throw DomainError("too many variables: " + std::to_string(names.size()) + " > " +
                      std::to_string(kMaxVariables));
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!allow_reserved && n.front() == '_') {
      throw DomainError("variable name '" + n + "' is reserved");
    }
    if (!seen.emplace(n, 0).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  return RingPtr(new Ring(std::move(names), field));
}

RingPtr Ring::numbered(const std::string& prefix, std::size_t n, Field field) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), field);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw ContextMismatch(std::string(op) + ": operands belong to different rings");
}

std::string coefficient_to_string(const Coefficient& c) { return c.get_str(); }

}  // namespace transint
