#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace transint {

using Coefficient = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or Z/p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  /// Canonical representative: reduced fraction over Q, an integer in [0, p) over Z/p.
  Coefficient normalize(Coefficient c) const;
  Coefficient add(const Coefficient& a, const Coefficient& b) const { return normalize(a + b); }
  Coefficient sub(const Coefficient& a, const Coefficient& b) const { return normalize(a - b); }
  Coefficient mul(const Coefficient& a, const Coefficient& b) const { return normalize(a * b); }
  Coefficient neg(const Coefficient& a) const { return normalize(-a); }
  Coefficient inverse(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const { return mul(a, inverse(b)); }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_;
};

/// Hard cap on the number of variables of a context.
inline constexpr std::size_t kMaxVariables = 64;

/// Variable context K[x_1..x_n]: an ordered list of distinct names plus the
/// coefficient field. Shared by pointer; two values belong to the same ring
/// iff they point at the same Ring (or at rings that compare equal).
class Ring {
 public:
  /// Names must be distinct identifiers. Names starting with '_' are reserved
  /// for internal variables unless `allow_reserved` is set.
  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          Field field = Field::rationals(),
                                          bool allow_reserved = false);

  /// Convenience: prefix1, ..., prefixN.
  static std::shared_ptr<const Ring> numbered(const std::string& prefix, std::size_t n,
                                              Field field = Field::rationals());

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const Field& field() const noexcept { return field_; }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.field_ == b.field_;
  }

 private:
  Ring(std::vector<std::string> names, Field field);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws ContextMismatch unless both pointers denote the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op);

bool is_identifier(std::string_view s);

/// Exact text of a coefficient: "3", "-2/5".
std::string coefficient_to_string(const Coefficient& c);

}  // namespace transint
