#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "transint/groebner.hpp"

namespace transint {

/// Ring x1..x_{n+1}.
RingPtr rnc_ring(std::size_t n, Field field = Field::rationals());

/// I_2 of the 2×n matrix with rows (x1..xn) and (x2..x_{n+1}):
/// x_i x_{j+1} - x_{i+1} x_j for 1 ≤ i < j ≤ n, in (i, j) lexicographic order.
Ideal rational_normal_curve(std::size_t n, const RingPtr& ring = nullptr);

/// <x1^a + x_{n+1}^b, x_n^c>.
Ideal family_J(std::size_t n, std::uint32_t a, std::uint32_t b, std::uint32_t c, const RingPtr& ring = nullptr);

/// Ring x11, x12, …, xnn, y1, …, yn (row-major x, then y). n ≤ 9.
RingPtr xy_ring(std::size_t n, Field field = Field::rationals());
/// Index of x_rs / y_s (1-based r, s) in xy_ring(n).
std::size_t xy_x(std::size_t n, std::size_t r, std::size_t s);
std::size_t xy_y(std::size_t n, std::size_t s);

/// f_r = Σ_s x_rs y_s for r = 1..n.
Ideal xy_ideal(std::size_t n, const RingPtr& ring = nullptr);

/// Weight order with w(x_rr) = n - r + 2 and weight 1 elsewhere, ties broken
/// by grevlex. Makes x_rr y_r the leading term of f_r and ranks
/// x11 > x22 > … > xnn above every other variable.
MonomialOrder xy_order(std::size_t n);

/// I_2 of [[u1 … u_{n-1}], [u2 … u_{n-1} x_pq]] with u = (x_i1, …, x_in)
/// after deleting x_ii. Requires n ≥ 3, 1 ≤ p, q, i ≤ n, p ≠ i, p ≠ q.
Ideal hankel_h(std::size_t n, std::size_t p, std::size_t q, std::size_t i, const RingPtr& ring = nullptr);

/// Largest parameters accepted by verify().
struct GalleryCaps {
  std::size_t max_n = 4;
  std::uint32_t max_r = 3;
  std::uint32_t max_exponent = 3;  // a, b, c
};

struct FamilySpec {
  std::string case_id;  // rnc, rnc-sum, xy, hankel-h, power
  std::map<std::string, std::int64_t> params;

  /// Throws DomainError for an unknown case, a missing or out-of-range
  /// parameter, or a parameter above the caps.
  void validate(const GalleryCaps& caps = {}) const;
  std::int64_t get(const std::string& key) const;
  std::int64_t get_or(const std::string& key, std::int64_t fallback) const;
};

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail
  std::string certificate_ref;
  std::string detail;
};

struct Report {
  std::string case_id;
  std::map<std::string, std::int64_t> params;
  std::vector<CheckResult> checks;
  std::uint64_t wall_time_ms = 0;
  nlohmann::json certificates = nlohmann::json::object();

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Replays the theorem behind `spec` at the given size and records every
/// check with its certificate.
Report verify(const FamilySpec& spec, const GalleryCaps& caps = {});

/// Substitution x_i ↦ s^{n-i+1} t^{i-1} into Q[s, t].
Polynomial rnc_parametrize(const Polynomial& f, std::size_t n);

/// Z-graded K-polynomial of R/I through the leading-term ideal (every variable
/// of degree 1); index d holds the coefficient of t^d. Meaningful for
/// homogeneous I.
std::vector<mpz_class> coarse_k_polynomial(const Ideal& ideal, const MonomialOrder& order);

}  // namespace transint
