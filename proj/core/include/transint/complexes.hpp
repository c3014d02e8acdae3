#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "transint/monomial_ideal.hpp"
#include "transint/polynomial.hpp"

namespace transint {

/// Basis element of a multigraded free module. For Taylor complexes `subset`
/// holds the 0-based generator indices of the wedge e_{j1}∧…∧e_{ji}.
struct BasisLabel {
  std::vector<std::size_t> subset;
  Monomial mdeg;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Polynomial matrix stored by columns; each column lists (row, entry) pairs
/// with nonzero entries, rows strictly increasing.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Polynomial value;
  };
  using Column = std::vector<Entry>;

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  SparseMatrix(std::size_t rows, std::vector<Column> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  const Column& column(std::size_t c) const { return cols_.at(c); }
  const std::vector<Column>& columns() const noexcept { return cols_; }
  /// nullptr when the entry is zero.
  const Polynomial* at(std::size_t row, std::size_t col) const;

  void set_column(std::size_t c, Column col);

 private:
  std::size_t rows_;
  std::vector<Column> cols_;
};

/// Complex F_ℓ → … → F_1 → F_0 of free multigraded modules. diff(i) maps
/// level i to level i-1 for 1 ≤ i ≤ length().
class FreeComplex {
 public:
  /// Throws DomainError when matrix shapes do not match the level ranks.
  FreeComplex(RingPtr ring, std::vector<std::vector<BasisLabel>> levels, std::vector<SparseMatrix> diffs);

  const RingPtr& ring() const noexcept { return ring_; }
  /// Highest level index; levels()[0] always exists.
  std::size_t length() const noexcept { return levels_.size() - 1; }
  const std::vector<std::vector<BasisLabel>>& levels() const noexcept { return levels_; }
  const std::vector<BasisLabel>& level(std::size_t i) const { return levels_.at(i); }
  std::size_t rank(std::size_t i) const { return i < levels_.size() ? levels_[i].size() : 0; }
  std::vector<std::size_t> ranks() const;
  const SparseMatrix& diff(std::size_t i) const { return diffs_.at(i - 1); }

 private:
  RingPtr ring_;
  std::vector<std::vector<BasisLabel>> levels_;
  std::vector<SparseMatrix> diffs_;
};

/// Cap on the number of generators for Taylor complexes and lcm lattices.
inline constexpr std::size_t kMaxTaylorGenerators = 20;

/// Taylor complex of R/M on G(M) in its canonical (grevlex-descending) order.
FreeComplex taylor(const MonomialIdeal& m);
/// Taylor complex on an explicitly ordered generator list (no minimalization).
FreeComplex taylor(const RingPtr& ring, const std::vector<Monomial>& gens);

/// C ⊗ D with d(a⊗b) = d(a)⊗b + (-1)^{|a|} a⊗d(b). Level r lists the blocks
/// C_i ⊗ D_{r-i} for i ascending, each block row-major in (a, b).
FreeComplex tensor(const FreeComplex& c, const FreeComplex& d);

struct ComplexCheck {
  bool ok = true;
  std::size_t level = 0;  // first failing level when !ok
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// d_{i-1} ∘ d_i = 0 for every i and each entry is multigraded of degree
/// mdeg(column) / mdeg(row).
ComplexCheck verify_complex(const FreeComplex& c);

struct AcyclicityResult {
  bool acyclic = true;
  std::optional<Monomial> failing_degree;
  std::size_t position = 0;

  explicit operator bool() const noexcept { return acyclic; }
};

/// Restricts C to each degree b of the lcm lattice of G(M) and checks that
/// the resulting complex of vector spaces has no homology in positions ≥ 1.
AcyclicityResult is_acyclic_multigraded(const FreeComplex& c, const MonomialIdeal& m);

/// Rank of a constant matrix given as dense rows over `field`.
std::size_t matrix_rank(std::vector<std::vector<Coefficient>> rows, const Field& field);

/// images[r][k] = (index, ±1): basis element k of level r of `src` maps to
/// ±(basis element `index` of level r of `dst`).
using SignedBasisMap = std::vector<std::vector<std::pair<std::size_t, int>>>;

/// Checks that `images` is a multidegree-preserving bijection on every level
/// and a chain map: map ∘ d_src = d_dst ∘ map.
ComplexCheck check_signed_isomorphism(const FreeComplex& src, const FreeComplex& dst, const SignedBasisMap& images);

/// Verifies that ψ(a⊗b) = ±(a ∪ b), the wedge concatenation sorted into the
/// canonical generator order of I+J, is a multidegree-preserving bijection
/// T(I)⊗T(J) → T(I+J) commuting with the differentials. Throws
/// PreconditionError when the generator supports of I and J intersect.
ComplexCheck taylor_iso_check(const MonomialIdeal& i, const MonomialIdeal& j);

/// No differential entry has a nonzero constant term.
bool is_minimal(const FreeComplex& c);

/// Cancels unit entries until the complex is minimal, taking the entry with
/// smallest (level, row, column) each time. Throws DomainError unless
/// verify_complex passes.
FreeComplex prune(const FreeComplex& c);

/// Ranks per level.
std::vector<std::size_t> betti_numbers(const FreeComplex& c);
/// (level, total degree of mdeg) → number of basis elements.
std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded_betti(const FreeComplex& c);
/// Table with one row per level: "i: d^count d^count ...".
std::string betti_table(const FreeComplex& c);

/// Formal integer combination of monomials.
class KPolynomial {
 public:
  KPolynomial() = default;
  static KPolynomial one(std::size_t nvars);

  void add(const Monomial& m, const mpz_class& c);
  const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Substitutes every variable by t: coefficient of t^d at index d.
  std::vector<mpz_class> coarse() const;
  std::string to_string(const Ring& ring) const;

  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);
  friend KPolynomial operator-(const KPolynomial& a, const KPolynomial& b);
  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

 private:
  std::map<Monomial, mpz_class> terms_;
};

/// Σ_i (-1)^i Σ_{b ∈ level i} mdeg(b).
KPolynomial k_polynomial(const FreeComplex& c);
/// K(R/M) by the recursion K(R/(M'+⟨m⟩)) = K(R/M') - x^m K(R/(M' : m)).
/// Independent of any resolution.
KPolynomial k_polynomial(const MonomialIdeal& m);

nlohmann::json to_json(const FreeComplex& c);

}  // namespace transint
