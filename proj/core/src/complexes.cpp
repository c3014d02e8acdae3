#include "transint/complexes.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <unordered_map>
#include <unordered_set>

#include "transint/error.hpp"

namespace transint {

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<Column> cols) : rows_(rows) {
  cols_.resize(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) set_column(c, std::move(cols[c]));
}

const Polynomial* SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? &it->value : nullptr;
}

void SparseMatrix::set_column(std::size_t c, Column col) {
  std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column clean;
  for (auto& e : col) {
    if (e.row >= rows_) throw DomainError("matrix entry outside the row range");
    if (!clean.empty() && clean.back().row == e.row) throw DomainError("duplicate matrix entry");
    if (!e.value.is_zero()) clean.push_back(std::move(e));
  }
  cols_.at(c) = std::move(clean);
}

FreeComplex::FreeComplex(RingPtr ring, std::vector<std::vector<BasisLabel>> levels, std::vector<SparseMatrix> diffs)
    : ring_(std::move(ring)), levels_(std::move(levels)), diffs_(std::move(diffs)) {
  if (!ring_) throw DomainError("complex without a ring");
  if (levels_.empty()) levels_.emplace_back();
  if (diffs_.size() != levels_.size() - 1) throw DomainError("complex needs one differential per positive level");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    const auto& d = diffs_[i - 1];
    if (d.rows() != levels_[i - 1].size() || d.cols() != levels_[i].size()) {
      throw DomainError("differential " + std::to_string(i) + " has the wrong shape");
    }
  }
  for (const auto& lvl : levels_) {
    for (const auto& b : lvl) {
      if (b.mdeg.size() != ring_->size()) throw ContextMismatch("basis multidegree does not fit the ring");
    }
  }
  for (const auto& d : diffs_) {
    for (const auto& col : d.columns()) {
      for (const auto& e : col) require_same_ring(ring_, e.value.ring(), "complex");
    }
  }
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& l : levels_) r.push_back(l.size());
  return r;
}

namespace {

// Combinations of {0..p-1} of size k as bitmasks, lexicographic in the sorted index tuple.
std::vector<std::uint32_t> combinations(std::size_t p, std::size_t k) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    out.push_back(mask);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == p - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

int permutation_sign(std::vector<std::size_t> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

FreeComplex taylor(const RingPtr& ring, const std::vector<Monomial>& gens) {
  const std::size_t p = gens.size();
  if (p > kMaxTaylorGenerators) {
    throw DomainError("taylor: at most " + std::to_string(kMaxTaylorGenerators) + " generators supported");
  }
  for (const auto& g : gens) {
    if (g.size() != ring->size()) throw ContextMismatch("taylor: generator does not fit the ring");
  }
  const std::size_t n = ring->size();
  std::vector<std::vector<BasisLabel>> levels(p + 1);
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> where(p + 1);
  levels[0].push_back(BasisLabel{{}, Monomial::one(n)});
  where[0][0] = 0;
  std::vector<SparseMatrix> diffs;
  for (std::size_t i = 1; i <= p; ++i) {
    auto masks = combinations(p, i);
    std::vector<SparseMatrix::Column> cols;
    cols.reserve(masks.size());
    for (auto mask : masks) {
      auto subset = mask_indices(mask);
      // lcm of the subset extends the lcm of the subset without its last element
      const auto& prefix = levels[i - 1][where[i - 1].at(mask & ~(1u << subset.back()))].mdeg;
      Monomial mdeg = lcm(prefix, gens[subset.back()]);
      SparseMatrix::Column col;
      for (std::size_t k = 0; k < subset.size(); ++k) {
        std::uint32_t face = mask & ~(1u << subset[k]);
        std::size_t row = where[i - 1].at(face);
        Coefficient sign = (k % 2 == 0) ? 1 : -1;
        col.push_back({row, Polynomial::monomial(ring, quotient(mdeg, levels[i - 1][row].mdeg), sign)});
      }
      where[i][mask] = levels[i].size();
      levels[i].push_back(BasisLabel{std::move(subset), std::move(mdeg)});
      cols.push_back(std::move(col));
    }
    diffs.emplace_back(levels[i - 1].size(), std::move(cols));
  }
  return FreeComplex(ring, std::move(levels), std::move(diffs));
}

FreeComplex taylor(const MonomialIdeal& m) {
  if (m.is_unit()) throw DomainError("taylor: the unit ideal has no Taylor complex");
  return taylor(m.ring(), m.generators());
}

FreeComplex tensor(const FreeComplex& c, const FreeComplex& d) {
  require_same_ring(c.ring(), d.ring(), "tensor");
  const auto& ring = c.ring();
  const std::size_t len = c.length() + d.length();

  std::size_t offset = 0;
  for (const auto& lvl : c.levels()) {
    for (const auto& b : lvl) {
      for (auto s : b.subset) offset = std::max(offset, s + 1);
    }
  }

  // start[r][i]: position of block C_i ⊗ D_{r-i} inside level r
  std::vector<std::vector<std::size_t>> start(len + 1);
  std::vector<std::vector<BasisLabel>> levels(len + 1);
  for (std::size_t r = 0; r <= len; ++r) {
    start[r].assign(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      start[r][i] = levels[r].size();
      std::size_t j = r - i;
      if (i > c.length() || j > d.length()) continue;
      for (const auto& a : c.level(i)) {
        for (const auto& b : d.level(j)) {
          BasisLabel l{a.subset, a.mdeg * b.mdeg};
          for (auto s : b.subset) l.subset.push_back(s + offset);
          levels[r].push_back(std::move(l));
        }
      }
    }
  }

  std::vector<SparseMatrix> diffs;
  for (std::size_t r = 1; r <= len; ++r) {
    std::vector<SparseMatrix::Column> cols(levels[r].size());
    for (std::size_t i = 0; i <= r; ++i) {
      std::size_t j = r - i;
      if (i > c.length() || j > d.length()) continue;
      const std::size_t nb = d.rank(j);
      for (std::size_t a = 0; a < c.rank(i); ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
          auto& col = cols[start[r][i] + a * nb + b];
          if (i >= 1) {
            for (const auto& e : c.diff(i).column(a)) {
              col.push_back({start[r - 1][i - 1] + e.row * nb + b, e.value});
            }
          }
          if (j >= 1) {
            const std::size_t nb_lower = d.rank(j - 1);
            for (const auto& e : d.diff(j).column(b)) {
              col.push_back({start[r - 1][i] + a * nb_lower + e.row, i % 2 == 0 ? e.value : -e.value});
            }
          }
        }
      }
    }
    diffs.emplace_back(levels[r - 1].size(), std::move(cols));
  }
  return FreeComplex(ring, std::move(levels), std::move(diffs));
}

namespace {

using SparseColumnMap = std::map<std::size_t, Polynomial>;

// Column y of (outer ∘ inner), where inner maps into the domain of outer.
SparseColumnMap compose_column(const SparseMatrix& outer, const SparseMatrix& inner, std::size_t y,
                               const RingPtr& ring) {
  SparseColumnMap acc;
  for (const auto& e : inner.column(y)) {
    for (const auto& f : outer.column(e.row)) {
      auto it = acc.try_emplace(f.row, ring).first;
      it->second += f.value * e.value;
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return acc;
}

}  // namespace

ComplexCheck verify_complex(const FreeComplex& c) {
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& d = c.diff(i);
    for (std::size_t y = 0; y < d.cols(); ++y) {
      const auto& target = c.level(i)[y].mdeg;
      for (const auto& e : d.column(y)) {
        const auto& source = c.level(i - 1)[e.row].mdeg;
        for (const auto& t : e.value.terms()) {
          if (t.mono * source != target) {
            return {false, i,
                    "entry (" + std::to_string(e.row) + ", " + std::to_string(y) + ") of d" + std::to_string(i) +
                        " is not homogeneous"};
          }
        }
      }
      if (i >= 2) {
        auto col = compose_column(c.diff(i - 1), d, y, c.ring());
        if (!col.empty()) {
          return {false, i, "d" + std::to_string(i - 1) + " d" + std::to_string(i) + " is nonzero on column " +
                                std::to_string(y)};
        }
      }
    }
  }
  return {};
}

std::size_t matrix_rank(std::vector<std::vector<Coefficient>> rows, const Field& field) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Coefficient inv = field.inverse(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Coefficient f = field.mul(rows[r][col], inv);
      for (std::size_t k = col; k < ncols; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<Monomial> lcm_lattice(const MonomialIdeal& m) {
  if (m.size() > kMaxTaylorGenerators) {
    throw DomainError("lcm lattice: at most " + std::to_string(kMaxTaylorGenerators) + " generators supported");
  }
  std::unordered_set<Monomial, MonomialHash> seen{Monomial::one(m.ring()->size())};
  std::vector<Monomial> lattice(seen.begin(), seen.end());
  for (const auto& g : m.generators()) {
    std::size_t n = lattice.size();
    for (std::size_t k = 0; k < n; ++k) {
      Monomial l = lcm(lattice[k], g);
      if (seen.insert(l).second) lattice.push_back(std::move(l));
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  return lattice;
}

}  // namespace

AcyclicityResult is_acyclic_multigraded(const FreeComplex& c, const MonomialIdeal& m) {
  require_same_ring(c.ring(), m.ring(), "is_acyclic_multigraded");
  const auto& field = c.ring()->field();
  for (const auto& b : lcm_lattice(m)) {
    std::vector<std::vector<std::size_t>> keep(c.length() + 1);
    std::vector<std::vector<std::ptrdiff_t>> local(c.length() + 1);
    for (std::size_t i = 0; i <= c.length(); ++i) {
      local[i].assign(c.rank(i), -1);
      for (std::size_t k = 0; k < c.rank(i); ++k) {
        if (divides(c.level(i)[k].mdeg, b)) {
          local[i][k] = static_cast<std::ptrdiff_t>(keep[i].size());
          keep[i].push_back(k);
        }
      }
    }
    // rank of the degree-b strand of d_i, i = 1..length
    std::vector<std::size_t> rank(c.length() + 2, 0);
    for (std::size_t i = 1; i <= c.length(); ++i) {
      if (keep[i].empty() || keep[i - 1].empty()) continue;
      std::vector<std::vector<Coefficient>> mat(keep[i - 1].size(), std::vector<Coefficient>(keep[i].size(), 0));
      for (std::size_t y = 0; y < keep[i].size(); ++y) {
        const auto& target = c.level(i)[keep[i][y]].mdeg;
        for (const auto& e : c.diff(i).column(keep[i][y])) {
          auto row = local[i - 1][e.row];
          if (row < 0) continue;
          const auto& source = c.level(i - 1)[e.row].mdeg;
          mat[static_cast<std::size_t>(row)][y] = e.value.coefficient(quotient(target, source));
        }
      }
      rank[i] = matrix_rank(std::move(mat), field);
    }
    for (std::size_t i = 1; i <= c.length(); ++i) {
      if (keep[i].size() != rank[i] + rank[i + 1]) return {false, b, i};
    }
  }
  return {};
}

ComplexCheck taylor_iso_check(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i.ring(), j.ring(), "taylor_iso_check");
  std::uint64_t si = 0, sj = 0;
  for (const auto& g : i.generators()) si |= g.support_mask();
  for (const auto& g : j.generators()) sj |= g.support_mask();
  if (si & sj) throw PreconditionError("taylor_iso_check: generator supports of I and J intersect");

  FreeComplex ti = taylor(i), tj = taylor(j);
  FreeComplex t = tensor(ti, tj);
  MonomialIdeal s = sum(i, j);
  FreeComplex canon = taylor(s);

  const std::size_t p = i.size();
  std::vector<std::size_t> pos;
  auto locate = [&](const Monomial& g) {
    auto it = std::find(s.generators().begin(), s.generators().end(), g);
    if (it == s.generators().end()) throw ConsistencyError("taylor_iso_check: G(I+J) is not G(I) ∪ G(J)");
    return static_cast<std::size_t>(it - s.generators().begin());
  };
  for (const auto& g : i.generators()) pos.push_back(locate(g));
  for (const auto& g : j.generators()) pos.push_back(locate(g));
  if (s.size() != p + j.size()) throw ConsistencyError("taylor_iso_check: G(I+J) is not G(I) ∪ G(J)");

  SignedBasisMap psi(t.length() + 1);
  for (std::size_t r = 0; r <= t.length(); ++r) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < canon.rank(r); ++k) index[canon.level(r)[k].subset] = k;
    for (const auto& label : t.level(r)) {
      std::vector<std::size_t> seq;
      for (auto x : label.subset) seq.push_back(pos.at(x));
      int sign = permutation_sign(seq);
      std::sort(seq.begin(), seq.end());
      auto it = index.find(seq);
      if (it == index.end()) return {false, r, "psi leaves the basis at level " + std::to_string(r)};
      psi[r].emplace_back(it->second, sign);
    }
  }
  return check_signed_isomorphism(t, canon, psi);
}

ComplexCheck check_signed_isomorphism(const FreeComplex& src, const FreeComplex& dst, const SignedBasisMap& images) {
  require_same_ring(src.ring(), dst.ring(), "check_signed_isomorphism");
  const auto& ring = src.ring();
  if (src.length() != dst.length()) return {false, 0, "lengths differ"};
  if (images.size() != src.length() + 1) return {false, 0, "map does not cover every level"};
  for (std::size_t r = 0; r <= src.length(); ++r) {
    if (src.rank(r) != dst.rank(r) || images[r].size() != src.rank(r)) {
      return {false, r, "ranks differ at level " + std::to_string(r)};
    }
    std::vector<bool> hit(dst.rank(r), false);
    for (std::size_t k = 0; k < src.rank(r); ++k) {
      auto [idx, sign] = images[r][k];
      if (idx >= dst.rank(r) || hit[idx] || (sign != 1 && sign != -1)) {
        return {false, r, "not a signed bijection at level " + std::to_string(r)};
      }
      hit[idx] = true;
      if (dst.level(r)[idx].mdeg != src.level(r)[k].mdeg) {
        return {false, r, "multidegree not preserved at level " + std::to_string(r)};
      }
    }
  }
  for (std::size_t r = 1; r <= src.length(); ++r) {
    for (std::size_t x = 0; x < src.rank(r); ++x) {
      SparseColumnMap lhs;
      for (const auto& e : src.diff(r).column(x)) {
        auto [idx, sign] = images[r - 1][e.row];
        lhs.try_emplace(idx, ring).first->second += sign > 0 ? e.value : -e.value;
      }
      SparseColumnMap rhs;
      auto [idx, sign] = images[r][x];
      for (const auto& e : dst.diff(r).column(idx)) {
        rhs.try_emplace(e.row, ring).first->second += sign > 0 ? e.value : -e.value;
      }
      std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
      if (lhs != rhs) return {false, r, "not a chain map at level " + std::to_string(r)};
    }
  }
  return {};
}

bool is_minimal(const FreeComplex& c) {
  for (std::size_t i = 1; i <= c.length(); ++i) {
    for (const auto& col : c.diff(i).columns()) {
      for (const auto& e : col) {
        if (e.value.constant_coefficient() != 0) return false;
      }
    }
  }
  return true;
}

FreeComplex prune(const FreeComplex& c) {
  if (auto check = verify_complex(c); !check) throw DomainError("prune: not a complex: " + check.message);
  const auto& ring = c.ring();
  const auto& field = ring->field();
  const std::size_t len = c.length();

  std::vector<std::vector<bool>> alive(len + 1);
  for (std::size_t i = 0; i <= len; ++i) alive[i].assign(c.rank(i), true);
  // d[i][col] : row → entry, for i = 1..len (d[0] unused)
  std::vector<std::vector<SparseColumnMap>> d(len + 1);
  for (std::size_t i = 1; i <= len; ++i) {
    d[i].resize(c.rank(i));
    for (std::size_t y = 0; y < c.rank(i); ++y) {
      for (const auto& e : c.diff(i).column(y)) d[i][y].emplace(e.row, e.value);
    }
  }

  for (;;) {
    bool found = false;
    std::size_t lvl = 0, r = 0, col = 0;
    for (std::size_t i = 1; i <= len && !found; ++i) {
      for (std::size_t y = 0; y < d[i].size(); ++y) {
        if (!alive[i][y]) continue;
        for (const auto& [row, v] : d[i][y]) {
          if (!v.is_constant() || (found && std::pair{row, y} >= std::pair{r, col})) continue;
          found = true;
          lvl = i;
          r = row;
          col = y;
          break;
        }
      }
    }
    if (!found) break;

    Coefficient inv = field.inverse(d[lvl][col].at(r).constant_coefficient());
    SparseColumnMap gamma = d[lvl][col];
    gamma.erase(r);
    for (std::size_t y = 0; y < d[lvl].size(); ++y) {
      if (y == col || !alive[lvl][y]) continue;
      auto it = d[lvl][y].find(r);
      if (it == d[lvl][y].end()) continue;
      Polynomial beta = scale(inv, it->second);
      d[lvl][y].erase(it);
      for (const auto& [x, g] : gamma) {
        auto& slot = d[lvl][y].try_emplace(x, ring).first->second;
        slot -= g * beta;
        if (slot.is_zero()) d[lvl][y].erase(x);
      }
    }
    d[lvl][col].clear();
    alive[lvl][col] = false;
    alive[lvl - 1][r] = false;
    if (lvl + 1 <= len) {
      for (auto& column : d[lvl + 1]) column.erase(col);
    }
    if (lvl >= 2) d[lvl - 1][r].clear();
  }

  std::vector<std::vector<std::size_t>> renumber(len + 1);
  std::vector<std::vector<BasisLabel>> levels(len + 1);
  for (std::size_t i = 0; i <= len; ++i) {
    renumber[i].assign(c.rank(i), 0);
    for (std::size_t k = 0; k < c.rank(i); ++k) {
      if (!alive[i][k]) continue;
      renumber[i][k] = levels[i].size();
      levels[i].push_back(c.level(i)[k]);
    }
  }
  std::size_t top = len;
  while (top > 0 && levels[top].empty()) --top;
  levels.resize(top + 1);
  std::vector<SparseMatrix> diffs;
  for (std::size_t i = 1; i <= top; ++i) {
    std::vector<SparseMatrix::Column> cols;
    for (std::size_t y = 0; y < c.rank(i); ++y) {
      if (!alive[i][y]) continue;
      SparseMatrix::Column column;
      for (const auto& [row, v] : d[i][y]) {
        if (!alive[i - 1][row]) throw ConsistencyError("prune: entry survives in a cancelled row");
        column.push_back({renumber[i - 1][row], v});
      }
      cols.push_back(std::move(column));
    }
    diffs.emplace_back(levels[i - 1].size(), std::move(cols));
  }
  return FreeComplex(ring, std::move(levels), std::move(diffs));
}

std::vector<std::size_t> betti_numbers(const FreeComplex& c) { return c.ranks(); }

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded_betti(const FreeComplex& c) {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> out;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    for (const auto& b : c.level(i)) ++out[{i, b.mdeg.degree()}];
  }
  return out;
}

std::string betti_table(const FreeComplex& c) {
  auto graded = graded_betti(c);
  std::string s;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    s += std::to_string(i) + ":";
    for (const auto& [key, count] : graded) {
      if (key.first == i) s += " " + std::to_string(key.second) + "^" + std::to_string(count);
    }
    s += "\n";
  }
  return s;
}

KPolynomial KPolynomial::one(std::size_t nvars) {
  KPolynomial k;
  k.add(Monomial::one(nvars), 1);
  return k;
}

void KPolynomial::add(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<mpz_class> KPolynomial::coarse() const {
  std::vector<mpz_class> out;
  for (const auto& [m, c] : terms_) {
    auto d = static_cast<std::size_t>(m.degree());
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string KPolynomial::to_string(const Ring& ring) const {
  if (terms_.empty()) return "0";
  auto order = MonomialOrder::grevlex();
  std::vector<std::pair<Monomial, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
  std::string s;
  for (const auto& [m, c] : sorted) {
    mpz_class mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += m.to_string(ring);
    }
  }
  return s;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
  KPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  }
  return out;
}

KPolynomial operator-(const KPolynomial& a, const KPolynomial& b) {
  KPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, -c);
  return out;
}

KPolynomial k_polynomial(const FreeComplex& c) {
  KPolynomial k;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    for (const auto& b : c.level(i)) k.add(b.mdeg, i % 2 == 0 ? 1 : -1);
  }
  return k;
}

KPolynomial k_polynomial(const MonomialIdeal& m) {
  const std::size_t n = m.ring()->size();
  if (m.is_unit()) return {};
  if (m.is_zero()) return KPolynomial::one(n);
  const auto& gens = m.generators();
  MonomialIdeal rest(m.ring(), std::vector<Monomial>(gens.begin(), gens.end() - 1));
  KPolynomial shifted;
  KPolynomial inner = k_polynomial(colon(rest, gens.back()));
  for (const auto& [mono, c] : inner.terms()) shifted.add(mono * gens.back(), c);
  return k_polynomial(rest) - shifted;
}

nlohmann::json to_json(const FreeComplex& c) {
  using nlohmann::json;
  json out;
  out["ring"] = c.ring()->names();
  out["ranks"] = c.ranks();
  json levels = json::array();
  for (const auto& lvl : c.levels()) {
    json l = json::array();
    for (const auto& b : lvl) {
      auto e = b.mdeg.exponents();
      l.push_back({{"subset", b.subset}, {"mdeg", std::vector<Exponent>(e.begin(), e.end())}});
    }
    levels.push_back(std::move(l));
  }
  out["levels"] = std::move(levels);
  json diffs = json::array();
  for (std::size_t i = 1; i <= c.length(); ++i) {
    json entries = json::array();
    const auto& d = c.diff(i);
    for (std::size_t y = 0; y < d.cols(); ++y) {
      for (const auto& e : d.column(y)) {
        entries.push_back({{"row", e.row}, {"col", y}, {"value", e.value.to_string()}});
      }
    }
    diffs.push_back({{"level", i}, {"rows", d.rows()}, {"cols", d.cols()}, {"entries", std::move(entries)}});
  }
  out["differentials"] = std::move(diffs);
  return out;
}

}  // namespace transint
