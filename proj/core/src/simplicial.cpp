#include "transint/simplicial.hpp"

#include <algorithm>
#include <set>

#include "transint/error.hpp"

namespace transint {

namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

int shuffle_sign(const Face& a, const Face& b) {
  // inversions between a and b when a is listed before b; each list is sorted
  int sign = 1;
  for (auto x : a) {
    for (auto y : b) {
      if (x > y) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw DomainError("facet with a repeated vertex");
  }
  std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
    if (!covered) facets_.push_back(f);
  }
  if (facets_.empty()) facets_.push_back({});
  std::sort(facets_.begin(), facets_.end());
  std::set<std::size_t> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  vertices_.assign(vs.begin(), vs.end());
}

int SimplicialComplex::dimension() const {
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::contains(const Face& f) const {
  Face s = f;
  std::sort(s.begin(), s.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(s, g); });
}

std::vector<Face> SimplicialComplex::faces(int dim) const {
  if (dim < -1) return {};
  const auto k = static_cast<std::size_t>(dim + 1);
  std::set<Face> out;
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    // all k-subsets of f via index combinations
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      Face s;
      for (auto i : idx) s.push_back(f[i]);
      out.insert(std::move(s));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == f.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::string SimplicialComplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ",";
    s += "{";
    for (std::size_t k = 0; k < facets_[i].size(); ++k) {
      if (k) s += ",";
      s += std::to_string(facets_[i][k]);
    }
    s += "}";
  }
  return s + "}";
}

SimplicialComplex standard_simplex(std::vector<std::size_t> vertices) {
  return SimplicialComplex({std::move(vertices)});
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw DomainError("join: vertex sets overlap (vertex " + std::to_string(common.front()) + ")");
  std::vector<Face> facets;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) {
      Face u = f;
      u.insert(u.end(), g.begin(), g.end());
      facets.push_back(std::move(u));
    }
  }
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& d, const std::map<std::size_t, std::size_t>& map) {
  std::set<std::size_t> images;
  for (auto v : d.vertices()) {
    auto it = map.find(v);
    if (it == map.end()) throw DomainError("relabel: vertex " + std::to_string(v) + " has no image");
    if (!images.insert(it->second).second) throw DomainError("relabel: map is not injective");
  }
  std::vector<Face> facets;
  for (const auto& f : d.facets()) {
    Face g;
    for (auto v : f) g.push_back(map.at(v));
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex shift(const SimplicialComplex& d, std::size_t offset) {
  std::map<std::size_t, std::size_t> map;
  for (auto v : d.vertices()) map[v] = v + offset;
  return relabel(d, map);
}

RingPtr frame_ring() {
  static const RingPtr ring = Ring::make({"_e"}, Field::rationals(), /*allow_reserved=*/true);
  return ring;
}

FreeComplex chain_complex(const SimplicialComplex& d, const RingPtr& ring) {
  const int top = d.dimension();
  const auto one = Monomial::one(ring->size());
  std::vector<std::vector<BasisLabel>> levels;
  std::vector<std::map<Face, std::size_t>> index;
  for (int dim = -1; dim <= top; ++dim) {
    std::vector<BasisLabel> lvl;
    std::map<Face, std::size_t> idx;
    for (auto& f : d.faces(dim)) {
      idx[f] = lvl.size();
      lvl.push_back(BasisLabel{std::move(f), one});
    }
    levels.push_back(std::move(lvl));
    index.push_back(std::move(idx));
  }
  std::vector<SparseMatrix> diffs;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    std::vector<SparseMatrix::Column> cols;
    for (const auto& b : levels[i]) {
      SparseMatrix::Column col;
      for (std::size_t t = 0; t < b.subset.size(); ++t) {
        Face smaller = b.subset;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(t));
        col.push_back({index[i - 1].at(smaller), Polynomial::constant(ring, t % 2 == 0 ? 1 : -1)});
      }
      cols.push_back(std::move(col));
    }
    diffs.emplace_back(levels[i - 1].size(), std::move(cols));
  }
  return FreeComplex(ring, std::move(levels), std::move(diffs));
}

FreeComplex homogenize(const FreeComplex& frame, const std::vector<Monomial>& gens, const RingPtr& ring) {
  if (frame.rank(1) != gens.size()) {
    throw DomainError("homogenize: " + std::to_string(gens.size()) + " monomials for a frame of rank " +
                      std::to_string(frame.rank(1)));
  }
  for (const auto& g : gens) {
    if (g.size() != ring->size()) throw ContextMismatch("homogenize: monomial does not fit the ring");
  }
  const auto one = Monomial::one(ring->size());
  std::vector<std::vector<BasisLabel>> levels(frame.length() + 1);
  for (std::size_t i = 0; i <= frame.length(); ++i) {
    for (std::size_t k = 0; k < frame.rank(i); ++k) {
      Monomial mdeg = one;
      if (i == 1) {
        mdeg = gens[k];
      } else if (i >= 2) {
        for (const auto& e : frame.diff(i).column(k)) mdeg = lcm(mdeg, levels[i - 1][e.row].mdeg);
      }
      levels[i].push_back(BasisLabel{frame.level(i)[k].subset, std::move(mdeg)});
    }
  }
  std::vector<SparseMatrix> diffs;
  for (std::size_t i = 1; i <= frame.length(); ++i) {
    std::vector<SparseMatrix::Column> cols;
    for (std::size_t k = 0; k < frame.rank(i); ++k) {
      SparseMatrix::Column col;
      for (const auto& e : frame.diff(i).column(k)) {
        if (!e.value.is_constant()) throw DomainError("homogenize: frame entries must be constants");
        const auto& target = levels[i][k].mdeg;
        const auto& source = levels[i - 1][e.row].mdeg;
        col.push_back({e.row, Polynomial::monomial(ring, quotient(target, source), e.value.constant_coefficient())});
      }
      cols.push_back(std::move(col));
    }
    diffs.emplace_back(levels[i - 1].size(), std::move(cols));
  }
  return FreeComplex(ring, std::move(levels), std::move(diffs));
}

ComplexCheck join_iso_check(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplicialComplex j = join(a, b);
  FreeComplex ca = chain_complex(a), cb = chain_complex(b);
  FreeComplex t = tensor(ca, cb);
  FreeComplex cj = chain_complex(j);

  // tensor labels list γ, then σ shifted past the largest vertex of a
  std::size_t offset = 0;
  for (const auto& lvl : ca.levels()) {
    for (const auto& l : lvl) {
      for (auto s : l.subset) offset = std::max(offset, s + 1);
    }
  }
  if (t.length() != cj.length()) return {false, 0, "lengths differ"};
  SignedBasisMap theta(t.length() + 1);
  for (std::size_t r = 0; r <= t.length(); ++r) {
    std::map<Face, std::size_t> index;
    for (std::size_t k = 0; k < cj.rank(r); ++k) index[cj.level(r)[k].subset] = k;
    for (const auto& label : t.level(r)) {
      Face gamma, sigma;
      for (auto x : label.subset) (x < offset ? gamma : sigma).push_back(x < offset ? x : x - offset);
      Face u = gamma;
      u.insert(u.end(), sigma.begin(), sigma.end());
      std::sort(u.begin(), u.end());
      auto it = index.find(u);
      if (it == index.end()) return {false, r, "theta leaves the basis at level " + std::to_string(r)};
      theta[r].emplace_back(it->second, shuffle_sign(gamma, sigma));
    }
  }
  return check_signed_isomorphism(t, cj, theta);
}

SupportedResolution supported_resolution_check(const MonomialIdeal& ideal, const std::vector<Monomial>& gens,
                                               const SimplicialComplex& d) {
  if (gens.size() != d.vertices().size()) {
    throw DomainError("supported_resolution_check: " + std::to_string(gens.size()) + " generators for " +
                      std::to_string(d.vertices().size()) + " vertices");
  }
  if (!(MonomialIdeal(ideal.ring(), gens) == ideal)) {
    throw DomainError("supported_resolution_check: the monomials do not generate the ideal");
  }
  // vertex k (in increasing order) becomes frame generator k, which is already the case in chain_complex
  FreeComplex h = homogenize(chain_complex(d, ideal.ring()), gens, ideal.ring());
  SupportedResolution out;
  out.is_complex = static_cast<bool>(verify_complex(h));
  out.acyclic = out.is_complex && static_cast<bool>(is_acyclic_multigraded(h, ideal));
  out.minimal = is_minimal(h);
  return out;
}

SupportedResolution supported_resolution_check(const MonomialIdeal& ideal, const SimplicialComplex& d) {
  return supported_resolution_check(ideal, ideal.generators(), d);
}

}  // namespace transint
