#include "transint/order.hpp"

#include <algorithm>

#include "transint/error.hpp"

namespace transint {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

MonomialOrder MonomialOrder::weight(std::vector<std::uint64_t> weights) {
  if (weights.empty()) throw DomainError("weight order needs at least one weight");
  MonomialOrder o(Kind::Weight);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block(
    std::vector<std::pair<std::vector<std::size_t>, MonomialOrder>> groups) {
  if (groups.empty()) throw DomainError("block order needs at least one group");
  MonomialOrder o(Kind::Block);
  std::vector<std::size_t> all;
  for (auto& [vars, inner] : groups) {
    if (vars.empty()) throw DomainError("block order group is empty");
    if (inner.kind() == Kind::Block) throw DomainError("nested block orders are not supported");
    inner.validate(vars.size());
    all.insert(all.end(), vars.begin(), vars.end());
    o.groups_.push_back(Group{std::move(vars), {std::move(inner)}});
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) throw DomainError("block order groups must partition the variables");
  }
  o.block_size_ = all.size();
  return o;
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ == Kind::Weight && weights_.size() != nvars) {
    throw ContextMismatch("weight order has " + std::to_string(weights_.size()) +
                          " weights for " + std::to_string(nvars) + " variables");
  }
  if (kind_ == Kind::Block && block_size_ != nvars) {
    throw ContextMismatch("block order covers " + std::to_string(block_size_) + " variables, ring has " +
                          std::to_string(nvars));
  }
}

template <class GetA, class GetB>
std::strong_ordering MonomialOrder::compare_with(const GetA& a, const GetB& b, std::size_t n) const {
  auto grevlex_tail = [&]() {
    for (std::size_t i = n; i-- > 0;) {
      if (a(i) != b(i)) return a(i) < b(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  };
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a(i) != b(i)) return a(i) <=> b(i);
      }
      return std::strong_ordering::equal;
    case Kind::GrLex:
    case Kind::GrevLex: {
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) {
        da += a(i);
        db += b(i);
      }
      if (da != db) return da <=> db;
      if (kind_ == Kind::GrevLex) return grevlex_tail();
      for (std::size_t i = 0; i < n; ++i) {
        if (a(i) != b(i)) return a(i) <=> b(i);
      }
      return std::strong_ordering::equal;
    }
    case Kind::Weight: {
      u128 wa = 0, wb = 0;
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += static_cast<u128>(weights_[i]) * a(i);
        wb += static_cast<u128>(weights_[i]) * b(i);
        da += a(i);
        db += b(i);
      }
      if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
      if (da != db) return da <=> db;
      return grevlex_tail();
    }
    case Kind::Block:
      break;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw ContextMismatch("compare: monomials of different contexts");
  if (kind_ == Kind::Weight && weights_.size() != a.size()) validate(a.size());
  if (kind_ != Kind::Block) {
    auto ea = a.exponents();
    auto eb = b.exponents();
    auto ga = [&](std::size_t i) { return ea[i]; };
    auto gb = [&](std::size_t i) { return eb[i]; };
    return compare_with(ga, gb, a.size());
  }
  if (block_size_ != a.size()) validate(a.size());
  for (const auto& g : groups_) {
    auto ea = a.exponents();
    auto eb = b.exponents();
    auto ga = [&](std::size_t i) { return ea[g.vars[i]]; };
    auto gb = [&](std::size_t i) { return eb[g.vars[i]]; };
    auto c = g.inner.front().compare_with(ga, gb, g.vars.size());
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string simple_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrLex: return "grlex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Weight: return "weights";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "?";
}

std::string join_weights(const std::vector<std::uint64_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::string MonomialOrder::to_string(const Ring& ring) const {
  switch (kind_) {
    case Kind::Weight:
      return "weights(" + join_weights(weights_) + ")";
    case Kind::Block: {
      std::string s = "block(";
      for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
        const auto& g = groups_[gi];
        if (gi) s += ", ";
        const auto& inner = g.inner.front();
        s += simple_name(inner.kind()) + "(";
        for (std::size_t i = 0; i < g.vars.size(); ++i) {
          if (i) s += ',';
          s += ring.name(g.vars[i]);
        }
        if (inner.kind() == Kind::Weight) s += "; " + join_weights(inner.weights());
        s += ")";
      }
      return s + ")";
    }
    default:
      return simple_name(kind_);
  }
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_ || a.weights_ != b.weights_ || a.groups_.size() != b.groups_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.groups_.size(); ++i) {
    if (a.groups_[i].vars != b.groups_[i].vars) return false;
    if (!(a.groups_[i].inner.front() == b.groups_[i].inner.front())) return false;
  }
  return true;
}

}  // namespace transint
