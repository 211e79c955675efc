#include "hp/decompose.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace hp {

bool is_interval(const OrderedStructure& r, int lo, int hi) {
  const int n = r.size(), d = r.sig().arity();
  if (lo < 0 || hi >= n || lo > hi) throw Error("is_interval: range out of bounds");
  for (int x = 0; x < n; ++x) {
    if (x >= lo && x <= hi) continue;
    for (int k = 0; k < d; ++k) {
      const bool fwd = r.rel(k, x, lo);
      const bool bwd = r.rel(k, lo, x);
      for (int a = lo + 1; a <= hi; ++a)
        if (r.rel(k, x, a) != fwd || r.rel(k, a, x) != bwd) return false;
    }
  }
  return true;
}

std::vector<IndexRange> intervals(const OrderedStructure& r) {
  std::vector<IndexRange> out;
  const int n = r.size();
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi)
      if (is_interval(r, lo, hi)) out.push_back({lo, hi});
  return out;
}

bool is_indecomposable(const OrderedStructure& r) {
  const int n = r.size();
  if (n <= 2) return true;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo + 1; hi < n; ++hi) {
      if (hi - lo + 1 == n) continue;
      if (is_interval(r, lo, hi)) return false;
    }
  return true;
}

bool is_chainable(const OrderedStructure& r) {
  const int n = r.size(), d = r.sig().arity();
  if (n <= 1) return true;
  for (int k = 0; k < d; ++k) {
    const bool fwd = r.rel(k, 0, 1);
    const bool bwd = r.rel(k, 1, 0);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (r.rel(k, x, y) != fwd || r.rel(k, y, x) != bwd) return false;
  }
  return true;
}

OrderedStructure lex_sum(const OrderedStructure& s, std::span<const OrderedStructure> children) {
  if (static_cast<int>(children.size()) != s.size())
    throw Error("lex_sum: child count does not match quotient size");
  int total = 0;
  for (const auto& c : children) {
    if (c.sig() != s.sig()) throw Error("lex_sum: signature mismatch");
    if (c.size() == 0) throw Error("lex_sum: empty child");
    total += c.size();
  }
  std::vector<int> start(children.size() + 1, 0);
  for (std::size_t x = 0; x < children.size(); ++x)
    start[x + 1] = start[x] + children[x].size();

  const int d = s.sig().arity();
  std::vector<std::vector<std::uint8_t>> rel(
      static_cast<std::size_t>(d),
      std::vector<std::uint8_t>(static_cast<std::size_t>(total) * static_cast<std::size_t>(total)));
  for (int k = 0; k < d; ++k) {
    auto& mat = rel[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < children.size(); ++x) {
      for (std::size_t y = 0; y < children.size(); ++y) {
        if (x == y) {
          const auto& c = children[x];
          for (int a = 0; a < c.size(); ++a)
            for (int b = 0; b < c.size(); ++b)
              mat[static_cast<std::size_t>((start[x] + a) * total + (start[x] + b))] =
                  c.rel(k, a, b) ? 1 : 0;
        } else {
          const std::uint8_t bit =
              s.rel(k, static_cast<int>(x), static_cast<int>(y)) ? 1 : 0;
          for (int a = 0; a < children[x].size(); ++a)
            for (int b = 0; b < children[y].size(); ++b)
              mat[static_cast<std::size_t>((start[x] + a) * total + (start[y] + b))] = bit;
        }
      }
    }
  }
  return OrderedStructure(s.sig(), total, std::move(rel));
}

namespace {

// Cross pattern between two positions as a 2-element structure.
OrderedStructure pair_pattern(const OrderedStructure& r, int i, int j) {
  const std::array<int, 2> idx{i, j};
  return restriction(r, std::span<const int>(idx.data(), idx.size()));
}

}  // namespace

bool is_s_indecomposable(const OrderedStructure& r, const OrderedStructure& s) {
  if (s.size() != 2) throw Error("is_s_indecomposable: quotient must have two elements");
  if (r.sig() != s.sig()) throw Error("is_s_indecomposable: signature mismatch");
  const int n = r.size();
  for (int k = 1; k < n; ++k) {
    if (!is_interval(r, 0, k - 1) || !is_interval(r, k, n - 1)) continue;
    if (pair_pattern(r, 0, k) == s) return false;
  }
  return true;
}

std::vector<OrderedStructure> ind_restrictions(const OrderedStructure& r, int min_size) {
  const int n = r.size();
  if (n > 20) throw Error("ind_restrictions: domain too large (cap 20)");
  std::vector<OrderedStructure> out;
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < min_size) continue;
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    OrderedStructure sub = restriction(r, idx);
    if (is_indecomposable(sub)) out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int DecompositionTree::width() const {
  if (is_leaf()) return 1;
  int w = 0;
  for (const auto& c : node().children) w += c.width();
  return w;
}

namespace {

// Maximal strong proper intervals of r, in position order. Strong: overlaps
// no other interval; proper: not the full domain. For finite structures these
// partition the domain.
std::vector<IndexRange> maximal_strong_intervals(const OrderedStructure& r) {
  const auto all = intervals(r);
  const int n = r.size();
  auto overlaps = [](const IndexRange& a, const IndexRange& b) {
    const bool intersect = a.lo <= b.hi && b.lo <= a.hi;
    const bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
    const bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
    return intersect && !a_in_b && !b_in_a;
  };
  std::vector<IndexRange> strong;
  for (const auto& a : all) {
    if (a.size() == n) continue;
    bool ok = true;
    for (const auto& b : all)
      if (overlaps(a, b)) {
        ok = false;
        break;
      }
    if (ok) strong.push_back(a);
  }
  std::vector<IndexRange> maximal;
  for (const auto& a : strong) {
    bool dominated = false;
    for (const auto& b : strong)
      if (!(a == b) && b.lo <= a.lo && a.hi <= b.hi) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(a);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

DecompositionTree decompose_rec(const OrderedStructure& r, int offset) {
  const int n = r.size();
  if (n == 0) throw Error("decompose: empty structure");
  if (n == 1) return DecompositionTree(DecompositionTree::Leaf{offset});

  const auto blocks = maximal_strong_intervals(r);
  std::vector<int> reps;
  reps.reserve(blocks.size());
  for (const auto& b : blocks) reps.push_back(b.lo);
  OrderedStructure quotient = restriction(r, reps);

  SumKind kind;
  if (quotient.size() >= 3 && is_indecomposable(quotient)) {
    kind = SumKind::Indecomposable;
  } else if (is_chainable(quotient)) {
    kind = SumKind::Chainable;
  } else {
    throw Error("decompose: quotient is neither indecomposable nor chainable");
  }

  std::vector<DecompositionTree> children;
  children.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<int> idx(static_cast<std::size_t>(b.size()));
    std::iota(idx.begin(), idx.end(), b.lo);
    children.push_back(decompose_rec(restriction(r, idx), offset + b.lo));
  }
  return DecompositionTree(
      DecompositionTree::Node{std::move(quotient), kind, std::move(children)});
}

}  // namespace

DecompositionTree decompose(const OrderedStructure& r) { return decompose_rec(r, 0); }

OrderedStructure rebuild(const DecompositionTree& tree, const Signature& sig) {
  if (tree.is_leaf()) return OrderedStructure::singleton(sig);
  const auto& node = tree.node();
  std::vector<OrderedStructure> children;
  children.reserve(node.children.size());
  for (const auto& c : node.children) children.push_back(rebuild(c, sig));
  return lex_sum(node.quotient, children);
}

namespace {

void render_rec(const DecompositionTree& tree, std::ostringstream& out,
                std::vector<OrderedStructure>& quotients) {
  if (tree.is_leaf()) {
    out << tree.leaf().position;
    return;
  }
  const auto& node = tree.node();
  const char* head = node.kind == SumKind::Indecomposable ? "ind" : "chain";
  out << '(' << head;
  const bool bichain = node.quotient.sig() == Signature::bichain();
  if (bichain && node.quotient.size() <= 9) {
    const Permutation p = bichain_to_perm(node.quotient);
    for (int i = 0; i < p.size(); ++i) out << p.at(i) + 1;
  } else {
    auto it = std::find(quotients.begin(), quotients.end(), node.quotient);
    std::size_t k = static_cast<std::size_t>(it - quotients.begin());
    if (it == quotients.end()) quotients.push_back(node.quotient);
    out << '@' << k;
  }
  for (const auto& c : node.children) {
    out << ' ';
    render_rec(c, out, quotients);
  }
  out << ')';
}

}  // namespace

TreeRendering render_tree(const DecompositionTree& tree) {
  TreeRendering r;
  std::ostringstream out;
  render_rec(tree, out, r.quotients);
  r.sexpr = out.str();
  return r;
}

}  // namespace hp
