#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hp/structure.hpp"

namespace hp {

/// Inclusive 0-based position range [lo, hi].
struct IndexRange {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool operator==(const IndexRange&) const = default;
  auto operator<=>(const IndexRange&) const = default;
};

/// All intervals of r. The implicit position order participates, so every
/// interval is a contiguous range and only O(n^2) candidates exist. Trivial
/// intervals (singletons and the full domain) are included.
std::vector<IndexRange> intervals(const OrderedStructure& r);

bool is_interval(const OrderedStructure& r, int lo, int hi);

/// No interval of size in 2..n-1.
bool is_indecomposable(const OrderedStructure& r);

/// For every relation, the ordered pair pattern (rel(x,y), rel(y,x)) is the
/// same for all position pairs x < y.
bool is_chainable(const OrderedStructure& r);

/// Lexicographic sum: substitute children[x] for point x of s. Each child
/// span is an interval of the result.
OrderedStructure lex_sum(const OrderedStructure& s, std::span<const OrderedStructure> children);

/// True iff no split point k in 1..n-1 makes [0,k) and [k,n) both intervals
/// of r with cross-pattern equal to the 2-element structure s.
bool is_s_indecomposable(const OrderedStructure& r, const OrderedStructure& s);

/// All distinct indecomposable restrictions of r with at least min_size
/// elements, canonically sorted. Enumerates the 2^n subsets; n is capped at 20.
std::vector<OrderedStructure> ind_restrictions(const OrderedStructure& r, int min_size);

enum class SumKind { Indecomposable, Chainable };

/// Gallai substitution tree. A leaf holds its original domain position; a sum
/// node holds the quotient over the maximal strong intervals together with the
/// child trees, in position order.
class DecompositionTree {
 public:
  struct Leaf {
    int position = 0;
  };
  struct Node {
    OrderedStructure quotient;
    SumKind kind;
    std::vector<DecompositionTree> children;
  };

  explicit DecompositionTree(Leaf leaf) : v_(std::move(leaf)) {}
  explicit DecompositionTree(Node node) : v_(std::move(node)) {}

  bool is_leaf() const { return std::holds_alternative<Leaf>(v_); }
  const Leaf& leaf() const { return std::get<Leaf>(v_); }
  const Node& node() const { return std::get<Node>(v_); }

  /// Number of leaves below this tree.
  int width() const;

 private:
  std::variant<Leaf, Node> v_;
};

/// The canonical decomposition: a Leaf for n = 1, otherwise a sum node over
/// the maximal strong intervals whose quotient is indecomposable (>= 3
/// elements) or chainable (>= 2 elements). Children recurse.
DecompositionTree decompose(const OrderedStructure& r);

/// Reassemble the structure a tree describes (leaves become singletons).
OrderedStructure rebuild(const DecompositionTree& tree, const Signature& sig);

/// S-expression rendering. Bichain quotients of size <= 9 appear inline as
/// `ind<perm>` / `chain<perm>`; anything else is `ind@k` / `chain@k` with k
/// indexing into `quotients` in first-visit order.
struct TreeRendering {
  std::string sexpr;
  std::vector<OrderedStructure> quotients;
};

TreeRendering render_tree(const DecompositionTree& tree);

}  // namespace hp
