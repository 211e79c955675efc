#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an enumeration would exceed its configured candidate ceiling.
struct ResourceCapError : Error {
  using Error::Error;
};

enum class RelKind : char { LinearOrder = 'L', ReflexiveBinary = 'B' };

/// Relation layout of an ordered binary structure: d relations, each either a
/// linear order or a plain reflexive binary relation. The natural position
/// order on the domain is implicit and never listed here.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<RelKind> kinds) : kinds_(std::move(kinds)) {}

  static Signature bichain() { return Signature({RelKind::LinearOrder}); }
  static Signature binary(int d = 1) {
    return Signature(std::vector<RelKind>(static_cast<std::size_t>(d), RelKind::ReflexiveBinary));
  }

  int arity() const { return static_cast<int>(kinds_.size()); }
  RelKind kind(int i) const { return kinds_[static_cast<std::size_t>(i)]; }
  const std::vector<RelKind>& kinds() const { return kinds_; }

  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<RelKind> kinds_;
};

/// A finite ordered binary structure: domain {0..n-1} carrying the implicit
/// natural position order plus d stored reflexive relations. Values are
/// immutable after construction; the constructor rejects anything that is not
/// reflexive, and rejects linear-order relations that are not total orders.
///
/// Two structures compare by (n, signature, relation bytes), which matches the
/// lexicographic order of their serialized text form at fixed signature.
class OrderedStructure {
 public:
  OrderedStructure(Signature sig, int n, std::vector<std::vector<std::uint8_t>> rel);

  static OrderedStructure singleton(const Signature& sig);

  int size() const { return n_; }
  const Signature& sig() const { return sig_; }

  bool rel(int r, int i, int j) const {
    return rel_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i * n_ + j)] != 0;
  }
  const std::vector<std::uint8_t>& rel_matrix(int r) const {
    return rel_[static_cast<std::size_t>(r)];
  }

  bool operator==(const OrderedStructure&) const = default;
  auto operator<=>(const OrderedStructure&) const = default;

 private:
  int n_ = 0;
  Signature sig_;
  std::vector<std::vector<std::uint8_t>> rel_;  // row-major n*n per relation
};

/// Permutation in one-line notation, stored 0-based. Rendering is 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values_0based);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// 0-based value at 0-based position.
  int at(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Finite poset given by its full <= matrix; must be reflexive, antisymmetric
/// and transitive.
class FinitePoset {
 public:
  FinitePoset(int m, std::vector<std::uint8_t> leq);

  static FinitePoset chain(int m);
  static FinitePoset antichain(int m);

  int size() const { return m_; }
  bool leq(int a, int b) const {
    return leq_[static_cast<std::size_t>(a * m_ + b)] != 0;
  }
  const std::vector<std::uint8_t>& matrix() const { return leq_; }

  bool operator==(const FinitePoset&) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// A structure together with one label per element; labels index into some
/// FinitePoset supplied at comparison time.
struct LabeledStructure {
  OrderedStructure base;
  std::vector<int> labels;

  bool operator==(const LabeledStructure&) const = default;
};

// --- operations ------------------------------------------------------------

/// Restriction of r to the sorted index set s (0-based, strictly increasing).
OrderedStructure restriction(const OrderedStructure& r, std::span<const int> s);

/// True iff s embeds into r: some strictly increasing injection of positions
/// matches every stored relation in both directions (the position order is
/// preserved by construction of the injection).
bool embeds(const OrderedStructure& s, const OrderedStructure& r);

/// Classical pattern containment: some subsequence of pi is order-isomorphic
/// to sigma.
bool perm_contains(const Permutation& pi, const Permutation& sigma);

/// The bichain encoding of sigma: one linear-order relation with entry (i,j)
/// true iff sigma(i) <= sigma(j).
OrderedStructure perm_to_bichain(const Permutation& sigma);

/// Inverse of perm_to_bichain; requires a bichain signature.
Permutation bichain_to_perm(const OrderedStructure& b);

enum class PermOp { Inverse, Reverse, Complement };

Permutation perm_symmetry(const Permutation& sigma, PermOp op);

/// Embedding of labeled structures: some embedding h of a.base into b.base
/// with a's label below b's label at h(x) in the poset, for every x.
bool labeled_embeds(const LabeledStructure& a, const LabeledStructure& b, const FinitePoset& poset);

/// Higman (subword) order on words over the poset's elements.
bool higman_leq(std::span<const int> w, std::span<const int> w2, const FinitePoset& poset);

}  // namespace hp
