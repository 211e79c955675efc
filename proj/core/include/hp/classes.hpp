#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hp/catalog.hpp"
#include "hp/series.hpp"
#include "hp/structure.hpp"

namespace hp {

struct EnumLimits {
  std::int64_t max_candidates = 1'000'000;  // per-level candidate ceiling
  int workers = 1;
};

enum class ProvenanceKind { Forbidden, Closure };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Forbidden;
  std::string descriptor;

  bool operator==(const Provenance&) const = default;
};

/// A hereditary class materialized level-by-level: for each size 1..max_n the
/// sorted, duplicate-free list of its members of that size.
class LevelSets {
 public:
  LevelSets(Signature sig, int max_n, std::vector<std::vector<OrderedStructure>> levels,
            Provenance provenance);

  const Signature& sig() const { return sig_; }
  int max_n() const { return max_n_; }
  const Provenance& provenance() const { return provenance_; }

  const std::vector<OrderedStructure>& level(int n) const;
  std::int64_t count(int n) const { return static_cast<std::int64_t>(level(n).size()); }
  bool contains(const OrderedStructure& r) const;

  /// Checks the heredity invariant: every one-point deletion of a level-(n+1)
  /// member equals some level-n member. Throws on violation.
  void verify_heredity() const;

  bool operator==(const LevelSets&) const = default;

 private:
  Signature sig_;
  int max_n_ = 0;
  std::vector<std::vector<OrderedStructure>> levels_;  // levels_[n-1] holds size n
  Provenance provenance_;
};

/// A generating set of indecomposable structures: an explicit finite list
/// plus named size-indexed families, with the one-element structure always
/// implicitly included.
struct FamilyGen {
  FamilyName family;
  std::optional<int> size_cap;
};

class GeneratorSpec {
 public:
  GeneratorSpec(Signature sig, std::vector<OrderedStructure> explicit_members,
                std::vector<FamilyGen> families = {});

  const Signature& sig() const { return sig_; }
  const std::vector<OrderedStructure>& explicit_members() const { return explicit_; }
  const std::vector<FamilyGen>& families() const { return families_; }

  /// Membership at exact size; the singleton is always a member.
  bool contains(const OrderedStructure& x) const;
  /// Distinct members of the given size, sorted.
  std::vector<OrderedStructure> members_of_size(int n) const;

  std::string describe() const;

 private:
  Signature sig_;
  std::vector<OrderedStructure> explicit_;  // sorted
  std::vector<FamilyGen> families_;
};

/// Level-by-level enumeration of Forb(basis): level n holds exactly the
/// size-n structures of the signature embedding no basis member.
LevelSets enumerate_avoiders(const Signature& sig, std::span<const OrderedStructure> basis,
                             int max_n, const EnumLimits& limits = {});

/// True iff every indecomposable restriction of r is generated by d. r must
/// have at most 20 elements.
bool sigma_membership(const OrderedStructure& r, const GeneratorSpec& d);

/// Level-by-level enumeration of the sum-closure of d (equivalently, of all
/// structures whose indecomposable restrictions d generates).
LevelSets enumerate_closure(const GeneratorSpec& d, int max_n, const EnumLimits& limits = {});

/// Coefficient n = |level n| for 1 <= n <= max_n; the constant coefficient is
/// 0 unless include_empty.
TruncatedSeries profile(const LevelSets& levels, bool include_empty = false);

/// All structures of size <= max_n that fail `membership` while every
/// one-point deletion satisfies it. `membership` must be hereditary and pure.
std::vector<OrderedStructure> bounds(const std::function<bool(const OrderedStructure&)>& membership,
                                     const Signature& sig, int max_n,
                                     const EnumLimits& limits = {});

/// Which part of the sum-closure partition a member falls into: the unit, or
/// the sum type A_S with its quotient S.
struct SumType {
  bool is_unit = false;
  std::optional<OrderedStructure> quotient;

  bool operator==(const SumType&) const = default;
};

SumType classify_sum_type(const OrderedStructure& r, const GeneratorSpec& d);

/// All ordered pairs (i, j), i != j, with items[i] label-embeddable into
/// items[j]; an empty result certifies an antichain.
std::vector<std::pair<int, int>> antichain_pairs(std::span<const LabeledStructure> items,
                                                 const FinitePoset& poset);

/// Distinct size-k restriction patterns of r.
std::vector<OrderedStructure> age_patterns(const OrderedStructure& r, int k);

}  // namespace hp
