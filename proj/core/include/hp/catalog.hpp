#pragma once

#include <cstdint>
#include <vector>

#include "hp/structure.hpp"

namespace hp {

/// All simple permutations of size n (their bichains are indecomposable),
/// sorted lexicographically. 1 <= n <= 9.
std::vector<Permutation> simple_permutations(int n);

enum class ExceptionalFamily { I, II, III, IV };

/// The size-2m exceptional permutation of the given family, m >= 2.
Permutation exceptional(int m, ExceptionalFamily family);

enum class CriticalPosetVariant { P, PPrime };

/// The Schmerl-Trotter critical poset on 2n points, as a reflexive binary
/// structure; point (x, i) sits at domain index 2x + i.
OrderedStructure critical_poset(int n, CriticalPosetVariant variant);

/// The four critical bichains on 2m points built from the linear realizers
/// L_{m,1}, L_{m,2} of the critical poset:
///   1 = (L1, L2)   2 = (L2, L1)   3 = (L1, L2*)   4 = (L2*, L1).
OrderedStructure critical_bichain(int m, int variant);

enum class OscillationVariant { Plain, Star };

/// A length-n window of the decreasing-oscillation bichain. Plain windows
/// cover {0..n-1} of the doubly infinite structure; starred windows cover
/// {1..n} (reversing both orders of the infinite structure coincides with
/// shifting it by one, and the two offsets give the two distinct
/// indecomposable patterns of each even size).
OrderedStructure oscillation_window(int n, OscillationVariant variant);

/// Z-coordinates of the window's elements, listed in position order.
std::vector<int> oscillation_coordinates(int n, OscillationVariant variant);

/// Plain window with its two path endpoints labeled 1 and every other element
/// labeled 0 (labels index a 2-element poset).
LabeledStructure marked_oscillation(int n);

/// F_{n,k}: F_{0,k} = 1, F_{n,k} = 0 for n < 0, else the sum of the previous
/// k values.
std::int64_t generalized_fibonacci(int n, int k);

/// Number of integer partitions of n.
std::int64_t partition_number(int n);

/// Size-indexed families usable as sum-closure generators.
enum class FamilyName {
  Oscillation,
  OscillationStar,
  ExceptionalI,
  ExceptionalII,
  ExceptionalIII,
  ExceptionalIV,
};

/// The family's member of the given size if it has an indecomposable one
/// (exceptional families exist at even sizes >= 4; oscillation windows of
/// size 3 are decomposable and skipped).
std::vector<OrderedStructure> family_members(FamilyName family, int size);

}  // namespace hp
