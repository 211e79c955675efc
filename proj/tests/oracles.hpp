#pragma once

// Test-only brute-force oracles, kept independent of the library code paths
// they are used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hp/structure.hpp"

namespace oracle {

/// Definition-direct interval test for an arbitrary subset (not just ranges):
/// members of `subset` must be pairwise indistinguishable from every outside
/// point, under every stored relation and the position order.
inline bool subset_is_interval(const hp::OrderedStructure& r, const std::vector<int>& subset) {
  const int n = r.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int a : subset) in[static_cast<std::size_t>(a)] = 1;
  for (int x = 0; x < n; ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    for (int a : subset)
      for (int b : subset) {
        // position order participates as an extra linear order
        if ((x < a) != (x < b)) return false;
        for (int k = 0; k < r.sig().arity(); ++k) {
          if (r.rel(k, x, a) != r.rel(k, x, b)) return false;
          if (r.rel(k, a, x) != r.rel(k, b, x)) return false;
        }
      }
  }
  return true;
}

/// Exhaustive labeled-embedding search over all strictly increasing
/// injections, with no pruning.
inline bool labeled_embeds_exhaustive(const hp::LabeledStructure& a, const hp::LabeledStructure& b,
                                      const hp::FinitePoset& poset) {
  const int sn = a.base.size(), rn = b.base.size();
  if (sn > rn) return false;
  std::vector<int> img(static_cast<std::size_t>(sn));
  std::vector<int> comb(static_cast<std::size_t>(sn));
  std::iota(comb.begin(), comb.end(), 0);
  auto matches = [&]() {
    for (int i = 0; i < sn; ++i) {
      if (!poset.leq(a.labels[static_cast<std::size_t>(i)],
                     b.labels[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])]))
        return false;
      for (int j = 0; j < sn; ++j)
        for (int k = 0; k < a.base.sig().arity(); ++k)
          if (a.base.rel(k, i, j) !=
              b.base.rel(k, img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]))
            return false;
    }
    return true;
  };
  for (;;) {
    img = comb;
    if (matches()) return true;
    int i = sn - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == rn - sn + i) --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < sn; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Exhaustive Higman check over all strictly increasing position injections.
inline bool higman_exhaustive(const std::vector<int>& w, const std::vector<int>& w2,
                              const hp::FinitePoset& poset) {
  const int sn = static_cast<int>(w.size()), rn = static_cast<int>(w2.size());
  if (sn == 0) return true;
  if (sn > rn) return false;
  std::vector<int> comb(static_cast<std::size_t>(sn));
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i < sn && ok; ++i)
      ok = poset.leq(w[static_cast<std::size_t>(i)],
                     w2[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])]);
    if (ok) return true;
    int i = sn - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == rn - sn + i) --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < sn; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Every permutation of size n, in lexicographic order.
inline std::vector<hp::Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<hp::Permutation> out;
  do {
    out.push_back(hp::Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Count of size-n permutations avoiding every pattern in `basis`, by direct
/// filtering of all n! permutations with perm_contains.
inline std::int64_t avoider_count_brute(int n, const std::vector<hp::Permutation>& basis) {
  std::int64_t count = 0;
  for (const auto& p : all_permutations(n)) {
    bool ok = true;
    for (const auto& b : basis)
      if (hp::perm_contains(p, b)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

/// Random reflexive binary structure with one relation of the given kind.
inline hp::OrderedStructure random_binary_structure(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat[static_cast<std::size_t>(i * n + j)] = (i == j || coin(rng)) ? 1 : 0;
  std::vector<std::vector<std::uint8_t>> rel;
  rel.push_back(std::move(mat));
  return hp::OrderedStructure(hp::Signature::binary(1), n, std::move(rel));
}

/// All partitions of 0..n-1 into at least `min_blocks` consecutive nonempty
/// blocks, each block given as {lo, hi}.
inline std::vector<std::vector<std::pair<int, int>>> contiguous_partitions(int n, int min_blocks) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<std::pair<int, int>> blocks;
    int lo = 0;
    for (int i = 0; i < n - 1; ++i)
      if (cuts & (1u << i)) {
        blocks.emplace_back(lo, i);
        lo = i + 1;
      }
    blocks.emplace_back(lo, n - 1);
    if (static_cast<int>(blocks.size()) >= min_blocks) out.push_back(std::move(blocks));
  }
  return out;
}

}  // namespace oracle
