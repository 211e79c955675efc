#include "hp/structure.hpp"

#include <algorithm>
#include <numeric>

namespace hp {

namespace {

void validate_relation(const Signature& sig, int r, int n, const std::vector<std::uint8_t>& m) {
  if (m.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error("relation " + std::to_string(r) + " has wrong dimensions");
  auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i * n + j)] != 0; };
  for (int i = 0; i < n; ++i)
    if (!at(i, i))
      throw Error("reflexivity violated at relation " + std::to_string(r) + ", row " +
                  std::to_string(i));
  if (sig.kind(r) == RelKind::LinearOrder) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (at(i, j) == at(j, i))
          throw Error("relation " + std::to_string(r) + " is not a total order at (" +
                      std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (at(i, j) && at(j, k) && !at(i, k))
            throw Error("relation " + std::to_string(r) + " is not transitive at (" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                        ")");
  }
}

}  // namespace

OrderedStructure::OrderedStructure(Signature sig, int n,
                                   std::vector<std::vector<std::uint8_t>> rel)
    : n_(n), sig_(std::move(sig)), rel_(std::move(rel)) {
  if (n_ < 0) throw Error("negative domain size");
  if (rel_.size() != static_cast<std::size_t>(sig_.arity()))
    throw Error("relation count does not match signature");
  for (int r = 0; r < sig_.arity(); ++r)
    validate_relation(sig_, r, n_, rel_[static_cast<std::size_t>(r)]);
}

OrderedStructure OrderedStructure::singleton(const Signature& sig) {
  std::vector<std::vector<std::uint8_t>> rel(static_cast<std::size_t>(sig.arity()),
                                             std::vector<std::uint8_t>{1});
  return OrderedStructure(sig, 1, std::move(rel));
}

OrderedStructure restriction(const OrderedStructure& r, std::span<const int> s) {
  const int m = static_cast<int>(s.size());
  for (int a = 0; a < m; ++a) {
    if (s[static_cast<std::size_t>(a)] < 0 || s[static_cast<std::size_t>(a)] >= r.size())
      throw Error("restriction index out of range");
    if (a > 0 && s[static_cast<std::size_t>(a)] <= s[static_cast<std::size_t>(a - 1)])
      throw Error("restriction index set must be strictly increasing");
  }
  std::vector<std::vector<std::uint8_t>> rel;
  rel.reserve(static_cast<std::size_t>(r.sig().arity()));
  for (int k = 0; k < r.sig().arity(); ++k) {
    std::vector<std::uint8_t> mat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        mat[static_cast<std::size_t>(a * m + b)] =
            r.rel(k, s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]) ? 1 : 0;
    rel.push_back(std::move(mat));
  }
  return OrderedStructure(r.sig(), m, std::move(rel));
}

namespace {

// Backtracking over strictly increasing injections; `ok_pair` lets the
// labeled variant reuse the same search.
template <typename Extra>
bool embed_search(const OrderedStructure& s, const OrderedStructure& r, Extra&& ok_pair) {
  const int sn = s.size(), rn = r.size(), d = s.sig().arity();
  if (sn > rn) return false;
  std::vector<int> img(static_cast<std::size_t>(sn), -1);
  auto consistent = [&](int k, int v) {
    if (!ok_pair(k, v)) return false;
    for (int a = 0; a < k; ++a) {
      const int w = img[static_cast<std::size_t>(a)];
      for (int rr = 0; rr < d; ++rr) {
        if (s.rel(rr, a, k) != r.rel(rr, w, v)) return false;
        if (s.rel(rr, k, a) != r.rel(rr, v, w)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == sn) return true;
    const int lo = (k == 0) ? 0 : img[static_cast<std::size_t>(k - 1)] + 1;
    for (int v = lo; v <= rn - (sn - k); ++v) {
      if (consistent(k, v)) {
        img[static_cast<std::size_t>(k)] = v;
        if (self(self, k + 1)) return true;
      }
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool embeds(const OrderedStructure& s, const OrderedStructure& r) {
  if (s.sig() != r.sig()) throw Error("embeds: signature mismatch");
  return embed_search(s, r, [](int, int) { return true; });
}

bool perm_contains(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size(), k = sigma.size();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> img(static_cast<std::size_t>(k), -1);
  auto fits = [&](int depth, int pos) {
    for (int b = 0; b < depth; ++b) {
      const bool want = sigma.at(b) < sigma.at(depth);
      const bool have = pi.at(img[static_cast<std::size_t>(b)]) < pi.at(pos);
      if (want != have) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    const int lo = (depth == 0) ? 0 : img[static_cast<std::size_t>(depth - 1)] + 1;
    for (int pos = lo; pos <= n - (k - depth); ++pos) {
      if (fits(depth, pos)) {
        img[static_cast<std::size_t>(depth)] = pos;
        if (self(self, depth + 1)) return true;
      }
    }
    return false;
  };
  return rec(rec, 0);
}

Permutation::Permutation(std::vector<int> values_0based) : values_(std::move(values_0based)) {
  const int n = static_cast<int>(values_.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : values_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw Error("sequence is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

OrderedStructure perm_to_bichain(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat[static_cast<std::size_t>(i * n + j)] = sigma.at(i) <= sigma.at(j) ? 1 : 0;
  std::vector<std::vector<std::uint8_t>> rel;
  rel.push_back(std::move(mat));
  return OrderedStructure(Signature::bichain(), n, std::move(rel));
}

Permutation bichain_to_perm(const OrderedStructure& b) {
  if (b.sig() != Signature::bichain()) throw Error("bichain_to_perm: not a bichain signature");
  const int n = b.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  // sigma(i) is the rank of i in the stored linear order.
  for (int i = 0; i < n; ++i) {
    int rank = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && b.rel(0, j, i)) ++rank;
    values[static_cast<std::size_t>(i)] = rank;
  }
  return Permutation(std::move(values));
}

Permutation perm_symmetry(const Permutation& sigma, PermOp op) {
  const int n = sigma.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  switch (op) {
    case PermOp::Inverse:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(sigma.at(i))] = i;
      break;
    case PermOp::Reverse:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = sigma.at(n - 1 - i);
      break;
    case PermOp::Complement:
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - sigma.at(i);
      break;
  }
  return Permutation(std::move(v));
}

FinitePoset::FinitePoset(int m, std::vector<std::uint8_t> leq) : m_(m), leq_(std::move(leq)) {
  if (m_ < 0 || leq_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_))
    throw Error("poset matrix has wrong dimensions");
  auto at = [&](int a, int b) { return leq_[static_cast<std::size_t>(a * m_ + b)] != 0; };
  for (int a = 0; a < m_; ++a)
    if (!at(a, a)) throw Error("poset order is not reflexive");
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      if (a != b && at(a, b) && at(b, a)) throw Error("poset order is not antisymmetric");
      for (int c = 0; c < m_; ++c)
        if (at(a, b) && at(b, c) && !at(a, c)) throw Error("poset order is not transitive");
    }
}

FinitePoset FinitePoset::chain(int m) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) leq[static_cast<std::size_t>(a * m + b)] = 1;
  return FinitePoset(m, std::move(leq));
}

FinitePoset FinitePoset::antichain(int m) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) leq[static_cast<std::size_t>(a * m + a)] = 1;
  return FinitePoset(m, std::move(leq));
}

bool labeled_embeds(const LabeledStructure& a, const LabeledStructure& b,
                    const FinitePoset& poset) {
  if (a.base.sig() != b.base.sig()) throw Error("labeled_embeds: signature mismatch");
  if (a.labels.size() != static_cast<std::size_t>(a.base.size()) ||
      b.labels.size() != static_cast<std::size_t>(b.base.size()))
    throw Error("labeled_embeds: label count mismatch");
  for (int l : a.labels)
    if (l < 0 || l >= poset.size()) throw Error("labeled_embeds: label index out of range");
  for (int l : b.labels)
    if (l < 0 || l >= poset.size()) throw Error("labeled_embeds: label index out of range");
  return embed_search(a.base, b.base, [&](int k, int v) {
    return poset.leq(a.labels[static_cast<std::size_t>(k)],
                     b.labels[static_cast<std::size_t>(v)]);
  });
}

bool higman_leq(std::span<const int> w, std::span<const int> w2, const FinitePoset& poset) {
  for (int l : w)
    if (l < 0 || l >= poset.size()) throw Error("higman_leq: label index out of range");
  for (int l : w2)
    if (l < 0 || l >= poset.size()) throw Error("higman_leq: label index out of range");
  // Greedy earliest-match is exact for subword embedding.
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    while (j < w2.size() && !poset.leq(w[i], w2[j])) ++j;
    if (j == w2.size()) return false;
    ++j;
  }
  return true;
}

}  // namespace hp
