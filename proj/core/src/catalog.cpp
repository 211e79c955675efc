#include "hp/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "hp/decompose.hpp"

namespace hp {

namespace {

constexpr int kFamilySizeCap = 64;   // per-parameter cap for m / n
constexpr int kWindowSizeCap = 256;  // oscillation window length cap

bool perm_is_simple(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n <= 2) return true;
  // A window of length 2..n-1 whose value span equals its length is an
  // interval of the permutation.
  for (int lo = 0; lo < n; ++lo) {
    int mn = values[static_cast<std::size_t>(lo)];
    int mx = mn;
    for (int hi = lo + 1; hi < n; ++hi) {
      mn = std::min(mn, values[static_cast<std::size_t>(hi)]);
      mx = std::max(mx, values[static_cast<std::size_t>(hi)]);
      const int len = hi - lo + 1;
      if (len == n) break;
      if (mx - mn + 1 == len) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Permutation> simple_permutations(int n) {
  if (n < 1 || n > 9) throw Error("simple_permutations: n must be in 1..9");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 0);
  std::vector<Permutation> out;
  do {
    if (perm_is_simple(values)) out.push_back(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;  // next_permutation visits in lexicographic order
}

Permutation exceptional(int m, ExceptionalFamily family) {
  if (m < 2) throw Error("exceptional: m must be at least 2");
  if (m > kFamilySizeCap) throw Error("exceptional: m exceeds family size cap");
  std::vector<int> v;  // 1-based values, shifted at the end
  v.reserve(static_cast<std::size_t>(2 * m));
  switch (family) {
    case ExceptionalFamily::I:
      for (int i = 1; i <= m; ++i) v.push_back(2 * i);
      for (int i = 1; i <= m; ++i) v.push_back(2 * i - 1);
      break;
    case ExceptionalFamily::II:
      for (int i = m; i >= 1; --i) v.push_back(2 * i - 1);
      for (int i = m; i >= 1; --i) v.push_back(2 * i);
      break;
    case ExceptionalFamily::III:
      for (int i = 1; i <= m; ++i) {
        v.push_back(m + i);
        v.push_back(i);
      }
      break;
    case ExceptionalFamily::IV:
      for (int i = 1; i <= m; ++i) {
        v.push_back(m + 1 - i);
        v.push_back(2 * m + 1 - i);
      }
      break;
  }
  for (int& x : v) --x;
  return Permutation(std::move(v));
}

namespace {

// Realizers of the critical poset on V_m = {0..m-1} x {0,1}; pairs are listed
// ascending. L1 sorts by (x, i); L2 sorts by (i asc, x desc).
std::vector<std::pair<int, int>> realizer_l1(int m) {
  std::vector<std::pair<int, int>> v;
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < 2; ++i) v.emplace_back(x, i);
  return v;
}

std::vector<std::pair<int, int>> realizer_l2(int m) {
  std::vector<std::pair<int, int>> v;
  for (int i = 0; i < 2; ++i)
    for (int x = m - 1; x >= 0; --x) v.emplace_back(x, i);
  return v;
}

// Bichain on the points of `first`, re-indexed so that `first` is the
// position order and `second` is the stored linear order.
template <typename T>
OrderedStructure bichain_of_orders(const std::vector<T>& first, const std::vector<T>& second) {
  const int n = static_cast<int>(first.size());
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    const auto it = std::find(second.begin(), second.end(), first[static_cast<std::size_t>(pos)]);
    values[static_cast<std::size_t>(pos)] = static_cast<int>(it - second.begin());
  }
  return perm_to_bichain(Permutation(std::move(values)));
}

}  // namespace

OrderedStructure critical_poset(int n, CriticalPosetVariant variant) {
  if (n < 1) throw Error("critical_poset: n must be at least 1");
  if (n > kFamilySizeCap) throw Error("critical_poset: n exceeds family size cap");
  const int size = 2 * n;
  std::vector<std::uint8_t> mat(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  auto less = [&](int x, int i, int y, int j) {
    if (variant == CriticalPosetVariant::P) return i < j && x <= y;
    return j <= i && x < y;
  };
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < 2; ++i)
      for (int y = 0; y < n; ++y)
        for (int j = 0; j < 2; ++j) {
          const int a = 2 * x + i, b = 2 * y + j;
          mat[static_cast<std::size_t>(a * size + b)] = (a == b || less(x, i, y, j)) ? 1 : 0;
        }
  std::vector<std::vector<std::uint8_t>> rel;
  rel.push_back(std::move(mat));
  return OrderedStructure(Signature::binary(1), size, std::move(rel));
}

OrderedStructure critical_bichain(int m, int variant) {
  if (m < 2) throw Error("critical_bichain: m must be at least 2");
  if (m > kFamilySizeCap) throw Error("critical_bichain: m exceeds family size cap");
  if (variant < 1 || variant > 4) throw Error("critical_bichain: variant must be in 1..4");
  auto l1 = realizer_l1(m);
  auto l2 = realizer_l2(m);
  auto l2star = l2;
  std::reverse(l2star.begin(), l2star.end());
  switch (variant) {
    case 1: return bichain_of_orders(l1, l2);
    case 2: return bichain_of_orders(l2, l1);
    case 3: return bichain_of_orders(l1, l2star);
    default: return bichain_of_orders(l2star, l1);
  }
}

namespace {

// The two linear orders of the doubly infinite oscillation, as comparators on
// Z. Their intersection is the transitive orientation
// {(a,b) : |a-b| = 1, a even} of the path; a test pins this down.
bool osc_l1_less(int x, int y) {
  auto key = [](int v) { return v % 2 == 0 ? v : v + 2; };
  return key(x) < key(y);
}

int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

bool osc_l2_less(int x, int y) {
  const int bx = floor_div2(x), by = floor_div2(y);
  if (bx != by) return bx > by;
  return x < y;
}

}  // namespace

std::vector<int> oscillation_coordinates(int n, OscillationVariant variant) {
  if (n < 1) throw Error("oscillation_window: size must be at least 1");
  if (n > kWindowSizeCap) throw Error("oscillation_window: size exceeds cap");
  const int offset = variant == OscillationVariant::Plain ? 0 : 1;
  std::vector<int> zs(static_cast<std::size_t>(n));
  std::iota(zs.begin(), zs.end(), offset);
  std::sort(zs.begin(), zs.end(), osc_l1_less);
  return zs;
}

OrderedStructure oscillation_window(int n, OscillationVariant variant) {
  const std::vector<int> by_l1 = oscillation_coordinates(n, variant);
  std::vector<int> by_l2 = by_l1;
  std::sort(by_l2.begin(), by_l2.end(), osc_l2_less);
  return bichain_of_orders(by_l1, by_l2);
}

LabeledStructure marked_oscillation(int n) {
  const std::vector<int> coords = oscillation_coordinates(n, OscillationVariant::Plain);
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos) {
    const int z = coords[static_cast<std::size_t>(pos)];
    if (z == 0 || z == n - 1) labels[static_cast<std::size_t>(pos)] = 1;
  }
  return LabeledStructure{oscillation_window(n, OscillationVariant::Plain), std::move(labels)};
}

std::int64_t generalized_fibonacci(int n, int k) {
  if (n < 0 || k < 1) throw Error("generalized_fibonacci: need n >= 0 and k >= 1");
  if (n > 60) throw Error("generalized_fibonacci: n too large for exact 64-bit result");
  std::vector<std::int64_t> f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::int64_t acc = 0;
    for (int j = 1; j <= k && j <= i; ++j) acc += f[static_cast<std::size_t>(i - j)];
    f[static_cast<std::size_t>(i)] = acc;
  }
  return f[static_cast<std::size_t>(n)];
}

std::int64_t partition_number(int n) {
  if (n < 0) throw Error("partition_number: n must be non-negative");
  if (n > 120) throw Error("partition_number: n too large for exact 64-bit result");
  // p(n, k): partitions of n into parts of size at most k.
  std::vector<std::vector<std::int64_t>> p(static_cast<std::size_t>(n) + 1,
                                           std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][static_cast<std::size_t>(k)] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) {
      std::int64_t v = p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
      if (m >= k) v += p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
      p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = v;
    }
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

std::vector<OrderedStructure> family_members(FamilyName family, int size) {
  std::vector<OrderedStructure> out;
  switch (family) {
    case FamilyName::Oscillation:
    case FamilyName::OscillationStar: {
      if (size < 1 || size > kWindowSizeCap) return out;
      const auto variant = family == FamilyName::Oscillation ? OscillationVariant::Plain
                                                             : OscillationVariant::Star;
      OrderedStructure w = oscillation_window(size, variant);
      if (is_indecomposable(w)) out.push_back(std::move(w));
      break;
    }
    case FamilyName::ExceptionalI:
    case FamilyName::ExceptionalII:
    case FamilyName::ExceptionalIII:
    case FamilyName::ExceptionalIV: {
      if (size < 4 || size % 2 != 0 || size / 2 > kFamilySizeCap) return out;
      const auto fam = family == FamilyName::ExceptionalI    ? ExceptionalFamily::I
                       : family == FamilyName::ExceptionalII  ? ExceptionalFamily::II
                       : family == FamilyName::ExceptionalIII ? ExceptionalFamily::III
                                                              : ExceptionalFamily::IV;
      out.push_back(perm_to_bichain(exceptional(size / 2, fam)));
      break;
    }
  }
  return out;
}

}  // namespace hp
