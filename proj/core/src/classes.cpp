#include "hp/classes.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <thread>

#include "hp/decompose.hpp"

namespace hp {

LevelSets::LevelSets(Signature sig, int max_n, std::vector<std::vector<OrderedStructure>> levels,
                     Provenance provenance)
    : sig_(std::move(sig)), max_n_(max_n), levels_(std::move(levels)),
      provenance_(std::move(provenance)) {
  if (max_n_ < 1) throw Error("LevelSets: max_n must be at least 1");
  if (levels_.size() != static_cast<std::size_t>(max_n_))
    throw Error("LevelSets: level count does not match max_n");
  for (int n = 1; n <= max_n_; ++n) {
    const auto& lvl = levels_[static_cast<std::size_t>(n - 1)];
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      if (lvl[i].size() != n) throw Error("LevelSets: member has wrong size for its level");
      if (lvl[i].sig() != sig_) throw Error("LevelSets: signature mismatch in level");
      if (i > 0 && !(lvl[i - 1] < lvl[i]))
        throw Error("LevelSets: level is not sorted and duplicate-free");
    }
  }
}

const std::vector<OrderedStructure>& LevelSets::level(int n) const {
  if (n < 1 || n > max_n_) throw Error("LevelSets: level out of range");
  return levels_[static_cast<std::size_t>(n - 1)];
}

bool LevelSets::contains(const OrderedStructure& r) const {
  if (r.size() < 1 || r.size() > max_n_) return false;
  const auto& lvl = level(r.size());
  return std::binary_search(lvl.begin(), lvl.end(), r);
}

void LevelSets::verify_heredity() const {
  for (int n = 2; n <= max_n_; ++n) {
    const auto& prev = level(n - 1);
    for (const auto& r : level(n)) {
      for (int drop = 0; drop < n; ++drop) {
        std::vector<int> idx;
        idx.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
          if (i != drop) idx.push_back(i);
        if (!std::binary_search(prev.begin(), prev.end(), restriction(r, idx)))
          throw Error("LevelSets: heredity violated at level " + std::to_string(n));
      }
    }
  }
}

GeneratorSpec::GeneratorSpec(Signature sig, std::vector<OrderedStructure> explicit_members,
                             std::vector<FamilyGen> families)
    : sig_(std::move(sig)), explicit_(std::move(explicit_members)), families_(std::move(families)) {
  for (const auto& m : explicit_) {
    if (m.sig() != sig_) throw Error("GeneratorSpec: explicit member signature mismatch");
    if (m.size() < 1) throw Error("GeneratorSpec: empty explicit member");
    if (!is_indecomposable(m)) throw Error("GeneratorSpec: explicit member is not indecomposable");
  }
  if (!families_.empty() && sig_ != Signature::bichain())
    throw Error("GeneratorSpec: family generators require a bichain signature");
  std::sort(explicit_.begin(), explicit_.end());
  explicit_.erase(std::unique(explicit_.begin(), explicit_.end()), explicit_.end());
}

bool GeneratorSpec::contains(const OrderedStructure& x) const {
  if (x.sig() != sig_) return false;
  if (x.size() == 1) return true;
  if (std::binary_search(explicit_.begin(), explicit_.end(), x)) return true;
  for (const auto& f : families_) {
    if (f.size_cap && x.size() > *f.size_cap) continue;
    for (const auto& m : family_members(f.family, x.size()))
      if (m == x) return true;
  }
  return false;
}

std::vector<OrderedStructure> GeneratorSpec::members_of_size(int n) const {
  std::vector<OrderedStructure> out;
  if (n == 1) out.push_back(OrderedStructure::singleton(sig_));
  for (const auto& m : explicit_)
    if (m.size() == n) out.push_back(m);
  for (const auto& f : families_) {
    if (f.size_cap && n > *f.size_cap) continue;
    for (auto& m : family_members(f.family, n)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string GeneratorSpec::describe() const {
  std::ostringstream os;
  os << "{1";
  for (const auto& m : explicit_) {
    os << ", ";
    if (sig_ == Signature::bichain()) {
      const Permutation p = bichain_to_perm(m);
      for (int i = 0; i < p.size(); ++i) {
        if (i) os << '.';
        os << p.at(i) + 1;
      }
    } else {
      os << "<structure n=" << m.size() << ">";
    }
  }
  os << "}";
  for (const auto& f : families_) {
    switch (f.family) {
      case FamilyName::Oscillation: os << " + oscillation"; break;
      case FamilyName::OscillationStar: os << " + oscillation-star"; break;
      case FamilyName::ExceptionalI: os << " + exceptional-i"; break;
      case FamilyName::ExceptionalII: os << " + exceptional-ii"; break;
      case FamilyName::ExceptionalIII: os << " + exceptional-iii"; break;
      case FamilyName::ExceptionalIV: os << " + exceptional-iv"; break;
    }
    if (f.size_cap) os << "(<=" << *f.size_cap << ")";
  }
  return os.str();
}

namespace {

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::int64_t>::max() / b)
    return std::numeric_limits<std::int64_t>::max();
  return a * b;
}

// Candidate extensions per parent of size n, by signature.
std::int64_t extensions_per_parent(const Signature& sig, int n) {
  std::int64_t total = 1;
  for (int r = 0; r < sig.arity(); ++r) {
    std::int64_t choices;
    if (sig.kind(r) == RelKind::LinearOrder) {
      choices = n + 1;
    } else {
      choices = 1;
      for (int i = 0; i < n; ++i) choices = saturating_mul(choices, 4);
    }
    total = saturating_mul(total, choices);
  }
  return total;
}

// All one-new-last-element extensions of `parent`; for each linear-order
// relation the new element takes one of n+1 ranks, for each plain relation
// any of the 4^n in/out bit patterns against the old elements.
std::vector<OrderedStructure> extensions(const OrderedStructure& parent) {
  const int n = parent.size();
  const int d = parent.sig().arity();
  const int m = n + 1;

  // Per relation: the list of (row, col) assignments for the new element,
  // where row[i] = rel(new, i) and col[i] = rel(i, new).
  struct Assignment {
    std::vector<std::uint8_t> row, col;
  };
  std::vector<std::vector<Assignment>> options(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    auto& opts = options[static_cast<std::size_t>(r)];
    if (parent.sig().kind(r) == RelKind::LinearOrder) {
      std::vector<int> rank(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (y != x && parent.rel(r, y, x)) ++rank[static_cast<std::size_t>(x)];
      for (int c = 0; c <= n; ++c) {
        Assignment a;
        a.row.resize(static_cast<std::size_t>(n));
        a.col.resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          const bool below_new = rank[static_cast<std::size_t>(x)] < c;
          a.row[static_cast<std::size_t>(x)] = below_new ? 0 : 1;  // new <= x
          a.col[static_cast<std::size_t>(x)] = below_new ? 1 : 0;  // x <= new
        }
        opts.push_back(std::move(a));
      }
    } else {
      const std::uint64_t count = 1ull << (2 * n);
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        Assignment a;
        a.row.resize(static_cast<std::size_t>(n));
        a.col.resize(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          a.row[static_cast<std::size_t>(x)] = (mask >> (2 * x)) & 1 ? 1 : 0;
          a.col[static_cast<std::size_t>(x)] = (mask >> (2 * x + 1)) & 1 ? 1 : 0;
        }
        opts.push_back(std::move(a));
      }
    }
  }

  std::vector<OrderedStructure> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  for (;;) {
    std::vector<std::vector<std::uint8_t>> rel;
    rel.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      const auto& a = options[static_cast<std::size_t>(r)][pick[static_cast<std::size_t>(r)]];
      std::vector<std::uint8_t> mat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mat[static_cast<std::size_t>(i * m + j)] = parent.rel(r, i, j) ? 1 : 0;
      for (int i = 0; i < n; ++i) {
        mat[static_cast<std::size_t>(n * m + i)] = a.row[static_cast<std::size_t>(i)];
        mat[static_cast<std::size_t>(i * m + n)] = a.col[static_cast<std::size_t>(i)];
      }
      mat[static_cast<std::size_t>(n * m + n)] = 1;
      rel.push_back(std::move(mat));
    }
    out.emplace_back(parent.sig(), m, std::move(rel));

    int r = d - 1;
    while (r >= 0) {
      if (++pick[static_cast<std::size_t>(r)] < options[static_cast<std::size_t>(r)].size()) break;
      pick[static_cast<std::size_t>(r)] = 0;
      --r;
    }
    if (r < 0) break;
  }
  return out;
}

bool all_deletions_present(const OrderedStructure& cand,
                           const std::vector<OrderedStructure>& prev) {
  const int m = cand.size();
  // Dropping the last element recovers the parent, which is in prev by
  // construction; only the other deletions need checking.
  for (int drop = 0; drop < m - 1; ++drop) {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m; ++i)
      if (i != drop) idx.push_back(i);
    if (!std::binary_search(prev.begin(), prev.end(), restriction(cand, idx))) return false;
  }
  return true;
}

struct LevelOutput {
  std::vector<OrderedStructure> members;
  std::vector<OrderedStructure> rejected;  // deletion-closed non-members (bound candidates)
};

// One enumeration step: extend every structure in prev, keep the
// deletion-closed candidates, and split them by the membership filter.
// Deterministic for any worker count: outputs are merged in parent order and
// then sorted.
LevelOutput next_level(const std::vector<OrderedStructure>& prev,
                       const std::function<bool(const OrderedStructure&)>& member,
                       const EnumLimits& limits, bool collect_rejected) {
  const int workers = std::max(1, limits.workers);
  std::vector<LevelOutput> parts(static_cast<std::size_t>(workers));

  auto run = [&](int w) {
    auto& part = parts[static_cast<std::size_t>(w)];
    for (std::size_t p = static_cast<std::size_t>(w); p < prev.size();
         p += static_cast<std::size_t>(workers)) {
      for (auto& cand : extensions(prev[p])) {
        if (!all_deletions_present(cand, prev)) continue;
        if (member(cand))
          part.members.push_back(std::move(cand));
        else if (collect_rejected)
          part.rejected.push_back(std::move(cand));
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  LevelOutput out;
  for (auto& part : parts) {
    out.members.insert(out.members.end(), std::make_move_iterator(part.members.begin()),
                       std::make_move_iterator(part.members.end()));
    out.rejected.insert(out.rejected.end(), std::make_move_iterator(part.rejected.begin()),
                        std::make_move_iterator(part.rejected.end()));
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  std::sort(out.rejected.begin(), out.rejected.end());
  out.rejected.erase(std::unique(out.rejected.begin(), out.rejected.end()), out.rejected.end());
  return out;
}

void check_candidate_cap(const Signature& sig, int n, std::size_t parents,
                         const EnumLimits& limits) {
  const std::int64_t total =
      saturating_mul(static_cast<std::int64_t>(parents), extensions_per_parent(sig, n));
  if (total > limits.max_candidates)
    throw ResourceCapError("candidate ceiling exceeded at level " + std::to_string(n + 1) + ": " +
                           std::to_string(total) + " > " + std::to_string(limits.max_candidates));
}

LevelSets enumerate_filtered(const Signature& sig, int max_n,
                             const std::function<bool(const OrderedStructure&)>& member,
                             Provenance prov, const EnumLimits& limits,
                             std::vector<OrderedStructure>* bounds_out) {
  if (max_n < 1) throw Error("enumeration needs max_n >= 1");
  std::vector<std::vector<OrderedStructure>> levels;
  levels.reserve(static_cast<std::size_t>(max_n));

  OrderedStructure one = OrderedStructure::singleton(sig);
  std::vector<OrderedStructure> first;
  if (member(one))
    first.push_back(std::move(one));
  else if (bounds_out)
    bounds_out->push_back(std::move(one));
  levels.push_back(std::move(first));

  for (int n = 1; n < max_n; ++n) {
    const auto& prev = levels.back();
    check_candidate_cap(sig, n, prev.size(), limits);
    LevelOutput out = next_level(prev, member, limits, bounds_out != nullptr);
    if (bounds_out)
      bounds_out->insert(bounds_out->end(), std::make_move_iterator(out.rejected.begin()),
                         std::make_move_iterator(out.rejected.end()));
    levels.push_back(std::move(out.members));
  }
  return LevelSets(sig, max_n, std::move(levels), std::move(prov));
}

}  // namespace

LevelSets enumerate_avoiders(const Signature& sig, std::span<const OrderedStructure> basis,
                             int max_n, const EnumLimits& limits) {
  std::vector<std::vector<OrderedStructure>> by_size;
  for (const auto& b : basis) {
    if (b.sig() != sig) throw Error("enumerate_avoiders: basis signature mismatch");
    if (b.size() < 1) continue;
    if (by_size.size() < static_cast<std::size_t>(b.size()))
      by_size.resize(static_cast<std::size_t>(b.size()));
    by_size[static_cast<std::size_t>(b.size() - 1)].push_back(b);
  }
  for (auto& bucket : by_size) std::sort(bucket.begin(), bucket.end());

  // Proper restrictions of a deletion-closed candidate already avoid every
  // smaller basis member, so only equality at the candidate's own size is
  // left to test.
  auto member = [&by_size](const OrderedStructure& cand) {
    const std::size_t k = static_cast<std::size_t>(cand.size() - 1);
    if (k >= by_size.size()) return true;
    return !std::binary_search(by_size[k].begin(), by_size[k].end(), cand);
  };

  std::ostringstream desc;
  desc << "Forb{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) desc << ", ";
    if (sig == Signature::bichain()) {
      const Permutation p = bichain_to_perm(basis[i]);
      for (int j = 0; j < p.size(); ++j) {
        if (j) desc << '.';
        desc << p.at(j) + 1;
      }
    } else {
      desc << "<structure n=" << basis[i].size() << ">";
    }
  }
  desc << "}";
  return enumerate_filtered(sig, max_n, member,
                            Provenance{ProvenanceKind::Forbidden, desc.str()}, limits, nullptr);
}

bool sigma_membership(const OrderedStructure& r, const GeneratorSpec& d) {
  if (r.sig() != d.sig()) throw Error("sigma_membership: signature mismatch");
  if (r.size() > 20) throw Error("sigma_membership: domain too large (cap 20)");
  for (const auto& s : ind_restrictions(r, 1))
    if (!d.contains(s)) return false;
  return true;
}

namespace {

// Incremental membership for deletion-closed candidates: restrictions missing
// the last element lie inside a deletion, which is already a member, so only
// subsets containing the last element need checking.
bool closure_member_incremental(const OrderedStructure& cand, const GeneratorSpec& d) {
  const int n = cand.size();
  if (n == 1) return true;
  if (n > 20) throw Error("enumerate_closure: domain too large (cap 20)");
  const int base = n - 1;
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << base); ++mask) {
    idx.clear();
    for (int i = 0; i < base; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    idx.push_back(base);
    if (idx.size() == 1) continue;  // singleton, always generated
    OrderedStructure sub = restriction(cand, idx);
    if (is_indecomposable(sub) && !d.contains(sub)) return false;
  }
  return true;
}

}  // namespace

LevelSets enumerate_closure(const GeneratorSpec& d, int max_n, const EnumLimits& limits) {
  auto member = [&d](const OrderedStructure& cand) {
    return closure_member_incremental(cand, d);
  };
  return enumerate_filtered(d.sig(), max_n, member,
                            Provenance{ProvenanceKind::Closure, d.describe()}, limits, nullptr);
}

TruncatedSeries profile(const LevelSets& levels, bool include_empty) {
  TruncatedSeries s(levels.max_n());
  if (include_empty) s.set_coeff(0, Rational(1));
  for (int n = 1; n <= levels.max_n(); ++n) s.set_coeff(n, Rational(levels.count(n)));
  return s;
}

std::vector<OrderedStructure> bounds(
    const std::function<bool(const OrderedStructure&)>& membership, const Signature& sig,
    int max_n, const EnumLimits& limits) {
  std::vector<OrderedStructure> out;
  enumerate_filtered(sig, max_n, membership, Provenance{ProvenanceKind::Forbidden, "bounds scan"},
                     limits, &out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SumType classify_sum_type(const OrderedStructure& r, const GeneratorSpec& d) {
  if (!sigma_membership(r, d)) throw Error("classify_sum_type: not a member of the sum-closure");
  if (r.size() == 1) return SumType{true, std::nullopt};
  const DecompositionTree tree = decompose(r);
  const auto& node = tree.node();
  if (node.kind == SumKind::Indecomposable) return SumType{false, node.quotient};
  // Chainable root: the tag is the constant cross pattern, read off the first
  // two blocks. The first block is a strong interval, hence S-indecomposable,
  // which is what the two-element classification requires.
  int first_rep = 0;
  int second_rep = node.children[0].width();
  const std::array<int, 2> idx{first_rep, second_rep};
  return SumType{false, restriction(r, std::span<const int>(idx.data(), idx.size()))};
}

std::vector<std::pair<int, int>> antichain_pairs(std::span<const LabeledStructure> items,
                                                 const FinitePoset& poset) {
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].base.sig() != items[0].base.sig())
      throw Error("antichain_pairs: signature mismatch");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j) continue;
      if (labeled_embeds(items[i], items[j], poset))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

std::vector<OrderedStructure> age_patterns(const OrderedStructure& r, int k) {
  const int n = r.size();
  if (k < 0 || k > n) return {};
  std::vector<OrderedStructure> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(restriction(r, idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hp
