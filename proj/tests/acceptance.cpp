// Acceptance suite: runs every top-level scenario end to end and prints one
// pass/fail line per criterion. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "hp/catalog.hpp"
#include "hp/classes.hpp"
#include "hp/decompose.hpp"
#include "hp/io.hpp"
#include "hp/series.hpp"
#include "hp/structure.hpp"
#include "oracles.hpp"

using namespace hp;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

Permutation perm(const std::string& s) { return io::parse_permutation(s); }

OrderedStructure bichain(const std::string& s) { return perm_to_bichain(perm(s)); }

std::vector<OrderedStructure> bichains(std::initializer_list<const char*> ss) {
  std::vector<OrderedStructure> out;
  for (const char* s : ss) out.push_back(bichain(s));
  return out;
}

GeneratorSpec separable_gen() {
  return GeneratorSpec(Signature::bichain(), bichains({"12", "21"}));
}

GeneratorSpec oscillation_gen() {
  return GeneratorSpec(Signature::bichain(), bichains({"21"}),
                       {FamilyGen{FamilyName::Oscillation, {}},
                        FamilyGen{FamilyName::OscillationStar, {}}});
}

// Q = y^2 + (x-1)y + x, the algebraic relation of the separable profile.
BivariatePolynomial separable_poly() {
  return BivariatePolynomial({{Rational(1), 0, 2},
                              {Rational(1), 1, 1},
                              {Rational(-1), 0, 1},
                              {Rational(1), 1, 0}});
}

// 2y^5 + 2y^4 - y^3 + (2-x)y^2 - y + x, the oscillation sum-closure quintic.
BivariatePolynomial oscillation_poly() {
  return BivariatePolynomial({{Rational(2), 0, 5},
                              {Rational(2), 0, 4},
                              {Rational(-1), 0, 3},
                              {Rational(2), 0, 2},
                              {Rational(-1), 1, 2},
                              {Rational(-1), 0, 1},
                              {Rational(1), 1, 0}});
}

void criterion_1(Check& c) {
  const std::int64_t expected[] = {1, 2, 0, 2, 6, 46, 338};
  for (int n = 1; n <= 7; ++n) {
    const auto count = static_cast<std::int64_t>(simple_permutations(n).size());
    c.expect(count == expected[n - 1],
             "S_" + std::to_string(n) + " = " + std::to_string(count) + ", expected " +
                 std::to_string(expected[n - 1]));
  }
}

void criterion_2(Check& c) {
  const auto avoid = enumerate_avoiders(Signature::bichain(), bichains({"2413", "3142"}), 8);
  avoid.verify_heredity();
  const auto h = profile(avoid);
  c.expect(poly_residual(separable_poly(), h).is_zero(),
           "separable profile fails y^2+(x-1)y+x = 0 mod x^9");

  const auto closure = enumerate_closure(separable_gen(), 8);
  bool identical = true;
  for (int n = 1; n <= 8; ++n) identical = identical && closure.level(n) == avoid.level(n);
  c.expect(identical, "closure of {1,12,21} differs from Forb{2413,3142}");

  c.expect(solve_sum_closure(2, 8) == h, "solve_sum_closure(2, 0, 8) differs from the profile");
}

void criterion_3(Check& c) {
  const auto window = oscillation_window(20, OscillationVariant::Plain);
  const auto series = rational_expand(
      BivariatePolynomial::in_x({Rational(1), Rational(-1)}),
      BivariatePolynomial::in_x({Rational(1), Rational(-2), Rational(0), Rational(-1)}), 5);
  c.expect(series.coeff(0) == 1, "rational expansion constant term");
  const std::int64_t expected[] = {1, 2, 5, 11, 24};
  for (int k = 1; k <= 5; ++k) {
    const auto count = static_cast<std::int64_t>(age_patterns(window, k).size());
    c.expect(count == expected[k - 1],
             "age count at size " + std::to_string(k) + " = " + std::to_string(count));
    c.expect(series.coeff(k) == Rational(count), "series coefficient mismatch at " + std::to_string(k));
  }
  const auto window2 = oscillation_window(22, OscillationVariant::Plain);
  for (int k = 1; k <= 5; ++k)
    c.expect(age_patterns(window, k) == age_patterns(window2, k),
             "window 20 vs 22 instability at size " + std::to_string(k));
}

void criterion_4(Check& c) {
  EnumLimits limits;
  limits.max_candidates = 2'000'000;
  const auto closure = enumerate_closure(oscillation_gen(), 8, limits);
  closure.verify_heredity();
  const auto d = profile(closure);
  c.expect(poly_residual(oscillation_poly(), d).is_zero(),
           "oscillation closure profile fails the quintic mod x^9");
}

void criterion_5(Check& c) {
  const auto d = separable_gen();
  const auto found = bounds([&](const OrderedStructure& r) { return sigma_membership(r, d); },
                            Signature::bichain(), 6);
  auto expected = bichains({"2413", "3142"});
  std::sort(expected.begin(), expected.end());
  c.expect(found == expected, "bounds of the separable closure are not {2413, 3142}");

  // D = all indecomposable bichains of size <= 2; bounds stay within size 4.
  for (const auto& b : found)
    c.expect(b.size() <= 4, "bound of size " + std::to_string(b.size()) + " exceeds k+2");
}

void criterion_6(Check& c) {
  c.expect(exceptional(2, ExceptionalFamily::I) == perm("2413"), "exceptional(2,I)");
  c.expect(exceptional(2, ExceptionalFamily::II) == perm("3142"), "exceptional(2,II)");
  c.expect(exceptional(2, ExceptionalFamily::III) == perm("3142"), "exceptional(2,III)");
  c.expect(exceptional(2, ExceptionalFamily::IV) == perm("2413"), "exceptional(2,IV)");
  for (int m = 2; m <= 5; ++m) {
    const auto type1 = bichain_to_perm(critical_bichain(m, 1));
    c.expect(type1 == exceptional(m, ExceptionalFamily::IV),
             "critical bichain 1 type at m=" + std::to_string(m));
    c.expect(perm_symmetry(type1, PermOp::Inverse) == exceptional(m, ExceptionalFamily::II),
             "inverse type at m=" + std::to_string(m));
  }
  for (int m = 2; m <= 4; ++m)
    for (int variant = 1; variant <= 4; ++variant) {
      const auto b = critical_bichain(m, variant);
      bool critical = is_indecomposable(b);
      for (int drop = 0; drop < b.size() && critical; ++drop) {
        std::vector<int> idx;
        for (int i = 0; i < b.size(); ++i)
          if (i != drop) idx.push_back(i);
        critical = !is_indecomposable(restriction(b, idx));
      }
      c.expect(critical, "variant " + std::to_string(variant) + " at m=" + std::to_string(m) +
                             " is not critical");
    }
}

void criterion_7(Check& c) {
  const auto closure = enumerate_closure(separable_gen(), 4);
  const auto h = profile(closure);
  const auto one = TruncatedSeries::monomial(Rational(1), 0, 4);
  const auto ratio = series_div(h, series_add(one, h));
  const auto s = bichain("12");
  const std::int64_t expected[] = {1, 1, 3, 11};
  for (int n = 1; n <= 4; ++n) {
    std::int64_t found = 0;
    for (const auto& r : closure.level(n))
      if (is_s_indecomposable(r, s)) ++found;
    c.expect(found == expected[n - 1], "S-indecomposable count at n=" + std::to_string(n));
    c.expect(ratio.coeff(n) == Rational(found), "H/(1+H) coefficient at n=" + std::to_string(n));
  }
}

void criterion_8(Check& c) {
  // Lemma 8: the sum types partition every level of the separable closure.
  const auto d = separable_gen();
  const auto closure = enumerate_closure(d, 7);
  const auto s12 = bichain("12"), s21 = bichain("21");
  for (int n = 2; n <= 7; ++n) {
    std::int64_t tag12 = 0, tag21 = 0;
    for (const auto& r : closure.level(n)) {
      const auto t = classify_sum_type(r, d);
      if (t.is_unit || t.quotient->size() != 2) {
        c.expect(false, "non-binary sum type in a closure with no large generators");
        continue;
      }
      if (*t.quotient == s12) ++tag12;
      else if (*t.quotient == s21) ++tag21;
      else c.expect(false, "unexpected sum-type quotient");
    }
    c.expect(tag12 + tag21 == closure.count(n),
             "sum types do not partition level " + std::to_string(n));
  }

  // Lemma 15: inclusion-exclusion of level counts.
  const auto a = enumerate_avoiders(Signature::bichain(), bichains({"2413", "3142"}), 6);
  const auto b = enumerate_avoiders(Signature::bichain(), bichains({"12"}), 6);
  for (int n = 1; n <= 6; ++n) {
    std::vector<OrderedStructure> uni, inter;
    std::set_union(a.level(n).begin(), a.level(n).end(), b.level(n).begin(), b.level(n).end(),
                   std::back_inserter(uni));
    std::set_intersection(a.level(n).begin(), a.level(n).end(), b.level(n).begin(),
                          b.level(n).end(), std::back_inserter(inter));
    c.expect(static_cast<std::int64_t>(uni.size()) ==
                 a.count(n) + b.count(n) - static_cast<std::int64_t>(inter.size()),
             "union identity fails at level " + std::to_string(n));
  }

  // Lemma 17: S-sums distribute over intersection for an indecomposable S.
  {
    const auto s = bichain("2413");
    const auto ax = enumerate_avoiders(Signature::bichain(), bichains({"12"}), 2);
    const auto bx = enumerate_avoiders(Signature::bichain(), bichains({"21"}), 2);
    auto members = [](const LevelSets& l) {
      std::vector<OrderedStructure> out;
      for (int n = 1; n <= l.max_n(); ++n)
        for (const auto& r : l.level(n)) out.push_back(r);
      return out;
    };
    const auto xs = members(ax), ys = members(bx);
    auto sums_over = [&](const std::vector<OrderedStructure>& pool) {
      std::vector<OrderedStructure> out;
      std::vector<std::size_t> pick(4, 0);
      for (;;) {
        std::vector<OrderedStructure> children;
        for (int i = 0; i < 4; ++i) children.push_back(pool[pick[static_cast<std::size_t>(i)]]);
        out.push_back(lex_sum(s, children));
        int i = 3;
        while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == pool.size()) {
          pick[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    std::vector<OrderedStructure> both;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(both));
    const auto sa = sums_over(xs), sb = sums_over(ys);
    std::vector<OrderedStructure> si;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(si));
    c.expect(si == sums_over(both), "S-sum intersection identity fails");
  }

  // Bounds that are S-indecomposable leave H_{C(S)} = H_C/(1+H_C) intact.
  {
    const auto s = bichain("12");
    auto check_identity = [&](const LevelSets& levels, const std::string& tag) {
      const auto h = profile(levels);
      const auto one = TruncatedSeries::monomial(Rational(1), 0, levels.max_n());
      const auto ratio = series_div(h, series_add(one, h));
      for (int n = 1; n <= levels.max_n(); ++n) {
        std::int64_t found = 0;
        for (const auto& r : levels.level(n))
          if (is_s_indecomposable(r, s)) ++found;
        c.expect(ratio.coeff(n) == Rational(found),
                 tag + ": H_C(S) != H_C/(1+H_C) at level " + std::to_string(n));
      }
    };
    // Basis {3142}, itself S-indecomposable, inside the separable closure.
    check_identity(enumerate_avoiders(Signature::bichain(), bichains({"2413", "3142"}), 7),
                   "basis 3142");
    // A proper strong subclass: basis {21} (also S-indecomposable).
    check_identity(enumerate_avoiders(Signature::bichain(), bichains({"2413", "3142", "21"}), 7),
                   "basis 21");
  }
}

void criterion_9(Check& c) {
  const FinitePoset anti2 = FinitePoset::antichain(2);
  std::vector<LabeledStructure> marked;
  for (int n = 4; n <= 8; ++n) marked.push_back(marked_oscillation(n));
  c.expect(antichain_pairs(marked, anti2).empty(),
           "marked oscillation windows 4..8 are not an antichain");

  // Words over the square of a 2-chain map to labeled critical bichains
  // monotonically.
  std::mt19937 rng(97);
  const FinitePoset chain2 = FinitePoset::chain(2);
  std::uniform_int_distribution<int> long_len(2, 7), bit(0, 1);
  auto make_labeled = [](const std::vector<std::pair<int, int>>& w) {
    const int m = static_cast<int>(w.size());
    LabeledStructure l{critical_bichain(m, 1), std::vector<int>(static_cast<std::size_t>(2 * m))};
    for (int x = 0; x < m; ++x) {
      l.labels[static_cast<std::size_t>(2 * x)] = w[static_cast<std::size_t>(x)].first;
      l.labels[static_cast<std::size_t>(2 * x + 1)] = w[static_cast<std::size_t>(x)].second;
    }
    return l;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n2 = long_len(rng);
    std::vector<std::pair<int, int>> w2(static_cast<std::size_t>(n2));
    for (auto& [x, y] : w2) {
      x = bit(rng);
      y = bit(rng);
    }
    std::uniform_int_distribution<int> short_len(2, n2);
    const int n1 = short_len(rng);
    std::vector<int> positions(static_cast<std::size_t>(n2));
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(static_cast<std::size_t>(n1));
    std::sort(positions.begin(), positions.end());
    std::vector<std::pair<int, int>> w1;
    for (int pos : positions) {
      const auto [x, y] = w2[static_cast<std::size_t>(pos)];
      w1.emplace_back(bit(rng) ? x : 0, bit(rng) ? y : 0);
    }
    if (!labeled_embeds(make_labeled(w1), make_labeled(w2), chain2)) {
      c.expect(false, "order preservation failed on trial " + std::to_string(trial));
      return;
    }
  }
}

void criterion_10(Check& c) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all_permutations(n)) {
      const auto r = perm_to_bichain(p);
      if (!(rebuild(decompose(r), r.sig()) == r)) {
        c.expect(false, "bichain round trip failed at size " + std::to_string(n));
        return;
      }
    }
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto r = oracle::random_binary_structure(n, rng);
    if (!(rebuild(decompose(r), r.sig()) == r)) {
      c.expect(false, "random binary round trip failed on trial " + std::to_string(trial));
      return;
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "simple-permutation counts 1,2,0,2,6,46,338", 60, criterion_1},
      {2, "separable class: residual, closure equality, fixed point", 180, criterion_2},
      {3, "decreasing-oscillation age counts and stability", 600, criterion_3},
      {4, "oscillation sum-closure quintic", 600, criterion_4},
      {5, "bounds of the separable closure", 600, criterion_5},
      {6, "critical families and their correspondences", 600, criterion_6},
      {7, "S-indecomposable counts follow H/(1+H)", 600, criterion_7},
      {8, "partition, union, intersection and bound identities", 600, criterion_8},
      {9, "well-quasi-order probes", 600, criterion_9},
      {10, "decomposition round trips", 600, criterion_10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criterion.budget_seconds,
                 "runtime " + std::to_string(seconds) + "s exceeds budget");
    std::ostringstream line;
    line << (check.ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
         << criterion.label << " (" << std::fixed << std::setprecision(1) << seconds << "s)";
    if (!check.ok) line << " -- " << check.why.str();
    std::cout << line.str() << "\n";
    if (!check.ok) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
