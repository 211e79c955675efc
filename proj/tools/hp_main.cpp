// hp: batch front end for the ordered-structure enumeration library.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hp/catalog.hpp"
#include "hp/classes.hpp"
#include "hp/decompose.hpp"
#include "hp/io.hpp"
#include "hp/series.hpp"
#include "hp/structure.hpp"

namespace {

using namespace hp;

struct GlobalOpts {
  int workers = 0;  // 0: take HP_WORKERS, else 1
  std::int64_t max_candidates = 1'000'000;

  EnumLimits limits() const {
    EnumLimits l;
    l.max_candidates = max_candidates;
    l.workers = workers;
    if (l.workers <= 0) {
      if (const char* env = std::getenv("HP_WORKERS")) l.workers = std::atoi(env);
      if (l.workers <= 0) l.workers = 1;
    }
    return l;
  }
};

Permutation perm_arg(const std::string& token) {
  if (!token.empty() && token.front() == '@')
    return io::parse_permutation(io::read_file(token.substr(1)));
  std::string spaced = token;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  return io::parse_permutation(spaced);
}

std::vector<OrderedStructure> basis_args(const std::vector<std::string>& perms,
                                         const std::vector<std::string>& files) {
  std::vector<OrderedStructure> out;
  for (const auto& p : perms) out.push_back(perm_to_bichain(perm_arg(p)));
  for (const auto& f : files) out.push_back(io::parse_ostruct(io::read_file(f)));
  return out;
}

FamilyGen family_arg(const std::string& token) {
  std::string name = token;
  std::optional<int> cap;
  if (const auto colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    cap = std::stoi(token.substr(colon + 1));
  }
  FamilyName family;
  if (name == "oscillation")
    family = FamilyName::Oscillation;
  else if (name == "oscillation-star")
    family = FamilyName::OscillationStar;
  else if (name == "exceptional-i")
    family = FamilyName::ExceptionalI;
  else if (name == "exceptional-ii")
    family = FamilyName::ExceptionalII;
  else if (name == "exceptional-iii")
    family = FamilyName::ExceptionalIII;
  else if (name == "exceptional-iv")
    family = FamilyName::ExceptionalIV;
  else
    throw Error("unknown family '" + name + "'");
  return FamilyGen{family, cap};
}

GeneratorSpec gen_args(const std::vector<std::string>& perms,
                       const std::vector<std::string>& files,
                       const std::vector<std::string>& families) {
  std::vector<FamilyGen> fams;
  for (const auto& f : families) fams.push_back(family_arg(f));
  return GeneratorSpec(Signature::bichain(), basis_args(perms, files), std::move(fams));
}

void print_levels(const LevelSets& levels, const std::string& out_dir, bool include_empty) {
  if (!out_dir.empty()) io::save_levels(levels, out_dir);
  std::cout << io::profile_csv(levels, include_empty);
}

TruncatedSeries series_from_file_at_order(const std::string& path, int order) {
  const auto s = io::parse_series(io::read_file(path));
  if (s.order() > order) throw Error("series in " + path + " has order above the requested one");
  TruncatedSeries out(order);
  for (int k = 0; k <= s.order(); ++k) out.set_coeff(k, s.coeff(k));
  return out;
}

BivariatePolynomial poly_from_coeffs(const std::string& csv) {
  std::vector<Rational> coeffs;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) coeffs.emplace_back(Rational(token));
  for (auto& c : coeffs) c.canonicalize();
  return BivariatePolynomial::in_x(coeffs);
}

void print_structure(const OrderedStructure& r, const std::string& format) {
  if (format == "perm")
    std::cout << io::to_text(bichain_to_perm(r)) << "\n";
  else
    std::cout << io::to_text(r);
}

int run_catalog(const std::string& family, int n, int m, int k, const std::string& format) {
  if (family == "simple") {
    for (const auto& p : simple_permutations(n)) std::cout << io::to_text(p) << "\n";
    return 0;
  }
  if (family.rfind("exceptional-", 0) == 0) {
    const std::string tail = family.substr(12);
    ExceptionalFamily fam;
    if (tail == "i") fam = ExceptionalFamily::I;
    else if (tail == "ii") fam = ExceptionalFamily::II;
    else if (tail == "iii") fam = ExceptionalFamily::III;
    else if (tail == "iv") fam = ExceptionalFamily::IV;
    else throw Error("unknown family '" + family + "'");
    if (format == "ostruct")
      std::cout << io::to_text(perm_to_bichain(exceptional(m, fam)));
    else
      std::cout << io::to_text(exceptional(m, fam)) << "\n";
    return 0;
  }
  if (family == "critical-poset-p" || family == "critical-poset-pprime") {
    const auto variant =
        family == "critical-poset-pprime" ? CriticalPosetVariant::PPrime : CriticalPosetVariant::P;
    std::cout << io::to_text(critical_poset(n, variant));
    return 0;
  }
  if (family.rfind("critical-bichain-", 0) == 0) {
    const int variant = std::stoi(family.substr(17));
    print_structure(critical_bichain(m, variant), format);
    return 0;
  }
  if (family == "oscillation" || family == "oscillation-star") {
    const auto variant =
        family == "oscillation" ? OscillationVariant::Plain : OscillationVariant::Star;
    print_structure(oscillation_window(n, variant), format);
    return 0;
  }
  if (family == "seq-fib-k") {
    std::cout << generalized_fibonacci(n, k) << "\n";
    return 0;
  }
  if (family == "seq-partitions") {
    std::cout << partition_number(n) << "\n";
    return 0;
  }
  throw Error("unknown family '" + family + "'");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact computations on hereditary classes of ordered binary structures"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand name

  GlobalOpts global;
  app.add_option("--workers", global.workers, "worker threads (default: HP_WORKERS or 1)");
  app.add_option("--max-candidates", global.max_candidates,
                 "per-level candidate ceiling for enumerations");

  // contains
  std::string arg_pi, arg_sigma;
  auto* cmd_contains = app.add_subcommand("contains", "test pattern containment pi >= sigma");
  cmd_contains->add_option("pi", arg_pi)->required();
  cmd_contains->add_option("sigma", arg_sigma)->required();

  // simple
  std::string arg_perm;
  auto* cmd_simple = app.add_subcommand("simple", "test whether a permutation is simple");
  cmd_simple->add_option("perm", arg_perm)->required();

  // enum-simple
  int arg_n = 0;
  bool arg_count = false;
  auto* cmd_enum_simple = app.add_subcommand("enum-simple", "list simple permutations of size n");
  cmd_enum_simple->add_option("--n", arg_n)->required();
  cmd_enum_simple->add_flag("--count", arg_count, "print only the count");

  // decompose
  std::string arg_decomp_perm, arg_decomp_file;
  auto* cmd_decompose = app.add_subcommand("decompose", "print the substitution tree");
  cmd_decompose->add_option("perm", arg_decomp_perm);
  cmd_decompose->add_option("--file", arg_decomp_file, "ostruct file instead of a permutation");

  // avoid / closure / bounds share option shapes
  std::vector<std::string> arg_basis, arg_basis_files;
  int arg_max_n = 0;
  std::string arg_out;
  bool arg_include_empty = false;
  auto* cmd_avoid = app.add_subcommand("avoid", "enumerate Forb(basis) level by level");
  cmd_avoid->add_option("--basis", arg_basis, "basis permutation (repeatable)");
  cmd_avoid->add_option("--basis-file", arg_basis_files, "basis ostruct file (repeatable)");
  cmd_avoid->add_option("--max-n", arg_max_n)->required();
  cmd_avoid->add_option("--out", arg_out, "write a level-set archive to this directory");
  cmd_avoid->add_flag("--include-empty", arg_include_empty, "count the empty structure as 1");

  std::vector<std::string> arg_gen, arg_gen_files, arg_families;
  auto* cmd_closure = app.add_subcommand("closure", "enumerate the sum-closure of a generator set");
  cmd_closure->add_option("--gen", arg_gen, "explicit generator permutation (repeatable)");
  cmd_closure->add_option("--gen-file", arg_gen_files, "explicit generator ostruct file");
  cmd_closure->add_option("--family", arg_families,
                          "family generator: oscillation, oscillation-star, exceptional-i..iv; "
                          "append :CAP to limit the size");
  cmd_closure->add_option("--max-n", arg_max_n)->required();
  cmd_closure->add_option("--out", arg_out, "write a level-set archive to this directory");
  cmd_closure->add_flag("--include-empty", arg_include_empty, "count the empty structure as 1");

  auto* cmd_bounds = app.add_subcommand("bounds", "bounds of the sum-closure of a generator set");
  cmd_bounds->add_option("--gen", arg_gen, "explicit generator permutation (repeatable)");
  cmd_bounds->add_option("--gen-file", arg_gen_files, "explicit generator ostruct file");
  cmd_bounds->add_option("--family", arg_families, "family generator");
  cmd_bounds->add_option("--max-n", arg_max_n)->required();

  // profile
  std::string arg_in;
  auto* cmd_profile = app.add_subcommand("profile", "profile CSV of a level-set archive");
  cmd_profile->add_option("--in", arg_in)->required();
  cmd_profile->add_flag("--include-empty", arg_include_empty);

  // series
  auto* cmd_series = app.add_subcommand("series", "truncated series operations");
  cmd_series->require_subcommand(1);
  int arg_p = 0, arg_order = 0;
  std::string arg_kfile, arg_polyfile, arg_seriesfile;
  std::string arg_numer, arg_denom, arg_numer_coeffs, arg_denom_coeffs;
  auto* cmd_solve = cmd_series->add_subcommand("solve", "solve H = x + p H^2/(1+H) + K(H)");
  cmd_solve->add_option("--p", arg_p)->required();
  cmd_solve->add_option("--k", arg_kfile, "series file for K (valuation >= 3; default 0)");
  cmd_solve->add_option("--order", arg_order)->required();
  auto* cmd_residual = cmd_series->add_subcommand("residual", "evaluate Q(x, H)");
  cmd_residual->add_option("--poly", arg_polyfile)->required();
  cmd_residual->add_option("--series", arg_seriesfile)->required();
  auto* cmd_expand = cmd_series->add_subcommand("expand", "expand numer/denom");
  cmd_expand->add_option("--numer", arg_numer, "numerator polynomial file");
  cmd_expand->add_option("--denom", arg_denom, "denominator polynomial file");
  cmd_expand->add_option("--numer-coeffs", arg_numer_coeffs, "numerator coefficients, comma-separated");
  cmd_expand->add_option("--denom-coeffs", arg_denom_coeffs, "denominator coefficients, comma-separated");
  cmd_expand->add_option("--order", arg_order)->required();

  // catalog
  std::string arg_family, arg_format = "default";
  int arg_m = 0, arg_k = 0;
  auto* cmd_catalog = app.add_subcommand("catalog", "print built-in family members");
  cmd_catalog->add_option("--family", arg_family)->required();
  cmd_catalog->add_option("--n", arg_n);
  cmd_catalog->add_option("--m", arg_m);
  cmd_catalog->add_option("--k", arg_k);
  cmd_catalog->add_option("--format", arg_format, "perm or ostruct");

  // antichain
  std::vector<std::string> arg_items;
  std::string arg_poset, arg_marked;
  auto* cmd_antichain = app.add_subcommand("antichain", "list comparable pairs under labeled embedding");
  cmd_antichain->add_option("--item", arg_items, "labeled structure file (repeatable)");
  cmd_antichain->add_option("--poset", arg_poset, "label poset file");
  cmd_antichain->add_option("--marked-oscillations", arg_marked,
                            "size range A..B of endpoint-marked oscillation windows over the "
                            "2-element antichain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*cmd_contains) {
    std::cout << (perm_contains(perm_arg(arg_pi), perm_arg(arg_sigma)) ? "true" : "false") << "\n";
    return 0;
  }
  if (*cmd_simple) {
    const auto p = perm_arg(arg_perm);
    std::cout << (is_indecomposable(perm_to_bichain(p)) ? "true" : "false") << "\n";
    return 0;
  }
  if (*cmd_enum_simple) {
    const auto list = simple_permutations(arg_n);
    if (arg_count) {
      std::cout << list.size() << "\n";
    } else {
      for (const auto& p : list) std::cout << io::to_text(p) << "\n";
    }
    return 0;
  }
  if (*cmd_decompose) {
    OrderedStructure r = !arg_decomp_file.empty()
                             ? io::parse_ostruct(io::read_file(arg_decomp_file))
                             : perm_to_bichain(perm_arg(arg_decomp_perm));
    if (arg_decomp_perm.empty() && arg_decomp_file.empty())
      throw Error("decompose needs a permutation or --file");
    const auto rendering = render_tree(decompose(r));
    std::cout << rendering.sexpr << "\n";
    for (std::size_t k = 0; k < rendering.quotients.size(); ++k) {
      std::cout << "\n@" << k << "\n";
      std::cout << io::to_text(rendering.quotients[k]);
    }
    return 0;
  }
  if (*cmd_avoid) {
    const auto basis = basis_args(arg_basis, arg_basis_files);
    const auto levels =
        enumerate_avoiders(Signature::bichain(), basis, arg_max_n, global.limits());
    print_levels(levels, arg_out, arg_include_empty);
    return 0;
  }
  if (*cmd_closure) {
    const auto gen = gen_args(arg_gen, arg_gen_files, arg_families);
    const auto levels = enumerate_closure(gen, arg_max_n, global.limits());
    print_levels(levels, arg_out, arg_include_empty);
    return 0;
  }
  if (*cmd_bounds) {
    const auto gen = gen_args(arg_gen, arg_gen_files, arg_families);
    const auto found = bounds([&](const OrderedStructure& r) { return sigma_membership(r, gen); },
                              gen.sig(), arg_max_n, global.limits());
    for (const auto& b : found) {
      if (b.sig() == Signature::bichain()) {
        std::cout << io::to_text(bichain_to_perm(b)) << "\n";
      } else {
        std::cout << io::to_text(b) << "\n";
      }
    }
    return 0;
  }
  if (*cmd_profile) {
    std::cout << io::profile_csv(io::load_levels(arg_in), arg_include_empty);
    return 0;
  }
  if (*cmd_solve) {
    const auto k = arg_kfile.empty() ? TruncatedSeries::zero(arg_order)
                                     : series_from_file_at_order(arg_kfile, arg_order);
    std::cout << io::to_text(solve_sum_closure(arg_p, k, arg_order));
    return 0;
  }
  if (*cmd_residual) {
    const auto q = io::parse_polynomial(io::read_file(arg_polyfile));
    const auto h = io::parse_series(io::read_file(arg_seriesfile));
    const auto r = poly_residual(q, h);
    if (r.is_zero())
      std::cout << "zero up to order " << h.order() << "\n";
    else
      std::cout << "nonzero at order " << r.valuation() << "\n";
    return 0;
  }
  if (*cmd_expand) {
    BivariatePolynomial numer = !arg_numer.empty()
                                    ? io::parse_polynomial(io::read_file(arg_numer))
                                    : poly_from_coeffs(arg_numer_coeffs);
    BivariatePolynomial denom = !arg_denom.empty()
                                    ? io::parse_polynomial(io::read_file(arg_denom))
                                    : poly_from_coeffs(arg_denom_coeffs);
    std::cout << io::to_text(rational_expand(numer, denom, arg_order));
    return 0;
  }
  if (*cmd_catalog) return run_catalog(arg_family, arg_n, arg_m, arg_k, arg_format);
  if (*cmd_antichain) {
    std::vector<LabeledStructure> items;
    FinitePoset poset = FinitePoset::antichain(2);
    if (!arg_marked.empty()) {
      const auto dots = arg_marked.find("..");
      if (dots == std::string::npos) throw Error("expected a size range like 4..8");
      const int lo = std::stoi(arg_marked.substr(0, dots));
      const int hi = std::stoi(arg_marked.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) items.push_back(marked_oscillation(n));
    } else {
      if (arg_poset.empty()) throw Error("antichain needs --poset with --item");
      poset = io::parse_poset(io::read_file(arg_poset));
      for (const auto& f : arg_items) items.push_back(io::parse_labeled(io::read_file(f)));
    }
    const auto pairs = antichain_pairs(items, poset);
    if (pairs.empty()) {
      std::cout << "antichain\n";
    } else {
      for (auto [i, j] : pairs) std::cout << "comparable " << i << " " << j << "\n";
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const hp::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
