#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hp/classes.hpp"
#include "hp/series.hpp"
#include "hp/structure.hpp"

namespace hp::io {

struct ParseError : Error {
  using Error::Error;
};

// Structure text format (line-oriented):
//   ostruct 1
//   n <int>
//   d <int>
//   kinds <d chars, each L or B>
//   rel <i>            (for each relation, followed by n rows of n '0'/'1')
std::string to_text(const OrderedStructure& r);
OrderedStructure parse_ostruct(std::string_view text);

// One line of whitespace-separated 1-based integers; a compact digit string
// is accepted on input when n <= 9.
std::string to_text(const Permutation& p);
Permutation parse_permutation(std::string_view line);

// Line 1: `series <order>`; line 2: whitespace-separated coefficients, each
// `int` or `int/int`.
std::string to_text(const TruncatedSeries& s);
TruncatedSeries parse_series(std::string_view text);

// One monomial per line: `<coeff> <x-exp> <y-exp>`. Blank lines are skipped;
// an empty file is the zero polynomial.
std::string to_text(const BivariatePolynomial& q);
BivariatePolynomial parse_polynomial(std::string_view text);

// Poset file: `poset 1`, `m <int>`, then m rows of m '0'/'1' chars.
std::string to_text(const FinitePoset& a);
FinitePoset parse_poset(std::string_view text);

// Labeled structure: `lstruct 1`, an ostruct block, then `labels <n ints>`.
std::string to_text(const LabeledStructure& l);
LabeledStructure parse_labeled(std::string_view text);

// Level-set archive: a directory with `meta` and one `level<n>` file per
// level listing structures in the ostruct format separated by blank lines.
void save_levels(const LevelSets& levels, const std::filesystem::path& dir);
LevelSets load_levels(const std::filesystem::path& dir);

// CSV with header `n,count`.
std::string profile_csv(const LevelSets& levels, bool include_empty);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace hp::io
