#include "hp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hp::io {

namespace {

// Line cursor with 1-based positions for error messages.
class Lines {
 public:
  explicit Lines(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        lines_.emplace_back(text.substr(start));
        break;
      }
      lines_.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
    // A trailing newline produces one empty phantom line; drop it.
    if (!lines_.empty() && lines_.back().empty() && text.ends_with('\n')) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }
  int line_no() const { return static_cast<int>(pos_) + 1; }

  std::string_view next() {
    if (done()) throw ParseError("line " + std::to_string(line_no()) + ": unexpected end of input");
    return lines_[pos_++];
  }

  std::string_view peek() const {
    if (done()) return {};
    return lines_[pos_];
  }

  void skip() { ++pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(static_cast<int>(pos_)) + ": " + what);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(const std::string& token, Lines& in, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    in.fail(std::string("expected integer for ") + what + ", got '" + token + "'");
  }
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  auto check_int = [&](std::string_view part) {
    if (part.empty()) throw ParseError("empty number in coefficient '" + token + "'");
    std::size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (k == part.size()) throw ParseError("bad coefficient '" + token + "'");
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw ParseError("bad coefficient '" + token + "'");
  };
  if (slash == std::string::npos) {
    check_int(token);
    return Rational(token);
  }
  check_int(std::string_view(token).substr(0, slash));
  check_int(std::string_view(token).substr(slash + 1));
  Rational q(token);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string to_text(const OrderedStructure& r) {
  std::ostringstream os;
  os << "ostruct 1\n";
  os << "n " << r.size() << "\n";
  os << "d " << r.sig().arity() << "\n";
  os << "kinds ";
  for (RelKind k : r.sig().kinds()) os << static_cast<char>(k);
  os << "\n";
  for (int k = 0; k < r.sig().arity(); ++k) {
    os << "rel " << k << "\n";
    for (int i = 0; i < r.size(); ++i) {
      for (int j = 0; j < r.size(); ++j) os << (r.rel(k, i, j) ? '1' : '0');
      os << "\n";
    }
  }
  return os.str();
}

namespace {

OrderedStructure parse_ostruct_block(Lines& in) {
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "ostruct" || toks[1] != "1")
      in.fail("expected 'ostruct 1' header");
  }
  int n = 0, d = 0;
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "n") in.fail("expected 'n <int>'");
    n = parse_int(toks[1], in, "n");
    if (n < 0) in.fail("n must be non-negative");
  }
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "d") in.fail("expected 'd <int>'");
    d = parse_int(toks[1], in, "d");
    if (d < 0) in.fail("d must be non-negative");
  }
  std::vector<RelKind> kinds;
  {
    const auto toks = split_ws(in.next());
    if (toks.empty() || toks[0] != "kinds" || toks.size() > 2) in.fail("expected 'kinds <chars>'");
    const std::string chars = toks.size() == 2 ? toks[1] : std::string();
    if (static_cast<int>(chars.size()) != d) in.fail("kinds length does not match d");
    for (char c : chars) {
      if (c == 'L')
        kinds.push_back(RelKind::LinearOrder);
      else if (c == 'B')
        kinds.push_back(RelKind::ReflexiveBinary);
      else
        in.fail(std::string("unknown relation kind '") + c + "'");
    }
  }
  std::vector<std::vector<std::uint8_t>> rel;
  rel.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "rel" || parse_int(toks[1], in, "rel index") != k)
      in.fail("expected 'rel " + std::to_string(k) + "'");
    std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto row = in.next();
      if (static_cast<int>(row.size()) != n) in.fail("relation row has wrong length");
      for (int j = 0; j < n; ++j) {
        if (row[static_cast<std::size_t>(j)] == '1')
          mat[static_cast<std::size_t>(i * n + j)] = 1;
        else if (row[static_cast<std::size_t>(j)] != '0')
          in.fail("relation rows must contain only '0' and '1'");
      }
    }
    rel.push_back(std::move(mat));
  }
  try {
    return OrderedStructure(Signature(std::move(kinds)), n, std::move(rel));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

OrderedStructure parse_ostruct(std::string_view text) {
  Lines in(text);
  OrderedStructure r = parse_ostruct_block(in);
  while (!in.done()) {
    if (!split_ws(in.peek()).empty()) in.fail("trailing content after structure");
    in.skip();
  }
  return r;
}

std::string to_text(const Permutation& p) {
  std::ostringstream os;
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p.at(i) + 1;
  }
  return os.str();
}

Permutation parse_permutation(std::string_view line) {
  const auto toks = split_ws(line);
  if (toks.empty()) throw ParseError("empty permutation");
  std::vector<int> values;
  const bool compact = toks.size() == 1 && toks[0].size() > 1 &&
                       std::all_of(toks[0].begin(), toks[0].end(), [](char c) {
                         return std::isdigit(static_cast<unsigned char>(c));
                       });
  if (compact) {
    if (toks[0].size() > 9)
      throw ParseError("compact permutation form is only accepted for n <= 9");
    for (char c : toks[0]) values.push_back(c - '0' - 1);
  } else {
    for (const auto& t : toks) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        values.push_back(v - 1);
      } catch (const std::exception&) {
        throw ParseError("bad permutation entry '" + t + "'");
      }
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string to_text(const TruncatedSeries& s) {
  std::ostringstream os;
  os << "series " << s.order() << "\n";
  for (int k = 0; k <= s.order(); ++k) {
    if (k) os << ' ';
    os << rational_str(s.coeff(k));
  }
  os << "\n";
  return os.str();
}

TruncatedSeries parse_series(std::string_view text) {
  Lines in(text);
  const auto head = split_ws(in.next());
  if (head.size() != 2 || head[0] != "series") in.fail("expected 'series <order>' header");
  const int order = parse_int(head[1], in, "order");
  if (order < 0) in.fail("order must be non-negative");
  const auto toks = split_ws(in.next());
  if (static_cast<int>(toks.size()) != order + 1)
    in.fail("expected " + std::to_string(order + 1) + " coefficients, got " +
            std::to_string(toks.size()));
  std::vector<Rational> coeffs;
  coeffs.reserve(toks.size());
  for (const auto& t : toks) coeffs.push_back(parse_rational(t));
  return TruncatedSeries(order, std::move(coeffs));
}

std::string to_text(const BivariatePolynomial& q) {
  std::ostringstream os;
  for (const auto& t : q.terms())
    os << rational_str(t.coeff) << ' ' << t.xexp << ' ' << t.yexp << "\n";
  return os.str();
}

BivariatePolynomial parse_polynomial(std::string_view text) {
  Lines in(text);
  std::vector<Monomial> terms;
  while (!in.done()) {
    const auto toks = split_ws(in.next());
    if (toks.empty()) continue;
    if (toks.size() != 3) in.fail("expected '<coeff> <x-exp> <y-exp>'");
    Monomial m;
    m.coeff = parse_rational(toks[0]);
    m.xexp = parse_int(toks[1], in, "x-exp");
    m.yexp = parse_int(toks[2], in, "y-exp");
    if (m.xexp < 0 || m.yexp < 0) in.fail("exponents must be non-negative");
    terms.push_back(std::move(m));
  }
  return BivariatePolynomial(std::move(terms));
}

std::string to_text(const FinitePoset& a) {
  std::ostringstream os;
  os << "poset 1\n";
  os << "m " << a.size() << "\n";
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) os << (a.leq(i, j) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

FinitePoset parse_poset(std::string_view text) {
  Lines in(text);
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "poset" || toks[1] != "1")
      in.fail("expected 'poset 1' header");
  }
  int m = 0;
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "m") in.fail("expected 'm <int>'");
    m = parse_int(toks[1], in, "m");
    if (m < 0) in.fail("m must be non-negative");
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto row = in.next();
    if (static_cast<int>(row.size()) != m) in.fail("poset row has wrong length");
    for (int j = 0; j < m; ++j) {
      if (row[static_cast<std::size_t>(j)] == '1')
        leq[static_cast<std::size_t>(i * m + j)] = 1;
      else if (row[static_cast<std::size_t>(j)] != '0')
        in.fail("poset rows must contain only '0' and '1'");
    }
  }
  try {
    return FinitePoset(m, std::move(leq));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string to_text(const LabeledStructure& l) {
  std::ostringstream os;
  os << "lstruct 1\n";
  os << to_text(l.base);
  os << "labels";
  for (int lab : l.labels) os << ' ' << lab;
  os << "\n";
  return os.str();
}

LabeledStructure parse_labeled(std::string_view text) {
  Lines in(text);
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "lstruct" || toks[1] != "1")
      in.fail("expected 'lstruct 1' header");
  }
  OrderedStructure base = parse_ostruct_block(in);
  const auto toks = split_ws(in.next());
  if (toks.empty() || toks[0] != "labels") in.fail("expected 'labels <ints>'");
  if (static_cast<int>(toks.size()) - 1 != base.size())
    in.fail("label count does not match structure size");
  std::vector<int> labels;
  for (std::size_t i = 1; i < toks.size(); ++i)
    labels.push_back(parse_int(toks[i], in, "label"));
  return LabeledStructure{std::move(base), std::move(labels)};
}

void save_levels(const LevelSets& levels, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ostringstream meta;
    meta << "levelsets 1\n";
    meta << "d " << levels.sig().arity() << "\n";
    meta << "kinds ";
    for (RelKind k : levels.sig().kinds()) meta << static_cast<char>(k);
    meta << "\n";
    meta << "max_n " << levels.max_n() << "\n";
    meta << "provenance "
         << (levels.provenance().kind == ProvenanceKind::Forbidden ? "forbidden" : "closure")
         << " " << levels.provenance().descriptor << "\n";
    write_file(dir / "meta", meta.str());
  }
  for (int n = 1; n <= levels.max_n(); ++n) {
    std::ostringstream os;
    bool first = true;
    for (const auto& r : levels.level(n)) {
      if (!first) os << "\n";
      os << to_text(r);
      first = false;
    }
    write_file(dir / ("level" + std::to_string(n)), os.str());
  }
}

LevelSets load_levels(const std::filesystem::path& dir) {
  const std::string meta = read_file(dir / "meta");
  Lines in(meta);
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "levelsets" || toks[1] != "1")
      in.fail("expected 'levelsets 1' header");
  }
  int d = 0;
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "d") in.fail("expected 'd <int>'");
    d = parse_int(toks[1], in, "d");
  }
  std::vector<RelKind> kinds;
  {
    const auto toks = split_ws(in.next());
    if (toks.empty() || toks[0] != "kinds" || toks.size() > 2) in.fail("expected 'kinds <chars>'");
    const std::string chars = toks.size() == 2 ? toks[1] : std::string();
    if (static_cast<int>(chars.size()) != d) in.fail("kinds length does not match d");
    for (char c : chars)
      kinds.push_back(c == 'L' ? RelKind::LinearOrder : RelKind::ReflexiveBinary);
  }
  int max_n = 0;
  {
    const auto toks = split_ws(in.next());
    if (toks.size() != 2 || toks[0] != "max_n") in.fail("expected 'max_n <int>'");
    max_n = parse_int(toks[1], in, "max_n");
  }
  Provenance prov;
  {
    const auto line = std::string(in.next());
    const auto toks = split_ws(line);
    if (toks.size() < 2 || toks[0] != "provenance")
      in.fail("expected 'provenance <kind> <descriptor>'");
    if (toks[1] == "forbidden")
      prov.kind = ProvenanceKind::Forbidden;
    else if (toks[1] == "closure")
      prov.kind = ProvenanceKind::Closure;
    else
      in.fail("unknown provenance kind '" + toks[1] + "'");
    const auto at = line.find(toks[1]);
    prov.descriptor = line.substr(std::min(line.size(), at + toks[1].size() + 1));
  }

  const Signature sig{kinds};
  std::vector<std::vector<OrderedStructure>> levels;
  for (int n = 1; n <= max_n; ++n) {
    const std::string text = read_file(dir / ("level" + std::to_string(n)));
    std::vector<OrderedStructure> lvl;
    Lines blocks(text);
    while (!blocks.done()) {
      if (split_ws(blocks.peek()).empty()) {
        blocks.skip();
        continue;
      }
      lvl.push_back(parse_ostruct_block(blocks));
    }
    levels.push_back(std::move(lvl));
  }
  return LevelSets(sig, max_n, std::move(levels), std::move(prov));
}

std::string profile_csv(const LevelSets& levels, bool include_empty) {
  std::ostringstream os;
  os << "n,count\n";
  if (include_empty) os << "0,1\n";
  for (int n = 1; n <= levels.max_n(); ++n) os << n << ',' << levels.count(n) << "\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open file: " + path.string());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write file: " + path.string());
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw Error("write failed: " + path.string());
}

}  // namespace hp::io
