#include "shr/format.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <boost/algorithm/string.hpp>

namespace shr {

namespace {

std::vector<std::string> split_tokens(std::string_view text, const char* separators) {
  std::vector<std::string> parts;
  const std::string s(text);
  boost::split(parts, s, boost::is_any_of(separators), boost::token_compress_on);
  std::erase_if(parts, [](const std::string& p) { return p.empty(); });
  return parts;
}

std::string strip_comment(const std::string& line) {
  auto out = line.substr(0, line.find('#'));
  boost::trim(out);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t element(const std::vector<std::string>& names, const std::string& id,
                    std::size_t line) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == id) return i;
  throw ParseError(line, "unknown element '" + id + "'");
}

// Splits "<lhs> = <rhs>" and returns the lhs tokens after the keyword.
std::pair<std::vector<std::string>, std::string> cell_line(const std::string& body,
                                                           std::size_t line) {
  const auto eq = body.find('=');
  if (eq == std::string::npos) throw ParseError(line, "expected '='");
  auto lhs = split_tokens(std::string_view(body).substr(0, eq), " \t");
  auto rhs = body.substr(eq + 1);
  boost::trim(rhs);
  if (lhs.size() != 3) throw ParseError(line, "expected two operands");
  lhs.erase(lhs.begin());
  return {lhs, rhs};
}

}  // namespace

SemihyperringTable parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::string> name;
  std::vector<std::string> names;
  std::vector<Mask> add;
  std::vector<std::uint8_t> mul;
  std::vector<std::size_t> add_line, mul_line;  // 0 when unset

  while (std::getline(in, raw)) {
    ++lineno;
    const auto body = strip_comment(raw);
    if (body.empty()) continue;
    if (!name) {
      auto toks = split_tokens(body, " \t");
      if (toks.size() != 2 || toks[0] != "semihyperring")
        throw ParseError(lineno, "expected 'semihyperring <name>'");
      name = toks[1];
      continue;
    }
    if (names.empty()) {
      if (!body.starts_with("elements:")) throw ParseError(lineno, "expected 'elements:'");
      names = split_tokens(std::string_view(body).substr(9), " \t,");
      if (names.empty()) throw ParseError(lineno, "no elements declared");
      if (names.size() > kMaxOrder) throw ParseError(lineno, "more than 64 elements");
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (names[i] == names[j]) throw ParseError(lineno, "duplicate element '" + names[i] + "'");
      const auto n = names.size();
      add.assign(n * n, 0);
      mul.assign(n * n, 0);
      add_line.assign(n * n, 0);
      mul_line.assign(n * n, 0);
      continue;
    }
    const auto n = names.size();
    if (body.starts_with("add ")) {
      auto [ops, rhs] = cell_line(body, lineno);
      const auto x = element(names, ops[0], lineno);
      const auto y = element(names, ops[1], lineno);
      if (add_line[x * n + y])
        throw ParseError(lineno, "duplicate add cell " + ops[0] + " " + ops[1] + " (first on line " +
                                     std::to_string(add_line[x * n + y]) + ")");
      if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
        throw ParseError(lineno, "add cell must be a braced set");
      Mask cell = 0;
      for (const auto& e : split_tokens(std::string_view(rhs).substr(1, rhs.size() - 2), " \t,"))
        cell |= bit(element(names, e, lineno));
      if (cell == 0) throw ParseError(lineno, "add cell " + ops[0] + " " + ops[1] + " is empty");
      add[x * n + y] = add[y * n + x] = cell;
      add_line[x * n + y] = add_line[y * n + x] = lineno;
    } else if (body.starts_with("mul ")) {
      auto [ops, rhs] = cell_line(body, lineno);
      const auto x = element(names, ops[0], lineno);
      const auto y = element(names, ops[1], lineno);
      if (mul_line[x * n + y])
        throw ParseError(lineno, "duplicate mul cell " + ops[0] + " " + ops[1] + " (first on line " +
                                     std::to_string(mul_line[x * n + y]) + ")");
      mul[x * n + y] = static_cast<std::uint8_t>(element(names, rhs, lineno));
      mul_line[x * n + y] = lineno;
    } else {
      throw ParseError(lineno, "unrecognised line '" + body + "'");
    }
  }
  if (!name) throw ParseError(lineno, "missing 'semihyperring' header");
  if (names.empty()) throw ParseError(lineno, "missing 'elements:' line");
  const auto n = names.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!add_line[x * n + y])
        throw ParseError(0, "missing add cell " + names[x] + " " + names[y]);
      if (!mul_line[x * n + y])
        throw ParseError(0, "missing mul cell " + names[x] + " " + names[y]);
    }
  return {*name, names, 0, std::move(add), std::move(mul)};
}

std::string serialize_structure(const SemihyperringTable& r) {
  std::ostringstream out;
  const auto& names = r.element_names();
  const auto n = r.order();
  out << "semihyperring " << r.name() << "\n";
  out << "elements:";
  for (const auto& e : names) out << ' ' << e;
  out << "\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      out << "add " << names[x] << ' ' << names[y] << " = " << r.format(r.add(x, y)) << "\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out << "mul " << names[x] << ' ' << names[y] << " = " << names[r.mul(x, y)] << "\n";
  return out.str();
}

SemihyperringTable load_structure(const std::string& path) { return parse_structure(read_file(path)); }

void save_structure(const std::string& path, const SemihyperringTable& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_structure(r);
}

const FuzzySubset* FuzzyFile::find(std::string_view name) const {
  for (const auto& [n, f] : subsets)
    if (n == name) return &f;
  return nullptr;
}

FuzzySubset parse_fuzzy_literal(std::string_view text, const SemihyperringTable& r,
                                const ChainPtr& chain) {
  const auto n = r.order();
  std::vector<std::uint8_t> levels(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& item : split_tokens(text, ",")) {
    auto entry = item;
    boost::trim(entry);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw DomainError("expected element=grade, got '" + entry + "'");
    auto id = entry.substr(0, eq);
    boost::trim(id);
    const auto x = r.index_of(id);
    if (!x) throw DomainError("unknown element '" + id + "'");
    if (seen[*x]) throw DomainError("element '" + id + "' graded twice");
    Grade g;
    try {
      g = parse_grade(entry.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("bad grade: ") + e.what());
    }
    const auto lvl = chain->index_of(g);
    if (!lvl) throw DomainError("grade " + format_grade(g) + " is not in the chain");
    levels[*x] = static_cast<std::uint8_t>(*lvl);
    seen[*x] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!seen[x]) throw DomainError("no grade for element '" + r.element_name(x) + "'");
  return {chain, std::move(levels)};
}

std::string format_fuzzy(const FuzzySubset& f, const SemihyperringTable& r) {
  std::string out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) out += ", ";
    out += r.element_name(x) + "=" + format_grade(f.grade(x));
  }
  return out;
}

FuzzyFile parse_fuzzy(std::string_view text, const SemihyperringTable& r) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  FuzzyFile file;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto body = strip_comment(raw);
    if (body.empty()) continue;
    try {
      if (body.starts_with("chain:")) {
        if (file.chain) throw ParseError(lineno, "chain declared twice");
        file.chain = make_chain(GradeChain::parse(std::string_view(body).substr(6)));
      } else if (body.starts_with("fuzzy ")) {
        if (!file.chain) throw ParseError(lineno, "fuzzy subset before 'chain:'");
        const auto colon = body.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'fuzzy <name>: ...'");
        auto name = body.substr(6, colon - 6);
        boost::trim(name);
        if (name.empty() || name.find_first_of(" \t") != std::string::npos)
          throw ParseError(lineno, "bad fuzzy subset name");
        if (file.find(name)) throw ParseError(lineno, "duplicate fuzzy subset '" + name + "'");
        file.subsets.emplace_back(name, parse_fuzzy_literal(body.substr(colon + 1), r, file.chain));
      } else {
        throw ParseError(lineno, "unrecognised line '" + body + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!file.chain) throw ParseError(lineno, "missing 'chain:' line");
  return file;
}

std::string serialize_fuzzy(const FuzzyFile& f, const SemihyperringTable& r) {
  std::string out = "chain: " + f.chain->to_string() + "\n";
  for (const auto& [name, mu] : f.subsets) out += "fuzzy " + name + ": " + format_fuzzy(mu, r) + "\n";
  return out;
}

FuzzyFile load_fuzzy(const std::string& path, const SemihyperringTable& r) {
  return parse_fuzzy(read_file(path), r);
}

CrispSubset parse_subset(std::string_view text, const SemihyperringTable& r) {
  std::string s(text);
  boost::trim(s);
  if (s.starts_with('{')) {
    if (!s.ends_with('}')) throw DomainError("unbalanced braces in '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  Mask m = 0;
  for (const auto& id : split_tokens(s, " \t,")) {
    const auto x = r.index_of(id);
    if (!x) throw DomainError("unknown element '" + id + "'");
    m |= bit(*x);
  }
  return r.subset(m);
}

}  // namespace shr
