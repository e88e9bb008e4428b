#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

using namespace shr;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

constexpr std::string_view kTwo =
    "semihyperring Z2\n"
    "elements: 0 1\n"
    "add 0 0 = {0}\n"
    "add 0 1 = {1}\n"
    "add 1 1 = {0,1}\n"
    "mul 0 0 = 0\n"
    "mul 0 1 = 0\n"
    "mul 1 0 = 0\n"
    "mul 1 1 = 1\n";

std::string replace_line(std::string_view text, std::size_t line, std::string_view with) {
  std::string out;
  std::size_t n = 1, pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (n == line)
      out += with;
    else
      out += text.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
    ++n;
  }
  return out;
}

}  // namespace

TEST_SUITE("interface-format") {

TEST_CASE("fixtures load and round trip") {
  const auto t = load_structure(testing::fixture("t2.shr"));
  CHECK(t == t2().renamed(t.name()));
  CHECK(parse_structure(serialize_structure(t)) == t);
  const auto ex = load_structure(testing::fixture("example_1_3.shr"));
  CHECK(ex == example_1_3().renamed(ex.name()));
  CHECK(parse_structure(serialize_structure(ex)) == ex);
}

TEST_CASE("every small census structure round trips") {
  for (const auto& r : testing::small_census())
    CHECK(parse_structure(serialize_structure(r)) == r);
}

TEST_CASE("save and load") {
  const auto path = std::filesystem::temp_directory_path() / "shr_format_roundtrip.shr";
  save_structure(path.string(), t2());
  CHECK(load_structure(path.string()) == t2());
  std::filesystem::remove(path);
  CHECK_THROWS(load_structure("/nonexistent/none.shr"));
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = "# leading\n\n";
  text += kTwo;
  text += "   # trailing\n";
  CHECK(parse_structure(text).order() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_structure(kTwo).name() == "Z2");
  CHECK(parse_error_line(replace_line(kTwo, 1, "semiring Z2")) == 1);
  CHECK(parse_error_line(replace_line(kTwo, 2, "elements: 0 0")) == 2);
  CHECK(parse_error_line(replace_line(kTwo, 4, "add 0 1 = {}")) == 4);
  CHECK(parse_error_line(replace_line(kTwo, 4, "add 0 q = {1}")) == 4);
  CHECK(parse_error_line(replace_line(kTwo, 7, "mul 0 1 = 7")) == 7);
  CHECK(parse_error_line(replace_line(kTwo, 8, "frobnicate")) == 8);
  CHECK(parse_error_line(replace_line(kTwo, 9, "mul 1 0 = 0")) == 9);
  CHECK(parse_error_line(replace_line(kTwo, 5, "")) == 0);
}

TEST_CASE("a duplicate cell names the first definition") {
  try {
    parse_structure(replace_line(kTwo, 9, "mul 1 0 = 0"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 8") != std::string::npos);
  }
}

TEST_CASE("fuzzy files") {
  const auto t = t2();
  const auto f = load_fuzzy(testing::fixture("t2.fuzzy"), t);
  CHECK(f.chain->size() == 3);
  REQUIRE(f.subsets.size() == 3);
  REQUIRE(f.find("mu1"));
  CHECK(*f.find("mu1") == testing::fz(t, "e=1, s=1/2, x=0", f.chain));
  CHECK(f.find("zeta") == nullptr);
  const auto again = parse_fuzzy(serialize_fuzzy(f, t), t);
  CHECK(*again.chain == *f.chain);
  CHECK(again.subsets == f.subsets);
  CHECK_THROWS_AS(parse_fuzzy("fuzzy m: e=1, s=1, x=1\n", t), ParseError);
  CHECK_THROWS_AS(parse_fuzzy("chain: 0 1\nfuzzy m: e=1, s=1, x=1\nfuzzy m: e=1, s=1, x=1\n", t),
                  ParseError);
}

TEST_CASE("fuzzy literals") {
  const auto t = t2();
  const auto& c = testing::chain3();
  const auto mu = parse_fuzzy_literal("x=0, e=1, s=1/2", t, c);
  CHECK(format_fuzzy(mu, t) == "e=1, s=1/2, x=0");
  CHECK(parse_fuzzy_literal(format_fuzzy(mu, t), t, c) == mu);
  CHECK_THROWS_AS(parse_fuzzy_literal("e=1, s=1/2", t, c), DomainError);
  CHECK_THROWS_AS(parse_fuzzy_literal("e=1, s=1/2, x=0, e=0", t, c), DomainError);
  CHECK_THROWS_AS(parse_fuzzy_literal("e=1, s=1/3, x=0", t, c), DomainError);
}

TEST_CASE("crisp subset literals") {
  const auto t = t2();
  CHECK(parse_subset("{e,s}", t) == CrispSubset::of(3, {0, 1}));
  CHECK(parse_subset("e, x", t) == CrispSubset::of(3, {0, 2}));
  CHECK(parse_subset("{}", t).is_empty());
  CHECK_THROWS(parse_subset("{q}", t));
}

}
