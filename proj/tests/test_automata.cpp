#include <random>

#include "crosskit/automaton.hpp"
#include "crosskit/error.hpp"
#include "crosskit/regex.hpp"
#include "crosskit/serialize.hpp"
#include "crosskit/words.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crosskit;
using test::W;
using test::WS;

namespace {

Nfa R(std::string_view re) { return regex_nfa(re); }

std::size_t regex_error_position(std::string_view text) {
  try {
    parse_regex(text);
  } catch (const RegexSyntaxError& e) {
    return e.position();
  }
  return 0;
}

Regex random_regex(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 8) {
      case 0:
        return Regex::epsilon();
      case 1:
        return Regex::empty_set();
      default:
        return Regex::symbol(static_cast<Symbol>(U'a' + rng() % 3));
    }
  }
  switch (rng() % 5) {
    case 0:
      return Regex::concat({random_regex(rng, depth - 1), random_regex(rng, depth - 1)});
    case 1:
      return Regex::alt({random_regex(rng, depth - 1), random_regex(rng, depth - 1)});
    case 2:
      return Regex::star(random_regex(rng, depth - 1));
    case 3:
      return Regex::plus(random_regex(rng, depth - 1));
    default:
      return Regex::optional(random_regex(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("regex parsing") {
  auto ab = R("a+b+");
  CHECK(ab.accepts(W("aabb")));
  CHECK_FALSE(ab.accepts(W("ba")));
  CHECK(R("(a|b)*").accepts(Word()));
  CHECK(R("a?").accepts(Word()));
  CHECK(R("_").accepts(Word()));
  CHECK(is_empty(R("()")));
  CHECK(R("\\*").accepts(Word{U'*'}));
  CHECK(regex_error_position("(") == 1);
  CHECK(regex_error_position("a(b") == 2);
  CHECK(regex_error_position("a)") == 2);
  CHECK(regex_error_position("*a") == 1);
  CHECK(regex_error_position("a|") == 3);
  CHECK(regex_error_position("a b") == 2);
  CHECK(regex_error_position("") == 1);
  CHECK(regex_error_position("ab\\") == 3);
}

TEST_CASE("regex printing round-trips") {
  for (const char* text : {"a+b+", "(a|b)*", "a|bc", "(ab)+", "a**", "(a|_)?b", "\\|x", "()", "a(b|c)d"}) {
    const auto re = parse_regex(text);
    CHECK(parse_regex(re.str()) == re);
    CHECK(parse_regex(re.str()).str() == re.str());
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto re = random_regex(rng, 4);
    CHECK(parse_regex(re.str()) == re);
  }
}

TEST_CASE("canonical minimization") {
  const auto m = minimize_canonical(R("a+b+"));
  CHECK(m.num_states() == 3);
  CHECK(to_json(minimize_canonical(R("a|a"))) == to_json(minimize_canonical(R("a"))));
  CHECK(to_json(minimize_canonical(R("a+b+"))) == to_json(minimize_canonical(R("aa*bb*"))));
  CHECK(minimize_canonical(R("()")).num_states() == 0);

  Nfa n;
  auto s0 = n.add_state(false);
  auto s1 = n.add_state(true);
  auto s2 = n.add_state(true);  // unreachable
  n.add_start(s0);
  n.add_transition(s0, U'a', s1);
  n.add_transition(s2, U'b', s1);
  const auto t = trim(n);
  CHECK(t.num_states() == 2);
  CHECK(equivalent(t, n));
}

TEST_CASE("equivalence and inclusion") {
  CHECK(equivalent(R("a+b+"), R("aa*bb*")));
  auto inc = includes(R("a+b+"), R("a+b+|ba"));
  CHECK_FALSE(inc.holds);
  REQUIRE(inc.witness);
  CHECK(*inc.witness == W("ba"));
  // Everything contains the empty language.
  CHECK(includes(R("a+b+"), R("()")).holds);
  CHECK(includes(R("()"), R("()")).holds);
  CHECK_FALSE(includes(R("()"), R("a")).holds);
  CHECK(difference_witness(R("(aa)+"), R("a+")) == W("a"));
}

TEST_CASE("enumeration and finiteness") {
  CHECK(enumerate_upto(R("a+b+"), 3) == WS("ab aab abb"));
  CHECK_FALSE(is_finite(R("(aa)+")));
  CHECK(is_finite(R("ab|ba")));
  CHECK(is_empty(intersect(R("a"), R("b"))));
  CHECK(enumerate_upto(union_of(R("a"), R("b")), 4) == WS("a b"));
  CHECK(enumerate_upto(concat(R("a|_"), R("b")), 4) == WS("b ab"));
  CHECK(enumerate_upto(complement(R("a*"), {U'a', U'b'}), 2) == WS("b ab ba bb"));
  CHECK(shortest_word(R("ba|ab|c+")) == W("c"));
  CHECK_FALSE(shortest_word(R("()")).has_value());
}

TEST_CASE("language factor sets") {
  CHECK(lang_two_blocks(R("a+")) == WS("a aa"));
  CHECK(lang_two_blocks(R("a+b+")) == WS("aa ab bb"));
  CHECK(lang_first_symbols(R("a+b+")) == SymbolSet{U'a'});
  CHECK(lang_last_symbols(R("a+b+")) == SymbolSet{U'b'});
  CHECK(lang_units(R("a|b|ab")) == WS("a b"));
}

TEST_CASE("prefix and suffix languages") {
  CHECK(equivalent(prefix_lang(R("a+b+"), W("a")), R("a*")));
  CHECK(equivalent(suffix_lang(R("a+b+"), W("b")), R("b*")));
  CHECK(is_empty(prefix_lang(R("a+b+"), W("c"))));
  CHECK_THROWS_AS(prefix_lang(R("a"), Word()), Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const auto re = random_regex(rng, 4);
    const Nfa l = regex_to_nfa(re);
    const std::size_t n = 3;
    const auto members = enumerate_upto(l, 2 * n + 1);
    for (Symbol a : {U'a', U'b'}) {
      const Word x{a};
      WordSet pre;
      WordSet suf;
      for (const auto& w : members) {
        for (const auto& u : prefixes_at(w, x))
          if (u.size() <= n) pre.insert(u);
        for (const auto& s : suffixes_at(w, x))
          if (s.size() <= n) suf.insert(s);
      }
      CHECK(enumerate_upto(prefix_lang(l, x), n) == pre);
      CHECK(enumerate_upto(suffix_lang(l, x), n) == suf);
    }
  }
}

TEST_CASE("constructions preserve the language and canonical forms coincide") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto a = regex_to_nfa(random_regex(rng, 4));
    const auto b = regex_to_nfa(random_regex(rng, 4));
    const auto da = determinize(a);
    CHECK(equivalent(a, da));
    CHECK(equivalent(a, trim(a)));
    CHECK(equivalent(a, minimize_canonical(a)));
    CHECK(minimize_canonical(da).num_states() <= trim(da).num_states());
    // Canonicality over a common alphabet.
    Nfa a2 = a;
    Nfa b2 = b;
    a2.extend_alphabet({U'a', U'b', U'c'});
    b2.extend_alphabet({U'a', U'b', U'c'});
    CHECK(equivalent(a2, b2) == (to_json(minimize_canonical(a2)) == to_json(minimize_canonical(b2))));
    // Two-block stabilization.
    WordSet blocks;
    const auto n = 2 * std::max<std::size_t>(trim(a).num_states(), 1);
    for (const auto& w : enumerate_upto(a, n)) {
      auto tb = two_blocks(w);
      blocks.insert(tb.begin(), tb.end());
    }
    WordSet lb = lang_two_blocks(a);
    CHECK(lb == blocks);
  }
}

TEST_CASE("json round-trip and schema errors") {
  const auto m = minimize_canonical(R("a+b+"));
  const auto text = to_json(m);
  CHECK(to_json(from_json(text)) == text);
  CHECK(text.find("\"alphabet\"") < text.find("\"states\""));

  auto schema_path = [](std::string_view doc) -> std::string {
    try {
      from_json(doc);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return "none";
  };
  CHECK(schema_path(R"({"alphabet":["a"],"states":[0],"start":[0],"accept":[0],
    "transitions":[{"from":0,"on":"a","to":0},{"from":0,"on":"a","to":0}]})") == "/transitions/1");
  CHECK(schema_path(R"({"alphabet":["a"],"states":[0],"start":[1],"accept":[],"transitions":[]})") ==
        "/start/0");
  CHECK(schema_path(R"({"alphabet":["ab"],"states":[],"start":[],"accept":[],"transitions":[]})") ==
        "/alphabet/0");
  CHECK(schema_path(R"({"states":[],"start":[],"accept":[],"transitions":[]})") == "/alphabet");
  CHECK(schema_path("{") == "");
  CHECK(schema_path(R"({"alphabet":[],"states":[],"start":[],"accept":[],"transitions":[],
    "x-note":1})") == "none");
  CHECK(schema_path(R"({"alphabet":[],"states":[],"start":[],"accept":[],"transitions":[],
    "extra":1})") == "/extra");
}

TEST_CASE("dot export") {
  const auto m = minimize_canonical(R("a+b+"));
  const auto dot = to_dot(m);
  CHECK(dot == to_dot(minimize_canonical(R("a+b+"))));
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("alphabet limit") {
  Nfa n;
  auto s = n.add_state(true);
  for (int i = 0; i < 64; ++i) n.add_transition(s, static_cast<Symbol>(0x100 + i), s);
  try {
    n.add_transition(s, U'z', s);
    FAIL("expected AlphabetTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAlphabetTooLarge);
  }
}
