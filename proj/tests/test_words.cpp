#include <random>

#include "crosskit/error.hpp"
#include "crosskit/words.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crosskit;
using test::W;
using test::WS;

namespace {

std::vector<std::size_t> positions(const std::vector<OccurrenceRef>& occ) {
  std::vector<std::size_t> out;
  for (const auto& o : occ) out.push_back(o.position);
  return out;
}

WordSet all_rules_union(const Word& a, const Word& b, const WordSet& rules, Mode mode) {
  WordSet out;
  for (const auto& x : rules) gsco_rule_into(a, b, x, mode, out);
  return out;
}

}  // namespace

TEST_CASE("word syntax and ordering") {
  CHECK(W("_").empty());
  CHECK(W("_").str() == "_");
  CHECK(W("abc").size() == 3);
  CHECK(W("b") < W("aa"));
  CHECK(W("ab") < W("ba"));
  CHECK(Word::parse("αβ").size() == 2);
  CHECK(Word::parse("αβ").str() == "αβ");
  CHECK_THROWS_AS(Word::parse("\xff"), Error);
  auto list = parse_word_list("# comment\nab\n\n_\nba\n");
  REQUIRE(list.size() == 3);
  CHECK(list[1].empty());
  CHECK_THROWS_AS(parse_word_list("a b\n"), Error);
}

TEST_CASE("alphabet_of, factors, two_blocks") {
  CHECK(alphabet_of(W("abba")) == SymbolSet{U'a', U'b'});
  CHECK(alphabet_of(W("_")).empty());
  CHECK(alphabet_of(W("abcab")) == SymbolSet{U'a', U'b', U'c'});
  CHECK(factors(W("ab")) == WS("a b ab"));
  CHECK(factors(W("aa")) == WS("a aa"));
  CHECK(factors(W("abc")) == WS("a b c ab bc abc"));
  CHECK(two_blocks(W("abbbc")) == WS("ab bb bc"));
  CHECK(two_blocks(W("a")) == WS("a"));
  CHECK(two_blocks(W("_")) == WordSet{Word()});
}

TEST_CASE("occurrences and prefix/suffix decompositions") {
  CHECK(positions(occurrences(W("abab"), W("ab"))) == std::vector<std::size_t>{1, 3});
  CHECK(positions(occurrences(W("aaa"), W("aa"))) == std::vector<std::size_t>{1, 2});
  CHECK(occurrences(W("abc"), W("d")).empty());
  auto occ = occurrences(W("aaa"), W("aa"));
  CHECK(occ[1].ordinal == 2);
  CHECK_THROWS_AS(occurrences(W("ab"), Word()), Error);
  try {
    occurrences(W("ab"), Word());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyPattern);
  }
  CHECK(prefixes_at(W("aba"), W("a")) == WordSet{Word(), W("ab")});
  CHECK(suffixes_at(W("aba"), W("a")) == WordSet{W("ba"), Word()});
  CHECK(prefixes_at(W("abab"), W("ab")) == WordSet{Word(), W("ab")});
  CHECK_THROWS_AS(suffixes_at(W("ab"), Word()), Error);
}

TEST_CASE("gsco_at") {
  auto a1 = occurrences(W("ab"), W("a")).front();
  auto b1 = occurrences(W("ba"), W("a")).front();
  CHECK(gsco_at(W("ab"), W("ba"), W("a"), a1, b1, Mode::kTwo).words == WS("a bab"));
  CHECK(gsco_at(W("ab"), W("ba"), W("a"), a1, b1, Mode::kOne).words == WS("a"));
  for (const auto& occ : occurrences(W("abab"), W("b"))) {
    CHECK(gsco_at(W("abab"), W("abab"), W("b"), occ, occ, Mode::kTwo).words == WS("abab"));
  }
  OccurrenceRef bogus{W("a"), 2, 1};
  try {
    gsco_at(W("ab"), W("ba"), W("a"), bogus, b1, Mode::kTwo);
    FAIL("expected RuleAbsent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRuleAbsent);
  }
  try {
    gsco_rule(W("ab"), W("ab"), Word(), Mode::kTwo);
    FAIL("expected EpsilonRule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEpsilonRule);
  }
}

TEST_CASE("gsco_rule and gsco_pair goldens") {
  CHECK(gsco_rule(W("pabaq"), W("rabas"), W("aba"), Mode::kTwo).words == WS("pabas rabaq"));
  CHECK(gsco_rule(W("pabaq"), W("rabas"), W("a"), Mode::kTwo).words ==
        WS("pabas rabaq pas rababaq pababas raq"));
  CHECK(gsco_rule(W("ab"), W("cd"), W("a"), Mode::kTwo).words.empty());
  CHECK(gsco_pair(W("ab"), W("ba"), RuleSet::all_symbols(), Mode::kTwo).words == WS("a b aba bab"));
  CHECK(gsco_pair(W("ab"), W("bb"), RuleSet::all_symbols(), Mode::kTwo).words == WS("ab bb b abb"));
  CHECK(gsco_pair(W("ba"), W("bb"), RuleSet::all_symbols(), Mode::kTwo).words == WS("b bb ba bba"));
  CHECK(gsco_pair(W("aa"), W("aaa"), RuleSet::all_symbols(), Mode::kTwo).words == WS("a aa aaa aaaa"));
}

TEST_CASE("epsilon and corresponding crossover") {
  CHECK(epsilon_gsco(W("a"), W("b")) == WordSet{Word(), W("a"), W("b"), W("ab"), W("ba")});
  CHECK(epsilon_gsco(W("a"), W("a")) == WordSet{Word(), W("a"), W("aa")});
  CHECK(epsilon_gsco(Word(), Word()) == WordSet{Word()});
  CHECK(cgsco(W("abcab"), W("abab")) == WS("abab abcab"));
  CHECK(cgsco(W("ab"), W("ab")).empty());
  CHECK(cgsco(W("abab"), W("abab")) == WS("abab"));
}

TEST_CASE("traces replay and describe") {
  auto out = gsco_pair(W("pabaq"), W("rabas"), RuleSet::all_symbols(), Mode::kTwo);
  REQUIRE(!out.traces.empty());
  for (const auto& t : out.traces) {
    CHECK(replay(t) == t.output);
    CHECK(out.words.count(t.output));
  }
  auto t = out.traces.front();
  t.left_cut.position += 1;
  CHECK_THROWS_AS(replay(t), Error);
  CHECK(describe(out.traces.front()).find(" via ") != std::string::npos);
}

TEST_CASE("rule sets") {
  CHECK_THROWS_AS(RuleSet::strings(WordSet{Word()}), Error);
  CHECK(RuleSet::all_symbols().resolve({U'a', U'b'}) == WS("a b"));
  CHECK(RuleSet::symbols({U'b'}).resolve({U'a', U'b'}) == WS("b"));
  CHECK(RuleSet::strings(WS("ab bb")).max_length() == 2);
  CHECK(RuleSet::strings(WS("ab bb")).describe() == "{ab,bb}");
  CHECK(RuleSet::strings(WS("ab cc")).resolve_within(WS("aab")) == WS("ab"));
  CHECK_THROWS_AS(parse_mode(3), Error);
}

TEST_CASE("single-pair laws on random words") {
  std::mt19937_64 rng(20241);
  for (int iter = 0; iter < 1500; ++iter) {
    const auto alphabet = 2 + rng() % 2;
    const Word u = test::random_word(rng, alphabet, 1, 7);
    const Word v = test::random_word(rng, alphabet, 1, 7);
    const auto all = RuleSet::all_symbols();
    const auto two = gsco_pair(u, v, all, Mode::kTwo).words;

    // Commutativity of 2-mode.
    CHECK(two == gsco_pair(v, u, all, Mode::kTwo).words);

    // Mode relation.
    const auto one_uv = gsco_pair(u, v, all, Mode::kOne).words;
    const auto one_vu = gsco_pair(v, u, all, Mode::kOne).words;
    for (const auto& w : one_uv) CHECK(two.count(w));
    WordSet merged = one_uv;
    merged.insert(one_vu.begin(), one_vu.end());
    CHECK(merged == two);

    // Length bound.
    for (const auto& w : two) {
      CHECK(w.size() >= 1);
      CHECK(w.size() <= u.size() + v.size() - 1);
    }

    // Sub-word monotonicity: every factor x of a common factor y.
    const auto fu = factors(u);
    for (const auto& y : factors(v)) {
      if (!fu.count(y) || y.size() < 2) continue;
      const auto via_y = gsco_rule(u, v, y, Mode::kTwo).words;
      for (const auto& x : factors(y)) {
        const auto via_x = gsco_rule(u, v, x, Mode::kTwo).words;
        for (const auto& w : via_y) CHECK(via_x.count(w));
      }
    }

    // Rule monotonicity, union and the sound intersection direction.
    const WordSet r1 = WS("a b");
    const WordSet r2 = WS("b c");
    const auto g1 = all_rules_union(u, v, r1, Mode::kTwo);
    const auto g2 = all_rules_union(u, v, r2, Mode::kTwo);
    const auto g12 = all_rules_union(u, v, WS("a b c"), Mode::kTwo);
    const auto gi = all_rules_union(u, v, WS("b"), Mode::kTwo);
    WordSet both = g1;
    both.insert(g2.begin(), g2.end());
    CHECK(both == g12);
    for (const auto& w : g1) CHECK(g12.count(w));
    for (const auto& w : gi) {
      CHECK(g1.count(w));
      CHECK(g2.count(w));
    }

    // Traces replay.
    for (const auto& t : gsco_pair(u, v, all, Mode::kTwo).traces) CHECK(replay(t) == t.output);
  }
}

TEST_CASE("intersection equality fails on the known counterexample") {
  const auto g1 = gsco_rule(W("ab"), W("ab"), W("a"), Mode::kTwo).words;
  const auto g2 = gsco_rule(W("ab"), W("ab"), W("b"), Mode::kTwo).words;
  // R1 ∩ R2 is empty, yet both sides produce ab.
  CHECK(g1.count(W("ab")));
  CHECK(g2.count(W("ab")));
}

TEST_CASE("distinct symbols and unary words") {
  for (const char* s : {"a", "ab", "abc", "abcd", "dcba"}) {
    CHECK(gsco_pair(W(s), W(s), RuleSet::all_symbols(), Mode::kTwo).words == WordSet{W(s)});
  }
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = 1; j <= 6; ++j) {
      WordSet expect;
      for (std::size_t k = 1; k <= i + j - 1; ++k) expect.insert(Word(std::u32string(k, U'a')));
      CHECK(gsco_pair(Word(std::u32string(i, U'a')), Word(std::u32string(j, U'a')), RuleSet::all_symbols(),
                      Mode::kTwo)
                .words == expect);
    }
  }
}

TEST_CASE("restricted reversibility") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    const Word u = test::random_word(rng, 3, 1, 6);
    const Word v = test::random_word(rng, 3, 1, 6);
    const Word a{U'a'};
    if (occurrences(u, a).size() != 1 || occurrences(v, a).size() != 1) continue;
    const auto out = gsco_rule(u, v, a, Mode::kTwo).words;
    if (out.size() != 2) continue;
    const Word x = *out.begin();
    const Word y = *out.rbegin();
    CHECK(gsco_rule(x, y, a, Mode::kTwo).words == WordSet{u, v});
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("crossover of words is not associative") {
  // Regression fixture: (ab >-< bc) >-< ca differs from ab >-< (bc >-< ca).
  auto lift = [](const WordSet& l, const WordSet& r) {
    WordSet out;
    for (const auto& a : l)
      for (const auto& b : r) {
        auto part = gsco_pair_words(a, b, RuleSet::all_symbols(), Mode::kTwo);
        out.insert(part.begin(), part.end());
      }
    return out;
  };
  const auto left = lift(lift(WS("ab"), WS("bc")), WS("ca"));
  const auto right = lift(WS("ab"), lift(WS("bc"), WS("ca")));
  CHECK(left != right);
}
