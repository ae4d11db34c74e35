#include "crosskit/oracle.hpp"

#include <map>
#include <random>
#include <set>

#include "crosskit/error.hpp"

namespace crosskit {

namespace {

std::vector<std::size_t> occurrences(const std::u32string& w, const std::u32string& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + x.size() <= w.size(); ++i)
    if (w.compare(i, x.size(), x) == 0) out.push_back(i);
  return out;
}

std::set<std::u32string> rule_strings(const RuleSet& rules, const WordSet& words) {
  std::set<std::u32string> out;
  switch (rules.kind()) {
    case RuleSet::Kind::kAllSymbols:
      for (const auto& w : words)
        for (char32_t c : w.symbols()) out.insert(std::u32string(1, c));
      break;
    case RuleSet::Kind::kSymbols:
      for (Symbol s : rules.symbol_set()) out.insert(std::u32string(1, s));
      break;
    case RuleSet::Kind::kStrings:
      for (const auto& w : rules.string_set()) out.insert(w.symbols());
      break;
  }
  return out;
}

}  // namespace

WordSet naive_gsco_all_substrings(const Word& w1, const Word& w2, Mode mode) {
  const auto& a = w1.symbols();
  const auto& b = w2.symbols();
  std::set<std::u32string> common;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t len = 1; i + len <= a.size(); ++len)
      if (b.find(a.substr(i, len)) != std::u32string::npos) common.insert(a.substr(i, len));
  WordSet out;
  for (const auto& x : common) {
    for (std::size_t i : occurrences(a, x)) {
      for (std::size_t j : occurrences(b, x)) {
        out.insert(Word(a.substr(0, i + x.size()) + b.substr(j + x.size())));
        if (mode == Mode::kTwo) out.insert(Word(b.substr(0, j + x.size()) + a.substr(i + x.size())));
      }
    }
  }
  return out;
}

bool chain_membership(const Word& w, const WordSet& axioms, const RuleSet& rules) {
  const auto& s = w.symbols();
  const auto xs = rule_strings(rules, axioms);
  std::vector<std::u32string> ax;
  for (const auto& a : axioms) ax.push_back(a.symbols());

  // A state (t, j, q): w[0..t) has been produced and axiom j continues at q.
  using Node = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::set<Node> seen;
  std::vector<Node> todo;
  for (std::size_t j = 0; j < ax.size(); ++j) todo.emplace_back(0, j, 0);
  while (!todo.empty()) {
    const Node n = todo.back();
    todo.pop_back();
    if (!seen.insert(n).second) continue;
    const auto [t, j, q] = n;
    if (t == s.size() && q == ax[j].size()) return true;
    if (t < s.size() && q < ax[j].size() && ax[j][q] == s[t]) todo.emplace_back(t + 1, j, q + 1);
    // The text just produced ends with a rule occurrence: jump into any
    // axiom right after an occurrence of the same rule.
    for (const auto& x : xs) {
      if (x.size() > t || s.compare(t - x.size(), x.size(), x) != 0) continue;
      for (std::size_t j2 = 0; j2 < ax.size(); ++j2)
        for (std::size_t p : occurrences(ax[j2], x)) todo.emplace_back(t, j2, p + x.size());
    }
  }
  return false;
}

WordSet bounded_closure_reference(const WordSet& axioms, const RuleSet& rules, std::size_t target_len,
                                  std::size_t cap) {
  if (cap < target_len) throw Error(ErrorCode::kInvalidArgument, "cap must be at least target_len");
  std::set<std::u32string> lang;
  for (const auto& w : axioms) lang.insert(w.symbols());
  const auto xs = rule_strings(rules, axioms);
  for (;;) {
    // One application to the whole set: every prefix ending with x joined
    // to every suffix following x.
    std::set<std::u32string> grown = lang;
    for (const auto& x : xs) {
      std::set<std::u32string> heads;
      std::map<std::size_t, std::set<std::u32string>> tails;
      for (const auto& w : lang) {
        for (std::size_t i : occurrences(w, x)) {
          heads.insert(w.substr(0, i + x.size()));
          tails[w.size() - i - x.size()].insert(w.substr(i + x.size()));
        }
      }
      for (const auto& h : heads)
        for (const auto& [len, group] : tails) {
          if (h.size() + len > cap) break;
          for (const auto& tl : group) grown.insert(h + tl);
        }
    }
    if (grown.size() == lang.size()) break;
    lang = std::move(grown);
  }
  WordSet out;
  for (const auto& w : lang)
    if (w.size() <= target_len) out.insert(Word(w));
  return out;
}

std::vector<Word> gen_words(Seed seed, std::size_t alphabet_size, std::size_t max_len, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::u32string w(1 + rng() % max_len, U'a');
    for (auto& c : w) c = static_cast<char32_t>(U'a' + rng() % alphabet_size);
    out.emplace_back(std::move(w));
  }
  return out;
}

std::vector<FiniteLanguage> gen_finite_langs(Seed seed, std::size_t count, std::size_t alphabet_size,
                                             std::size_t max_words, std::size_t max_len) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteLanguage> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto words = gen_words(rng(), alphabet_size, max_len, 1 + rng() % max_words);
    out.emplace_back(WordSet(words.begin(), words.end()));
  }
  return out;
}

namespace {

Regex random_regex(std::mt19937_64& rng, int depth, int stars, std::size_t alphabet_size) {
  if (depth <= 0 || rng() % 4 == 0) {
    if (rng() % 10 == 0) return Regex::epsilon();
    return Regex::symbol(static_cast<Symbol>(U'a' + rng() % alphabet_size));
  }
  const auto pick = rng() % 6;
  if (pick >= 3 && stars < 2) {
    Regex inner = random_regex(rng, depth - 1, stars + 1, alphabet_size);
    if (pick == 3) return Regex::star(std::move(inner));
    if (pick == 4) return Regex::plus(std::move(inner));
    return Regex::optional(std::move(inner));
  }
  std::vector<Regex> parts{random_regex(rng, depth - 1, stars, alphabet_size),
                           random_regex(rng, depth - 1, stars, alphabet_size)};
  return pick % 2 == 0 ? Regex::concat(std::move(parts)) : Regex::alt(std::move(parts));
}

}  // namespace

std::vector<Regex> gen_regexes(Seed seed, std::size_t count, int depth, std::size_t alphabet_size) {
  std::mt19937_64 rng(seed);
  std::vector<Regex> out;
  while (out.size() < count) {
    Regex r = random_regex(rng, depth, 0, alphabet_size);
    const Nfa n = regex_to_nfa(r);
    if (n.accepts(Word()) || is_empty(n)) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace crosskit
