#include "crosskit/splicing.hpp"

#include <algorithm>

#include "crosskit/closure.hpp"
#include "crosskit/error.hpp"
#include "crosskit/words.hpp"

namespace crosskit {

SpliceSystem SpliceSystem::simple(WordSet axioms, const SymbolSet& symbols) {
  SpliceSystem s;
  s.kind = Kind::kSimple;
  s.axioms = std::move(axioms);
  for (Symbol a : symbols) {
    s.items.insert(Word{a});
    s.rules.push_back(SpliceRule::simple(a));
  }
  return s;
}

SpliceSystem SpliceSystem::null_context(WordSet axioms, WordSet words) {
  SpliceSystem s;
  s.kind = Kind::kNullContext;
  s.axioms = std::move(axioms);
  for (const auto& r : words) s.rules.push_back(SpliceRule::null_context(r));
  s.items = std::move(words);
  return s;
}

SpliceSystem SpliceSystem::full(WordSet axioms, std::vector<SpliceRule> rules) {
  SpliceSystem s;
  s.kind = Kind::kFull;
  s.axioms = std::move(axioms);
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  s.rules = std::move(rules);
  return s;
}

namespace {

bool occurs_at(const Word& w, std::size_t pos, const Word& a, const Word& b) {
  return w.has_at(pos, a) && w.has_at(pos + a.size(), b);
}

// x1·u1 for every decomposition x = x1·u1·u2·x2.
std::vector<Word> left_pieces(const Word& x, const SpliceRule& r) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + r.u1.size() + r.u2.size() <= x.size(); ++i)
    if (occurs_at(x, i, r.u1, r.u2)) out.push_back(x.prefix(i + r.u1.size()));
  return out;
}

// u4·y2 for every decomposition y = y1·u3·u4·y2.
std::vector<Word> right_pieces(const Word& y, const SpliceRule& r) {
  std::vector<Word> out;
  for (std::size_t j = 0; j + r.u3.size() + r.u4.size() <= y.size(); ++j)
    if (occurs_at(y, j, r.u3, r.u4)) out.push_back(y.suffix_from(j + r.u3.size()));
  return out;
}

// Pieces of one side of one rule, bucketed by length.
class Pieces {
 public:
  explicit Pieces(std::size_t cap) : by_len_(cap + 1) {}

  bool add(const Word& w) {
    if (w.size() >= by_len_.size()) return false;
    return by_len_[w.size()].insert(w).second;
  }
  template <typename Fn>
  void upto(std::size_t len, Fn&& fn) const {
    for (std::size_t i = 0; i <= std::min(len, by_len_.size() - 1); ++i)
      for (const auto& w : by_len_[i]) fn(w);
  }

 private:
  std::vector<WordSet> by_len_;
};

}  // namespace

WordSet splice_once(const Word& x, const Word& y, const SpliceRule& r, int mode) {
  if (mode != 1 && mode != 2) throw Error(ErrorCode::kInvalidArgument, "mode must be 1 or 2");
  WordSet out;
  for (const auto& l : left_pieces(x, r))
    for (const auto& rt : right_pieces(y, r)) out.insert(l + rt);
  if (mode == 2) {
    const auto s = r.swapped();
    for (const auto& l : left_pieces(y, s))
      for (const auto& rt : right_pieces(x, s)) out.insert(l + rt);
  }
  return out;
}

SpliceClosure sigma_closure_bounded(const SpliceSystem& s, std::size_t max_len, std::size_t cap,
                                    std::size_t max_rounds) {
  if (cap < max_len) throw Error(ErrorCode::kInvalidArgument, "cap must be at least max_len");
  // Every ordered pair is spliced, so 1-splicing already yields both outputs.
  struct Side {
    Pieces left, right;
  };
  std::vector<Side> sides;
  for (std::size_t i = 0; i < s.rules.size(); ++i) sides.push_back(Side{Pieces(cap), Pieces(cap)});

  WordSet all = s.axioms;
  WordSet frontier = s.axioms;
  SpliceClosure out;
  while (!frontier.empty() && out.rounds < max_rounds) {
    WordSet produced;
    for (std::size_t i = 0; i < s.rules.size(); ++i) {
      const auto& r = s.rules[i];
      auto& side = sides[i];
      WordSet new_left, new_right;
      for (const auto& w : frontier) {
        for (auto& l : left_pieces(w, r))
          if (side.left.add(l)) new_left.insert(std::move(l));
        for (auto& rt : right_pieces(w, r))
          if (side.right.add(rt)) new_right.insert(std::move(rt));
      }
      // New left pieces with every right piece, then older left pieces with
      // the new right ones.
      for (const auto& l : new_left) side.right.upto(cap - l.size(), [&](const Word& rt) { produced.insert(l + rt); });
      for (const auto& rt : new_right) {
        side.left.upto(cap - rt.size(), [&](const Word& l) {
          if (!new_left.count(l)) produced.insert(l + rt);
        });
      }
    }
    WordSet next;
    for (auto& w : produced)
      if (all.insert(w).second) next.insert(w);
    frontier = std::move(next);
    ++out.rounds;
  }
  out.fixpoint = frontier.empty();
  for (const auto& w : all)
    if (w.size() <= max_len) out.words.insert(w);
  return out;
}

SpliceDiff differential_vs_gsco(const WordSet& axioms, const RuleSet& rules, std::size_t n) {
  SymbolSet sigma;
  std::size_t longest = 0;
  for (const auto& w : axioms) {
    sigma.insert(w.symbols().begin(), w.symbols().end());
    longest = std::max(longest, w.size());
  }
  SpliceSystem system;
  switch (rules.kind()) {
    case RuleSet::Kind::kAllSymbols:
      system = SpliceSystem::simple(axioms, sigma);
      break;
    case RuleSet::Kind::kSymbols:
      system = SpliceSystem::simple(axioms, rules.symbol_set());
      break;
    case RuleSet::Kind::kStrings:
      system = SpliceSystem::null_context(axioms, rules.string_set());
      break;
  }
  SpliceDiff d;
  d.max_len = n;
  d.cap = n + longest;
  const auto spliced = sigma_closure_bounded(system, n, d.cap).words;
  const auto crossed = enumerate_upto(jump_closure_finite(axioms, rules).nfa, n);
  std::set_difference(spliced.begin(), spliced.end(), crossed.begin(), crossed.end(),
                      std::inserter(d.splice_only, d.splice_only.end()));
  std::set_difference(crossed.begin(), crossed.end(), spliced.begin(), spliced.end(),
                      std::inserter(d.crossover_only, d.crossover_only.end()));
  d.equal = d.splice_only.empty() && d.crossover_only.empty();
  return d;
}

ordered_json diff_to_json(const SpliceDiff& d) {
  ordered_json j;
  j["equal"] = d.equal;
  j["max_len"] = d.max_len;
  j["cap"] = d.cap;
  j["splice_only"] = ordered_json::array();
  for (const auto& w : d.splice_only) j["splice_only"].push_back(w.utf8());
  j["crossover_only"] = ordered_json::array();
  for (const auto& w : d.crossover_only) j["crossover_only"].push_back(w.utf8());
  return j;
}

namespace {

Word json_word(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  const auto text = j.get<std::string>();
  if (text == "_") return Word();
  try {
    return Word::from_utf8(text);
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

std::string word_text(const Word& w) { return w.empty() ? "_" : w.utf8(); }

}  // namespace

SpliceSystem splice_system_from_json(std::string_view text) {
  const auto j = parse_json_text(text);
  if (!j.is_object()) throw SchemaError("", "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "alphabet" && key != "axioms" && key != "rules" && key.rfind("x-", 0) != 0) {
      throw SchemaError("/" + key, "unknown key");
    }
  }
  for (const char* key : {"axioms", "rules"})
    if (!j.contains(key)) throw SchemaError(std::string("/") + key, "missing key");

  SymbolSet alphabet;
  if (j.contains("alphabet")) {
    const auto& a = j["alphabet"];
    if (!a.is_array()) throw SchemaError("/alphabet", "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto w = json_word(a[i], "/alphabet/" + std::to_string(i));
      if (w.size() != 1) throw SchemaError("/alphabet/" + std::to_string(i), "expected one symbol");
      alphabet.insert(w[0]);
    }
  }
  auto check_symbols = [&](const Word& w, const std::string& path) {
    if (!j.contains("alphabet")) return;
    for (Symbol s : w.symbols())
      if (!alphabet.count(s)) throw SchemaError(path, "symbol outside the alphabet");
  };

  WordSet axioms;
  const auto& ax = j["axioms"];
  if (!ax.is_array()) throw SchemaError("/axioms", "expected an array");
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const auto path = "/axioms/" + std::to_string(i);
    auto w = json_word(ax[i], path);
    check_symbols(w, path);
    axioms.insert(std::move(w));
  }

  const auto& r = j["rules"];
  if (!r.is_object() || !r.contains("kind") || !r["kind"].is_string()) throw SchemaError("/rules/kind", "missing rule kind");
  if (!r.contains("items") || !r["items"].is_array()) throw SchemaError("/rules/items", "expected an array");
  const auto kind = r["kind"].get<std::string>();
  const auto& items = r["items"];
  SpliceSystem s;
  if (kind == "simple") {
    SymbolSet symbols;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto path = "/rules/items/" + std::to_string(i);
      const auto w = json_word(items[i], path);
      if (w.size() != 1) throw SchemaError(path, "expected one symbol");
      check_symbols(w, path);
      symbols.insert(w[0]);
    }
    s = SpliceSystem::simple(std::move(axioms), symbols);
  } else if (kind == "null-context") {
    WordSet words;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto path = "/rules/items/" + std::to_string(i);
      auto w = json_word(items[i], path);
      check_symbols(w, path);
      words.insert(std::move(w));
    }
    s = SpliceSystem::null_context(std::move(axioms), std::move(words));
  } else if (kind == "full") {
    std::vector<SpliceRule> rules;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto path = "/rules/items/" + std::to_string(i);
      if (!items[i].is_array() || items[i].size() != 4) throw SchemaError(path, "expected four words");
      Word u[4];
      for (std::size_t k = 0; k < 4; ++k) {
        u[k] = json_word(items[i][k], path + "/" + std::to_string(k));
        check_symbols(u[k], path + "/" + std::to_string(k));
      }
      rules.push_back(SpliceRule{u[0], u[1], u[2], u[3]});
    }
    s = SpliceSystem::full(std::move(axioms), std::move(rules));
  } else {
    throw SchemaError("/rules/kind", "unknown rule kind '" + kind + "'");
  }
  s.alphabet = std::move(alphabet);
  return s;
}

ordered_json splice_system_to_json(const SpliceSystem& s) {
  ordered_json j;
  j["alphabet"] = ordered_json::array();
  for (Symbol a : s.alphabet) j["alphabet"].push_back(symbol_utf8(a));
  j["axioms"] = ordered_json::array();
  for (const auto& w : s.axioms) j["axioms"].push_back(word_text(w));
  ordered_json r;
  r["kind"] = s.kind == SpliceSystem::Kind::kSimple ? "simple"
              : s.kind == SpliceSystem::Kind::kNullContext ? "null-context"
                                                           : "full";
  r["items"] = ordered_json::array();
  if (s.kind == SpliceSystem::Kind::kFull) {
    for (const auto& rule : s.rules)
      r["items"].push_back({word_text(rule.u1), word_text(rule.u2), word_text(rule.u3), word_text(rule.u4)});
  } else {
    for (const auto& w : s.items) r["items"].push_back(word_text(w));
  }
  j["rules"] = std::move(r);
  return j;
}

}  // namespace crosskit
