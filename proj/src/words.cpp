#include "crosskit/words.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

#include "crosskit/error.hpp"

namespace crosskit {

Mode parse_mode(int value) {
  if (value == 1) return Mode::kOne;
  if (value == 2) return Mode::kTwo;
  throw Error(ErrorCode::kInvalidArgument, "mode must be 1 or 2, got " + std::to_string(value));
}

RuleSet RuleSet::all_symbols() { return RuleSet(); }

RuleSet RuleSet::symbols(SymbolSet symbols) {
  RuleSet r;
  r.kind_ = Kind::kSymbols;
  r.symbols_ = std::move(symbols);
  return r;
}

RuleSet RuleSet::strings(WordSet strings) {
  if (strings.count(Word())) throw Error(ErrorCode::kEpsilonRule, "the empty word cannot be an overlap rule");
  RuleSet r;
  r.kind_ = Kind::kStrings;
  r.strings_ = std::move(strings);
  return r;
}

WordSet RuleSet::resolve(const SymbolSet& alphabet) const {
  WordSet out;
  switch (kind_) {
    case Kind::kAllSymbols:
      for (Symbol s : alphabet) out.insert(Word{s});
      break;
    case Kind::kSymbols:
      for (Symbol s : symbols_) out.insert(Word{s});
      break;
    case Kind::kStrings:
      out = strings_;
      break;
  }
  return out;
}

WordSet RuleSet::resolve_within(const WordSet& words) const {
  WordSet out;
  for (const auto& x : resolve(symbols_of(words))) {
    for (const auto& w : words) {
      if (w.contains(x)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

std::size_t RuleSet::max_length() const {
  if (kind_ != Kind::kStrings) return 1;
  std::size_t m = 0;
  for (const auto& w : strings_) m = std::max(m, w.size());
  return m;
}

std::string RuleSet::describe() const {
  switch (kind_) {
    case Kind::kAllSymbols:
      return "all";
    case Kind::kSymbols: {
      std::string out;
      for (Symbol s : symbols_) out += symbol_utf8(s);
      return out.empty() ? std::string("{}") : out;
    }
    case Kind::kStrings: {
      std::string out = "{";
      bool first = true;
      for (const auto& w : strings_) {
        if (!first) out += ",";
        out += w.str();
        first = false;
      }
      return out + "}";
    }
  }
  return {};
}

SymbolSet alphabet_of(const Word& w) { return SymbolSet(w.symbols().begin(), w.symbols().end()); }

WordSet factors(const Word& w) {
  WordSet out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j <= w.size(); ++j) out.insert(w.slice(i, j));
  return out;
}

WordSet two_blocks(const Word& w) {
  if (w.size() < 2) return WordSet{w};
  WordSet out;
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) out.insert(w.slice(i, i + 2));
  return out;
}

std::vector<OccurrenceRef> occurrences(const Word& w, const Word& x) {
  if (x.empty()) throw Error(ErrorCode::kEmptyPattern, "occurrence pattern must be non-empty");
  std::vector<OccurrenceRef> out;
  for (std::size_t pos = 0; pos + x.size() <= w.size(); ++pos) {
    if (w.has_at(pos, x)) out.push_back(OccurrenceRef{x, pos + 1, out.size() + 1});
  }
  return out;
}

WordSet prefixes_at(const Word& w, const Word& x) {
  WordSet out;
  for (const auto& occ : occurrences(w, x)) out.insert(w.prefix(occ.position - 1));
  return out;
}

WordSet suffixes_at(const Word& w, const Word& x) {
  WordSet out;
  for (const auto& occ : occurrences(w, x)) out.insert(w.suffix_from(occ.end()));
  return out;
}

namespace {

bool valid_occurrence(const Word& host, const Word& x, const OccurrenceRef& ref) {
  if (ref.pattern != x || ref.position == 0 || !host.has_at(ref.position - 1, x)) return false;
  std::size_t ordinal = 0;
  for (std::size_t pos = 0; pos < ref.position; ++pos)
    if (host.has_at(pos, x)) ++ordinal;
  return ordinal == ref.ordinal;
}

CrossTrace make_trace(const Word& left, const Word& right, const Word& x, const OccurrenceRef& lc,
                      const OccurrenceRef& rc) {
  Word output = left.prefix(lc.end()) + right.suffix_from(rc.end());
  return CrossTrace{left, right, x, lc, rc, std::move(output)};
}

void sort_traces(std::vector<CrossTrace>& traces) {
  std::sort(traces.begin(), traces.end(), [](const CrossTrace& a, const CrossTrace& b) {
    return std::tie(a.output, a.rule, a.left_cut.position, a.right_cut.position, a.left, a.right) <
           std::tie(b.output, b.rule, b.left_cut.position, b.right_cut.position, b.left, b.right);
  });
}

void require_rule(const Word& x) {
  if (x.empty()) throw Error(ErrorCode::kEpsilonRule, "the empty word cannot be an overlap rule");
}

}  // namespace

Word replay(const CrossTrace& t) {
  if (!valid_occurrence(t.left, t.rule, t.left_cut) || !valid_occurrence(t.right, t.rule, t.right_cut)) {
    throw Error(ErrorCode::kRuleAbsent, "trace cut does not match its host word");
  }
  return t.left.prefix(t.left_cut.end()) + t.right.suffix_from(t.right_cut.end());
}

std::string describe(const CrossTrace& t) {
  return t.output.str() + " = " + t.left.str() + "@" + std::to_string(t.left_cut.position) + " x " +
         t.right.str() + "@" + std::to_string(t.right_cut.position) + " via " + t.rule.str();
}

CrossOutcome gsco_at(const Word& w1, const Word& w2, const Word& x, const OccurrenceRef& i,
                     const OccurrenceRef& j, Mode mode) {
  require_rule(x);
  if (!valid_occurrence(w1, x, i) || !valid_occurrence(w2, x, j)) {
    throw Error(ErrorCode::kRuleAbsent, "rule " + x.str() + " does not occur at the given positions");
  }
  CrossOutcome out;
  out.traces.push_back(make_trace(w1, w2, x, i, j));
  if (mode == Mode::kTwo) out.traces.push_back(make_trace(w2, w1, x, j, i));
  for (const auto& t : out.traces) out.words.insert(t.output);
  sort_traces(out.traces);
  return out;
}

CrossOutcome gsco_rule(const Word& w1, const Word& w2, const Word& x, Mode mode) {
  require_rule(x);
  CrossOutcome out;
  auto occ1 = occurrences(w1, x);
  auto occ2 = occurrences(w2, x);
  for (const auto& i : occ1) {
    for (const auto& j : occ2) {
      out.traces.push_back(make_trace(w1, w2, x, i, j));
      if (mode == Mode::kTwo) out.traces.push_back(make_trace(w2, w1, x, j, i));
    }
  }
  for (const auto& t : out.traces) out.words.insert(t.output);
  sort_traces(out.traces);
  return out;
}

void gsco_rule_into(const Word& w1, const Word& w2, const Word& x, Mode mode, WordSet& out) {
  require_rule(x);
  const auto n = x.size();
  for (std::size_t p = 0; p + n <= w1.size(); ++p) {
    if (!w1.has_at(p, x)) continue;
    for (std::size_t q = 0; q + n <= w2.size(); ++q) {
      if (!w2.has_at(q, x)) continue;
      out.insert(w1.prefix(p + n) + w2.suffix_from(q + n));
      if (mode == Mode::kTwo) out.insert(w2.prefix(q + n) + w1.suffix_from(p + n));
    }
  }
}

namespace {

WordSet pair_rules(const Word& w1, const Word& w2, const RuleSet& rules) {
  if (rules.kind() == RuleSet::Kind::kAllSymbols) {
    auto a1 = alphabet_of(w1);
    auto a2 = alphabet_of(w2);
    SymbolSet common;
    std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(), std::inserter(common, common.end()));
    return rules.resolve(common);
  }
  return rules.resolve({});
}

}  // namespace

CrossOutcome gsco_pair(const Word& w1, const Word& w2, const RuleSet& rules, Mode mode) {
  CrossOutcome out;
  for (const auto& x : pair_rules(w1, w2, rules)) {
    auto part = gsco_rule(w1, w2, x, mode);
    out.words.insert(part.words.begin(), part.words.end());
    out.traces.insert(out.traces.end(), part.traces.begin(), part.traces.end());
  }
  sort_traces(out.traces);
  return out;
}

WordSet gsco_pair_words(const Word& w1, const Word& w2, const RuleSet& rules, Mode mode) {
  WordSet out;
  for (const auto& x : pair_rules(w1, w2, rules)) gsco_rule_into(w1, w2, x, mode, out);
  return out;
}

WordSet epsilon_gsco(const Word& w1, const Word& w2) {
  WordSet out;
  auto add = [&out](const Word& a, const Word& b) {
    for (std::size_t i = 0; i <= a.size(); ++i)
      for (std::size_t j = 0; j <= b.size(); ++j) out.insert(a.prefix(i) + b.suffix_from(j));
  };
  add(w1, w2);
  add(w2, w1);
  return out;
}

WordSet cgsco(const Word& w1, const Word& w2) {
  WordSet out;
  auto f1 = factors(w1);
  for (const auto& x : factors(w2)) {
    if (!f1.count(x)) continue;
    auto occ1 = occurrences(w1, x);
    auto occ2 = occurrences(w2, x);
    if (occ1.size() < 2 || occ2.size() < 2) continue;
    const auto n = std::min(occ1.size(), occ2.size());
    for (std::size_t k = 0; k < n; ++k) {
      out.insert(w1.prefix(occ1[k].end()) + w2.suffix_from(occ2[k].end()));
      out.insert(w2.prefix(occ2[k].end()) + w1.suffix_from(occ1[k].end()));
    }
  }
  return out;
}

}  // namespace crosskit
