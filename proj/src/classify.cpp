#include "crosskit/classify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

#include "crosskit/closure.hpp"
#include "crosskit/error.hpp"

namespace crosskit {

namespace {

void require_epsilon_free(const Nfa& a) {
  if (a.accepts(Word())) throw Error(ErrorCode::kEpsilonInLanguage, "the language contains the empty word");
}

Verdict from_inclusion(const Inclusion& inc) {
  Verdict v;
  v.holds = inc.holds;
  v.witness = inc.witness;
  return v;
}

Dfa minimal(const Nfa& a) { return trim(minimize_canonical(a)); }

Dfa restarted(const Dfa& d, State s) {
  Dfa out = d;
  out.set_start(s);
  return out;
}

// Shortest word leading from the start to s.
Word access_word(const Dfa& d, State s) {
  Dfa out = d;
  for (State q = 0; q < out.num_states(); ++q) out.set_accepting(q, q == s);
  return *shortest_word(out);
}

std::string format_rules(const WordSet& rules) {
  std::string out = "{";
  bool sep = false;
  for (const auto& w : rules) {
    if (sep) out += ",";
    out += w.utf8();
    sep = true;
  }
  return out + "}";
}

// Words of length k labelling a path of d; from the start only, and/or ending
// in an accepting state.
WordSet paths_of_length(const Dfa& d, std::size_t k, bool from_start, bool to_accept) {
  WordSet out;
  std::vector<std::pair<State, Word>> layer;
  if (from_start) {
    if (d.start()) layer.emplace_back(*d.start(), Word());
  } else {
    for (State s = 0; s < d.num_states(); ++s) layer.emplace_back(s, Word());
  }
  constexpr std::size_t kLimit = 1'000'000;
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::pair<State, Word>> next;
    for (const auto& [s, w] : layer) {
      for (const auto& [a, t] : d.edges(s)) {
        Word v = w;
        v += a;
        next.emplace(t, std::move(v));
      }
    }
    if (next.size() > kLimit) throw Error(ErrorCode::kInvalidArgument, "factor window too large to enumerate");
    layer.assign(next.begin(), next.end());
  }
  for (const auto& [s, w] : layer)
    if (!to_accept || d.is_accepting(s)) out.insert(w);
  return out;
}

// Strictly k-testable hull: short members of L, and longer words whose
// length-k prefix, factors and suffix all occur in L in those roles.
Nfa testable_hull(const Dfa& d, std::size_t k) {
  const WordSet prefixes = paths_of_length(d, k, true, false);
  const WordSet factors = paths_of_length(d, k, false, false);
  const WordSet suffixes = paths_of_length(d, k, false, true);
  const WordSet short_members = k > 0 ? enumerate_upto(Nfa(d), k - 1) : WordSet{};

  WordSet heads;
  for (const auto& source : {prefixes, short_members})
    for (const auto& w : source)
      for (std::size_t i = 0; i < std::min(w.size() + 1, k); ++i) heads.insert(w.prefix(i));

  Nfa out(d.alphabet());
  std::map<Word, State> head_ids;
  std::map<Word, State> window_ids;
  for (const auto& h : heads) head_ids[h] = out.add_state(short_members.count(h) > 0);
  for (const auto& f : factors) window_ids[f] = out.add_state(suffixes.count(f) > 0);
  out.add_start(head_ids.at(Word()));
  for (const auto& [h, s] : head_ids) {
    for (Symbol a : d.alphabet()) {
      Word v = h;
      v += a;
      if (v.size() < k) {
        if (auto it = head_ids.find(v); it != head_ids.end()) out.add_transition(s, a, it->second);
      } else if (prefixes.count(v)) {
        out.add_transition(s, a, window_ids.at(v));
      }
    }
  }
  for (const auto& [f, s] : window_ids) {
    for (Symbol a : d.alphabet()) {
      Word v = f.suffix_from(1);
      v += a;
      if (auto it = window_ids.find(v); it != window_ids.end()) out.add_transition(s, a, it->second);
    }
  }
  return out;
}

}  // namespace

Verdict is_closed_under(const Nfa& a, const RuleSet& rules) {
  require_epsilon_free(a);
  return from_inclusion(includes(a, gsco_once_regular(a, rules)));
}

Verdict is_crossover(const Nfa& a) { return is_closed_under(a, RuleSet::all_symbols()); }

Verdict is_tsy(const Nfa& a) { return is_crossover(a); }

Verdict is_sy(const Nfa& a) {
  require_epsilon_free(a);
  const Dfa d = minimal(a);
  SymbolSet used;
  for (State s = 0; s < d.num_states(); ++s)
    for (const auto& [sym, t] : d.edges(s)) used.insert(sym);
  const std::vector<Symbol> sigma(used.begin(), used.end());
  if (sigma.size() > 16) throw Error(ErrorCode::kInvalidArgument, "too many symbols for subset search");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << sigma.size()); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
  for (auto m : masks) {
    SymbolSet r;
    WordSet shown;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (m >> i & 1U) {
        r.insert(sigma[i]);
        shown.insert(Word{sigma[i]});
      }
    }
    if (is_closed_under(Nfa(d), RuleSet::symbols(r)).holds) {
      Verdict v;
      v.holds = true;
      v.rules = format_rules(shown);
      return v;
    }
  }
  return Verdict{};
}

Verdict is_st_closed(const Nfa& a, const WordSet& rules) {
  Verdict v = is_closed_under(a, RuleSet::strings(rules));
  if (v.holds) v.rules = format_rules(rules);
  return v;
}

Verdict is_constant(const Nfa& a, const Word& c) {
  if (c.empty()) throw Error(ErrorCode::kEmptyPattern, "a constant must be non-empty");
  const Dfa d = minimal(a);
  std::map<State, State> target_from;  // target -> first source reaching it
  for (State p = 0; p < d.num_states(); ++p) {
    std::optional<State> q = p;
    for (Symbol s : c.symbols()) {
      q = d.next(*q, s);
      if (!q) break;
    }
    if (q) target_from.emplace(*q, p);
  }
  Verdict v;
  v.holds = target_from.size() <= 1;
  if (!v.holds) {
    auto it = target_from.begin();
    const auto [q1, p1] = *it++;
    const auto [q2, p2] = *it;
    // Some z is accepted from exactly one of q1, q2; the prefix leading to
    // the other one then completes to a non-member.
    const Word z = *difference_witness(Nfa(restarted(d, q1)), Nfa(restarted(d, q2)));
    const bool from_first = restarted(d, q1).accepts(z);
    v.witness = access_word(d, from_first ? p2 : p1) + c + z;
  }
  return v;
}

Verdict is_slt(const Nfa& a, std::optional<std::size_t> kmax) {
  require_epsilon_free(a);
  const Dfa d = minimal(a);
  const std::size_t n = std::max<std::size_t>(d.num_states(), 1);
  const std::size_t limit = kmax.value_or(n * n);

  // pairs[(q1,q2)] = some factor c of the current length with p1 -c-> q1 and
  // p2 -c-> q2; an off-diagonal pair is a non-constant factor.
  std::map<std::pair<State, State>, Word> pairs;
  for (State p = 0; p < d.num_states(); ++p)
    for (State q = 0; q < d.num_states(); ++q) pairs.emplace(std::make_pair(p, q), Word());
  auto advance = [&d](const std::map<std::pair<State, State>, Word>& from) {
    std::map<std::pair<State, State>, Word> next;
    for (const auto& [pq, w] : from) {
      for (const auto& [sym, t1] : d.edges(pq.first)) {
        auto t2 = d.next(pq.second, sym);
        if (!t2) continue;
        Word v = w;
        v += sym;
        next.emplace(std::make_pair(t1, *t2), std::move(v));
      }
    }
    return next;
  };
  std::optional<std::size_t> kc;
  std::optional<Word> offender;
  for (std::size_t k = 1; k <= limit; ++k) {
    pairs = advance(pairs);
    auto bad = std::find_if(pairs.begin(), pairs.end(), [](const auto& e) { return e.first.first != e.first.second; });
    if (bad == pairs.end()) {
      kc = k;
      break;
    }
    offender = bad->second;
  }
  Verdict v;
  if (!kc) {
    v.witness = offender;
    return v;
  }
  // Every window of length kc is a constant; the testable window is kc or kc+1.
  for (std::size_t k = *kc; k <= *kc + 1; ++k) {
    const auto inc = includes(Nfa(d), testable_hull(d, k));
    if (inc.holds) {
      v.holds = true;
      v.detail = k;
      v.witness.reset();
      return v;
    }
    v.witness = inc.witness;
  }
  return v;
}

Verdict is_st(const Nfa& a, std::optional<std::size_t> kmax) {
  const Verdict slt = is_slt(a, kmax);
  if (!slt.holds) return slt;
  const Dfa d = minimal(a);
  WordSet factors = paths_of_length(d, *slt.detail, false, false);
  if (factors.empty()) {
    // No factor of that length: every member is shorter, and any rule set
    // over the alphabet certifies closure.
    for (Symbol s : d.alphabet()) factors.insert(Word{s});
  }
  Verdict v = is_st_closed(Nfa(d), factors);
  v.detail = slt.detail;
  return v;
}

Verdict is_combinational(const Nfa& a) {
  Nfa candidate = concat(sigma_star(a.alphabet()), Nfa::from_words([&a] {
                           WordSet u;
                           for (Symbol s : lang_last_symbols(a)) u.insert(Word{s});
                           return u;
                         }()));
  Verdict v;
  v.witness = difference_witness(a, candidate);
  v.holds = !v.witness;
  return v;
}

Verdict is_nilpotent(const Nfa& a) {
  Verdict v;
  v.holds = is_finite(a) || is_finite(complement(a, a.alphabet()));
  return v;
}

Verdict is_suffix_closed(const Nfa& a) {
  Nfa t = trim(a);
  for (State s = 0; s < t.num_states(); ++s) t.add_start(s);
  return from_inclusion(includes(a, intersect(t, sigma_plus(a.alphabet()))));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"crossover", "tsy",           "sy",        "st",
                                              "slt",       "combinational", "nilpotent", "suffix-closed"};
  return names;
}

std::string language_hash(const Nfa& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(minimize_canonical(a))) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ClassifyReport classify(const Nfa& a, const std::vector<std::string>& families, std::optional<std::size_t> kmax) {
  for (const auto& f : families) {
    if (std::find(family_names().begin(), family_names().end(), f) == family_names().end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown family '" + f + "'");
    }
  }
  ClassifyReport r;
  r.language = language_hash(a);
  for (const auto& name : family_names()) {
    if (std::find(families.begin(), families.end(), name) == families.end()) continue;
    Verdict v;
    if (name == "crossover") v = is_crossover(a);
    else if (name == "tsy") v = is_tsy(a);
    else if (name == "sy") v = is_sy(a);
    else if (name == "st") v = is_st(a, kmax);
    else if (name == "slt") v = is_slt(a, kmax);
    else if (name == "combinational") v = is_combinational(a);
    else if (name == "nilpotent") v = is_nilpotent(a);
    else v = is_suffix_closed(a);
    r.families.push_back(FamilyResult{name, std::move(v)});
  }
  return r;
}

ordered_json verdict_to_json(const std::string& name, const Verdict& v) {
  ordered_json j;
  j["name"] = name;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = v.witness->utf8();
  if (v.detail) j["detail"] = *v.detail;
  if (v.rules) j["rules"] = *v.rules;
  return j;
}

ordered_json report_to_json(const ClassifyReport& r) {
  ordered_json j;
  j["language"] = r.language;
  j["families"] = ordered_json::array();
  for (const auto& f : r.families) j["families"].push_back(verdict_to_json(f.name, f.verdict));
  return j;
}

std::string report_text(const ClassifyReport& r) {
  std::ostringstream os;
  for (const auto& f : r.families) {
    os << f.name << ": " << (f.verdict.holds ? "holds" : "fails");
    if (f.verdict.detail) os << " k=" << *f.verdict.detail;
    if (f.verdict.rules) os << " rules=" << *f.verdict.rules;
    if (f.verdict.witness) os << " witness=" << f.verdict.witness->str();
    os << "\n";
  }
  return os.str();
}

}  // namespace crosskit
