#include "crosskit/closure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "crosskit/error.hpp"

namespace crosskit {

namespace {

constexpr std::size_t kMaxSaturationRounds = 32;

// Adds detours to an automaton until its language is closed under the rules.
//
// Symbol rule a: every accessible p with an a-edge into a co-accessible
// state gets an a-edge to every such target q. String rule x: a fresh chain
// of |x|-1 hub states reads x from every accessible state with an x-path to
// a co-accessible state and exits to every such x-target. Hubs are never
// reused across rounds: a detour added in round k only ever combines
// prefixes and suffixes of the round-(k-1) language.
class Saturator {
 public:
  Saturator(Nfa nfa, std::vector<StateOrigin> origins, WordSet rules)
      : nfa_(std::move(nfa)), origins_(std::move(origins)), rules_(std::move(rules)) {}

  std::size_t run() {
    bool strings = std::any_of(rules_.begin(), rules_.end(), [](const Word& x) { return x.size() > 1; });
    for (std::size_t step = 1; step <= kMaxSaturationRounds; ++step) {
      Nfa before = strings ? nfa_ : Nfa();
      const auto before_origins = origins_.size();
      bool changed = false;
      bool hubs = false;
      for (const auto& x : rules_) {
        if (x.size() == 1) {
          changed = saturate_symbol(x[0]) || changed;
        } else if (add_hub(x, step)) {
          changed = hubs = true;
        }
      }
      if (!changed) return step;
      // New hub states can keep feeding new detours even once the language
      // has stopped growing, so convergence is decided on languages.
      if (hubs && equivalent(before, nfa_)) {
        nfa_ = std::move(before);
        origins_.resize(before_origins);
        return step;
      }
    }
    throw Error(ErrorCode::kClosureDiverged,
                "saturation did not converge within " + std::to_string(kMaxSaturationRounds) + " rounds");
  }

  Nfa take_nfa() { return std::move(nfa_); }
  std::vector<StateOrigin> take_origins() { return std::move(origins_); }

 private:
  bool saturate_symbol(Symbol a) {
    const auto acc = accessible_states(nfa_);
    const auto co = coaccessible_states(nfa_);
    std::vector<State> from;
    std::set<State> to;
    for (State p = 0; p < nfa_.num_states(); ++p) {
      if (!acc[p]) continue;
      bool any = false;
      const auto& e = nfa_.edges(p);
      for (auto it = e.lower_bound({a, 0}); it != e.end() && it->first == a; ++it) {
        if (co[it->second]) {
          to.insert(it->second);
          any = true;
        }
      }
      if (any) from.push_back(p);
    }
    bool added = false;
    for (State p : from) {
      for (State q : to) {
        if (!nfa_.edges(p).count({a, q})) {
          nfa_.add_transition(p, a, q);
          added = true;
        }
      }
    }
    return added;
  }

  bool add_hub(const Word& x, std::size_t step) {
    const auto acc = accessible_states(nfa_);
    const auto co = coaccessible_states(nfa_);
    std::vector<std::pair<State, std::set<State>>> reach;
    std::set<State> targets;
    for (State p = 0; p < nfa_.num_states(); ++p) {
      if (!acc[p]) continue;
      std::set<State> r;
      for (State q : nfa_.read({p}, x))
        if (co[q]) r.insert(q);
      if (r.empty()) continue;
      targets.insert(r.begin(), r.end());
      reach.emplace_back(p, std::move(r));
    }
    const bool needed = std::any_of(reach.begin(), reach.end(),
                                    [&targets](const auto& pr) { return pr.second.size() < targets.size(); });
    if (!needed) return false;
    std::vector<State> hub;
    for (std::size_t i = 1; i < x.size(); ++i) {
      hub.push_back(nfa_.add_state(false));
      origins_.push_back(StateOrigin{StateOrigin::Kind::kHub, 0, i, x, step});
    }
    for (const auto& [p, r] : reach) nfa_.add_transition(p, x[0], hub.front());
    for (std::size_t i = 0; i + 1 < hub.size(); ++i) nfa_.add_transition(hub[i], x[i + 1], hub[i + 1]);
    for (State q : targets) nfa_.add_transition(hub.back(), x[x.size() - 1], q);
    return true;
  }

  Nfa nfa_;
  std::vector<StateOrigin> origins_;
  WordSet rules_;
};

Closure saturate(Nfa nfa, std::vector<StateOrigin> origins, WordSet rules, ClosureProvenance prov) {
  Saturator s(std::move(nfa), std::move(origins), std::move(rules));
  Closure out;
  out.rounds = s.run();
  out.nfa = s.take_nfa();
  prov.origins = s.take_origins();
  out.provenance = std::move(prov);
  return out;
}

void require_epsilon_free(const Nfa& a) {
  if (a.accepts(Word())) throw Error(ErrorCode::kEpsilonInLanguage, "the language contains the empty word");
}

}  // namespace

Closure jump_closure_finite(const WordSet& axioms, const RuleSet& rules) {
  if (axioms.empty()) throw Error(ErrorCode::kEmptyAxioms, "at least one axiom is required");
  const FiniteLanguage lang(axioms);  // rejects ε
  Nfa nfa(lang.alphabet());
  std::vector<StateOrigin> origins;
  ClosureProvenance prov;
  prov.rules = rules;
  std::size_t index = 0;
  for (const auto& w : lang) {
    prov.axioms.push_back(w);
    State prev = 0;
    for (std::size_t p = 0; p <= w.size(); ++p) {
      const State s = nfa.add_state(p == w.size());
      origins.push_back(StateOrigin{StateOrigin::Kind::kAxiom, index, p, Word(), 0});
      if (p == 0) {
        nfa.add_start(s);
      } else {
        nfa.add_transition(prev, w[p - 1], s);
      }
      prev = s;
    }
    ++index;
  }
  return saturate(std::move(nfa), std::move(origins), rules.resolve(lang.alphabet()), std::move(prov));
}

Closure jump_closure_finite(const FiniteLanguage& axioms, const RuleSet& rules) {
  return jump_closure_finite(axioms.words(), rules);
}

Closure jump_closure_regular(const Nfa& a, const RuleSet& rules) {
  require_epsilon_free(a);
  Nfa t = trim(a);
  std::vector<StateOrigin> origins;
  for (State s = 0; s < t.num_states(); ++s) origins.push_back(StateOrigin{StateOrigin::Kind::kRegular, 0, s, Word(), 0});
  ClosureProvenance prov;
  prov.rules = rules;
  auto resolved = rules.resolve(t.alphabet());
  return saturate(std::move(t), std::move(origins), std::move(resolved), std::move(prov));
}

Nfa gsco_once_regular(const Nfa& a, const RuleSet& rules, Mode /*mode*/) {
  require_epsilon_free(a);
  const Nfa t = trim(a);
  Nfa out(t.alphabet());
  for (const auto& x : rules.resolve(t.alphabet())) {
    const Nfa part = concat(concat(prefix_lang(t, x), Nfa::from_words({x})), suffix_lang(t, x));
    out = union_of(out, part);
  }
  return trim(out);
}

Closure minimized(const Closure& c) {
  Closure out;
  out.nfa = Nfa(minimize_canonical(c.nfa));
  out.rounds = c.rounds;
  if (c.provenance) {
    out.provenance = c.provenance;
    out.provenance->origins.clear();
  }
  return out;
}

// ---- JSON -------------------------------------------------------------------

namespace {

ordered_json rules_to_json(const RuleSet& r) {
  ordered_json j;
  switch (r.kind()) {
    case RuleSet::Kind::kAllSymbols:
      j["kind"] = "all";
      break;
    case RuleSet::Kind::kSymbols:
      j["kind"] = "symbols";
      j["items"] = ordered_json::array();
      for (Symbol s : r.symbol_set()) j["items"].push_back(symbol_utf8(s));
      break;
    case RuleSet::Kind::kStrings:
      j["kind"] = "strings";
      j["items"] = ordered_json::array();
      for (const auto& w : r.string_set()) j["items"].push_back(w.utf8());
      break;
  }
  return j;
}

RuleSet rules_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw SchemaError(path + "/kind", "missing rule kind");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "all") return RuleSet::all_symbols();
  if (!j.contains("items") || !j["items"].is_array()) throw SchemaError(path + "/items", "expected an array");
  const auto& items = j["items"];
  if (kind == "symbols") {
    SymbolSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto p = path + "/items/" + std::to_string(i);
      if (!items[i].is_string()) throw SchemaError(p, "expected a string");
      try {
        s.insert(parse_symbol(items[i].get<std::string>()));
      } catch (const Error& e) {
        throw SchemaError(p, e.what());
      }
    }
    return RuleSet::symbols(std::move(s));
  }
  if (kind == "strings") {
    WordSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto p = path + "/items/" + std::to_string(i);
      if (!items[i].is_string() || items[i].get<std::string>().empty()) throw SchemaError(p, "expected a non-empty string");
      s.insert(Word::from_utf8(items[i].get<std::string>()));
    }
    return RuleSet::strings(std::move(s));
  }
  throw SchemaError(path + "/kind", "unknown rule kind '" + kind + "'");
}

ordered_json origin_to_json(const StateOrigin& o) {
  ordered_json j;
  switch (o.kind) {
    case StateOrigin::Kind::kAxiom:
      j["axiom"] = o.axiom;
      j["pos"] = o.position;
      break;
    case StateOrigin::Kind::kRegular:
      j["state"] = o.position;
      break;
    case StateOrigin::Kind::kHub:
      j["rule"] = o.rule.utf8();
      j["offset"] = o.position;
      j["step"] = o.step;
      break;
  }
  return j;
}

StateOrigin origin_from_json(const nlohmann::json& j, const std::string& path) {
  auto count = [&](const char* key) -> std::size_t {
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw SchemaError(path + "/" + key, "expected a count");
    return j[key].get<std::size_t>();
  };
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  if (j.contains("axiom")) return StateOrigin{StateOrigin::Kind::kAxiom, count("axiom"), count("pos"), Word(), 0};
  if (j.contains("state")) return StateOrigin{StateOrigin::Kind::kRegular, 0, count("state"), Word(), 0};
  if (j.contains("rule") && j["rule"].is_string()) {
    return StateOrigin{StateOrigin::Kind::kHub, 0, count("offset"), Word::from_utf8(j["rule"].get<std::string>()),
                       count("step")};
  }
  throw SchemaError(path, "unrecognized state origin");
}

}  // namespace

ordered_json closure_to_json(const Closure& c) {
  ordered_json j = automaton_to_json(c.nfa);
  if (c.provenance) {
    ordered_json p;
    p["axioms"] = ordered_json::array();
    for (const auto& w : c.provenance->axioms) p["axioms"].push_back(w.utf8());
    p["rules"] = rules_to_json(c.provenance->rules);
    if (!c.provenance->origins.empty()) {
      p["origins"] = ordered_json::array();
      for (const auto& o : c.provenance->origins) p["origins"].push_back(origin_to_json(o));
    }
    j["x-provenance"] = std::move(p);
  }
  return j;
}

std::string closure_to_json_text(const Closure& c) { return closure_to_json(c).dump(2) + "\n"; }

Closure closure_from_json(std::string_view text) {
  const auto j = parse_json_text(text);
  Closure out;
  out.nfa = automaton_from_json(j);
  if (!j.contains("x-provenance")) return out;
  const auto& p = j["x-provenance"];
  const std::string base = "/x-provenance";
  if (!p.is_object()) throw SchemaError(base, "expected an object");
  ClosureProvenance prov;
  if (!p.contains("axioms") || !p["axioms"].is_array()) throw SchemaError(base + "/axioms", "expected an array");
  for (std::size_t i = 0; i < p["axioms"].size(); ++i) {
    const auto& a = p["axioms"][i];
    if (!a.is_string() || a.get<std::string>().empty()) {
      throw SchemaError(base + "/axioms/" + std::to_string(i), "expected a non-empty word");
    }
    prov.axioms.push_back(Word::from_utf8(a.get<std::string>()));
  }
  if (!p.contains("rules")) throw SchemaError(base + "/rules", "missing key");
  prov.rules = rules_from_json(p["rules"], base + "/rules");
  if (p.contains("origins")) {
    const auto& o = p["origins"];
    if (!o.is_array() || o.size() != out.nfa.num_states()) {
      throw SchemaError(base + "/origins", "expected one origin per state");
    }
    for (std::size_t i = 0; i < o.size(); ++i)
      prov.origins.push_back(origin_from_json(o[i], base + "/origins/" + std::to_string(i)));
  }
  out.provenance = std::move(prov);
  return out;
}

// ---- derivation chains ------------------------------------------------------

namespace {

OccurrenceRef occurrence_at(const Word& host, const Word& x, std::size_t pos0) {
  std::size_t ordinal = 0;
  for (std::size_t p = 0; p <= pos0; ++p)
    if (host.has_at(p, x)) ++ordinal;
  return OccurrenceRef{x, pos0 + 1, ordinal};
}

void malformed(const std::string& why) { throw Error(ErrorCode::kRuleAbsent, "malformed chain: " + why); }

}  // namespace

std::vector<CrossTrace> chain_steps(const DerivationChain& chain) {
  if (chain.segments.empty()) malformed("no segments");
  std::vector<CrossTrace> steps;
  Word z = chain.segments.front().axiom;
  for (std::size_t k = 1; k < chain.segments.size(); ++k) {
    const auto& prev = chain.segments[k - 1];
    const auto& seg = chain.segments[k];
    if (!prev.cut_out || !seg.cut_in) malformed("missing cut at junction " + std::to_string(k));
    if (prev.cut_out->pattern != seg.cut_in->pattern) malformed("junction rules differ");
    CrossTrace t{z, seg.axiom, seg.cut_in->pattern, *prev.cut_out, *seg.cut_in, Word()};
    t.output = replay(t);
    z = t.output;
    steps.push_back(std::move(t));
  }
  if (chain.segments.back().cut_out) malformed("last segment has an outgoing cut");
  return steps;
}

Word replay(const DerivationChain& chain) {
  const auto steps = chain_steps(chain);
  return steps.empty() ? chain.segments.front().axiom : steps.back().output;
}

std::string describe(const DerivationChain& chain) {
  std::ostringstream os;
  for (std::size_t k = 0; k < chain.segments.size(); ++k) {
    const auto& s = chain.segments[k];
    os << "segment " << (k + 1) << ": axiom " << (s.axiom_index + 1) << " " << s.axiom.str();
    if (s.cut_in) os << " from " << s.cut_in->pattern.str() << "@" << s.cut_in->position;
    if (s.cut_out) os << " then " << s.cut_out->pattern.str() << "@" << s.cut_out->position;
    os << "\n";
  }
  return os.str();
}

namespace {

// 0-1 breadth-first search over (read position, axiom, position in axiom):
// copying a symbol costs nothing, attaching the next axiom costs one, so the
// chain found uses as few segments as possible.
std::optional<DerivationChain> find_chain(const std::vector<Word>& axioms, const WordSet& rules, const Word& w) {
  std::vector<std::size_t> offset;
  std::size_t width = 0;
  for (const auto& a : axioms) {
    offset.push_back(width);
    width += a.size() + 1;
  }
  const std::size_t total = (w.size() + 1) * width;
  struct Parent {
    std::size_t from = 0;
    const Word* rule = nullptr;  // null for a copied symbol
  };
  std::vector<int> dist(total, -1);
  std::vector<std::optional<Parent>> parent(total);
  auto id = [&](std::size_t t, std::size_t j, std::size_t q) { return t * width + offset[j] + q; };
  auto decode = [&](std::size_t node, std::size_t& t, std::size_t& j, std::size_t& q) {
    t = node / width;
    const auto rest = node % width;
    j = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), rest) - offset.begin()) - 1;
    q = rest - offset[j];
  };

  std::deque<std::size_t> queue;
  for (std::size_t j = 0; j < axioms.size(); ++j) {
    dist[id(0, j, 0)] = 0;
    queue.push_back(id(0, j, 0));
  }
  std::optional<std::size_t> goal;
  std::vector<bool> done(total, false);
  while (!queue.empty()) {
    const auto node = queue.front();
    queue.pop_front();
    if (done[node]) continue;
    done[node] = true;
    std::size_t t, j, q;
    decode(node, t, j, q);
    const auto& a = axioms[j];
    if (t == w.size() && q == a.size()) {
      goal = node;
      break;
    }
    if (t < w.size() && q < a.size() && a[q] == w[t]) {
      const auto n = id(t + 1, j, q + 1);
      if (dist[n] < 0 || dist[n] > dist[node]) {
        dist[n] = dist[node];
        parent[n] = Parent{node, nullptr};
        queue.push_front(n);
      }
    }
    for (const auto& x : rules) {
      if (x.size() > t || !w.has_at(t - x.size(), x)) continue;
      for (std::size_t j2 = 0; j2 < axioms.size(); ++j2) {
        const auto& b = axioms[j2];
        for (std::size_t q2 = x.size(); q2 <= b.size(); ++q2) {
          if (!b.has_at(q2 - x.size(), x)) continue;
          const auto n = id(t, j2, q2);
          if (dist[n] < 0 || dist[n] > dist[node] + 1) {
            dist[n] = dist[node] + 1;
            parent[n] = Parent{node, &x};
            queue.push_back(n);
          }
        }
      }
    }
  }
  if (!goal) return std::nullopt;

  // Walk back, recording junctions.
  struct Junction {
    std::size_t t, j_from, q_from, j_to, q_to;
    const Word* rule;
  };
  std::vector<Junction> junctions;
  std::size_t node = *goal;
  std::size_t first_axiom = 0;
  for (;;) {
    std::size_t t, j, q;
    decode(node, t, j, q);
    if (!parent[node]) {
      first_axiom = j;
      break;
    }
    const auto p = *parent[node];
    if (p.rule) {
      std::size_t t0, j0, q0;
      decode(p.from, t0, j0, q0);
      junctions.push_back(Junction{t, j0, q0, j, q, p.rule});
    }
    node = p.from;
  }
  std::reverse(junctions.begin(), junctions.end());

  DerivationChain chain;
  chain.segments.push_back(ChainSegment{first_axiom, axioms[first_axiom], std::nullopt, std::nullopt});
  for (const auto& jn : junctions) {
    const Word& x = *jn.rule;
    // Intermediate word at this junction: what has been read, then the rest
    // of the current axiom.
    const Word z = w.prefix(jn.t) + axioms[jn.j_from].suffix_from(jn.q_from);
    chain.segments.back().cut_out = occurrence_at(z, x, jn.t - x.size());
    chain.segments.push_back(ChainSegment{jn.j_to, axioms[jn.j_to],
                                          occurrence_at(axioms[jn.j_to], x, jn.q_to - x.size()), std::nullopt});
  }
  return chain;
}

}  // namespace

Membership member_with_trace(const Closure& c, const Word& w) {
  if (!c.provenance) throw Error(ErrorCode::kNotAClosure, "automaton carries no closure provenance");
  Membership out;
  out.accepted = c.nfa.accepts(w);
  if (!out.accepted || c.provenance->axioms.empty()) return out;
  const auto& axioms = c.provenance->axioms;
  const auto rules = c.provenance->rules.resolve(symbols_of(WordSet(axioms.begin(), axioms.end())));
  out.chain = find_chain(axioms, rules, w);
  return out;
}

// ---- profiles ---------------------------------------------------------------

std::string BlockProfile::str() const {
  std::string out = "<" + symbol_utf8(first) + ",{";
  bool sep = false;
  for (const auto& b : blocks) {
    if (sep) out += ",";
    out += b.str();
    sep = true;
  }
  return out + "}," + symbol_utf8(last) + ">";
}

BlockProfile block_profile(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "the empty word has no block profile");
  return BlockProfile{w.front(), two_blocks(w), w.back()};
}

namespace {

void inconsistent(const BlockProfile& p, const std::string& why) {
  throw Error(ErrorCode::kInconsistentProfile, p.str() + ": " + why);
}

}  // namespace

Dfa profile_automaton(const BlockProfile& p, const SymbolSet& alphabet) {
  if (p.blocks.empty()) inconsistent(p, "no blocks");
  for (const auto& b : p.blocks)
    for (Symbol s : b.symbols())
      if (!alphabet.count(s)) inconsistent(p, "symbol outside the alphabet");
  if (!alphabet.count(p.first) || !alphabet.count(p.last)) inconsistent(p, "symbol outside the alphabet");

  if (p.blocks.begin()->size() == 1) {
    const Word& unit = *p.blocks.begin();
    if (p.blocks.size() != 1 || unit[0] != p.first || unit[0] != p.last) inconsistent(p, "malformed unit profile");
    Nfa n(alphabet);
    const State s = n.add_state(false);
    const State f = n.add_state(true);
    n.add_start(s);
    n.add_transition(s, unit[0], f);
    return minimize_canonical(n);
  }
  bool starts = false;
  bool ends = false;
  for (const auto& b : p.blocks) {
    if (b.size() != 2) inconsistent(p, "blocks must all have length 2");
    starts = starts || b[0] == p.first;
    ends = ends || b[1] == p.last;
  }
  if (!starts || !ends) inconsistent(p, "first/last symbol does not match any block");

  // States: (last symbol read, blocks used so far).
  const std::vector<Word> blocks(p.blocks.begin(), p.blocks.end());
  std::map<std::pair<Symbol, std::vector<bool>>, State> ids;
  std::deque<std::pair<Symbol, std::vector<bool>>> queue;
  Nfa n(alphabet);
  const State init = n.add_state(false);
  n.add_start(init);
  auto intern = [&](Symbol last, const std::vector<bool>& used) {
    auto [it, fresh] = ids.emplace(std::make_pair(last, used), 0);
    if (fresh) {
      const bool all = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
      it->second = n.add_state(all && last == p.last);
      queue.emplace_back(last, used);
    }
    return it->second;
  };
  n.add_transition(init, p.first, intern(p.first, std::vector<bool>(blocks.size(), false)));
  while (!queue.empty()) {
    auto [last, used] = queue.front();
    queue.pop_front();
    const State from = ids.at({last, used});
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i][0] != last) continue;
      auto next = used;
      next[i] = true;
      n.add_transition(from, blocks[i][1], intern(blocks[i][1], next));
    }
  }
  return minimize_canonical(n);
}

std::uint64_t count_profiles(std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::kInvalidArgument, "alphabet size must be between 1 and 7");
  const std::uint64_t n2 = n * n;
  return n2 * ((std::uint64_t{1} << n2) - 1) + n + 1;
}

std::vector<BlockProfile> enumerate_profile_space(const SymbolSet& alphabet) {
  if (alphabet.empty() || alphabet.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument, "profile space enumeration supports 1 to 3 symbols");
  }
  std::vector<Word> all_blocks;
  for (Symbol a : alphabet)
    for (Symbol b : alphabet) all_blocks.push_back(Word{a, b});
  std::vector<BlockProfile> out;
  const std::uint64_t subsets = std::uint64_t{1} << all_blocks.size();
  for (Symbol s : alphabet) {
    for (Symbol e : alphabet) {
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        BlockProfile p{s, {}, e};
        for (std::size_t i = 0; i < all_blocks.size(); ++i)
          if (mask >> i & 1U) p.blocks.insert(all_blocks[i]);
        out.push_back(std::move(p));
      }
    }
  }
  for (Symbol a : alphabet) out.push_back(BlockProfile{a, {Word{a}}, a});
  return out;
}

std::set<BlockProfile> realized_profiles(const SymbolSet& alphabet, std::size_t max_len) {
  std::set<BlockProfile> out;
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Symbol a : alphabet) {
        Word v = w;
        v += a;
        out.insert(block_profile(v));
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// ---- base sets ----------------------------------------------------------------

BaseSets extract_base(const Nfa& a) {
  require_epsilon_free(a);
  BaseSets out;
  for (const auto& b : lang_two_blocks(a))
    if (b.size() == 2) out.blocks.insert(b);
  out.starts = lang_first_symbols(a);
  out.ends = lang_last_symbols(a);
  out.units = lang_units(a);
  return out;
}

Decomposition verify_decomposition(const Nfa& a) {
  Decomposition out;
  out.base = extract_base(a);
  SymbolSet sigma = a.alphabet();
  for (const auto& b : out.base.blocks) sigma.insert(b.symbols().begin(), b.symbols().end());

  Nfa generated(sigma);
  if (!out.base.blocks.empty()) generated = jump_closure_finite(out.base.blocks, RuleSet::all_symbols()).nfa;

  // S Σ* E, length at least 2.
  Nfa frame(sigma);
  const State s0 = frame.add_state(false);
  const State mid = frame.add_state(false);
  const State fin = frame.add_state(true);
  frame.add_start(s0);
  for (Symbol s : out.base.starts) frame.add_transition(s0, s, mid);
  for (Symbol x : sigma) frame.add_transition(mid, x, mid);
  for (Symbol e : out.base.ends) frame.add_transition(mid, e, fin);

  const Nfa candidate = union_of(intersect(generated, frame), Nfa::from_words(out.base.units));
  out.witness = difference_witness(a, candidate);
  out.holds = !out.witness.has_value();
  return out;
}

}  // namespace crosskit
