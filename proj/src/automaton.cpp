#include "crosskit/automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "crosskit/error.hpp"

namespace crosskit {

namespace {

void check_alphabet_size(std::size_t n) {
  if (n > kMaxAlphabet) {
    throw Error(ErrorCode::kAlphabetTooLarge,
                "alphabet has " + std::to_string(n) + " symbols, limit is " + std::to_string(kMaxAlphabet));
  }
}

void check_state(State s, std::size_t n) {
  if (s >= n) throw Error(ErrorCode::kInvalidArgument, "no state " + std::to_string(s));
}

SymbolSet merged(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

// ---- Nfa ------------------------------------------------------------------

Nfa::Nfa(SymbolSet alphabet) : alphabet_(std::move(alphabet)) { check_alphabet_size(alphabet_.size()); }

Nfa::Nfa(const Dfa& dfa) : alphabet_(dfa.alphabet()) {
  for (State s = 0; s < dfa.num_states(); ++s) add_state(dfa.is_accepting(s));
  if (dfa.start()) add_start(*dfa.start());
  for (State s = 0; s < dfa.num_states(); ++s)
    for (const auto& [a, t] : dfa.edges(s)) edges_[s].emplace(a, t);
}

State Nfa::add_state(bool accepting) {
  edges_.emplace_back();
  accepting_.push_back(accepting);
  return static_cast<State>(edges_.size() - 1);
}

void Nfa::add_start(State s) {
  check_state(s, num_states());
  starts_.insert(s);
}

void Nfa::set_accepting(State s, bool accepting) {
  check_state(s, num_states());
  accepting_[s] = accepting;
}

void Nfa::add_transition(State from, Symbol on, State to) {
  check_state(from, num_states());
  check_state(to, num_states());
  if (!alphabet_.count(on)) {
    check_alphabet_size(alphabet_.size() + 1);
    alphabet_.insert(on);
  }
  edges_[from].emplace(on, to);
}

void Nfa::extend_alphabet(const SymbolSet& symbols) {
  auto all = merged(alphabet_, symbols);
  check_alphabet_size(all.size());
  alphabet_ = std::move(all);
}

std::set<State> Nfa::accepting_states() const {
  std::set<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (accepting_[s]) out.insert(s);
  return out;
}

std::size_t Nfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::set<State> Nfa::step(const std::set<State>& from, Symbol on) const {
  std::set<State> out;
  for (State s : from) {
    const auto& e = edges_[s];
    for (auto it = e.lower_bound({on, 0}); it != e.end() && it->first == on; ++it) out.insert(it->second);
  }
  return out;
}

std::set<State> Nfa::read(const std::set<State>& from, const Word& w) const {
  std::set<State> cur = from;
  for (std::size_t i = 0; i < w.size() && !cur.empty(); ++i) cur = step(cur, w[i]);
  return cur;
}

bool Nfa::accepts(const Word& w) const {
  for (State s : read(starts_, w))
    if (accepting_[s]) return true;
  return false;
}

bool Nfa::is_deterministic() const {
  if (starts_.size() > 1) return false;
  for (const auto& e : edges_) {
    Symbol prev = 0;
    bool first = true;
    for (const auto& [a, t] : e) {
      if (!first && a == prev) return false;
      prev = a;
      first = false;
    }
  }
  return true;
}

Nfa Nfa::from_words(const WordSet& words) {
  Nfa out(symbols_of(words));
  State root = out.add_state(false);
  out.add_start(root);
  std::vector<std::map<Symbol, State>> child(1);
  for (const auto& w : words) {
    State cur = root;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = child[cur].find(w[i]);
      if (it == child[cur].end()) {
        State nxt = out.add_state(false);
        child.emplace_back();
        child[cur].emplace(w[i], nxt);
        out.add_transition(cur, w[i], nxt);
        cur = nxt;
      } else {
        cur = it->second;
      }
    }
    out.set_accepting(cur, true);
  }
  return out;
}

// ---- Dfa ------------------------------------------------------------------

Dfa::Dfa(SymbolSet alphabet) : alphabet_(std::move(alphabet)) { check_alphabet_size(alphabet_.size()); }

State Dfa::add_state(bool accepting) {
  delta_.emplace_back();
  accepting_.push_back(accepting);
  return static_cast<State>(delta_.size() - 1);
}

void Dfa::set_accepting(State s, bool accepting) {
  check_state(s, num_states());
  accepting_[s] = accepting;
}

void Dfa::set_transition(State from, Symbol on, State to) {
  check_state(from, num_states());
  check_state(to, num_states());
  if (!alphabet_.count(on)) {
    check_alphabet_size(alphabet_.size() + 1);
    alphabet_.insert(on);
  }
  delta_[from][on] = to;
}

void Dfa::extend_alphabet(const SymbolSet& symbols) {
  auto all = merged(alphabet_, symbols);
  check_alphabet_size(all.size());
  alphabet_ = std::move(all);
}

std::optional<State> Dfa::next(State s, Symbol on) const {
  const auto& e = delta_.at(s);
  auto it = e.find(on);
  if (it == e.end()) return std::nullopt;
  return it->second;
}

bool Dfa::accepts(const Word& w) const {
  if (!start_) return false;
  State cur = *start_;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto n = next(cur, w[i]);
    if (!n) return false;
    cur = *n;
  }
  return accepting_[cur];
}

// ---- constructions ----------------------------------------------------------

Dfa determinize(const Nfa& nfa) {
  Dfa out(nfa.alphabet());
  if (nfa.starts().empty()) return out;
  std::map<std::set<State>, State> ids;
  std::deque<std::set<State>> queue;
  auto intern = [&](const std::set<State>& subset) {
    auto [it, fresh] = ids.emplace(subset, 0);
    if (fresh) {
      bool acc = std::any_of(subset.begin(), subset.end(), [&](State s) { return nfa.is_accepting(s); });
      it->second = out.add_state(acc);
      queue.push_back(subset);
    }
    return it->second;
  };
  out.set_start(intern(nfa.starts()));
  while (!queue.empty()) {
    auto subset = std::move(queue.front());
    queue.pop_front();
    const State from = ids.at(subset);
    // Group successors per symbol in one pass over the edges.
    std::map<Symbol, std::set<State>> succ;
    for (State s : subset)
      for (const auto& [a, t] : nfa.edges(s)) succ[a].insert(t);
    for (const auto& [a, targets] : succ) out.set_transition(from, a, intern(targets));
  }
  return out;
}

std::vector<bool> accessible_states(const Nfa& nfa) {
  std::vector<bool> seen(nfa.num_states(), false);
  std::vector<State> stack(nfa.starts().begin(), nfa.starts().end());
  for (State s : stack) seen[s] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (const auto& [a, t] : nfa.edges(s)) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible_states(const Nfa& nfa) {
  const auto n = nfa.num_states();
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (const auto& [a, t] : nfa.edges(s)) rev[t].push_back(s);
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    if (nfa.is_accepting(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : rev[s]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

Nfa trim(const Nfa& nfa) {
  auto acc = accessible_states(nfa);
  auto co = coaccessible_states(nfa);
  Nfa out(nfa.alphabet());
  std::vector<State> remap(nfa.num_states(), State(-1));
  for (State s = 0; s < nfa.num_states(); ++s)
    if (acc[s] && co[s]) remap[s] = out.add_state(nfa.is_accepting(s));
  for (State s : nfa.starts())
    if (remap[s] != State(-1)) out.add_start(remap[s]);
  for (State s = 0; s < nfa.num_states(); ++s) {
    if (remap[s] == State(-1)) continue;
    for (const auto& [a, t] : nfa.edges(s))
      if (remap[t] != State(-1)) out.add_transition(remap[s], a, remap[t]);
  }
  return out;
}

Dfa trim(const Dfa& dfa) {
  Nfa as_nfa(dfa);
  auto acc = accessible_states(as_nfa);
  auto co = coaccessible_states(as_nfa);
  Dfa out(dfa.alphabet());
  std::vector<State> remap(dfa.num_states(), State(-1));
  for (State s = 0; s < dfa.num_states(); ++s)
    if (acc[s] && co[s]) remap[s] = out.add_state(dfa.is_accepting(s));
  if (dfa.start() && remap[*dfa.start()] != State(-1)) out.set_start(remap[*dfa.start()]);
  for (State s = 0; s < dfa.num_states(); ++s) {
    if (remap[s] == State(-1)) continue;
    for (const auto& [a, t] : dfa.edges(s))
      if (remap[t] != State(-1)) out.set_transition(remap[s], a, remap[t]);
  }
  return out;
}

Dfa minimize_canonical(const Nfa& nfa) {
  const Dfa d = trim(determinize(nfa));
  Dfa out(nfa.alphabet());
  if (!d.start()) return out;

  const std::vector<Symbol> sigma(d.alphabet().begin(), d.alphabet().end());
  const auto n = d.num_states();
  const State sink = static_cast<State>(n);
  auto target = [&](State s, Symbol a) -> State {
    if (s == sink) return sink;
    auto t = d.next(s, a);
    return t ? *t : sink;
  };

  // Moore refinement with the implicit sink as an extra state.
  std::vector<std::uint32_t> cls(n + 1);
  for (State s = 0; s < n; ++s) cls[s] = d.is_accepting(s) ? 1 : 0;
  cls[sink] = 0;
  std::size_t num_classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
    std::vector<std::uint32_t> next(n + 1);
    for (State s = 0; s <= n; ++s) {
      std::vector<std::uint32_t> sig;
      sig.reserve(sigma.size() + 1);
      sig.push_back(cls[s]);
      for (Symbol a : sigma) sig.push_back(cls[target(s, a)]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size()));
      next[s] = it->second;
    }
    const bool stable = sig_ids.size() == num_classes;
    num_classes = sig_ids.size();
    cls = std::move(next);
    if (stable) break;
  }

  // Breadth-first renumbering from the start over the sorted alphabet.
  const auto sink_class = cls[sink];
  std::map<std::uint32_t, State> rep;  // class -> some member
  for (State s = 0; s < n; ++s) rep.emplace(cls[s], s);
  std::map<std::uint32_t, State> number;
  std::deque<std::uint32_t> queue;
  auto visit = [&](std::uint32_t c) {
    auto [it, fresh] = number.emplace(c, 0);
    if (fresh) {
      it->second = out.add_state(d.is_accepting(rep.at(c)));
      queue.push_back(c);
    }
    return it->second;
  };
  out.set_start(visit(cls[*d.start()]));
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    const State from = number.at(c);
    const State r = rep.at(c);
    for (Symbol a : sigma) {
      const auto tc = cls[target(r, a)];
      if (tc == sink_class) continue;
      out.set_transition(from, a, visit(tc));
    }
  }
  return out;
}

Dfa complement(const Nfa& nfa, const SymbolSet& alphabet) {
  const auto sigma = merged(nfa.alphabet(), alphabet);
  check_alphabet_size(sigma.size());
  Dfa d = determinize(nfa);
  d.extend_alphabet(sigma);
  // Complete with a sink, then flip acceptance.
  Dfa full(sigma);
  for (State s = 0; s < d.num_states(); ++s) full.add_state(!d.is_accepting(s));
  const State sink = full.add_state(true);
  full.set_start(d.start() ? *d.start() : sink);
  for (State s = 0; s < d.num_states(); ++s)
    for (Symbol a : sigma) full.set_transition(s, a, d.next(s, a).value_or(sink));
  for (Symbol a : sigma) full.set_transition(sink, a, sink);
  return trim(full);
}

Dfa complement(const Nfa& nfa) { return complement(nfa, nfa.alphabet()); }

Dfa intersect(const Nfa& a, const Nfa& b) {
  const Dfa da = determinize(a);
  const Dfa db = determinize(b);
  Dfa out(merged(a.alphabet(), b.alphabet()));
  if (!da.start() || !db.start()) return out;
  std::map<std::pair<State, State>, State> ids;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](std::pair<State, State> p) {
    auto [it, fresh] = ids.emplace(p, 0);
    if (fresh) {
      it->second = out.add_state(da.is_accepting(p.first) && db.is_accepting(p.second));
      queue.push_back(p);
    }
    return it->second;
  };
  out.set_start(intern({*da.start(), *db.start()}));
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    const State from = ids.at(p);
    for (const auto& [sym, ta] : da.edges(p.first)) {
      auto tb = db.next(p.second, sym);
      if (tb) out.set_transition(from, sym, intern({ta, *tb}));
    }
  }
  return trim(out);
}

namespace {

// Copies `src` into `dst`, returning the offset of its first state.
State append(Nfa& dst, const Nfa& src) {
  const auto offset = static_cast<State>(dst.num_states());
  for (State s = 0; s < src.num_states(); ++s) dst.add_state(src.is_accepting(s));
  for (State s = 0; s < src.num_states(); ++s)
    for (const auto& [a, t] : src.edges(s)) dst.add_transition(offset + s, a, offset + t);
  return offset;
}

}  // namespace

Nfa union_of(const Nfa& a, const Nfa& b) {
  Nfa out(merged(a.alphabet(), b.alphabet()));
  const State oa = append(out, a);
  const State ob = append(out, b);
  for (State s : a.starts()) out.add_start(oa + s);
  for (State s : b.starts()) out.add_start(ob + s);
  return out;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  Nfa out(merged(a.alphabet(), b.alphabet()));
  const State oa = append(out, a);
  const State ob = append(out, b);
  bool b_has_epsilon = false;
  for (State s : b.starts()) b_has_epsilon = b_has_epsilon || b.is_accepting(s);
  for (State s : a.starts()) out.add_start(oa + s);
  // Accepting states of `a` take over the outgoing edges of b's starts.
  for (State s = 0; s < a.num_states(); ++s) {
    if (!a.is_accepting(s)) continue;
    out.set_accepting(oa + s, b_has_epsilon);
    for (State bs : b.starts())
      for (const auto& [sym, t] : b.edges(bs)) out.add_transition(oa + s, sym, ob + t);
  }
  return out;
}

bool is_empty(const Nfa& nfa) { return !shortest_word(nfa).has_value(); }

bool is_finite(const Nfa& nfa) {
  const Nfa t = trim(nfa);
  // Cycle detection by colouring DFS.
  std::vector<int> colour(t.num_states(), 0);
  std::function<bool(State)> cyclic = [&](State s) {
    colour[s] = 1;
    for (const auto& [a, n] : t.edges(s)) {
      if (colour[n] == 1) return true;
      if (colour[n] == 0 && cyclic(n)) return true;
    }
    colour[s] = 2;
    return false;
  };
  for (State s = 0; s < t.num_states(); ++s)
    if (colour[s] == 0 && cyclic(s)) return false;
  return true;
}

std::optional<Word> shortest_word(const Nfa& nfa) {
  const Dfa d = determinize(nfa);
  if (!d.start()) return std::nullopt;
  // BFS over the sorted alphabet yields the canonical-order minimum.
  std::vector<std::optional<std::pair<State, Symbol>>> parent(d.num_states());
  std::vector<bool> seen(d.num_states(), false);
  std::deque<State> queue{*d.start()};
  seen[*d.start()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (d.is_accepting(s)) {
      std::u32string rev;
      for (State cur = s; parent[cur]; cur = parent[cur]->first) rev += parent[cur]->second;
      std::reverse(rev.begin(), rev.end());
      return Word(rev);
    }
    for (const auto& [a, t] : d.edges(s)) {
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = std::make_pair(s, a);
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

Inclusion includes(const Nfa& big, const Nfa& small) {
  const Dfa ds = determinize(small);
  const Dfa db = determinize(big);
  Inclusion out;
  if (!ds.start()) return out;
  // Product with "dead" standing for the missing sink of `big`.
  constexpr State kDead = State(-1);
  using Pair = std::pair<State, State>;
  std::map<Pair, std::optional<std::pair<Pair, Symbol>>> parent;
  std::deque<Pair> queue;
  const Pair init{*ds.start(), db.start() ? *db.start() : kDead};
  parent.emplace(init, std::nullopt);
  queue.push_back(init);
  while (!queue.empty()) {
    const Pair p = queue.front();
    queue.pop_front();
    const bool big_accepts = p.second != kDead && db.is_accepting(p.second);
    if (ds.is_accepting(p.first) && !big_accepts) {
      std::u32string rev;
      for (Pair cur = p; parent.at(cur); cur = parent.at(cur)->first) rev += parent.at(cur)->second;
      std::reverse(rev.begin(), rev.end());
      out.holds = false;
      out.witness = Word(rev);
      return out;
    }
    for (const auto& [a, ts] : ds.edges(p.first)) {
      State tb = kDead;
      if (p.second != kDead) tb = db.next(p.second, a).value_or(kDead);
      const Pair q{ts, tb};
      if (parent.emplace(q, std::make_pair(p, a)).second) queue.push_back(q);
    }
  }
  return out;
}

bool equivalent(const Nfa& a, const Nfa& b) { return !difference_witness(a, b).has_value(); }

std::optional<Word> difference_witness(const Nfa& a, const Nfa& b) {
  auto ab = includes(b, a).witness;
  auto ba = includes(a, b).witness;
  if (ab && ba) return std::min(*ab, *ba);
  return ab ? ab : ba;
}

WordSet enumerate_upto(const Nfa& nfa, std::size_t n) {
  const Dfa d = trim(determinize(nfa));
  WordSet out;
  if (!d.start()) return out;
  Word cur;
  std::function<void(State)> walk = [&](State s) {
    if (d.is_accepting(s)) out.insert(cur);
    if (cur.size() == n) return;
    for (const auto& [a, t] : d.edges(s)) {
      cur += a;
      walk(t);
      cur = cur.prefix(cur.size() - 1);
    }
  };
  walk(*d.start());
  return out;
}

WordSet lang_two_blocks(const Nfa& nfa) {
  const Nfa t = trim(nfa);
  WordSet out = lang_units(t);
  for (State s : t.starts())
    if (t.is_accepting(s)) out.insert(Word());
  for (State p = 0; p < t.num_states(); ++p)
    for (const auto& [a, q] : t.edges(p))
      for (const auto& [b, r] : t.edges(q)) out.insert(Word{a, b});
  return out;
}

SymbolSet lang_first_symbols(const Nfa& nfa) {
  const Nfa t = trim(nfa);
  SymbolSet out;
  for (State s : t.starts())
    for (const auto& [a, q] : t.edges(s)) out.insert(a);
  return out;
}

SymbolSet lang_last_symbols(const Nfa& nfa) {
  const Nfa t = trim(nfa);
  SymbolSet out;
  for (State p = 0; p < t.num_states(); ++p)
    for (const auto& [a, q] : t.edges(p))
      if (t.is_accepting(q)) out.insert(a);
  return out;
}

WordSet lang_units(const Nfa& nfa) {
  const Nfa t = trim(nfa);
  WordSet out;
  for (State s : t.starts())
    for (const auto& [a, q] : t.edges(s))
      if (t.is_accepting(q)) out.insert(Word{a});
  return out;
}

Nfa prefix_lang(const Nfa& nfa, const Word& x) {
  if (x.empty()) throw Error(ErrorCode::kEmptyPattern, "prefix pattern must be non-empty");
  Nfa t = trim(nfa);
  // Every trim state is co-accessible, so a surviving x-path suffices.
  std::vector<bool> acc(t.num_states());
  for (State s = 0; s < t.num_states(); ++s) acc[s] = !t.read({s}, x).empty();
  for (State s = 0; s < t.num_states(); ++s) t.set_accepting(s, acc[s]);
  return trim(t);
}

Nfa suffix_lang(const Nfa& nfa, const Word& x) {
  if (x.empty()) throw Error(ErrorCode::kEmptyPattern, "suffix pattern must be non-empty");
  const Nfa t = trim(nfa);
  Nfa out(t.alphabet());
  for (State s = 0; s < t.num_states(); ++s) out.add_state(t.is_accepting(s));
  for (State s = 0; s < t.num_states(); ++s)
    for (const auto& [a, q] : t.edges(s)) out.add_transition(s, a, q);
  for (State s = 0; s < t.num_states(); ++s)
    for (State q : t.read({s}, x)) out.add_start(q);
  return trim(out);
}

Nfa sigma_star(const SymbolSet& alphabet) {
  Nfa out(alphabet);
  State s = out.add_state(true);
  out.add_start(s);
  for (Symbol a : alphabet) out.add_transition(s, a, s);
  return out;
}

Nfa sigma_plus(const SymbolSet& alphabet) {
  Nfa out(alphabet);
  State s = out.add_state(false);
  State f = out.add_state(true);
  out.add_start(s);
  for (Symbol a : alphabet) {
    out.add_transition(s, a, f);
    out.add_transition(f, a, f);
  }
  return out;
}

Nfa words_of_length(const SymbolSet& alphabet, std::size_t k) {
  Nfa out(alphabet);
  State prev = out.add_state(k == 0);
  out.add_start(prev);
  for (std::size_t i = 1; i <= k; ++i) {
    State cur = out.add_state(i == k);
    for (Symbol a : alphabet) out.add_transition(prev, a, cur);
    prev = cur;
  }
  return out;
}

}  // namespace crosskit
