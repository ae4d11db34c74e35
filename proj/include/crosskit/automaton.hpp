#pragma once

// Finite automata over small explicit alphabets. Trim (partial) automata are
// the normal form; a sink state only ever appears inside complement().

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "crosskit/word.hpp"

namespace crosskit {

using State = std::uint32_t;

inline constexpr std::size_t kMaxAlphabet = 64;

class Dfa;

/// Epsilon-free nondeterministic automaton.
class Nfa {
 public:
  using Edge = std::pair<Symbol, State>;

  Nfa() = default;
  explicit Nfa(SymbolSet alphabet);
  Nfa(const Dfa& dfa);  // NOLINT(google-explicit-constructor): every DFA is an NFA

  State add_state(bool accepting = false);
  void add_start(State s);
  void set_accepting(State s, bool accepting);
  /// Symbols outside the alphabet extend it (up to kMaxAlphabet).
  void add_transition(State from, Symbol on, State to);
  void extend_alphabet(const SymbolSet& symbols);

  std::size_t num_states() const noexcept { return edges_.size(); }
  const SymbolSet& alphabet() const noexcept { return alphabet_; }
  const std::set<State>& starts() const noexcept { return starts_; }
  bool is_accepting(State s) const { return accepting_.at(s); }
  std::set<State> accepting_states() const;
  const std::set<Edge>& edges(State s) const { return edges_.at(s); }
  std::size_t num_transitions() const;

  std::set<State> step(const std::set<State>& from, Symbol on) const;
  /// States reached from `from` by reading `w`.
  std::set<State> read(const std::set<State>& from, const Word& w) const;
  bool accepts(const Word& w) const;
  bool is_deterministic() const;

  /// Automaton for a finite set of words (a prefix tree).
  static Nfa from_words(const WordSet& words);

 private:
  SymbolSet alphabet_;
  std::set<State> starts_;
  std::vector<bool> accepting_;
  std::vector<std::set<Edge>> edges_;
};

/// Deterministic automaton with a partial transition function.
class Dfa {
 public:
  Dfa() = default;
  explicit Dfa(SymbolSet alphabet);

  State add_state(bool accepting = false);
  void set_start(State s) { start_ = s; }
  void set_accepting(State s, bool accepting);
  void set_transition(State from, Symbol on, State to);
  void extend_alphabet(const SymbolSet& symbols);

  std::size_t num_states() const noexcept { return delta_.size(); }
  const SymbolSet& alphabet() const noexcept { return alphabet_; }
  std::optional<State> start() const noexcept { return start_; }
  bool is_accepting(State s) const { return accepting_.at(s); }
  const std::map<Symbol, State>& edges(State s) const { return delta_.at(s); }
  std::optional<State> next(State s, Symbol on) const;
  bool accepts(const Word& w) const;

 private:
  SymbolSet alphabet_;
  std::optional<State> start_;
  std::vector<bool> accepting_;
  std::vector<std::map<Symbol, State>> delta_;
};

/// Subset construction; only non-empty subsets reachable from the starts.
Dfa determinize(const Nfa& nfa);

/// States both accessible and co-accessible. The alphabet is kept.
Nfa trim(const Nfa& nfa);
Dfa trim(const Dfa& dfa);

/// Accessible / co-accessible state sets.
std::vector<bool> accessible_states(const Nfa& nfa);
std::vector<bool> coaccessible_states(const Nfa& nfa);

/// Minimal trim DFA, states renumbered breadth-first from the start over the
/// sorted alphabet. Equal languages (over equal alphabets) give identical
/// automata.
Dfa minimize_canonical(const Nfa& nfa);

/// Complement over `alphabet` ∪ the automaton's own alphabet, returned trim.
Dfa complement(const Nfa& nfa, const SymbolSet& alphabet);
Dfa complement(const Nfa& nfa);

Dfa intersect(const Nfa& a, const Nfa& b);
Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);

bool is_empty(const Nfa& nfa);
/// True iff the language is finite.
bool is_finite(const Nfa& nfa);

/// Shortest accepted word in canonical order.
std::optional<Word> shortest_word(const Nfa& nfa);

struct Inclusion {
  bool holds = true;
  /// Shortest word of the smaller language missing from the larger one.
  std::optional<Word> witness;
};

/// Decides L(small) ⊆ L(big).
Inclusion includes(const Nfa& big, const Nfa& small);
bool equivalent(const Nfa& a, const Nfa& b);
/// Shortest word in the symmetric difference, if any.
std::optional<Word> difference_witness(const Nfa& a, const Nfa& b);

/// Accepted words of length <= n.
WordSet enumerate_upto(const Nfa& nfa, std::size_t n);

/// Length-2 factors, plus member words of length 1, plus ε if accepted.
WordSet lang_two_blocks(const Nfa& nfa);
SymbolSet lang_first_symbols(const Nfa& nfa);
SymbolSet lang_last_symbols(const Nfa& nfa);
/// Members of length 1.
WordSet lang_units(const Nfa& nfa);

/// {u : u x u' ∈ L}. Throws EmptyPattern.
Nfa prefix_lang(const Nfa& nfa, const Word& x);
/// {s : s' x s ∈ L}. Throws EmptyPattern.
Nfa suffix_lang(const Nfa& nfa, const Word& x);

/// Σ* and Σ+ over the given alphabet.
Nfa sigma_star(const SymbolSet& alphabet);
Nfa sigma_plus(const SymbolSet& alphabet);
/// All words of length exactly k over the alphabet.
Nfa words_of_length(const SymbolSet& alphabet, std::size_t k);

}  // namespace crosskit
