#pragma once

// Crossover lifted to finite languages and bounded iteration of the closure.

#include <cstddef>
#include <map>
#include <optional>

#include "crosskit/word.hpp"
#include "crosskit/words.hpp"

namespace crosskit {

/// A finite set of non-empty words in canonical order.
class FiniteLanguage {
 public:
  FiniteLanguage() = default;
  /// Throws EpsilonAxiom if `words` contains the empty word.
  explicit FiniteLanguage(WordSet words);
  FiniteLanguage(std::initializer_list<Word> words) : FiniteLanguage(WordSet(words)) {}

  const WordSet& words() const noexcept { return words_; }
  SymbolSet alphabet() const { return symbols_of(words_); }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  std::size_t max_word_length() const;

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  friend bool operator==(const FiniteLanguage&, const FiniteLanguage&) = default;

 private:
  WordSet words_;
};

/// Truncation of an infinite closure.
struct IterationBudget {
  std::size_t max_rounds = 64;
  std::size_t max_word_len = 8;
  /// Words longer than this never take part in further rounds.
  std::size_t max_intermediate_len = 8;

  /// max_word_len + longest axiom + longest rule.
  static IterationBudget with_default_cap(std::size_t max_word_len, const FiniteLanguage& axioms,
                                          const RuleSet& rules, std::size_t max_rounds = 64);
};

/// Result of a bounded closure.
struct BoundedClosure {
  /// Words of length <= max_word_len.
  FiniteLanguage words;
  /// True iff a round added nothing new under the intermediate cap.
  bool fixpoint = false;
  std::size_t rounds = 0;
  /// Every word below the intermediate cap, including those longer than
  /// max_word_len.
  WordSet intermediate;
  /// First derivation found for every non-axiom word in `intermediate`.
  std::map<Word, CrossTrace> derivation;
  /// Round in which each word first appeared (axioms: 0).
  std::map<Word, std::size_t> first_round;
};

/// Union of gsco_pair over ordered pairs (w1 ∈ l1, w2 ∈ l2).
FiniteLanguage gsco_lang(const FiniteLanguage& l1, const FiniteLanguage& l2, const RuleSet& rules,
                         Mode mode);

/// Iterates L_{i+1} = L_i ∪ GSCO(L_i) with every produced word free to take
/// part in later rounds.
BoundedClosure u_closure_bounded(const FiniteLanguage& axioms, const RuleSet& rules,
                                 const IterationBudget& budget);

/// Iterates L_{i+1} = L_i ∪ GSCO(L_i, L): each round crosses the accumulated
/// words only with the original axioms.
BoundedClosure r_closure_bounded(const FiniteLanguage& axioms, const RuleSet& rules,
                                 const IterationBudget& budget);

/// Replays the recorded derivation of `w` back to the axioms.
/// Returns false if any step fails to reproduce its output or bottoms out in
/// a word that is neither an axiom nor derived.
bool derivation_replays(const BoundedClosure& closure, const FiniteLanguage& axioms, const Word& w);

/// Length-2 blocks, first/last symbols and unit words of a word set.
struct BaseSets {
  WordSet blocks;
  SymbolSet starts;
  SymbolSet ends;
  WordSet units;

  friend bool operator==(const BaseSets&, const BaseSets&) = default;
};

BaseSets base_of_finite(const FiniteLanguage& l);

}  // namespace crosskit
