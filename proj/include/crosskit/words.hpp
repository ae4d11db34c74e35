#pragma once

// Single-pair crossover of words: factor bookkeeping, the rule set type and
// every pairwise variant (rule-specific, symbol-reduced, epsilon-overlap,
// corresponding-occurrence), each able to report how an output was cut.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crosskit/word.hpp"

namespace crosskit {

/// 1-mode keeps only left-prefix + right-suffix; 2-mode keeps both outputs.
enum class Mode { kOne = 1, kTwo = 2 };

Mode parse_mode(int value);

/// One occurrence of `pattern` in some host word.
struct OccurrenceRef {
  Word pattern;
  std::size_t position = 0;  ///< 1-based start index.
  std::size_t ordinal = 0;   ///< 1-based, counted left to right.

  /// 0-based index just past the occurrence.
  std::size_t end() const { return position - 1 + pattern.size(); }

  friend bool operator==(const OccurrenceRef&, const OccurrenceRef&) = default;
  friend auto operator<=>(const OccurrenceRef&, const OccurrenceRef&) = default;
};

/// The overlap set R.
class RuleSet {
 public:
  enum class Kind { kAllSymbols, kSymbols, kStrings };

  /// Every symbol of whatever alphabet the operands use.
  static RuleSet all_symbols();
  static RuleSet symbols(SymbolSet symbols);
  /// Throws EpsilonRule if `strings` contains the empty word.
  static RuleSet strings(WordSet strings);

  Kind kind() const noexcept { return kind_; }
  const SymbolSet& symbol_set() const noexcept { return symbols_; }
  const WordSet& string_set() const noexcept { return strings_; }

  /// Concrete rule words over `alphabet`. AllSymbols expands to the alphabet;
  /// the explicit variants are returned as given.
  WordSet resolve(const SymbolSet& alphabet) const;

  /// Rule words that occur as a factor of some word in `words`.
  WordSet resolve_within(const WordSet& words) const;

  /// Longest explicit rule; 1 for the symbol variants.
  std::size_t max_length() const;

  /// `all`, a symbol string like `ab`, or `{ab,bb}` for string rules.
  std::string describe() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  Kind kind_ = Kind::kAllSymbols;
  SymbolSet symbols_;
  WordSet strings_;
};

/// How one output word was produced.
struct CrossTrace {
  Word left;
  Word right;
  Word rule;
  OccurrenceRef left_cut;
  OccurrenceRef right_cut;
  Word output;

  friend bool operator==(const CrossTrace&, const CrossTrace&) = default;
};

/// Recomputes the output from the recorded inputs and cuts.
/// Throws RuleAbsent if a cut does not match its host word.
Word replay(const CrossTrace& trace);

/// One line: `output = left[..pos_i] x right[pos_j..] via rule x`.
std::string describe(const CrossTrace& trace);

struct CrossOutcome {
  WordSet words;
  /// Sorted by output, then rule, then cut positions.
  std::vector<CrossTrace> traces;
};

SymbolSet alphabet_of(const Word& w);

/// Non-empty contiguous sub-words.
WordSet factors(const Word& w);

/// Length-2 factors; {w} when |w| = 1 and {ε} for the empty word.
WordSet two_blocks(const Word& w);

/// Every (possibly overlapping) occurrence of `x` in `w`, ascending.
/// Throws EmptyPattern if `x` is empty.
std::vector<OccurrenceRef> occurrences(const Word& w, const Word& x);

/// {u : u x u' = w}. Throws EmptyPattern.
WordSet prefixes_at(const Word& w, const Word& x);
/// {s : s' x s = w}. Throws EmptyPattern.
WordSet suffixes_at(const Word& w, const Word& x);

/// Crossover at one chosen occurrence pair. Throws EpsilonRule for an empty
/// rule and RuleAbsent if either reference does not describe an occurrence.
CrossOutcome gsco_at(const Word& w1, const Word& w2, const Word& x, const OccurrenceRef& i,
                     const OccurrenceRef& j, Mode mode);

/// Union over every occurrence pair of `x`; empty if `x` is absent from
/// either word. Throws EpsilonRule for an empty rule.
CrossOutcome gsco_rule(const Word& w1, const Word& w2, const Word& x, Mode mode);

/// Union over the rule set. AllSymbols is reduced to the common symbols,
/// which yields the same set as crossing at every common factor.
CrossOutcome gsco_pair(const Word& w1, const Word& w2, const RuleSet& rules, Mode mode);

/// Same set as gsco_pair(...).words without building traces.
WordSet gsco_pair_words(const Word& w1, const Word& w2, const RuleSet& rules, Mode mode);

/// Appends the outputs of crossing at `x` to `out` (no traces).
void gsco_rule_into(const Word& w1, const Word& w2, const Word& x, Mode mode, WordSet& out);

/// Pref(w1)·Suff(w2) ∪ Pref(w2)·Suff(w1), prefixes and suffixes including
/// the empty and the whole word.
WordSet epsilon_gsco(const Word& w1, const Word& w2);

/// Corresponding crossover: for every common factor occurring at least twice
/// in both words, only the i-th occurrence in `w1` meets the i-th in `w2`.
/// Both outputs of every such pair are kept.
WordSet cgsco(const Word& w1, const Word& w2);

}  // namespace crosskit
