#pragma once

// H-scheme splicing: general rules, null-context and simple systems, plus a
// bounded comparison against crossover closures.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crosskit/serialize.hpp"
#include "crosskit/word.hpp"

namespace crosskit {

class RuleSet;

/// u1#u2$u3#u4: x = x1·u1·u2·x2 and y = y1·u3·u4·y2 give x1·u1·u4·y2.
struct SpliceRule {
  Word u1, u2, u3, u4;

  /// (r, ε, r, ε): wrx, yrz give wrz.
  static SpliceRule null_context(const Word& r) { return SpliceRule{r, Word(), r, Word()}; }
  static SpliceRule simple(Symbol a) { return null_context(Word{a}); }
  /// u3#u4$u1#u2, which produces the second 2-splicing output.
  SpliceRule swapped() const { return SpliceRule{u3, u4, u1, u2}; }

  friend bool operator==(const SpliceRule&, const SpliceRule&) = default;
  friend auto operator<=>(const SpliceRule&, const SpliceRule&) = default;
};

struct SpliceSystem {
  enum class Kind { kSimple, kNullContext, kFull };
  Kind kind = Kind::kSimple;
  SymbolSet alphabet;
  WordSet axioms;
  /// Symbols (simple) or words (null-context) as given.
  WordSet items;
  std::vector<SpliceRule> rules;

  static SpliceSystem simple(WordSet axioms, const SymbolSet& symbols);
  static SpliceSystem null_context(WordSet axioms, WordSet words);
  static SpliceSystem full(WordSet axioms, std::vector<SpliceRule> rules);
};

/// 1-splicing keeps x1u1u4y2; 2-splicing adds y1u3u2x2.
WordSet splice_once(const Word& x, const Word& y, const SpliceRule& r, int mode = 2);

struct SpliceClosure {
  /// Members of length <= max_len.
  WordSet words;
  bool fixpoint = false;
  std::size_t rounds = 0;
};

/// Iterates σ with intermediates up to `cap`; stops at a fixpoint or after
/// max_rounds. Throws InvalidArgument if cap < max_len.
SpliceClosure sigma_closure_bounded(const SpliceSystem& s, std::size_t max_len, std::size_t cap,
                                    std::size_t max_rounds = static_cast<std::size_t>(-1));

struct SpliceDiff {
  bool equal = true;
  std::size_t max_len = 0;
  std::size_t cap = 0;
  WordSet splice_only;
  WordSet crossover_only;
};

/// Splicing closure (simple for symbol rules, null-context for string rules)
/// against the crossover closure, both cut at length n. Intermediates are
/// kept up to n plus the longest axiom.
SpliceDiff differential_vs_gsco(const WordSet& axioms, const RuleSet& rules, std::size_t n);

ordered_json diff_to_json(const SpliceDiff& d);

/// {alphabet, axioms, rules: {kind, items}}; ε is "" or "_".
SpliceSystem splice_system_from_json(std::string_view text);
ordered_json splice_system_to_json(const SpliceSystem& s);

}  // namespace crosskit
