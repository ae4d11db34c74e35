#pragma once

// Exact iterated crossover as an automaton, single-step crossover of regular
// languages, block profiles and base sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crosskit/automaton.hpp"
#include "crosskit/finlang.hpp"
#include "crosskit/serialize.hpp"
#include "crosskit/words.hpp"

namespace crosskit {

/// Where a closure state came from.
struct StateOrigin {
  enum class Kind { kAxiom, kRegular, kHub };
  Kind kind = Kind::kRegular;
  std::size_t axiom = 0;     ///< kAxiom: axiom index.
  std::size_t position = 0;  ///< kAxiom: symbols read; kRegular: input state; kHub: offset in rule.
  Word rule;                 ///< kHub only.
  std::size_t step = 0;      ///< kHub: saturation round that created it.

  friend bool operator==(const StateOrigin&, const StateOrigin&) = default;
};

/// Inputs a closure was built from. Axioms are empty for regular input.
struct ClosureProvenance {
  std::vector<Word> axioms;
  RuleSet rules;
  /// One entry per state; empty once the automaton has been minimized.
  std::vector<StateOrigin> origins;

  friend bool operator==(const ClosureProvenance&, const ClosureProvenance&) = default;
};

struct Closure {
  Nfa nfa;
  std::optional<ClosureProvenance> provenance;
  /// Saturation rounds performed.
  std::size_t rounds = 0;
};

/// GSCO_R*(axioms). Throws EmptyAxioms, EpsilonAxiom, ClosureDiverged.
Closure jump_closure_finite(const FiniteLanguage& axioms, const RuleSet& rules);
Closure jump_closure_finite(const WordSet& axioms, const RuleSet& rules);

/// GSCO_R*(L(a)). Throws EpsilonInLanguage, ClosureDiverged.
Closure jump_closure_regular(const Nfa& a, const RuleSet& rules);

/// One application: the union over rules x of Prefix_x(L)·x·Suffix_x(L).
/// The mode does not change the result for a language crossed with itself.
/// Throws EpsilonInLanguage.
Nfa gsco_once_regular(const Nfa& a, const RuleSet& rules, Mode mode = Mode::kTwo);

/// Minimal canonical DFA of the closure, provenance kept without origins.
Closure minimized(const Closure& c);

ordered_json closure_to_json(const Closure& c);
std::string closure_to_json_text(const Closure& c);
/// Reads automaton JSON; "x-provenance" is optional.
Closure closure_from_json(std::string_view text);

/// One axiom in a left-to-right derivation.
struct ChainSegment {
  std::size_t axiom_index = 0;
  Word axiom;
  /// Rule occurrence in `axiom` after which copying resumes (absent for the
  /// first segment).
  std::optional<OccurrenceRef> cut_in;
  /// Rule occurrence in the intermediate word ending with this segment at
  /// which the next segment is attached (absent for the last segment).
  std::optional<OccurrenceRef> cut_out;
};

struct DerivationChain {
  std::vector<ChainSegment> segments;
};

/// Each junction as a crossover step: intermediate word x next axiom.
/// Throws RuleAbsent if the chain is malformed.
std::vector<CrossTrace> chain_steps(const DerivationChain& chain);
/// Final word of the chain. Throws RuleAbsent if the chain is malformed.
Word replay(const DerivationChain& chain);
std::string describe(const DerivationChain& chain);

struct Membership {
  bool accepted = false;
  /// Present when accepted and a left-to-right chain exists over the axioms.
  std::optional<DerivationChain> chain;
};

/// Throws NotAClosure when the automaton carries no provenance.
Membership member_with_trace(const Closure& c, const Word& w);

/// ⟨first symbol, 2B set, last symbol⟩.
struct BlockProfile {
  Symbol first = 0;
  WordSet blocks;
  Symbol last = 0;

  std::string str() const;
  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
  friend auto operator<=>(const BlockProfile&, const BlockProfile&) = default;
};

/// Throws EmptyWord.
BlockProfile block_profile(const Word& w);

/// Minimal DFA of {w : block_profile(w) = p}. Throws InconsistentProfile.
Dfa profile_automaton(const BlockProfile& p, const SymbolSet& alphabet);

/// n²(2^{n²} − 1) + n + 1. Throws InvalidArgument outside 1..7.
std::uint64_t count_profiles(std::size_t n);

/// Every parameter triple the count ranges over, plus the unit classes.
/// The ε class is not a BlockProfile and is counted by the caller.
std::vector<BlockProfile> enumerate_profile_space(const SymbolSet& alphabet);

/// Distinct profiles of all non-empty words up to max_len.
std::set<BlockProfile> realized_profiles(const SymbolSet& alphabet, std::size_t max_len);

/// Throws EpsilonInLanguage.
BaseSets extract_base(const Nfa& a);

struct Decomposition {
  bool holds = false;
  std::optional<Word> witness;
  BaseSets base;
};

/// Compares L with (GSCO*(B) ∩ SΣ*E) ∪ (L ∩ Σ). Throws EpsilonInLanguage.
Decomposition verify_decomposition(const Nfa& a);

}  // namespace crosskit
