#pragma once

// Brute-force references and seeded generators for the property suites.
// Clarity over speed: everything here is exponential in word length and is
// meant for words of length 10 or less.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crosskit/finlang.hpp"
#include "crosskit/regex.hpp"
#include "crosskit/words.hpp"

namespace crosskit {

using Seed = std::uint64_t;

/// Crossover at every common non-empty factor, occurrence by occurrence.
WordSet naive_gsco_all_substrings(const Word& w1, const Word& w2, Mode mode = Mode::kTwo);

/// Left-to-right chain check: w is an axiom, or is read by copying a prefix
/// of one axiom up to the end of a rule occurrence and continuing inside
/// another axiom just after an occurrence of the same rule, and so on until
/// an axiom is read to its end.
bool chain_membership(const Word& w, const WordSet& axioms, const RuleSet& rules);

/// Unrestricted iteration from the axioms keeping every word up to `cap`;
/// returns the words up to target_len. Throws InvalidArgument if
/// cap < target_len.
WordSet bounded_closure_reference(const WordSet& axioms, const RuleSet& rules, std::size_t target_len,
                                  std::size_t cap);

/// Words over the first alphabet_size letters from 'a', lengths 1..max_len.
std::vector<Word> gen_words(Seed seed, std::size_t alphabet_size, std::size_t max_len, std::size_t count);
std::vector<FiniteLanguage> gen_finite_langs(Seed seed, std::size_t count, std::size_t alphabet_size,
                                             std::size_t max_words, std::size_t max_len);
/// Star height at most 2, languages without ε.
std::vector<Regex> gen_regexes(Seed seed, std::size_t count, int depth, std::size_t alphabet_size = 2);

}  // namespace crosskit
