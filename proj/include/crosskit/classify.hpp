#pragma once

// Decision procedures for crossover closure and a few sub-regular families.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crosskit/automaton.hpp"
#include "crosskit/serialize.hpp"
#include "crosskit/words.hpp"

namespace crosskit {

struct Verdict {
  bool holds = false;
  /// Counterexample word, when the property is refuted by one.
  std::optional<Word> witness;
  /// Family parameter, e.g. the window length for strict local testability.
  std::optional<std::size_t> detail;
  /// Rule set certifying membership, when one is found.
  std::optional<std::string> rules;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// L contains its own crossover under `rules`. Throws EpsilonInLanguage.
Verdict is_closed_under(const Nfa& a, const RuleSet& rules);
/// Closed under all symbols. Throws EpsilonInLanguage.
Verdict is_crossover(const Nfa& a);
Verdict is_tsy(const Nfa& a);
/// Closed under some non-empty symbol subset; the smallest one is reported.
/// Throws EpsilonInLanguage, InvalidArgument above 16 symbols.
Verdict is_sy(const Nfa& a);
/// Throws EpsilonInLanguage.
Verdict is_st_closed(const Nfa& a, const WordSet& rules);

/// Schützenberger constant. Throws EmptyPattern.
Verdict is_constant(const Nfa& a, const Word& c);

/// Strictly locally testable; detail is the window length. kmax bounds the
/// search and defaults to the squared size of the minimal automaton.
/// Throws EpsilonInLanguage.
Verdict is_slt(const Nfa& a, std::optional<std::size_t> kmax = std::nullopt);
/// Closed under the window-length factors found by is_slt.
Verdict is_st(const Nfa& a, std::optional<std::size_t> kmax = std::nullopt);

Verdict is_combinational(const Nfa& a);
Verdict is_nilpotent(const Nfa& a);
/// Every non-empty suffix of a member is a member.
Verdict is_suffix_closed(const Nfa& a);

/// Report order.
const std::vector<std::string>& family_names();

struct FamilyResult {
  std::string name;
  Verdict verdict;
};

struct ClassifyReport {
  /// FNV-1a 64 of the canonical automaton JSON, hex.
  std::string language;
  std::vector<FamilyResult> families;
};

std::string language_hash(const Nfa& a);

/// Families are evaluated in report order whatever the order requested.
/// Throws InvalidArgument on an unknown family name.
ClassifyReport classify(const Nfa& a, const std::vector<std::string>& families = family_names(),
                        std::optional<std::size_t> kmax = std::nullopt);

ordered_json verdict_to_json(const std::string& name, const Verdict& v);
ordered_json report_to_json(const ClassifyReport& r);
std::string report_text(const ClassifyReport& r);

}  // namespace crosskit
