#pragma once

// Regular expressions over single-symbol atoms.
//
// Grammar (loosest binding first):
//   union   := concat ('|' concat)*
//   concat  := postfix+
//   postfix := atom ('*' | '+' | '?')*
//   atom    := symbol | '\' any | '_' | '(' union ')' | '()'
// `_` is the empty word and `()` the empty language. Whitespace is rejected.

#include <string>
#include <string_view>
#include <vector>

#include "crosskit/automaton.hpp"
#include "crosskit/word.hpp"

namespace crosskit {

class Regex {
 public:
  enum class Kind { kEmptySet, kEpsilon, kSymbol, kConcat, kUnion, kStar, kPlus, kOptional };

  static Regex empty_set();
  static Regex epsilon();
  static Regex symbol(Symbol s);
  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> parts);
  static Regex star(Regex inner);
  static Regex plus(Regex inner);
  static Regex optional(Regex inner);

  Kind kind() const noexcept { return kind_; }
  Symbol sym() const noexcept { return sym_; }
  const std::vector<Regex>& children() const noexcept { return children_; }

  /// Prints in the grammar above with minimal parentheses.
  std::string str() const;

  friend bool operator==(const Regex&, const Regex&) = default;

 private:
  static Regex unary(Kind kind, Regex inner);

  Kind kind_ = Kind::kEmptySet;
  Symbol sym_ = 0;
  std::vector<Regex> children_;
};

/// Throws RegexSyntaxError with a 1-based position.
Regex parse_regex(std::string_view text);

/// Position (Glushkov) automaton: one state per symbol occurrence plus an
/// initial state, no ε-transitions.
Nfa regex_to_nfa(const Regex& re);

/// parse_regex + regex_to_nfa.
Nfa regex_nfa(std::string_view text);

}  // namespace crosskit
