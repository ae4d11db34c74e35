#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crosskit {

/// One Unicode scalar value. Ordered by code point.
using Symbol = char32_t;
using SymbolSet = std::set<Symbol>;

/// Finite sequence of symbols. The empty word prints as `_`.
///
/// Words compare in canonical order: shorter first, then lexicographically
/// by code point. Every ordered container in the library relies on this.
class Word {
 public:
  Word() = default;
  explicit Word(std::u32string symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  /// Decodes UTF-8. `_` alone denotes the empty word.
  static Word parse(std::string_view utf8);
  /// Decodes UTF-8 literally; `_` is an ordinary symbol here.
  static Word from_utf8(std::string_view utf8);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  const std::u32string& symbols() const noexcept { return symbols_; }
  std::u32string_view view() const noexcept { return symbols_; }

  /// Half-open slice [begin, end).
  Word slice(std::size_t begin, std::size_t end) const {
    return Word(symbols_.substr(begin, end - begin));
  }
  Word prefix(std::size_t n) const { return Word(symbols_.substr(0, n)); }
  Word suffix_from(std::size_t begin) const { return Word(symbols_.substr(begin)); }

  /// True iff `pattern` occurs starting at 0-based `pos`.
  bool has_at(std::size_t pos, const Word& pattern) const {
    return pos + pattern.size() <= size() &&
           view().substr(pos, pattern.size()) == pattern.view();
  }

  bool contains(const Word& pattern) const {
    return symbols_.find(pattern.symbols_) != std::u32string::npos;
  }

  Word& operator+=(const Word& other) {
    symbols_ += other.symbols_;
    return *this;
  }
  Word& operator+=(Symbol s) {
    symbols_ += s;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }

  /// UTF-8 text with `_` for the empty word.
  std::string str() const;
  /// UTF-8 text, empty string for the empty word.
  std::string utf8() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.symbols_.compare(b.symbols_) <=> 0;
  }

 private:
  std::u32string symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

using WordSet = std::set<Word>;

std::string symbol_utf8(Symbol s);
/// Decodes a string that must hold exactly one scalar value.
Symbol parse_symbol(std::string_view utf8);
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);

/// Reads the shared word-list format: one word per line, `_` is the empty
/// word, lines starting with `#` and blank lines are skipped.
std::vector<Word> parse_word_list(std::string_view text);
std::vector<Word> read_word_list(const std::string& path);
/// Writes words one per line in the order given.
std::string format_word_list(const WordSet& words);

SymbolSet symbols_of(const WordSet& words);

/// Shorthand for tests and fixtures: words from space-separated tokens.
WordSet words_from(std::string_view tokens);

}  // namespace crosskit

template <>
struct std::hash<crosskit::Word> {
  std::size_t operator()(const crosskit::Word& w) const noexcept {
    return std::hash<std::u32string_view>{}(w.view());
  }
};
