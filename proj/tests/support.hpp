#pragma once

#include <random>
#include <string>
#include <string_view>

#include "crosskit/word.hpp"

namespace test {

inline crosskit::Word W(std::string_view s) { return crosskit::Word::parse(s); }
inline crosskit::WordSet WS(std::string_view s) { return crosskit::words_from(s); }

inline std::string show(const crosskit::WordSet& ws) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : ws) {
    if (!first) out += ",";
    out += w.str();
    first = false;
  }
  return out + "}";
}

inline crosskit::Word random_word(std::mt19937_64& rng, std::size_t alphabet, std::size_t min_len,
                                  std::size_t max_len) {
  std::u32string s;
  const auto len = min_len + rng() % (max_len - min_len + 1);
  for (std::size_t i = 0; i < len; ++i) s += static_cast<char32_t>(U'a' + rng() % alphabet);
  return crosskit::Word(s);
}

}  // namespace test
