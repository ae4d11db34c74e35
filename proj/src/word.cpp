#include "crosskit/word.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "crosskit/error.hpp"

namespace crosskit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyPattern: return "EmptyPattern";
    case ErrorCode::kRuleAbsent: return "RuleAbsent";
    case ErrorCode::kEpsilonRule: return "EpsilonRule";
    case ErrorCode::kEpsilonAxiom: return "EpsilonAxiom";
    case ErrorCode::kEmptyAxioms: return "EmptyAxioms";
    case ErrorCode::kEpsilonInLanguage: return "EpsilonInLanguage";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kInconsistentProfile: return "InconsistentProfile";
    case ErrorCode::kRegexSyntax: return "RegexSyntax";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kNotAClosure: return "NotAClosure";
    case ErrorCode::kAlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::kWordSyntax: return "WordSyntax";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kClosureDiverged: return "ClosureDiverged";
  }
  return "Unknown";
}

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  std::size_t i = 0;
  while (i < utf8.size()) {
    auto byte = static_cast<unsigned char>(utf8[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (byte < 0x80) {
      cp = byte;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      extra = 1;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      extra = 2;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      extra = 3;
    } else {
      throw Error(ErrorCode::kWordSyntax, "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + extra >= utf8.size() && extra > 0) {
      throw Error(ErrorCode::kWordSyntax, "truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      auto cont = static_cast<unsigned char>(utf8[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Error(ErrorCode::kWordSyntax, "invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorCode::kWordSyntax, "not a Unicode scalar value at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string symbol_utf8(Symbol s) { return encode_utf8(std::u32string_view(&s, 1)); }

Symbol parse_symbol(std::string_view utf8) {
  auto decoded = decode_utf8(utf8);
  if (decoded.size() != 1) {
    throw Error(ErrorCode::kWordSyntax, "expected exactly one symbol, got '" + std::string(utf8) + "'");
  }
  return decoded.front();
}

Word Word::parse(std::string_view utf8) {
  if (utf8 == "_") return Word();
  return from_utf8(utf8);
}

Word Word::from_utf8(std::string_view utf8) { return Word(decode_utf8(utf8)); }

std::string Word::str() const { return empty() ? std::string("_") : encode_utf8(symbols_); }

std::string Word::utf8() const { return encode_utf8(symbols_); }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    for (char c : line) {
      if (is_space(c)) {
        throw Error(ErrorCode::kWordSyntax, "line " + std::to_string(line_no) + ": whitespace inside a word");
      }
    }
    out.push_back(Word::parse(line));
  }
  return out;
}

std::vector<Word> read_word_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word_list(buf.str());
}

std::string format_word_list(const WordSet& words) {
  std::string out;
  for (const auto& w : words) {
    out += w.str();
    out += '\n';
  }
  return out;
}

SymbolSet symbols_of(const WordSet& words) {
  SymbolSet out;
  for (const auto& w : words) out.insert(w.symbols().begin(), w.symbols().end());
  return out;
}

WordSet words_from(std::string_view tokens) {
  WordSet out;
  while (!tokens.empty()) {
    auto sp = tokens.find(' ');
    auto tok = tokens.substr(0, sp);
    if (!tok.empty()) out.insert(Word::parse(tok));
    if (sp == std::string_view::npos) break;
    tokens.remove_prefix(sp + 1);
  }
  return out;
}

}  // namespace crosskit
