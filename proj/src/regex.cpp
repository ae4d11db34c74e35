#include "crosskit/regex.hpp"

#include <map>
#include <set>
#include <utility>

#include "crosskit/error.hpp"

namespace crosskit {

Regex Regex::empty_set() { return Regex(); }

Regex Regex::epsilon() {
  Regex r;
  r.kind_ = Kind::kEpsilon;
  return r;
}

Regex Regex::symbol(Symbol s) {
  Regex r;
  r.kind_ = Kind::kSymbol;
  r.sym_ = s;
  return r;
}

Regex Regex::concat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return std::move(parts.front());
  Regex r;
  r.kind_ = Kind::kConcat;
  r.children_ = std::move(parts);
  return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.empty()) return empty_set();
  if (parts.size() == 1) return std::move(parts.front());
  Regex r;
  r.kind_ = Kind::kUnion;
  r.children_ = std::move(parts);
  return r;
}

Regex Regex::unary(Kind kind, Regex inner) {
  Regex r;
  r.kind_ = kind;
  r.children_.push_back(std::move(inner));
  return r;
}

namespace {

bool is_meta(Symbol s) {
  switch (s) {
    case U'|':
    case U'*':
    case U'+':
    case U'?':
    case U'(':
    case U')':
    case U'_':
    case U'\\':
      return true;
    default:
      return false;
  }
}

bool is_space(Symbol s) { return s == U' ' || s == U'\t' || s == U'\n' || s == U'\r'; }

}  // namespace

Regex Regex::star(Regex inner) { return unary(Kind::kStar, std::move(inner)); }
Regex Regex::plus(Regex inner) { return unary(Kind::kPlus, std::move(inner)); }
Regex Regex::optional(Regex inner) { return unary(Kind::kOptional, std::move(inner)); }

namespace {

// Precedence: 0 union, 1 concat, 2 postfix/atom.
int precedence(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::kUnion:
      return 0;
    case Regex::Kind::kConcat:
      return 1;
    default:
      return 2;
  }
}

void print(const Regex& r, std::string& out);

void print_at(const Regex& r, int min_prec, std::string& out) {
  if (precedence(r) < min_prec) {
    out += '(';
    print(r, out);
    out += ')';
  } else {
    print(r, out);
  }
}

void print(const Regex& r, std::string& out) {
  switch (r.kind()) {
    case Regex::Kind::kEmptySet:
      out += "()";
      break;
    case Regex::Kind::kEpsilon:
      out += '_';
      break;
    case Regex::Kind::kSymbol:
      if (is_meta(r.sym())) out += '\\';
      out += symbol_utf8(r.sym());
      break;
    case Regex::Kind::kConcat:
      for (const auto& c : r.children()) print_at(c, 2, out);
      break;
    case Regex::Kind::kUnion: {
      bool first = true;
      for (const auto& c : r.children()) {
        if (!first) out += '|';
        print_at(c, 1, out);
        first = false;
      }
      break;
    }
    case Regex::Kind::kStar:
    case Regex::Kind::kPlus:
    case Regex::Kind::kOptional: {
      const auto& inner = r.children().front();
      // A nested postfix needs parentheses to re-parse as the same tree.
      const bool wrap = precedence(inner) < 2 || inner.kind() == Regex::Kind::kStar ||
                        inner.kind() == Regex::Kind::kPlus || inner.kind() == Regex::Kind::kOptional;
      if (wrap) {
        out += '(';
        print(inner, out);
        out += ')';
      } else {
        print(inner, out);
      }
      out += r.kind() == Regex::Kind::kStar ? '*' : r.kind() == Regex::Kind::kPlus ? '+' : '?';
      break;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(decode_utf8(text)) {}

  Regex run() {
    if (text_.empty()) throw RegexSyntaxError(1, "empty expression");
    Regex r = parse_union();
    if (pos_ < text_.size()) {
      throw RegexSyntaxError(pos_ + 1, "unexpected '" + symbol_utf8(text_[pos_]) + "'");
    }
    return r;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  Symbol peek() const { return text_[pos_]; }

  Regex parse_union() {
    std::vector<Regex> parts{parse_concat()};
    while (!at_end() && peek() == U'|') {
      ++pos_;
      parts.push_back(parse_concat());
    }
    return Regex::alt(std::move(parts));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    while (!at_end() && peek() != U'|' && peek() != U')') parts.push_back(parse_postfix());
    if (parts.empty()) {
      throw RegexSyntaxError(pos_ + 1, at_end() ? "expression expected at end of input" : "expression expected");
    }
    return Regex::concat(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    while (!at_end()) {
      const Symbol c = peek();
      if (c == U'*') {
        r = Regex::star(std::move(r));
      } else if (c == U'+') {
        r = Regex::plus(std::move(r));
      } else if (c == U'?') {
        r = Regex::optional(std::move(r));
      } else {
        break;
      }
      ++pos_;
    }
    return r;
  }

  Regex parse_atom() {
    const std::size_t here = pos_;
    const Symbol c = peek();
    if (is_space(c)) throw RegexSyntaxError(here + 1, "whitespace is not allowed");
    if (c == U'*' || c == U'+' || c == U'?') throw RegexSyntaxError(here + 1, "nothing to repeat");
    ++pos_;
    if (c == U'_') return Regex::epsilon();
    if (c == U'\\') {
      if (at_end()) throw RegexSyntaxError(here + 1, "dangling escape");
      return Regex::symbol(text_[pos_++]);
    }
    if (c == U'(') {
      if (!at_end() && peek() == U')') {
        ++pos_;
        return Regex::empty_set();
      }
      if (at_end()) throw RegexSyntaxError(here + 1, "unmatched '('");
      Regex inner = parse_union_in_group(here);
      return inner;
    }
    return Regex::symbol(c);
  }

  Regex parse_union_in_group(std::size_t open) {
    Regex inner;
    try {
      inner = parse_union();
    } catch (const RegexSyntaxError&) {
      if (at_end()) throw RegexSyntaxError(open + 1, "unmatched '('");
      throw;
    }
    if (at_end() || peek() != U')') throw RegexSyntaxError(open + 1, "unmatched '('");
    ++pos_;
    return inner;
  }

  std::u32string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Regex::str() const {
  std::string out;
  print(*this, out);
  return out;
}

Regex parse_regex(std::string_view text) { return Parser(text).run(); }

namespace {

// Glushkov sets for one subexpression; positions are 1-based state ids.
struct Glushkov {
  bool nullable = false;
  std::set<State> first;
  std::set<State> last;
};

class GlushkovBuilder {
 public:
  Nfa build(const Regex& re) {
    nfa_.add_state(false);  // initial state 0
    nfa_.add_start(0);
    const Glushkov g = visit(re);
    for (State p : g.first) link(0, p);
    nfa_.set_accepting(0, g.nullable);
    for (State p : g.last) nfa_.set_accepting(p, true);
    return std::move(nfa_);
  }

 private:
  void link(State from, State to) { nfa_.add_transition(from, labels_.at(to), to); }

  void follow(const std::set<State>& from, const std::set<State>& to) {
    for (State p : from)
      for (State q : to) link(p, q);
  }

  Glushkov visit(const Regex& r) {
    Glushkov g;
    switch (r.kind()) {
      case Regex::Kind::kEmptySet:
        break;
      case Regex::Kind::kEpsilon:
        g.nullable = true;
        break;
      case Regex::Kind::kSymbol: {
        const State p = nfa_.add_state(false);
        labels_[p] = r.sym();
        nfa_.extend_alphabet({r.sym()});
        g.first = g.last = {p};
        break;
      }
      case Regex::Kind::kConcat: {
        g.nullable = true;
        for (const auto& c : r.children()) {
          Glushkov h = visit(c);
          follow(g.last, h.first);
          if (g.nullable) g.first.insert(h.first.begin(), h.first.end());
          if (h.nullable) {
            g.last.insert(h.last.begin(), h.last.end());
          } else {
            g.last = h.last;
          }
          g.nullable = g.nullable && h.nullable;
        }
        break;
      }
      case Regex::Kind::kUnion:
        for (const auto& c : r.children()) {
          Glushkov h = visit(c);
          g.nullable = g.nullable || h.nullable;
          g.first.insert(h.first.begin(), h.first.end());
          g.last.insert(h.last.begin(), h.last.end());
        }
        break;
      case Regex::Kind::kStar:
      case Regex::Kind::kPlus:
      case Regex::Kind::kOptional: {
        g = visit(r.children().front());
        if (r.kind() != Regex::Kind::kOptional) follow(g.last, g.first);
        if (r.kind() != Regex::Kind::kPlus) g.nullable = true;
        break;
      }
    }
    return g;
  }

  Nfa nfa_;
  std::map<State, Symbol> labels_;
};

}  // namespace

Nfa regex_to_nfa(const Regex& re) { return GlushkovBuilder().build(re); }

Nfa regex_nfa(std::string_view text) { return regex_to_nfa(parse_regex(text)); }

}  // namespace crosskit
