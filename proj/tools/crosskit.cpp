// crosskit: command-line front end.
//
// Exit codes: 0 success, 1 failed --assert, 2 usage, 3 bad input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crosskit/classify.hpp"
#include "crosskit/closure.hpp"
#include "crosskit/error.hpp"
#include "crosskit/oracle.hpp"
#include "crosskit/regex.hpp"
#include "crosskit/serialize.hpp"
#include "crosskit/splicing.hpp"

namespace fs = std::filesystem;
using namespace crosskit;

namespace {

constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_output = false;

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json word_array(const WordSet& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

std::string braces(const WordSet& ws) {
  std::string out = "{";
  bool sep = false;
  for (const auto& w : ws) {
    if (sep) out += ",";
    out += w.str();
    sep = true;
  }
  return out + "}";
}

WordSet as_words(const SymbolSet& s) {
  WordSet out;
  for (Symbol a : s) out.insert(Word{a});
  return out;
}

Word nonempty_word(const std::string& text) {
  Word w = Word::parse(text);
  if (w.empty()) throw InputError("the empty word is not allowed here");
  return w;
}

WordSet word_file(const std::string& path) {
  const auto words = read_word_list(path);
  return WordSet(words.begin(), words.end());
}

// all | symbols such as ab | {ab,bb} | @file of rule words
RuleSet parse_rules(const std::string& spec) {
  if (spec == "all") return RuleSet::all_symbols();
  if (!spec.empty() && spec.front() == '@') return RuleSet::strings(word_file(spec.substr(1)));
  if (spec.size() >= 2 && spec.front() == '{' && spec.back() == '}') {
    WordSet ws;
    std::stringstream in(spec.substr(1, spec.size() - 2));
    for (std::string item; std::getline(in, item, ',');) ws.insert(nonempty_word(item));
    return RuleSet::strings(std::move(ws));
  }
  const Word w = Word::parse(spec);
  return RuleSet::symbols(SymbolSet(w.symbols().begin(), w.symbols().end()));
}

// Existing file: .json automaton, .re/.regex regex text, otherwise a word
// list. Anything else is an inline regex.
Nfa load_language(const std::string& arg) {
  std::error_code ec;
  if (!fs::is_regular_file(arg, ec)) return regex_nfa(arg);
  const auto ext = fs::path(arg).extension().string();
  if (ext == ".json") return closure_from_json(read_text_file(arg)).nfa;
  if (ext == ".re" || ext == ".regex") {
    auto text = read_text_file(arg);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
    return regex_nfa(text);
  }
  return Nfa::from_words(FiniteLanguage(word_file(arg)).words());
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

ordered_json trace_json(const CrossTrace& t) {
  ordered_json j;
  j["output"] = t.output.str();
  j["left"] = t.left.str();
  j["left_cut"] = t.left_cut.position;
  j["right"] = t.right.str();
  j["right_cut"] = t.right_cut.position;
  j["rule"] = t.rule.str();
  return j;
}

// ---- subcommands ------------------------------------------------------------

struct CrossArgs {
  std::string w1, w2, rules = "all";
  int mode = 2;
  bool trace = false;
};

int run_cross(const CrossArgs& a) {
  const auto out = gsco_pair(nonempty_word(a.w1), nonempty_word(a.w2), parse_rules(a.rules), parse_mode(a.mode));
  // First trace per output word.
  std::map<Word, const CrossTrace*> first;
  for (const auto& t : out.traces) first.emplace(t.output, &t);
  if (json_output) {
    ordered_json j;
    j["words"] = word_array(out.words);
    if (a.trace) {
      j["traces"] = ordered_json::array();
      for (const auto& [w, t] : first) j["traces"].push_back(trace_json(*t));
    }
    emit(j);
  } else if (a.trace) {
    for (const auto& [w, t] : first) std::cout << describe(*t) << "\n";
  } else {
    std::cout << format_word_list(out.words);
  }
  return 0;
}

struct LangArgs {
  std::string in, in2, rules = "all";
  int mode = 2;
};

int run_lang(const LangArgs& a) {
  const FiniteLanguage l1(word_file(a.in));
  const FiniteLanguage l2 = a.in2.empty() ? l1 : FiniteLanguage(word_file(a.in2));
  const auto out = gsco_lang(l1, l2, parse_rules(a.rules), parse_mode(a.mode));
  if (json_output) {
    ordered_json j;
    j["words"] = word_array(out.words());
    emit(j);
  } else {
    std::cout << format_word_list(out.words());
  }
  return 0;
}

struct CloseArgs {
  std::string axioms, rules = "all", out, dot;
  bool min = false;
};

int run_close(const CloseArgs& a) {
  Closure c = jump_closure_finite(FiniteLanguage(word_file(a.axioms)), parse_rules(a.rules));
  if (a.min) c = minimized(c);
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(c.nfa));
  if (!a.out.empty() || a.dot.empty()) write_or_print(a.out, closure_to_json_text(c));
  return 0;
}

struct MemberArgs {
  std::string closure, word;
  bool trace = false;
};

int run_member(const MemberArgs& a) {
  const Closure c = closure_from_json(read_text_file(a.closure));
  const Word w = Word::parse(a.word);
  const auto m = member_with_trace(c, w);
  if (json_output) {
    ordered_json j;
    j["word"] = w.str();
    j["accepted"] = m.accepted;
    if (a.trace && m.chain) {
      j["chain"] = ordered_json::array();
      for (const auto& s : m.chain->segments) {
        ordered_json seg;
        seg["axiom"] = s.axiom.str();
        if (s.cut_in) seg["cut_in"] = s.cut_in->position;
        if (s.cut_out) seg["cut_out"] = s.cut_out->position;
        j["chain"].push_back(std::move(seg));
      }
    }
    emit(j);
  } else {
    std::cout << w.str() << ": " << (m.accepted ? "accepted" : "rejected") << "\n";
    if (a.trace && m.chain) std::cout << describe(*m.chain);
    if (a.trace && m.accepted && !m.chain) std::cout << "no left-to-right chain over the recorded axioms\n";
  }
  return 0;
}

struct OnceArgs {
  std::string lang, rules = "all", out;
};

int run_once(const OnceArgs& a) {
  const Nfa once = gsco_once_regular(load_language(a.lang), parse_rules(a.rules));
  write_or_print(a.out, to_json(minimize_canonical(once)));
  return 0;
}

struct BaseArgs {
  std::string lang;
  bool verify = false;
};

int run_base(const BaseArgs& a) {
  const Nfa l = load_language(a.lang);
  const auto b = extract_base(l);
  std::optional<Decomposition> d;
  if (a.verify) d = verify_decomposition(l);
  if (json_output) {
    ordered_json j;
    j["B"] = word_array(b.blocks);
    j["S"] = word_array(as_words(b.starts));
    j["E"] = word_array(as_words(b.ends));
    j["units"] = word_array(b.units);
    if (d) {
      j["decomposition"] = d->holds;
      if (d->witness) j["witness"] = d->witness->str();
    }
    emit(j);
  } else {
    std::cout << "B=" << braces(b.blocks) << " S=" << braces(as_words(b.starts)) << " E=" << braces(as_words(b.ends))
              << " units=" << braces(b.units) << "\n";
    if (d) {
      std::cout << "decomposition: " << (d->holds ? "true" : "false");
      if (d->witness) std::cout << " witness=" << d->witness->str();
      std::cout << "\n";
    }
  }
  return 0;
}

struct ClassifyArgs {
  std::string lang;
  std::vector<std::string> families;
  std::optional<std::size_t> kmax;
  bool assert_all = false;
};

int run_classify(const ClassifyArgs& a) {
  const auto report = classify(load_language(a.lang), a.families.empty() ? family_names() : a.families, a.kmax);
  if (json_output) {
    emit(report_to_json(report));
  } else {
    std::cout << report_text(report);
  }
  if (a.assert_all) {
    for (const auto& f : report.families)
      if (!f.verdict.holds) return kExitAssert;
  }
  return 0;
}

struct SpliceArgs {
  std::string system;
  std::size_t maxlen = 0;
  std::optional<std::size_t> cap;
  bool diff = false;
};

int run_splice(const SpliceArgs& a) {
  const auto s = splice_system_from_json(read_text_file(a.system));
  if (a.diff) {
    if (s.kind == SpliceSystem::Kind::kFull) throw InputError("--diff needs a simple or null-context system");
    const RuleSet rules = s.kind == SpliceSystem::Kind::kSimple ? [&s] {
      SymbolSet sym;
      for (const auto& w : s.items) sym.insert(w[0]);
      return RuleSet::symbols(sym);
    }()
                                                                : RuleSet::strings(s.items);
    const auto d = differential_vs_gsco(s.axioms, rules, a.maxlen);
    if (json_output) {
      emit(diff_to_json(d));
    } else {
      std::cout << "equal: " << (d.equal ? "true" : "false") << "\n";
      for (const auto& w : d.splice_only) std::cout << "splice only: " << w.str() << "\n";
      for (const auto& w : d.crossover_only) std::cout << "crossover only: " << w.str() << "\n";
    }
    return d.equal ? 0 : kExitAssert;
  }
  std::size_t longest = 0;
  for (const auto& w : s.axioms) longest = std::max(longest, w.size());
  const auto c = sigma_closure_bounded(s, a.maxlen, a.cap.value_or(a.maxlen + longest));
  if (json_output) {
    ordered_json j;
    j["words"] = word_array(c.words);
    j["fixpoint"] = c.fixpoint;
    j["rounds"] = c.rounds;
    emit(j);
  } else {
    std::cout << format_word_list(c.words);
  }
  return 0;
}

struct GenArgs {
  std::string what;
  std::size_t count = 10, alphabet = 2, max_len = 6, max_words = 3;
  int depth = 3;
};

Seed env_seed() {
  const char* v = std::getenv("CROSSKIT_SEED");
  if (!v || !*v) return 0;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw InputError("CROSSKIT_SEED must be an unsigned integer");
  }
}

int run_gen(const GenArgs& a) {
  const Seed seed = env_seed();
  std::vector<std::string> lines;
  if (a.what == "words") {
    for (const auto& w : gen_words(seed, a.alphabet, a.max_len, a.count)) lines.push_back(w.str());
  } else if (a.what == "langs") {
    for (const auto& l : gen_finite_langs(seed, a.count, a.alphabet, a.max_words, a.max_len))
      lines.push_back(braces(l.words()));
  } else {
    for (const auto& r : gen_regexes(seed, a.count, a.depth, a.alphabet)) lines.push_back(r.str());
  }
  if (json_output) {
    ordered_json j;
    j["seed"] = seed;
    j["items"] = lines;
    emit(j);
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised sequential crossover toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto mode_check = CLI::IsMember({1, 2});

  CrossArgs cross;
  auto* c_cross = app.add_subcommand("cross", "Cross two words");
  c_cross->add_option("w1", cross.w1)->required();
  c_cross->add_option("w2", cross.w2)->required();
  c_cross->add_option("--rules", cross.rules, "all, a symbol string, {w1,w2} or @file");
  c_cross->add_option("--mode", cross.mode)->check(mode_check);
  c_cross->add_flag("--trace", cross.trace, "One derivation line per output word");

  LangArgs lang;
  auto* c_lang = app.add_subcommand("lang", "Cross one or two finite languages");
  c_lang->add_option("--in", lang.in)->required()->check(CLI::ExistingFile);
  c_lang->add_option("--in2", lang.in2)->check(CLI::ExistingFile);
  c_lang->add_option("--rules", lang.rules);
  c_lang->add_option("--mode", lang.mode)->check(mode_check);

  CloseArgs close;
  auto* c_close = app.add_subcommand("close", "Iterated crossover closure of a finite axiom set");
  c_close->add_option("--axioms", close.axioms)->required()->check(CLI::ExistingFile);
  c_close->add_option("--rules", close.rules);
  c_close->add_flag("--min", close.min, "Minimal canonical DFA");
  c_close->add_option("--out", close.out, "Write automaton JSON here");
  c_close->add_option("--dot", close.dot, "Write Graphviz DOT here");

  MemberArgs member;
  auto* c_member = app.add_subcommand("member", "Membership in a closure, with a derivation");
  c_member->add_option("--closure", member.closure)->required()->check(CLI::ExistingFile);
  c_member->add_option("word", member.word)->required();
  c_member->add_flag("--trace", member.trace);

  OnceArgs once;
  auto* c_once = app.add_subcommand("once", "One crossover step on a regular language");
  c_once->add_option("--lang", once.lang)->required();
  c_once->add_option("--rules", once.rules);
  c_once->add_option("--out", once.out);

  BaseArgs base;
  auto* c_base = app.add_subcommand("base", "Base sets B, S, E of a language");
  c_base->add_option("--lang", base.lang)->required();
  c_base->add_flag("--verify", base.verify, "Check the decomposition");

  ClassifyArgs cls;
  auto* c_classify = app.add_subcommand("classify", "Family membership report");
  c_classify->add_option("--lang", cls.lang)->required();
  c_classify->add_option("--families", cls.families)->delimiter(',')->check(CLI::IsMember(family_names()));
  c_classify->add_option("--kmax", cls.kmax)->check(CLI::PositiveNumber);
  c_classify->add_flag("--assert", cls.assert_all, "Exit 1 unless every family holds");

  SpliceArgs splice;
  auto* c_splice = app.add_subcommand("splice", "Bounded splicing closure");
  c_splice->add_option("--system", splice.system)->required()->check(CLI::ExistingFile);
  c_splice->add_option("--maxlen", splice.maxlen)->required();
  c_splice->add_option("--cap", splice.cap, "Longest intermediate word kept");
  c_splice->add_flag("--diff", splice.diff, "Compare with the crossover closure");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Seeded random corpora (seed from CROSSKIT_SEED)");
  c_gen->add_option("what", gen.what)->required()->check(CLI::IsMember({"words", "langs", "regexes"}));
  c_gen->add_option("--count", gen.count);
  c_gen->add_option("--alphabet", gen.alphabet)->check(CLI::Range(1, 26));
  c_gen->add_option("--max-len", gen.max_len)->check(CLI::PositiveNumber);
  c_gen->add_option("--max-words", gen.max_words)->check(CLI::PositiveNumber);
  c_gen->add_option("--depth", gen.depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  json_output = format == "json";

  try {
    if (*c_cross) return run_cross(cross);
    if (*c_lang) return run_lang(lang);
    if (*c_close) return run_close(close);
    if (*c_member) return run_member(member);
    if (*c_once) return run_once(once);
    if (*c_base) return run_base(base);
    if (*c_classify) return run_classify(cls);
    if (*c_splice) return run_splice(splice);
    if (*c_gen) return run_gen(gen);
  } catch (const Error& e) {
    std::cerr << "crosskit: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitInput;
  } catch (const InputError& e) {
    std::cerr << "crosskit: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "crosskit: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
