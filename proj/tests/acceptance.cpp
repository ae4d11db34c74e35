// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N] [--expect-fail LIST]
//
// Exit status is 0 when the set of failing criteria equals the expected
// list (empty by default).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "crosskit/classify.hpp"
#include "crosskit/closure.hpp"
#include "crosskit/error.hpp"
#include "crosskit/oracle.hpp"
#include "crosskit/regex.hpp"
#include "crosskit/splicing.hpp"

using namespace crosskit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  /// Everything the criterion computed, for the determinism rerun.
  std::ostringstream digest;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 6) notes.push_back(what);
    }
    digest << (ok ? '1' : '0') << what << ';';
  }

  // Totals line, always shown on failure.
  void expect_total(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
    digest << (ok ? '1' : '0') << what << ';';
  }
};

Seed base_seed() {
  const char* v = std::getenv("CROSSKIT_SEED");
  return v && *v ? std::stoull(v) : 20240611;
}

Word W(std::string_view s) { return Word::parse(s); }
WordSet WS(std::string_view s) { return words_from(s); }
Nfa R(std::string_view re) { return regex_nfa(re); }

std::string show(const WordSet& ws) {
  std::string out = "{";
  for (const auto& w : ws) out += (out.size() > 1 ? "," : "") + w.str();
  return out + "}";
}

// ---- shared corpus for criteria 6 to 9 --------------------------------------

struct ClosureCase {
  WordSet axioms;
  RuleSet rules;
  Closure closure;
};

std::optional<std::vector<ClosureCase>> cached_cases;

const std::vector<ClosureCase>& closure_cases() {
  if (!cached_cases) cached_cases = [] {
    std::vector<ClosureCase> out;
    std::mt19937_64 rng(base_seed() + 6);
    const auto langs = gen_finite_langs(rng(), 200, 2, 4, 5);
    for (std::size_t i = 0; i < langs.size(); ++i) {
      RuleSet rules = RuleSet::all_symbols();
      if (i % 3 == 1) {
        SymbolSet s;
        while (s.empty())
          for (Symbol a : {U'a', U'b'})
            if (rng() % 2) s.insert(a);
        rules = RuleSet::symbols(s);
      } else if (i % 3 == 2) {
        WordSet s;
        const auto n = 1 + rng() % 2;
        for (const auto& w : gen_words(rng(), 2, 2, n)) s.insert(w);
        rules = RuleSet::strings(s);
      }
      out.push_back(ClosureCase{langs[i].words(), rules, jump_closure_finite(langs[i], rules)});
    }
    return out;
  }();
  return *cached_cases;
}

// ---- criteria ----------------------------------------------------------------

void criterion1(Outcome& o) {
  const auto all = RuleSet::all_symbols();
  auto pair = [&](const char* a, const char* b) { return gsco_pair(W(a), W(b), all, Mode::kTwo).words; };
  o.expect(pair("ab", "ba") == WS("a b bab aba"), "ab x ba = " + show(pair("ab", "ba")));
  o.expect(pair("ab", "bb") == WS("ab bb b abb"), "ab x bb = " + show(pair("ab", "bb")));
  o.expect(pair("ba", "bb") == WS("b bb ba bba"), "ba x bb = " + show(pair("ba", "bb")));
  const FiniteLanguage l(WS("ab ba bb"));
  const auto g = gsco_lang(l, l, all, Mode::kTwo).words();
  o.expect(g == WS("a b ab ba bb aba bab abb bba"),
           "GSCO({ab,ba,bb}) = " + show(g) + " (stated 9-word set lacks bbb)");
  const FiniteLanguage ab(WS("a b"));
  o.expect(gsco_lang(ab, ab, all, Mode::kTwo).words() == WS("a b"), "GSCO({a,b})");
  const auto aba = gsco_pair(W("pabaq"), W("rabas"), RuleSet::strings(WS("aba")), Mode::kTwo).words;
  o.expect(aba == WS("pabas rabaq"), "rule aba = " + show(aba));
  const auto a = gsco_pair(W("pabaq"), W("rabas"), RuleSet::symbols({U'a'}), Mode::kTwo).words;
  o.expect(a == WS("pabas rabaq pas rababaq pababas raq"), "rule a = " + show(a));
}

void criterion2(Outcome& o) {
  const auto c = jump_closure_finite(WS("aabb aaabbb"), RuleSet::all_symbols());
  const auto got = to_json(minimize_canonical(c.nfa));
  const auto want = to_json(minimize_canonical(R("a+b+")));
  o.digest << got;
  o.expect(got == want, "canonical closure JSON equals canonical a+b+");
}

void criterion3(Outcome& o) {
  const auto v = is_crossover(R("(aa)+"));
  o.expect(!v.holds, "(aa)+ is not closed");
  o.expect(v.witness && v.witness->size() % 2 == 1, "odd witness " + (v.witness ? v.witness->str() : "none"));
  o.expect(gsco_once_regular(R("(aa)+"), RuleSet::all_symbols()).accepts(W("aaa")), "aaa in one step");
}

void criterion4(Outcome& o) {
  const auto ws = gen_words(base_seed() + 4, 3, 8, 20000);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i + 1 < ws.size(); i += 2) {
    const auto naive = naive_gsco_all_substrings(ws[i], ws[i + 1]);
    const auto fast = gsco_pair_words(ws[i], ws[i + 1], RuleSet::all_symbols(), Mode::kTwo);
    o.digest << naive.size() << ',';
    if (naive != fast) {
      ++mismatches;
      o.expect(false, ws[i].str() + " x " + ws[i + 1].str());
    }
  }
  o.expect(mismatches == 0, "10000 pairs, " + std::to_string(mismatches) + " mismatches");
}

void criterion5(Outcome& o) {
  const auto langs = gen_finite_langs(base_seed() + 5, 1000, 3, 5, 6);
  std::size_t mismatches = 0;
  for (const auto& l : langs) {
    const auto one = gsco_lang(l, l, RuleSet::all_symbols(), Mode::kOne);
    const auto two = gsco_lang(l, l, RuleSet::all_symbols(), Mode::kTwo);
    o.digest << two.size() << ',';
    if (one != two) {
      ++mismatches;
      o.expect(false, show(l.words()));
    }
  }
  o.expect(mismatches == 0, "1000 languages, " + std::to_string(mismatches) + " mismatches");
}

void criterion6(Outcome& o) {
  const auto words8 = enumerate_upto(sigma_plus({U'a', U'b'}), 8);
  std::size_t mismatches = 0;
  for (const auto& c : closure_cases()) {
    const FiniteLanguage l(c.axioms);
    const auto budget = IterationBudget::with_default_cap(8, l, c.rules);
    const auto got = enumerate_upto(c.closure.nfa, 8);
    const auto ref = bounded_closure_reference(c.axioms, c.rules, 8, budget.max_intermediate_len);
    const auto r = r_closure_bounded(l, c.rules, budget);
    o.digest << got.size() << ':' << language_hash(c.closure.nfa) << ',';
    bool ok = got == ref && r.fixpoint && r.words.words() == got;
    for (const auto& w : words8) {
      if (chain_membership(w, c.axioms, c.rules) != c.closure.nfa.accepts(w)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++mismatches;
      o.expect(false, show(c.axioms) + " rules " + c.rules.describe());
    }
  }
  o.expect(mismatches == 0, "200 closures, " + std::to_string(mismatches) + " mismatches");
}

void criterion7(Outcome& o) {
  std::size_t failures = 0;
  for (const auto& c : closure_cases()) {
    const bool fix = includes(c.closure.nfa, gsco_once_regular(c.closure.nfa, c.rules)).holds;
    const bool idem = equivalent(jump_closure_regular(c.closure.nfa, c.rules).nfa, c.closure.nfa);
    o.digest << fix << idem;
    if (!fix || !idem) {
      ++failures;
      o.expect(false, show(c.axioms) + " rules " + c.rules.describe());
    }
  }
  o.expect_total(failures == 0, "200 closures, " + std::to_string(failures) + " failures");
}

void criterion8(Outcome& o) {
  for (const char* re : {"a+b+", "(a|b)*b", "a|b"}) o.expect(verify_decomposition(R(re)).holds, re);
  std::size_t failures = 0, non_crossover = 0, full_rule = 0;
  for (const auto& c : closure_cases()) {
    const auto d = verify_decomposition(c.closure.nfa);
    o.digest << d.holds;
    if (!d.holds) {
      ++failures;
      const bool crossover = is_crossover(c.closure.nfa).holds;
      if (!crossover) ++non_crossover;
      if (c.rules.kind() == RuleSet::Kind::kAllSymbols) ++full_rule;
      o.expect(false, show(c.axioms) + " rules " + c.rules.describe() + " witness " + d.witness->str() +
                          (crossover ? "" : " (not a crossover language)"));
    }
  }
  o.expect_total(failures == 0, "200 closures, " + std::to_string(failures) + " failures, " +
                              std::to_string(non_crossover) + " of them not crossover languages, " +
                              std::to_string(full_rule) + " under all symbols");
  const auto aa = verify_decomposition(R("(aa)+"));
  o.expect(!aa.holds && aa.witness, "(aa)+ fails with a witness");
}

Nfa words_upto(const SymbolSet& sigma, std::size_t n) {
  Nfa out(sigma);
  for (std::size_t k = 1; k <= n; ++k) out = union_of(out, words_of_length(sigma, k));
  return out;
}

void criterion9(Outcome& o) {
  o.expect(block_profile(W("abbbb")) == BlockProfile{U'a', WS("ab bb"), U'b'}, "profile of abbbb");
  const SymbolSet ab{U'a', U'b'};
  std::size_t failures = 0, closures = 0, full_rule_closures = 0;
  for (const auto& c : closure_cases()) {
    const std::size_t before = failures;
    std::set<BlockProfile> seen;
    for (const auto& w : enumerate_upto(c.closure.nfa, 8)) seen.insert(block_profile(w));
    for (const auto& p : seen) {
      const Nfa cls = intersect(profile_automaton(p, ab), words_upto(ab, 8));
      if (!includes(c.closure.nfa, cls).holds) {
        ++failures;
        o.expect(false, show(c.axioms) + " rules " + c.rules.describe() + " class " + p.str());
      }
    }
    if (failures != before) {
      ++closures;
      if (c.rules.kind() == RuleSet::Kind::kAllSymbols) ++full_rule_closures;
    }
    o.digest << seen.size() << ',';
  }
  o.expect_total(failures == 0, "class saturation, " + std::to_string(failures) + " unsaturated classes in " +
                                    std::to_string(closures) + " closures, " +
                                    std::to_string(full_rule_closures) + " of them under all symbols");
  o.expect(count_profiles(1) == 3 && enumerate_profile_space({U'a'}).size() + 1 == 3, "n = 1");
  o.expect(count_profiles(2) == 63 && enumerate_profile_space(ab).size() + 1 == 63, "n = 2");
}

void criterion10(Outcome& o) {
  const auto ab2 = R("a+bb");
  o.expect(is_closed_under(ab2, RuleSet::symbols({U'a'})).holds, "a+b2 closed under a");
  o.expect(!is_closed_under(ab2, RuleSet::symbols({U'b'})).holds, "a+b2 not closed under b");
  const auto sep = R("(aa)+bb(aa)+");
  o.expect(is_st_closed(sep, WS("bb")).holds, "(aa)+b2(aa)+ closed under bb");
  for (Symbol s : {U'a', U'b'})
    o.expect(!is_closed_under(sep, RuleSet::symbols({s})).holds, "(aa)+b2(aa)+ not closed under a symbol");
  const auto slt = is_slt(R("a+b+"));
  o.expect(slt.holds && slt.detail == 2, "slt(a+b+) k = 2");
  o.expect(!is_slt(R("(aa)+")).holds, "slt((aa)+) fails through kmax");
  o.expect(is_combinational(R("(a|b)*b")).holds, "Σ*b combinational");
  o.expect(is_crossover(R("(a|b)*b")).holds, "Σ*b crossover");
}

void criterion11(Outcome& o) {
  const auto sym_langs = gen_finite_langs(base_seed() + 11, 1000, 2, 3, 4);
  const auto str_langs = gen_finite_langs(base_seed() + 12, 1000, 2, 3, 4);
  std::mt19937_64 rng(base_seed() + 13);
  std::size_t divergences = 0;
  auto run = [&](const FiniteLanguage& l, const RuleSet& rules) {
    const auto d = differential_vs_gsco(l.words(), rules, 7);
    o.digest << d.equal;
    if (!d.equal) {
      ++divergences;
      o.expect(false, show(l.words()) + " rules " + rules.describe());
    }
  };
  for (const auto& l : sym_langs) {
    SymbolSet s;
    while (s.empty())
      for (Symbol a : {U'a', U'b'})
        if (rng() % 2) s.insert(a);
    run(l, RuleSet::symbols(s));
  }
  for (const auto& l : str_langs) {
    const auto ws = gen_words(rng(), 2, 2, 1 + rng() % 2);
    run(l, RuleSet::strings(WordSet(ws.begin(), ws.end())));
  }
  o.expect(divergences == 0, "2000 instances, " + std::to_string(divergences) + " divergences");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "example goldens", criterion1},
      {2, "closure golden", criterion2},
      {3, "non-closure golden", criterion3},
      {4, "symbol reduction vs all common factors", criterion4},
      {5, "mode equality on languages", criterion5},
      {6, "closure equivalences", criterion6},
      {7, "fixpoint and idempotence", criterion7},
      {8, "base decomposition", criterion8},
      {9, "class machinery", criterion9},
      {10, "classification fixtures", criterion10},
      {11, "splicing differential", criterion11},
  };
  return list;
}

std::string run_all_digest() {
  std::ostringstream all;
  cached_cases.reset();
  for (const auto& c : criteria()) {
    Outcome o;
    c.run(o);
    all << c.id << ':' << o.pass << ':' << o.digest.str() << '\n';
  }
  return all.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  std::set<int> only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    std::stringstream list(argv[i + 1]);
    std::set<int>& target = flag == "--only" ? only : expected_failures;
    if (flag != "--only" && flag != "--expect-fail") {
      std::cerr << "usage: acceptance [--only LIST] [--expect-fail LIST]\n";
      return 2;
    }
    for (std::string item; std::getline(list, item, ',');) target.insert(std::stoi(item));
  }

  std::set<int> failed;
  std::ostringstream first_digest;
  auto line = [](int id, bool pass, double secs, const std::string& title, const std::vector<std::string>& notes) {
    std::cout << "criterion " << std::setw(2) << id << ": " << (pass ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(2) << std::setw(7) << secs << "s  " << title << "\n";
    for (const auto& n : notes) std::cout << "      " << n << "\n";
  };
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(c.id);
    first_digest << c.id << ':' << o.pass << ':' << o.digest.str() << '\n';
    line(c.id, o.pass, secs, c.title, o.notes);
  }
  if (only.empty() || only.count(12)) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool same = only.empty() ? run_all_digest() == first_digest.str() && run_all_digest() == first_digest.str()
                                   : run_all_digest() == run_all_digest();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!same) failed.insert(12);
    line(12, same, secs, "determinism (criteria 1-11 rerun twice, byte-identical)", {});
  }

  std::cout << (failed.empty() ? "all criteria passed" : std::to_string(failed.size()) + " criterion(s) failed");
  if (!expected_failures.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected_failures) std::cout << " " << id;
  }
  std::cout << "\n";
  return failed == expected_failures ? 0 : 1;
}
