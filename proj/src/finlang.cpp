#include "crosskit/finlang.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crosskit/error.hpp"

namespace crosskit {

FiniteLanguage::FiniteLanguage(WordSet words) : words_(std::move(words)) {
  if (words_.count(Word())) {
    throw Error(ErrorCode::kEpsilonAxiom, "finite languages here never contain the empty word");
  }
}

std::size_t FiniteLanguage::max_word_length() const {
  return words_.empty() ? 0 : words_.rbegin()->size();
}

IterationBudget IterationBudget::with_default_cap(std::size_t max_word_len, const FiniteLanguage& axioms,
                                                  const RuleSet& rules, std::size_t max_rounds) {
  IterationBudget b;
  b.max_rounds = max_rounds;
  b.max_word_len = max_word_len;
  b.max_intermediate_len = max_word_len + axioms.max_word_length() + rules.max_length();
  return b;
}

FiniteLanguage gsco_lang(const FiniteLanguage& l1, const FiniteLanguage& l2, const RuleSet& rules,
                         Mode mode) {
  WordSet out;
  for (const auto& w1 : l1) {
    for (const auto& w2 : l2) {
      auto part = gsco_pair_words(w1, w2, rules, mode);
      out.insert(part.begin(), part.end());
    }
  }
  return FiniteLanguage(std::move(out));
}

namespace {

// Distinct cut pieces for one rule x: "u·x" prefixes and "v" suffixes of
// known words, bucketed by length, each remembering one host occurrence.
struct Piece {
  Word host;
  std::size_t pos0 = 0;
};

class PieceIndex {
 public:
  // Returns false if the piece was already known.
  bool add(const Word& text, const Word& host, std::size_t pos0) {
    if (!index_.emplace(text, Piece{host, pos0}).second) return false;
    if (by_length_.size() <= text.size()) by_length_.resize(text.size() + 1);
    by_length_[text.size()].push_back(text);
    return true;
  }
  const Piece& at(const Word& text) const { return index_.at(text); }
  // Calls fn(text) for every piece of length <= max_len.
  template <typename Fn>
  void each_upto(std::size_t max_len, Fn&& fn) const {
    for (std::size_t len = 0; len < by_length_.size() && len <= max_len; ++len)
      for (const auto& t : by_length_[len]) fn(t);
  }

 private:
  std::unordered_map<Word, Piece> index_;
  std::vector<std::vector<Word>> by_length_;
};

struct RuleIndex {
  Word rule;
  PieceIndex prefixes;
  PieceIndex suffixes;
  PieceIndex axiom_prefixes;
  PieceIndex axiom_suffixes;
};

class ClosureBuilder {
 public:
  ClosureBuilder(const FiniteLanguage& axioms, const RuleSet& rules, const IterationBudget& budget,
                 bool restricted)
      : budget_(budget), restricted_(restricted) {
    if (budget.max_intermediate_len < budget.max_word_len) {
      throw Error(ErrorCode::kInvalidArgument, "intermediate cap must not be below the word-length cap");
    }
    for (const auto& x : rules.resolve(axioms.alphabet())) rules_.push_back(RuleIndex{x, {}, {}, {}, {}});
    for (const auto& w : axioms) {
      known_.insert(w);
      result_.first_round.emplace(w, 0);
      frontier_.push_back(w);
      for (auto& r : rules_) {
        for (std::size_t p = 0; p + r.rule.size() <= w.size(); ++p) {
          if (!w.has_at(p, r.rule)) continue;
          r.axiom_prefixes.add(w.prefix(p + r.rule.size()), w, p);
          r.axiom_suffixes.add(w.suffix_from(p + r.rule.size()), w, p);
        }
      }
    }
  }

  BoundedClosure run() {
    while (result_.rounds < budget_.max_rounds) {
      fresh_.clear();
      round();
      ++result_.rounds;
      if (fresh_.empty()) {
        result_.fixpoint = true;
        break;
      }
      frontier_ = fresh_;
      std::sort(frontier_.begin(), frontier_.end());
    }
    WordSet kept;
    for (const auto& w : known_) {
      result_.intermediate.insert(w);
      if (w.size() <= budget_.max_word_len) kept.insert(w);
    }
    result_.words = FiniteLanguage(std::move(kept));
    return std::move(result_);
  }

 private:
  // Unrestricted: new pieces meet every piece. Restricted: new pieces meet
  // the axioms' pieces only. A piece seen before was crossed when it first
  // appeared, so only first appearances matter.
  void round() {
    const auto cap = budget_.max_intermediate_len;
    for (auto& r : rules_) {
      std::vector<Word> new_pre;
      std::vector<Word> new_suf;
      const auto n = r.rule.size();
      for (const auto& w : frontier_) {
        for (std::size_t p = 0; p + n <= w.size(); ++p) {
          if (!w.has_at(p, r.rule)) continue;
          Word pre = w.prefix(p + n);
          Word suf = w.suffix_from(p + n);
          if (r.prefixes.add(pre, w, p)) new_pre.push_back(std::move(pre));
          if (r.suffixes.add(suf, w, p)) new_suf.push_back(std::move(suf));
        }
      }
      const PieceIndex& pre_side = restricted_ ? r.axiom_prefixes : r.prefixes;
      const PieceIndex& suf_side = restricted_ ? r.axiom_suffixes : r.suffixes;
      for (const auto& pre : new_pre) {
        if (pre.size() > cap) continue;
        suf_side.each_upto(cap - pre.size(), [&](const Word& suf) {
          emit(r.rule, r.prefixes.at(pre), suf_side.at(suf), pre, suf);
        });
      }
      for (const auto& suf : new_suf) {
        if (suf.size() > cap) continue;
        pre_side.each_upto(cap - suf.size(), [&](const Word& pre) {
          emit(r.rule, pre_side.at(pre), r.suffixes.at(suf), pre, suf);
        });
      }
    }
  }

  void emit(const Word& x, const Piece& left, const Piece& right, const Word& pre, const Word& suf) {
    Word out = pre + suf;
    if (known_.count(out)) return;
    known_.insert(out);
    fresh_.push_back(out);
    result_.first_round.emplace(out, result_.rounds + 1);
    result_.derivation.emplace(out, CrossTrace{left.host, right.host, x, ordinal_ref(left.host, x, left.pos0),
                                               ordinal_ref(right.host, x, right.pos0), out});
  }

  static OccurrenceRef ordinal_ref(const Word& host, const Word& x, std::size_t pos0) {
    std::size_t ordinal = 0;
    for (std::size_t p = 0; p <= pos0; ++p)
      if (host.has_at(p, x)) ++ordinal;
    return OccurrenceRef{x, pos0 + 1, ordinal};
  }

  IterationBudget budget_;
  bool restricted_;
  std::vector<RuleIndex> rules_;
  std::unordered_set<Word> known_;
  std::vector<Word> frontier_;
  std::vector<Word> fresh_;
  BoundedClosure result_;
};

}  // namespace

BoundedClosure u_closure_bounded(const FiniteLanguage& axioms, const RuleSet& rules,
                                 const IterationBudget& budget) {
  return ClosureBuilder(axioms, rules, budget, false).run();
}

BoundedClosure r_closure_bounded(const FiniteLanguage& axioms, const RuleSet& rules,
                                 const IterationBudget& budget) {
  return ClosureBuilder(axioms, rules, budget, true).run();
}

bool derivation_replays(const BoundedClosure& closure, const FiniteLanguage& axioms, const Word& w) {
  std::vector<Word> pending{w};
  std::unordered_set<Word> checked;
  while (!pending.empty()) {
    Word cur = pending.back();
    pending.pop_back();
    if (!checked.insert(cur).second || axioms.contains(cur)) continue;
    auto it = closure.derivation.find(cur);
    if (it == closure.derivation.end()) return false;
    const auto& t = it->second;
    try {
      if (replay(t) != cur) return false;
    } catch (const Error&) {
      return false;
    }
    // Parents must be strictly older, which rules out cycles.
    auto round_of = [&closure](const Word& v) {
      auto r = closure.first_round.find(v);
      return r == closure.first_round.end() ? std::size_t(-1) : r->second;
    };
    if (round_of(t.left) >= round_of(cur) || round_of(t.right) >= round_of(cur)) return false;
    pending.push_back(t.left);
    pending.push_back(t.right);
  }
  return true;
}

BaseSets base_of_finite(const FiniteLanguage& l) {
  BaseSets out;
  for (const auto& w : l) {
    out.starts.insert(w.front());
    out.ends.insert(w.back());
    if (w.size() == 1) {
      out.units.insert(w);
      continue;
    }
    for (std::size_t i = 0; i + 2 <= w.size(); ++i) out.blocks.insert(w.slice(i, i + 2));
  }
  return out;
}

}  // namespace crosskit
