#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "metonym/caseframe.hpp"
#include "metonym/hierarchy.hpp"
#include "metonym/index.hpp"
#include "metonym/lexicon.hpp"
#include "metonym/rational.hpp"

namespace metonym {

// A target-word candidate (a Y) with its corpus frequencies per pattern.
struct Candidate {
  std::string word;
  std::uint64_t freq_no = 0;
  std::uint64_t freq_compound = 0;

  std::uint64_t freq_total() const { return freq_no + freq_compound; }

  PairPattern dominant_pattern() const {
    return freq_compound > freq_no ? PairPattern::COMPOUND : PairPattern::NO;
  }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct ScoredCandidate {
  Candidate candidate;
  std::uint64_t super_freq = 0;
  Rational score;  // alpha * freq_total + super_freq, exact

  friend bool operator==(const ScoredCandidate&, const ScoredCandidate&) = default;
};

// Filter verdicts for one raw candidate, kept for explanation output.
struct CandidateDiagnostic {
  Candidate candidate;
  bool in_lexicon = false;
  bool frame_pass = false;  // satisfies the slot's selectional restriction
  bool zset_pass = false;   // appears in the verb's Z-set
  bool kept = false;        // passed both filters

  bool frame_only() const { return in_lexicon && frame_pass; }
};

struct FilterResult {
  std::vector<Candidate> kept;
  std::vector<CandidateDiagnostic> diagnostics;  // one per input candidate
};

enum class Status { Literal, Strong, Weak, NoCandidates, UnknownWord, UnknownVerb };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Literal: return "LITERAL";
    case Status::Strong: return "STRONG";
    case Status::Weak: return "WEAK";
    case Status::NoCandidates: return "NO_CANDIDATES";
    case Status::UnknownWord: return "UNKNOWN_WORD";
    case Status::UnknownVerb: return "UNKNOWN_VERB";
  }
  return "UNKNOWN";
}

// Result of interpreting one clause with respect to one source word.
// winner is present exactly for STRONG and WEAK, and is the head of ranked.
struct Interpretation {
  std::string source;    // the X; empty for LITERAL / UNKNOWN_VERB
  std::string verb;      // the W
  std::string particle;  // case particle of the source argument
  std::size_t arg_index = 0;
  Status status = Status::Literal;
  std::vector<ScoredCandidate> ranked;
  std::optional<ScoredCandidate> winner;
  std::optional<std::vector<std::string>> rendered;
  std::vector<CandidateDiagnostic> diagnostics;
};

// Everything interpret() reads. Immutable; clauses may be interpreted
// concurrently against one Resources instance.
struct Resources {
  IsAHierarchy hierarchy;
  WordLexicon lexicon;
  CaseFrameDictionary frames;
  NounPairIndex noun_pairs;
  VerbArgIndex verb_args;
  Rational alpha{3, 2};
  bool unknown_as_source = false;
};

// Merges the NO / COMPOUND postings for x into per-word candidates,
// ordered by descending combined frequency then word.
inline std::vector<Candidate> collect_candidates(const NounPairIndex& idx,
                                                 const std::string& x) {
  std::vector<Candidate> out;
  for (const auto& posting : idx.candidates_for(x)) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Candidate& c) { return c.word == posting.target; });
    if (it == out.end()) {
      out.push_back({posting.target, 0, 0});
      it = out.end() - 1;
    }
    if (posting.pattern == PairPattern::NO) {
      it->freq_no += posting.count;
    } else {
      it->freq_compound += posting.count;
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.freq_total() != b.freq_total()) return a.freq_total() > b.freq_total();
    return a.word < b.word;
  });
  return out;
}

// Keeps candidates that satisfy the slot restriction and belong to the
// Z-set. Candidates missing from the lexicon are dropped and flagged, not
// treated as errors.
inline FilterResult filter_candidates(const std::vector<Candidate>& cands,
                                      const std::set<CategoryId>& slot_allowed,
                                      const std::map<std::string, std::uint64_t>& zset,
                                      const WordLexicon& lex, const IsAHierarchy& h) {
  FilterResult result;
  result.diagnostics.reserve(cands.size());
  for (const auto& c : cands) {
    CandidateDiagnostic d;
    d.candidate = c;
    d.in_lexicon = lex.contains(c.word);
    d.frame_pass = d.in_lexicon && satisfies(lex, h, c.word, slot_allowed);
    d.zset_pass = zset.count(c.word) > 0;
    d.kept = d.frame_pass && d.zset_pass;
    if (d.kept) result.kept.push_back(c);
    result.diagnostics.push_back(std::move(d));
  }
  return result;
}

// Total frequency of the super-ordinate words of c among the surviving
// candidates. Filtered-out words never contribute.
inline std::uint64_t superordinate_frequency(const std::vector<Candidate>& kept,
                                             const Candidate& c, const WordLexicon& lex,
                                             const IsAHierarchy& h) {
  std::uint64_t total = 0;
  for (const auto& other : kept) {
    if (other.word == c.word) continue;
    if (is_superordinate_word(lex, h, other.word, c.word)) total += other.freq_total();
  }
  return total;
}

// score = alpha * freq_total + super_freq, compared exactly. Order:
// descending score, then descending freq_total, then word ascending.
inline std::vector<ScoredCandidate> score_and_rank(const std::vector<Candidate>& kept,
                                                   const Rational& alpha,
                                                   const WordLexicon& lex,
                                                   const IsAHierarchy& h) {
  std::vector<ScoredCandidate> out;
  out.reserve(kept.size());
  for (const auto& c : kept) {
    ScoredCandidate sc;
    sc.candidate = c;
    sc.super_freq = superordinate_frequency(kept, c, lex, h);
    sc.score = alpha * static_cast<std::int64_t>(c.freq_total()) +
               Rational(static_cast<std::int64_t>(sc.super_freq));
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.score != b.score) return b.score < a.score;
    if (a.candidate.freq_total() != b.candidate.freq_total()) {
      return a.candidate.freq_total() > b.candidate.freq_total();
    }
    return a.candidate.word < b.candidate.word;
  });
  return out;
}

// Puts the target word back into the clause: "X no Y" or compound "X Y"
// after the source noun, every other token unchanged.
inline std::vector<std::string> render(const InputClause& clause, std::size_t source_index,
                                       const ScoredCandidate& winner) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < clause.arguments.size(); ++i) {
    const auto& arg = clause.arguments[i];
    out.push_back(arg.noun);
    if (i == source_index) {
      if (winner.candidate.dominant_pattern() == PairPattern::NO) out.push_back("no");
      out.push_back(winner.candidate.word);
    }
    out.push_back(arg.particle);
  }
  out.push_back(clause.verb);
  return out;
}

namespace detail {

// Candidate pipeline for one violating argument.
inline Interpretation interpret_source(const InputClause& clause, const CaseFrame& frame,
                                       std::size_t arg_index, const Resources& res) {
  const auto& arg = clause.arguments[arg_index];
  Interpretation interp;
  interp.source = arg.noun;
  interp.verb = clause.verb;
  interp.particle = arg.particle;
  interp.arg_index = arg_index;

  const auto* slot = frame.slot_for(arg.particle);
  const auto cands = collect_candidates(res.noun_pairs, arg.noun);
  if (!slot || cands.empty()) {
    interp.status = Status::NoCandidates;
    return interp;
  }

  const auto& zset = res.verb_args.zset(clause.verb, arg.particle);
  auto filtered = filter_candidates(cands, slot->allowed, zset, res.lexicon, res.hierarchy);
  interp.diagnostics = filtered.diagnostics;

  std::vector<Candidate> kept = std::move(filtered.kept);
  Status status = Status::Strong;
  if (kept.empty()) {
    // Data sparsity fallback: keep the case-frame filter, waive the Z-set.
    for (const auto& d : interp.diagnostics) {
      if (d.frame_only()) kept.push_back(d.candidate);
    }
    status = Status::Weak;
  }
  if (kept.empty()) {
    interp.status = Status::NoCandidates;
    return interp;
  }

  interp.status = status;
  interp.ranked = score_and_rank(kept, res.alpha, res.lexicon, res.hierarchy);
  interp.winner = interp.ranked.front();
  interp.rendered = render(clause, arg_index, *interp.winner);
  return interp;
}

}  // namespace detail

// Full pipeline: frame selection, source detection, then one independent
// interpretation per violating argument. Statuses are data, not errors.
inline std::vector<Interpretation> interpret(const InputClause& clause, const Resources& res) {
  std::vector<Interpretation> results;

  const auto* frames = res.frames.find(clause.verb);
  if (!frames || frames->empty()) {
    Interpretation interp;
    interp.verb = clause.verb;
    interp.status = Status::UnknownVerb;
    results.push_back(std::move(interp));
    return results;
  }

  const CaseFrame& frame = select_frame(*frames, clause, res.lexicon, res.hierarchy);
  const SourceReport report = detect_source(clause, frame, res.lexicon, res.hierarchy);

  struct SourceArg {
    std::size_t arg_index;
    bool unknown;
  };
  std::vector<SourceArg> sources;
  for (const auto& v : report.violations) sources.push_back({v.arg_index, false});
  for (const auto& u : report.unknown_words) sources.push_back({u.arg_index, true});
  std::sort(sources.begin(), sources.end(),
            [](const SourceArg& a, const SourceArg& b) { return a.arg_index < b.arg_index; });

  if (sources.empty()) {
    Interpretation interp;
    interp.verb = clause.verb;
    interp.status = Status::Literal;
    results.push_back(std::move(interp));
    return results;
  }

  for (const auto& s : sources) {
    if (s.unknown && !res.unknown_as_source) {
      Interpretation interp;
      interp.source = clause.arguments[s.arg_index].noun;
      interp.verb = clause.verb;
      interp.particle = clause.arguments[s.arg_index].particle;
      interp.arg_index = s.arg_index;
      interp.status = Status::UnknownWord;
      results.push_back(std::move(interp));
      continue;
    }
    results.push_back(detail::interpret_source(clause, frame, s.arg_index, res));
  }
  return results;
}

}  // namespace metonym
