#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "metonym/errors.hpp"
#include "metonym/index.hpp"
#include "metonym/interpreter.hpp"
#include "metonym/token.hpp"

namespace metonym {

// Exit codes: 0 success (all interpretation statuses are results, not
// failures), 1 resource errors, 2 input parse errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitResourceError = 1;
inline constexpr int kExitParseError = 2;

struct CliConfig {
  std::string corpus;
  std::string index;
  std::string frames;
  std::string hierarchy;
  std::string lexicon;
  std::string alpha = "3/2";
  bool unknown_as_source = false;
};

namespace detail {

inline std::ifstream open_or_throw(const std::string& path, std::string_view what) {
  if (path.empty()) throw IoError("no " + std::string(what) + " file configured");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + std::string(what) + " file: " + path);
  return in;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace detail

// Loads every dictionary the interpreter needs. Prefers a prebuilt index
// file over re-ingesting the corpus when both are configured.
inline Resources load_resources(const CliConfig& cfg) {
  Resources res;
  {
    auto in = detail::open_or_throw(cfg.hierarchy, "hierarchy");
    res.hierarchy = IsAHierarchy::load(in);
  }
  {
    auto in = detail::open_or_throw(cfg.lexicon, "lexicon");
    res.lexicon = WordLexicon::load(in, res.hierarchy);
  }
  {
    auto in = detail::open_or_throw(cfg.frames, "frames");
    res.frames = CaseFrameDictionary::load(in, res.hierarchy);
  }
  if (!cfg.index.empty()) {
    auto loaded = load_index_file(cfg.index);
    res.noun_pairs = std::move(loaded.first);
    res.verb_args = std::move(loaded.second);
  } else if (!cfg.corpus.empty()) {
    auto in = detail::open_or_throw(cfg.corpus, "corpus");
    auto idx = ingest(in);
    res.noun_pairs = std::move(idx.noun_pairs);
    res.verb_args = std::move(idx.verb_args);
  } else {
    throw IoError("no corpus or index file configured");
  }
  res.alpha = Rational::parse(cfg.alpha);
  if (!res.alpha.positive()) throw Error("alpha must be positive: " + cfg.alpha);
  res.unknown_as_source = cfg.unknown_as_source;
  return res;
}

// One machine-parseable record per interpretation: tab-separated key=value
// fields in fixed order, absent fields omitted.
inline std::string format_record(const Interpretation& interp) {
  std::string out = "status=";
  out += to_string(interp.status);
  if (!interp.source.empty()) {
    out += "\tsource=" + interp.source;
    out += "\tparticle=" + interp.particle;
  }
  if (!interp.verb.empty()) out += "\tverb=" + interp.verb;
  if (interp.winner) {
    out += "\twinner=" + interp.winner->candidate.word;
    out += "\tscore=" + interp.winner->score.str();
  }
  if (interp.rendered) out += "\trendered=" + detail::join(*interp.rendered);
  return out;
}

// metonym index: ingest a corpus file and persist both indexes.
inline int run_index(const std::string& corpus_path, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
  try {
    auto in = detail::open_or_throw(corpus_path, "corpus");
    const CorpusIndexes idx = ingest(in);
    save_index_file(idx.noun_pairs, idx.verb_args, out_path);
    out << "sentences=" << idx.sentence_count
        << "\tnoun_pair_postings=" << idx.noun_pairs.posting_count()
        << "\tverb_arg_postings=" << idx.verb_args.posting_count() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceError;
  }
}

// metonym interpret: one record per interpretation of a single clause.
inline int run_interpret(const Resources& res, const std::string& clause_text,
                         std::ostream& out, std::ostream& err) {
  InputClause clause;
  try {
    clause = parse_clause(clause_text);
  } catch (const ClauseParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  for (const auto& interp : interpret(clause, res)) {
    out << format_record(interp) << '\n';
  }
  return kExitOk;
}

// metonym batch: records in input order plus a final status tally. A
// malformed line yields an error record and does not disturb the rest.
inline int run_batch(const Resources& res, std::istream& clauses, std::ostream& out) {
  std::map<Status, std::size_t> tally;
  std::size_t total = 0;
  std::size_t errors = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(clauses, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    InputClause clause;
    try {
      clause = parse_clause(line, line_no);
    } catch (const ClauseParseError& e) {
      out << "error=parse\tline=" << line_no << "\tmessage=" << e.what() << '\n';
      ++errors;
      continue;
    }
    for (const auto& interp : interpret(clause, res)) {
      out << format_record(interp) << '\n';
      ++tally[interp.status];
      ++total;
    }
  }
  out << "summary\ttotal=" << total << "\tliteral=" << tally[Status::Literal]
      << "\tstrong=" << tally[Status::Strong] << "\tweak=" << tally[Status::Weak]
      << "\tno_candidates=" << tally[Status::NoCandidates]
      << "\tunknown_word=" << tally[Status::UnknownWord]
      << "\tunknown_verb=" << tally[Status::UnknownVerb] << "\terrors=" << errors << '\n';
  return kExitOk;
}

inline int run_batch_file(const Resources& res, const std::string& clauses_path,
                          std::ostream& out, std::ostream& err) {
  try {
    auto in = detail::open_or_throw(clauses_path, "clauses");
    return run_batch(res, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceError;
  }
}

namespace detail {

inline std::string format_categories(const std::set<CategoryId>& cats) {
  std::string out;
  for (const auto& c : cats) {
    if (!out.empty()) out += "|";
    out += c.name;
  }
  return out;
}

inline void explain_source(const Interpretation& interp, const Resources& res,
                           std::ostream& out) {
  out << "source: " << interp.source << " (" << interp.particle << ")\n";
  if (interp.status == Status::UnknownWord) {
    out << "  not in the word dictionary; not interpreted\n";
    out << "status: " << to_string(interp.status) << '\n';
    return;
  }

  if (interp.diagnostics.empty()) {
    out << "  no corpus candidates for " << interp.source << '\n';
    out << "status: " << to_string(interp.status) << '\n';
    return;
  }

  out << "candidates for " << interp.source << ":\n";
  for (const auto& d : interp.diagnostics) {
    out << "  " << d.candidate.word << " no=" << d.candidate.freq_no
        << " compound=" << d.candidate.freq_compound << " total=" << d.candidate.freq_total()
        << '\n';
  }

  const auto& zset = res.verb_args.zset(interp.verb, interp.particle);
  out << "zset(" << interp.verb << ", " << interp.particle << "): " << zset.size()
      << " words\n";
  out << "filter:\n";
  for (const auto& d : interp.diagnostics) {
    out << "  " << d.candidate.word;
    if (!d.in_lexicon) {
      out << " unknown word -> dropped\n";
      continue;
    }
    out << " frame=" << (d.frame_pass ? "pass" : "fail")
        << " zset=" << (d.zset_pass ? "pass" : "fail")
        << (d.kept ? " -> kept" : " -> dropped") << '\n';
  }

  const bool any_kept_full = std::any_of(interp.diagnostics.begin(), interp.diagnostics.end(),
                                         [](const CandidateDiagnostic& d) { return d.kept; });
  if (!any_kept_full) {
    out << "zset filter left nothing; fallback to case-frame filter only\n";
    bool any = false;
    for (const auto& d : interp.diagnostics) {
      if (d.frame_only()) {
        out << "  " << d.candidate.word << " -> kept\n";
        any = true;
      }
    }
    if (!any) out << "  fallback left nothing\n";
  }

  if (!interp.ranked.empty()) {
    out << "scores (alpha=" << res.alpha.str() << "):\n";
    for (const auto& sc : interp.ranked) {
      out << "  " << sc.candidate.word << " total=" << sc.candidate.freq_total()
          << " super=" << sc.super_freq << " score=" << sc.score.str() << '\n';
    }
    if (interp.ranked.size() < 2) {
      out << "tie-break: none (single candidate)\n";
    } else {
      const auto& a = interp.ranked[0];
      const auto& b = interp.ranked[1];
      if (a.score != b.score) {
        out << "tie-break: by score\n";
      } else if (a.candidate.freq_total() != b.candidate.freq_total()) {
        out << "tie-break: by frequency\n";
      } else {
        out << "tie-break: by word order\n";
      }
    }
  }
  if (interp.winner) out << "winner: " << interp.winner->candidate.word << '\n';
  out << "status: " << to_string(interp.status) << '\n';
  if (interp.rendered) out << "rendered: " << join(*interp.rendered) << '\n';
}

}  // namespace detail

// metonym explain: the full decision trace for one clause.
inline int run_explain(const Resources& res, const std::string& clause_text,
                       std::ostream& out, std::ostream& err) {
  InputClause clause;
  try {
    clause = parse_clause(clause_text);
  } catch (const ClauseParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  std::vector<std::string> words;
  for (const auto& a : clause.arguments) {
    words.push_back(a.noun);
    words.push_back(a.particle);
  }
  words.push_back(clause.verb);
  out << "clause: " << detail::join(words) << '\n';

  const auto* frames = res.frames.find(clause.verb);
  if (!frames || frames->empty()) {
    out << "verb: " << clause.verb << " has no case frame\n";
    out << "status: " << to_string(Status::UnknownVerb) << '\n';
    return kExitOk;
  }

  const CaseFrame& frame = select_frame(*frames, clause, res.lexicon, res.hierarchy);
  out << "verb: " << clause.verb << " (" << frames->size() << " frame"
      << (frames->size() == 1 ? "" : "s") << "), selected frame " << frame.frame_index << '\n';
  for (const auto& slot : frame.slots) {
    out << "  " << slot.particle << ": " << detail::format_categories(slot.allowed) << '\n';
  }

  out << "arguments:\n";
  for (std::size_t i = 0; i < clause.arguments.size(); ++i) {
    const auto& arg = clause.arguments[i];
    out << "  [" << i << "] " << arg.noun << " " << arg.particle << ": ";
    if (!frame.slot_for(arg.particle)) {
      out << "no slot, ignored\n";
    } else if (!res.lexicon.contains(arg.noun)) {
      out << "unknown word\n";
    } else if (satisfies(res.lexicon, res.hierarchy, arg.noun,
                         frame.slot_for(arg.particle)->allowed)) {
      out << "satisfies\n";
    } else {
      out << "violation\n";
    }
  }

  const auto interps = interpret(clause, res);
  for (const auto& interp : interps) {
    if (interp.status == Status::Literal) {
      out << "all slotted arguments satisfy their restrictions\n";
      out << "status: " << to_string(Status::Literal) << '\n';
      continue;
    }
    detail::explain_source(interp, res, out);
  }
  return kExitOk;
}

}  // namespace metonym
