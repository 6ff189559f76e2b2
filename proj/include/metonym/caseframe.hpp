#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "metonym/errors.hpp"
#include "metonym/hierarchy.hpp"
#include "metonym/lexicon.hpp"
#include "metonym/text_util.hpp"

namespace metonym {

// The case particle inventory. "no" is adnominal, not a case particle, and
// never appears in a case slot.
inline const std::set<std::string>& case_particles() {
  static const std::set<std::string> particles{"ga", "wo", "ni", "de",
                                               "to", "kara", "made", "he"};
  return particles;
}

inline bool is_case_particle(std::string_view p) {
  return case_particles().count(std::string(p)) > 0;
}

struct CaseSlot {
  std::string particle;
  std::set<CategoryId> allowed;
};

struct CaseFrame {
  std::string verb;
  std::size_t frame_index = 0;
  std::vector<CaseSlot> slots;  // distinct particles, file order

  const CaseSlot* slot_for(const std::string& particle) const {
    for (const auto& s : slots) {
      if (s.particle == particle) return &s;
    }
    return nullptr;
  }
};

struct ClauseArgument {
  std::string noun;
  std::string particle;
};

// "Noun + Case-Particle", ..., "Predicative-Verb" structure of one clause.
struct InputClause {
  std::vector<ClauseArgument> arguments;
  std::string verb;
};

struct Violation {
  std::size_t arg_index = 0;
  std::string noun;
  std::string particle;
};

struct UnknownArgument {
  std::size_t arg_index = 0;
  std::string noun;
  std::string particle;
};

// Outcome of checking a clause against a selected frame. An argument index
// appears in violations or unknown_words, never both.
struct SourceReport {
  CaseFrame frame;
  std::vector<Violation> violations;
  std::vector<UnknownArgument> unknown_words;
};

class CaseFrameDictionary {
public:
  void add(CaseFrame frame) {
    auto& list = frames_[frame.verb];
    frame.frame_index = list.size();
    list.push_back(std::move(frame));
  }

  bool contains(const std::string& verb) const { return frames_.count(verb) > 0; }

  const std::vector<CaseFrame>* find(const std::string& verb) const {
    const auto it = frames_.find(verb);
    return it == frames_.end() ? nullptr : &it->second;
  }

  std::size_t verb_count() const { return frames_.size(); }

  // One frame per line: `verb<TAB>particle1:catA|catB<TAB>particle2:catC`.
  // Frames keep file order per verb; frame_index is that order.
  static CaseFrameDictionary load(std::istream& in, const IsAHierarchy& h) {
    CaseFrameDictionary dict;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      const auto fields = split(trim(line), '\t');
      const auto verb = trim(fields[0]);
      if (verb.empty()) throw MalformedLineError(line_no, "empty verb");
      CaseFrame frame;
      frame.verb = std::string(verb);
      std::set<std::string> seen_particles;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto field = trim(fields[i]);
        if (field.empty()) throw MalformedLineError(line_no, "empty slot field");
        const auto colon = field.find(':');
        if (colon == std::string_view::npos) {
          throw MalformedLineError(line_no, "slot must be `particle:cat|cat`");
        }
        CaseSlot slot;
        slot.particle = std::string(trim(field.substr(0, colon)));
        if (!is_case_particle(slot.particle)) {
          throw MalformedLineError(line_no, "not a case particle: " + slot.particle);
        }
        if (!seen_particles.insert(slot.particle).second) {
          throw MalformedLineError(line_no, "duplicate particle: " + slot.particle);
        }
        for (const auto piece : split(field.substr(colon + 1), '|')) {
          const auto name = trim(piece);
          if (name.empty()) throw MalformedLineError(line_no, "empty category");
          const CategoryId cat{std::string(name)};
          if (!h.contains(cat)) throw UnknownCategoryError(cat.name);
          slot.allowed.insert(cat);
        }
        if (slot.allowed.empty()) throw MalformedLineError(line_no, "empty category set");
        frame.slots.push_back(std::move(slot));
      }
      dict.add(std::move(frame));
    }
    return dict;
  }

private:
  std::map<std::string, std::vector<CaseFrame>> frames_;
};

// Number of clause arguments whose particle has a slot in `frame` and whose
// noun satisfies that slot. Unknown nouns count as non-satisfying here.
inline std::size_t frame_satisfaction_count(const CaseFrame& frame, const InputClause& clause,
                                            const WordLexicon& lex, const IsAHierarchy& h) {
  std::size_t n = 0;
  for (const auto& arg : clause.arguments) {
    const auto* slot = frame.slot_for(arg.particle);
    if (!slot) continue;
    if (!lex.contains(arg.noun)) continue;
    if (satisfies(lex, h, arg.noun, slot->allowed)) ++n;
  }
  return n;
}

// Picks the frame satisfying the most arguments; ties go to the lowest
// frame_index, so selection is deterministic.
inline const CaseFrame& select_frame(const std::vector<CaseFrame>& frames,
                                     const InputClause& clause, const WordLexicon& lex,
                                     const IsAHierarchy& h) {
  if (frames.empty()) throw Error("select_frame: no frames");
  const CaseFrame* best = &frames.front();
  std::size_t best_count = frame_satisfaction_count(*best, clause, lex, h);
  for (std::size_t i = 1; i < frames.size(); ++i) {
    const std::size_t count = frame_satisfaction_count(frames[i], clause, lex, h);
    if (count > best_count) {
      best = &frames[i];
      best_count = count;
    }
  }
  return *best;
}

// The source word is any noun that fails its slot's selectional
// restriction. Arguments whose particle has no slot in the frame are
// ignored; nouns missing from the lexicon are reported separately.
inline SourceReport detect_source(const InputClause& clause, const CaseFrame& frame,
                                  const WordLexicon& lex, const IsAHierarchy& h) {
  SourceReport report;
  report.frame = frame;
  for (std::size_t i = 0; i < clause.arguments.size(); ++i) {
    const auto& arg = clause.arguments[i];
    const auto* slot = frame.slot_for(arg.particle);
    if (!slot) continue;
    if (!lex.contains(arg.noun)) {
      report.unknown_words.push_back({i, arg.noun, arg.particle});
      continue;
    }
    if (!satisfies(lex, h, arg.noun, slot->allowed)) {
      report.violations.push_back({i, arg.noun, arg.particle});
    }
  }
  return report;
}

}  // namespace metonym
