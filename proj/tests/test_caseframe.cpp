#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>

#include "metonym/caseframe.hpp"
#include "metonym/token.hpp"

using metonym::CaseFrame;
using metonym::CaseFrameDictionary;
using metonym::CategoryId;
using metonym::InputClause;
using metonym::IsAHierarchy;
using metonym::WordLexicon;

namespace {

CategoryId cat(const std::string& name) { return CategoryId{name}; }

IsAHierarchy load_h(const std::string& text) {
  std::istringstream in(text);
  return IsAHierarchy::load(in);
}

WordLexicon load_lex(const std::string& text, const IsAHierarchy& h) {
  std::istringstream in(text);
  return WordLexicon::load(in, h);
}

CaseFrameDictionary load_frames(const std::string& text, const IsAHierarchy& h) {
  std::istringstream in(text);
  return CaseFrameDictionary::load(in, h);
}

struct Fixture {
  IsAHierarchy h = load_h("human\nbook\nnewspaper\nnovel\nplace\n");
  WordLexicon lex = load_lex(
      "boku\thuman\ntorusutoi\thuman\nshinbun\tnewspaper\nhon\tbook\nniwa\tplace\n", h);
};

}  // namespace

TEST_CASE("load_frames parses the two-slot frame") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book|newspaper|novel\n", f.h);
  const auto* frames = dict.find("yomu");
  REQUIRE(frames != nullptr);
  REQUIRE(frames->size() == 1);
  const auto& frame = frames->front();
  REQUIRE(frame.slots.size() == 2);
  REQUIRE(frame.slot_for("ga") != nullptr);
  REQUIRE(frame.slot_for("ga")->allowed == std::set<CategoryId>{cat("human")});
  REQUIRE(frame.slot_for("wo")->allowed ==
          std::set<CategoryId>{cat("book"), cat("newspaper"), cat("novel")});
  REQUIRE(frame.slot_for("ni") == nullptr);
}

TEST_CASE("load_frames: empty stream yields empty dictionary") {
  Fixture f;
  const auto dict = load_frames("", f.h);
  REQUIRE(dict.verb_count() == 0);
  REQUIRE(dict.find("yomu") == nullptr);
}

TEST_CASE("load_frames rejects duplicate particles in one frame") {
  Fixture f;
  REQUIRE_THROWS_AS(load_frames("yomu\tga:human\tga:book\n", f.h),
                    metonym::MalformedLineError);
}

TEST_CASE("load_frames rejects non-case particles and unknown categories") {
  Fixture f;
  REQUIRE_THROWS_AS(load_frames("yomu\tno:human\n", f.h), metonym::MalformedLineError);
  REQUIRE_THROWS_AS(load_frames("yomu\tga:ghost\n", f.h), metonym::UnknownCategoryError);
}

TEST_CASE("frames keep file order per verb") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\nyomu\two:book\n", f.h);
  const auto* frames = dict.find("yomu");
  REQUIRE(frames->size() == 2);
  REQUIRE((*frames)[0].frame_index == 0);
  REQUIRE((*frames)[0].slot_for("ga") != nullptr);
  REQUIRE((*frames)[1].frame_index == 1);
  REQUIRE((*frames)[1].slot_for("wo") != nullptr);
}

TEST_CASE("select_frame: single frame is returned") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book|newspaper|novel\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"torusutoi", "wo"}}, "yomu"};
  const auto& frame = select_frame(*dict.find("yomu"), clause, f.lex, f.h);
  REQUIRE(frame.frame_index == 0);
}

TEST_CASE("select_frame maximizes satisfied arguments") {
  Fixture f;
  // Frame 0 satisfies only boku-ga; frame 1 satisfies boku-ga and hon-wo.
  const auto dict = load_frames("yomu\tga:human\two:place\nyomu\tga:human\two:book\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"hon", "wo"}}, "yomu"};
  REQUIRE(select_frame(*dict.find("yomu"), clause, f.lex, f.h).frame_index == 1);
}

TEST_CASE("select_frame breaks ties toward the lowest frame index") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\nyomu\tga:human\two:book\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"shinbun", "wo"}}, "yomu"};
  // Both frames satisfy exactly one argument.
  REQUIRE(select_frame(*dict.find("yomu"), clause, f.lex, f.h).frame_index == 0);
}

TEST_CASE("select_frame counts unknown words as non-satisfying") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\nyomu\two:book\n", f.h);
  const InputClause clause{{{"dareka", "ga"}, {"hon", "wo"}}, "yomu"};
  REQUIRE(select_frame(*dict.find("yomu"), clause, f.lex, f.h).frame_index == 1);
}

TEST_CASE("detect_source flags the restriction-violating argument") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book|newspaper|novel\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"torusutoi", "wo"}}, "yomu"};
  const auto report = detect_source(clause, dict.find("yomu")->front(), f.lex, f.h);
  REQUIRE(report.violations.size() == 1);
  REQUIRE(report.violations[0].noun == "torusutoi");
  REQUIRE(report.violations[0].particle == "wo");
  REQUIRE(report.violations[0].arg_index == 1);
  REQUIRE(report.unknown_words.empty());
}

TEST_CASE("detect_source: literal clause has no violations") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book|newspaper|novel\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"shinbun", "wo"}}, "yomu"};
  const auto report = detect_source(clause, dict.find("yomu")->front(), f.lex, f.h);
  REQUIRE(report.violations.empty());
  REQUIRE(report.unknown_words.empty());
}

TEST_CASE("detect_source routes unknown nouns to unknown_words") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book|newspaper|novel\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"banana-bon", "wo"}}, "yomu"};
  const auto report = detect_source(clause, dict.find("yomu")->front(), f.lex, f.h);
  REQUIRE(report.violations.empty());
  REQUIRE(report.unknown_words.size() == 1);
  REQUIRE(report.unknown_words[0].noun == "banana-bon");
}

TEST_CASE("detect_source ignores arguments without a slot") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\n", f.h);
  // niwa-wo has no wo slot; completely-unknown noun at de has no slot either.
  const InputClause clause{{{"boku", "ga"}, {"niwa", "wo"}, {"fushigi", "de"}}, "yomu"};
  const auto report = detect_source(clause, dict.find("yomu")->front(), f.lex, f.h);
  REQUIRE(report.violations.empty());
  REQUIRE(report.unknown_words.empty());
}

TEST_CASE("violations never name a particle outside the frame") {
  std::mt19937 rng(555);
  const Fixture f;
  const std::vector<std::string> particles{"ga", "wo", "ni", "de"};
  const std::vector<std::string> nouns{"boku", "torusutoi", "shinbun", "hon", "niwa", "nai"};
  for (int iter = 0; iter < 50; ++iter) {
    const auto dict =
        load_frames(rng() % 2 == 0 ? "v\tga:human\n" : "v\tga:human\two:book\n", f.h);
    InputClause clause;
    clause.verb = "v";
    const int nargs = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nargs; ++i) {
      clause.arguments.push_back({nouns[rng() % nouns.size()], particles[rng() % particles.size()]});
    }
    const auto& frame = dict.find("v")->front();
    const auto report = detect_source(clause, frame, f.lex, f.h);
    for (const auto& v : report.violations) {
      REQUIRE(frame.slot_for(v.particle) != nullptr);
    }
    for (const auto& u : report.unknown_words) {
      REQUIRE(frame.slot_for(u.particle) != nullptr);
      for (const auto& v : report.violations) REQUIRE(v.arg_index != u.arg_index);
    }
  }
}

TEST_CASE("widening a slot never adds violations") {
  Fixture f;
  const auto narrow = load_frames("yomu\tga:human\two:book\n", f.h);
  const auto wide = load_frames("yomu\tga:human\two:book|newspaper|place\n", f.h);
  const std::vector<InputClause> clauses = {
      {{{"boku", "ga"}, {"shinbun", "wo"}}, "yomu"},
      {{{"boku", "ga"}, {"niwa", "wo"}}, "yomu"},
      {{{"torusutoi", "ga"}, {"hon", "wo"}}, "yomu"},
  };
  for (const auto& clause : clauses) {
    const auto before = detect_source(clause, narrow.find("yomu")->front(), f.lex, f.h);
    const auto after = detect_source(clause, wide.find("yomu")->front(), f.lex, f.h);
    for (const auto& v : after.violations) {
      const bool was_violating = std::any_of(
          before.violations.begin(), before.violations.end(),
          [&](const metonym::Violation& b) { return b.arg_index == v.arg_index; });
      REQUIRE(was_violating);
    }
  }
}

TEST_CASE("select_frame is deterministic") {
  Fixture f;
  const auto dict = load_frames("yomu\tga:human\two:book\nyomu\tga:human\two:newspaper\n", f.h);
  const InputClause clause{{{"boku", "ga"}, {"shinbun", "wo"}}, "yomu"};
  const auto first = select_frame(*dict.find("yomu"), clause, f.lex, f.h).frame_index;
  for (int i = 0; i < 10; ++i) {
    REQUIRE(select_frame(*dict.find("yomu"), clause, f.lex, f.h).frame_index == first);
  }
}

TEST_CASE("parse_clause extracts noun-particle pairs and the final verb") {
  const auto clause = metonym::parse_clause("boku/N ga/P:ga torusutoi/N wo/P:wo yomu/V");
  REQUIRE(clause.verb == "yomu");
  REQUIRE(clause.arguments.size() == 2);
  REQUIRE(clause.arguments[0].noun == "boku");
  REQUIRE(clause.arguments[0].particle == "ga");
  REQUIRE(clause.arguments[1].noun == "torusutoi");
  REQUIRE(clause.arguments[1].particle == "wo");
}

TEST_CASE("parse_clause rejects clauses without verb or arguments") {
  REQUIRE_THROWS_AS(metonym::parse_clause("boku/N ga/P:ga"), metonym::ClauseParseError);
  REQUIRE_THROWS_AS(metonym::parse_clause("yomu/V"), metonym::ClauseParseError);
  REQUIRE_THROWS_AS(metonym::parse_clause("boku/X ga/P:ga yomu/V"),
                    metonym::ClauseParseError);
}
