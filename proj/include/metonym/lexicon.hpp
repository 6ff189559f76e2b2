#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "metonym/errors.hpp"
#include "metonym/hierarchy.hpp"
#include "metonym/text_util.hpp"

namespace metonym {

// Surface form -> semantic categories. Lookup is exact on the surface
// string; no morphological normalization.
class WordLexicon {
public:
  void add(const std::string& word, std::set<CategoryId> cats, const IsAHierarchy& h) {
    if (word.empty()) throw Error("empty surface form");
    if (cats.empty()) throw Error("word with no categories: " + word);
    for (const auto& c : cats) {
      if (!h.contains(c)) throw UnknownCategoryError(c.name);
    }
    entries_[word].merge(cats);
  }

  bool contains(const std::string& word) const { return entries_.count(word) > 0; }

  const std::set<CategoryId>& categories(const std::string& word) const {
    const auto it = entries_.find(word);
    if (it == entries_.end()) throw UnknownWordError(word);
    return it->second;
  }

  const std::set<CategoryId>* find(const std::string& word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }

  // One `surface<TAB>cat1|cat2|...` entry per line; `#` comments.
  // Duplicate surfaces merge their category sets.
  static WordLexicon load(std::istream& in, const IsAHierarchy& h) {
    WordLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (is_comment_or_blank(line)) continue;
      const auto fields = split(trim(line), '\t');
      if (fields.size() != 2) {
        throw MalformedLineError(line_no, "expected `surface<TAB>cat1|cat2|...`");
      }
      const auto surface = trim(fields[0]);
      std::set<CategoryId> cats;
      for (const auto piece : split(fields[1], '|')) {
        const auto name = trim(piece);
        if (name.empty()) throw MalformedLineError(line_no, "empty category");
        cats.insert(CategoryId(std::string(name)));
      }
      if (surface.empty() || cats.empty()) {
        throw MalformedLineError(line_no, "empty surface or category list");
      }
      lex.add(std::string(surface), std::move(cats), h);
    }
    return lex;
  }

private:
  std::map<std::string, std::set<CategoryId>> entries_;
};

// True iff some category of `word` equals, or has as ancestor, a member of
// `allowed`. Throws UnknownWordError for words outside the lexicon; that is
// a distinct outcome from false.
inline bool satisfies(const WordLexicon& lex, const IsAHierarchy& h, const std::string& word,
                      const std::set<CategoryId>& allowed) {
  const auto& cats = lex.categories(word);
  for (const auto& c : cats) {
    if (allowed.count(c)) return true;
    for (const auto& a : allowed) {
      if (h.is_ancestor(a, c)) return true;
    }
  }
  return false;
}

// Word-level is-a relation: `upper` is a super-ordinate word of `lower`
// when some category of `upper` is a strict ancestor of some category of
// `lower`. Words absent from the lexicon relate to nothing.
inline bool is_superordinate_word(const WordLexicon& lex, const IsAHierarchy& h,
                                  const std::string& upper, const std::string& lower) {
  const auto* upper_cats = lex.find(upper);
  const auto* lower_cats = lex.find(lower);
  if (!upper_cats || !lower_cats) return false;
  for (const auto& lc : *lower_cats) {
    for (const auto& uc : *upper_cats) {
      if (h.is_ancestor(uc, lc)) return true;
    }
  }
  return false;
}

}  // namespace metonym
