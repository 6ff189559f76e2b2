#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metonym/errors.hpp"
#include "metonym/text_util.hpp"
#include "metonym/token.hpp"

namespace metonym {

enum class PairPattern { NO, COMPOUND };

inline std::string_view to_string(PairPattern p) {
  return p == PairPattern::NO ? "NO" : "COMPOUND";
}

struct PairPosting {
  std::string target;  // the Y
  PairPattern pattern = PairPattern::NO;
  std::uint64_t count = 0;

  friend bool operator==(const PairPosting&, const PairPosting&) = default;
};

// Counted postings of (X, Y, pattern) harvested from "X no Y" and compound
// "X Y" occurrences. Immutable after ingestion; ordered maps keep
// serialization canonical.
class NounPairIndex {
public:
  void add(const std::string& x, const std::string& y, PairPattern pattern,
           std::uint64_t n = 1) {
    postings_[x][{y, pattern}] += n;
  }

  // All postings under x: descending count, then Y ascending, then NO
  // before COMPOUND. A total order, so output never depends on platform.
  std::vector<PairPosting> candidates_for(const std::string& x) const {
    std::vector<PairPosting> out;
    const auto it = postings_.find(x);
    if (it == postings_.end()) return out;
    for (const auto& [key, count] : it->second) {
      out.push_back({key.first, key.second, count});
    }
    std::sort(out.begin(), out.end(), [](const PairPosting& a, const PairPosting& b) {
      if (a.count != b.count) return a.count > b.count;
      if (a.target != b.target) return a.target < b.target;
      return a.pattern < b.pattern;
    });
    return out;
  }

  std::size_t posting_count() const {
    std::size_t n = 0;
    for (const auto& [x, m] : postings_) n += m.size();
    return n;
  }

  std::uint64_t total_count() const {
    std::uint64_t n = 0;
    for (const auto& [x, m] : postings_) {
      for (const auto& [key, count] : m) n += count;
    }
    return n;
  }

  // Commutative count-sum merge; sharded ingestion plus merge equals
  // single-threaded ingestion.
  NounPairIndex& operator+=(const NounPairIndex& other) {
    for (const auto& [x, m] : other.postings_) {
      for (const auto& [key, count] : m) postings_[x][key] += count;
    }
    return *this;
  }

  friend bool operator==(const NounPairIndex&, const NounPairIndex&) = default;

  template <typename Fn>  // fn(x, y, pattern, count) in canonical order
  void for_each(Fn&& fn) const {
    for (const auto& [x, m] : postings_) {
      for (const auto& [key, count] : m) fn(x, key.first, key.second, count);
    }
  }

private:
  std::map<std::string, std::map<std::pair<std::string, PairPattern>, std::uint64_t>> postings_;
};

// Counted postings of (Z, particle, W) from "Z case-particle ... W"
// occurrences; zset(W, particle) is the verb's empirical restriction.
class VerbArgIndex {
public:
  void add(const std::string& verb, const std::string& particle, const std::string& z,
           std::uint64_t n = 1) {
    postings_[{verb, particle}][z] += n;
  }

  const std::map<std::string, std::uint64_t>& zset(const std::string& verb,
                                                   const std::string& particle) const {
    static const std::map<std::string, std::uint64_t> empty;
    const auto it = postings_.find({verb, particle});
    return it == postings_.end() ? empty : it->second;
  }

  std::size_t posting_count() const {
    std::size_t n = 0;
    for (const auto& [key, m] : postings_) n += m.size();
    return n;
  }

  std::uint64_t total_count() const {
    std::uint64_t n = 0;
    for (const auto& [key, m] : postings_) {
      for (const auto& [z, count] : m) n += count;
    }
    return n;
  }

  VerbArgIndex& operator+=(const VerbArgIndex& other) {
    for (const auto& [key, m] : other.postings_) {
      for (const auto& [z, count] : m) postings_[key][z] += count;
    }
    return *this;
  }

  friend bool operator==(const VerbArgIndex&, const VerbArgIndex&) = default;

  template <typename Fn>  // fn(verb, particle, z, count) in canonical order
  void for_each(Fn&& fn) const {
    for (const auto& [key, m] : postings_) {
      for (const auto& [z, count] : m) fn(key.first, key.second, z, count);
    }
  }

private:
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::uint64_t>> postings_;
};

struct CorpusIndexes {
  NounPairIndex noun_pairs;
  VerbArgIndex verb_args;
  std::size_t sentence_count = 0;
};

// Pattern extraction over one sentence. Overlapping matches all count:
// "A no B C" yields (A,B,NO) and (B,C,COMPOUND).
inline void ingest_sentence(const std::vector<Token>& tokens, NounPairIndex& pairs,
                            VerbArgIndex& args) {
  const std::size_t n = tokens.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!tokens[i].is_noun()) continue;
    if (i + 2 < n && tokens[i + 1].is_particle("no") && tokens[i + 2].is_noun()) {
      pairs.add(tokens[i].surface, tokens[i + 2].surface, PairPattern::NO);
    }
    if (i + 1 < n && tokens[i + 1].is_noun()) {
      pairs.add(tokens[i].surface, tokens[i + 1].surface, PairPattern::COMPOUND);
    }
    if (i + 1 < n && tokens[i + 1].tag == TokenTag::Particle &&
        is_case_particle(tokens[i + 1].particle)) {
      // Attach to the nearest following verb; drop the pair if none.
      for (std::size_t j = i + 2; j < n; ++j) {
        if (tokens[j].is_verb()) {
          args.add(tokens[j].surface, tokens[i + 1].particle, tokens[i].surface);
          break;
        }
      }
    }
  }
}

inline CorpusIndexes ingest(const std::vector<std::vector<Token>>& sentences) {
  CorpusIndexes idx;
  for (const auto& s : sentences) {
    ingest_sentence(s, idx.noun_pairs, idx.verb_args);
    ++idx.sentence_count;
  }
  return idx;
}

// Streams a one-sentence-per-line corpus file.
inline CorpusIndexes ingest(std::istream& in) {
  CorpusIndexes idx;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    ingest_sentence(parse_sentence(line, line_no), idx.noun_pairs, idx.verb_args);
    ++idx.sentence_count;
  }
  return idx;
}

inline constexpr std::string_view kIndexHeader = "MNYM-IDX v1";

// Canonical text serialization of both indexes: version header, then each
// section with an exact posting count. Sorted keys make save(load(s)) == s.
inline void save_index(const NounPairIndex& pairs, const VerbArgIndex& args,
                       std::ostream& out) {
  out << kIndexHeader << '\n';
  out << "NP " << pairs.posting_count() << '\n';
  pairs.for_each([&](const std::string& x, const std::string& y, PairPattern p,
                     std::uint64_t count) {
    out << x << '\t' << y << '\t' << to_string(p) << '\t' << count << '\n';
  });
  out << "VA " << args.posting_count() << '\n';
  args.for_each([&](const std::string& w, const std::string& particle, const std::string& z,
                    std::uint64_t count) {
    out << w << '\t' << particle << '\t' << z << '\t' << count << '\n';
  });
}

namespace detail {

inline std::string next_index_line(std::istream& in, std::size_t& line_no) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatVersionMismatchError("index truncated after line " + std::to_string(line_no));
  }
  ++line_no;
  return line;
}

inline std::uint64_t parse_count(std::string_view text, std::size_t line_no) {
  const std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad count: " + s);
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": count overflow");
  }
}

inline std::size_t parse_section_header(const std::string& line, std::string_view name,
                                        std::size_t line_no) {
  const auto fields = split(line, ' ');
  if (fields.size() != 2 || fields[0] != name) {
    throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": expected `" +
                                     std::string(name) + " <count>`");
  }
  return static_cast<std::size_t>(parse_count(fields[1], line_no));
}

}  // namespace detail

// Loads a canonical index file. Truncation, trailing data, or duplicate
// postings are rejected outright; the result is never partial.
inline std::pair<NounPairIndex, VerbArgIndex> load_index(std::istream& in) {
  std::size_t line_no = 0;
  if (detail::next_index_line(in, line_no) != kIndexHeader) {
    throw FormatVersionMismatchError("missing `MNYM-IDX v1` header");
  }
  NounPairIndex pairs;
  VerbArgIndex args;

  const std::size_t np = detail::parse_section_header(detail::next_index_line(in, line_no),
                                                      "NP", line_no);
  for (std::size_t i = 0; i < np; ++i) {
    const std::string line = detail::next_index_line(in, line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad NP posting");
    }
    PairPattern pattern;
    if (fields[2] == "NO") {
      pattern = PairPattern::NO;
    } else if (fields[2] == "COMPOUND") {
      pattern = PairPattern::COMPOUND;
    } else {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad pattern");
    }
    const std::uint64_t count = detail::parse_count(fields[3], line_no);
    if (count == 0 || fields[0].empty() || fields[1].empty()) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad NP posting");
    }
    const std::size_t before = pairs.posting_count();
    pairs.add(std::string(fields[0]), std::string(fields[1]), pattern, count);
    if (pairs.posting_count() == before) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": duplicate posting");
    }
  }

  const std::size_t va = detail::parse_section_header(detail::next_index_line(in, line_no),
                                                      "VA", line_no);
  for (std::size_t i = 0; i < va; ++i) {
    const std::string line = detail::next_index_line(in, line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad VA posting");
    }
    const std::uint64_t count = detail::parse_count(fields[3], line_no);
    if (count == 0 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": bad VA posting");
    }
    const std::size_t before = args.posting_count();
    args.add(std::string(fields[0]), std::string(fields[1]), std::string(fields[2]), count);
    if (args.posting_count() == before) {
      throw FormatVersionMismatchError("line " + std::to_string(line_no) + ": duplicate posting");
    }
  }

  std::string rest;
  if (std::getline(in, rest)) {
    throw FormatVersionMismatchError("trailing data after line " + std::to_string(line_no));
  }
  return {std::move(pairs), std::move(args)};
}

inline void save_index_file(const NounPairIndex& pairs, const VerbArgIndex& args,
                            const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  save_index(pairs, args, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

inline std::pair<NounPairIndex, VerbArgIndex> load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return load_index(in);
}

}  // namespace metonym
