#pragma once

// Brute-force reference implementations used to cross-check the indexes and
// the scorer. Deliberately share no code with the library paths they check.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "metonym/index.hpp"
#include "metonym/interpreter.hpp"
#include "metonym/token.hpp"

namespace oracles {

using PairKey = std::tuple<std::string, std::string, std::string>;   // x, y, pattern
using VerbArgKey = std::tuple<std::string, std::string, std::string>;  // w, particle, z

// O(n^2)-ish re-scan of every sentence for the three patterns.
inline std::map<PairKey, std::uint64_t> rescan_pairs(
    const std::vector<std::vector<metonym::Token>>& sentences) {
  std::map<PairKey, std::uint64_t> counts;
  for (const auto& s : sentences) {
    for (std::size_t a = 0; a + 1 < s.size(); ++a) {
      if (s[a].tag != metonym::TokenTag::Noun) continue;
      if (s[a + 1].tag == metonym::TokenTag::Noun) {
        counts[{s[a].surface, s[a + 1].surface, "COMPOUND"}] += 1;
      }
      if (a + 2 < s.size() && s[a + 1].tag == metonym::TokenTag::Particle &&
          s[a + 1].particle == "no" && s[a + 2].tag == metonym::TokenTag::Noun) {
        counts[{s[a].surface, s[a + 2].surface, "NO"}] += 1;
      }
    }
  }
  return counts;
}

inline std::map<VerbArgKey, std::uint64_t> rescan_verbargs(
    const std::vector<std::vector<metonym::Token>>& sentences) {
  static const std::set<std::string> case_particles{"ga", "wo", "ni", "de",
                                                    "to", "kara", "made", "he"};
  std::map<VerbArgKey, std::uint64_t> counts;
  for (const auto& s : sentences) {
    for (std::size_t a = 0; a + 1 < s.size(); ++a) {
      if (s[a].tag != metonym::TokenTag::Noun) continue;
      if (s[a + 1].tag != metonym::TokenTag::Particle) continue;
      if (!case_particles.count(s[a + 1].particle)) continue;
      for (std::size_t b = a + 2; b < s.size(); ++b) {
        if (s[b].tag == metonym::TokenTag::Verb) {
          counts[{s[b].surface, s[a + 1].particle, s[a].surface}] += 1;
          break;
        }
      }
    }
  }
  return counts;
}

inline std::map<PairKey, std::uint64_t> flatten(const metonym::NounPairIndex& idx) {
  std::map<PairKey, std::uint64_t> counts;
  idx.for_each([&](const std::string& x, const std::string& y, metonym::PairPattern p,
                   std::uint64_t count) {
    counts[{x, y, std::string(metonym::to_string(p))}] = count;
  });
  return counts;
}

inline std::map<VerbArgKey, std::uint64_t> flatten(const metonym::VerbArgIndex& idx) {
  std::map<VerbArgKey, std::uint64_t> counts;
  idx.for_each([&](const std::string& w, const std::string& particle, const std::string& z,
                   std::uint64_t count) {
    counts[{w, particle, z}] = count;
  });
  return counts;
}

inline std::vector<std::vector<metonym::Token>> random_corpus(std::mt19937& rng,
                                                              std::size_t max_sentences) {
  static const std::vector<std::string> particles{"ga", "wo",   "ni",   "de", "to",
                                                  "kara", "made", "he", "no"};
  const std::size_t nsent = rng() % (max_sentences + 1);
  std::vector<std::vector<metonym::Token>> corpus;
  corpus.reserve(nsent);
  for (std::size_t s = 0; s < nsent; ++s) {
    const std::size_t len = 1 + rng() % 12;
    std::vector<metonym::Token> sentence;
    for (std::size_t i = 0; i < len; ++i) {
      const unsigned roll = rng() % 10;
      if (roll < 4) {
        sentence.push_back(metonym::Token::noun("n" + std::to_string(rng() % 8)));
      } else if (roll < 6) {
        const auto& p = particles[rng() % particles.size()];
        sentence.push_back(metonym::Token::part(p, p));
      } else if (roll < 8) {
        sentence.push_back(metonym::Token::verb("v" + std::to_string(rng() % 4)));
      } else {
        sentence.push_back(metonym::Token::other("o" + std::to_string(rng() % 3)));
      }
    }
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

struct RankedWord {
  std::string word;
  std::uint64_t freq = 0;
  std::uint64_t super = 0;
};

// Reference scorer over raw dictionaries: ancestor closure by fixed-point
// over the edge list, super-ordinate detection by enumerating every
// candidate/category/ancestor combination, integer score comparison.
inline std::vector<RankedWord> brute_force_rank(
    const std::vector<metonym::Candidate>& kept,
    const std::map<std::string, std::set<std::string>>& word_cats,
    const std::vector<std::pair<std::string, std::string>>& edges, std::int64_t alpha_num,
    std::int64_t alpha_den) {
  const auto closure = [&](const std::string& start) {
    std::set<std::string> anc;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [child, parent] : edges) {
        if ((child == start || anc.count(child)) && !anc.count(parent)) {
          anc.insert(parent);
          changed = true;
        }
      }
    }
    return anc;
  };

  std::vector<RankedWord> out;
  for (const auto& c : kept) {
    RankedWord r;
    r.word = c.word;
    r.freq = c.freq_no + c.freq_compound;
    for (const auto& other : kept) {
      if (other.word == c.word) continue;
      bool super = false;
      const auto ci = word_cats.find(c.word);
      const auto oi = word_cats.find(other.word);
      if (ci != word_cats.end() && oi != word_cats.end()) {
        for (const auto& low : ci->second) {
          const auto anc = closure(low);
          for (const auto& up : oi->second) {
            if (anc.count(up)) super = true;
          }
        }
      }
      if (super) r.super += other.freq_no + other.freq_compound;
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const RankedWord& a, const RankedWord& b) {
    const std::int64_t sa = alpha_num * static_cast<std::int64_t>(a.freq) +
                            alpha_den * static_cast<std::int64_t>(a.super);
    const std::int64_t sb = alpha_num * static_cast<std::int64_t>(b.freq) +
                            alpha_den * static_cast<std::int64_t>(b.super);
    if (sa != sb) return sa > sb;
    if (a.freq != b.freq) return a.freq > b.freq;
    return a.word < b.word;
  });
  return out;
}

}  // namespace oracles
