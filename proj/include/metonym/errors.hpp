#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metonym {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MalformedLineError : public Error {
public:
  MalformedLineError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

private:
  std::size_t line_no_;
};

class MalformedTokenError : public Error {
public:
  MalformedTokenError(std::size_t line_no, std::size_t position, const std::string& what)
      : Error("line " + std::to_string(line_no) + ", token " + std::to_string(position) + ": " +
              what),
        line_no_(line_no),
        position_(position) {}

  std::size_t line_no() const { return line_no_; }
  std::size_t position() const { return position_; }

private:
  std::size_t line_no_;
  std::size_t position_;
};

class CycleDetectedError : public Error {
public:
  explicit CycleDetectedError(std::vector<std::string> cycle)
      : Error("cycle detected: " + join(cycle)), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const { return cycle_; }

private:
  static std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
      if (!out.empty()) out += " -> ";
      out += n;
    }
    return out;
  }

  std::vector<std::string> cycle_;
};

class UnknownCategoryError : public Error {
public:
  explicit UnknownCategoryError(const std::string& category)
      : Error("unknown category: " + category), category_(category) {}

  const std::string& category() const { return category_; }

private:
  std::string category_;
};

class UnknownWordError : public Error {
public:
  explicit UnknownWordError(const std::string& word)
      : Error("word not in lexicon: " + word), word_(word) {}

  const std::string& word() const { return word_; }

private:
  std::string word_;
};

class ClauseParseError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class FormatVersionMismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace metonym
