#pragma once

// Alphabets and finite words over dense integer letters.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palsub {

using Letter = std::uint32_t;

/// A finite alphabet {0, ..., size-1} with a display name per letter.
///
/// Anonymous alphabets use the default names "0".."9", "a".."z", "A".."Z",
/// then "[k]". Two alphabets are equal when their names agree, so an alphabet
/// parsed from "0->01;1->10" equals Alphabet(2).
class Alphabet {
 public:
  explicit Alphabet(std::size_t size);
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(Letter a) const;
  std::optional<Letter> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return *names_; }

  /// True when every name is the default for its index.
  bool is_anonymous() const;

  bool operator==(const Alphabet& other) const;

  static std::string default_name(std::size_t index);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Finite word; every letter is checked against the alphabet on construction.
class Word {
 public:
  explicit Word(Alphabet alphabet);
  Word(Alphabet alphabet, std::vector<Letter> letters);
  Word(Alphabet alphabet, std::initializer_list<Letter> letters);
  Word(Alphabet alphabet, std::span<const Letter> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  void push_back(Letter a);
  void append(const Word& w);

  /// Concatenated display names.
  std::string str() const;

  bool operator==(const Word& other) const;
  /// Lexicographic on letters; alphabets must agree.
  bool operator<(const Word& other) const;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word operator+(const Word& lhs, const Word& rhs);

/// Throws ErrorKind::AlphabetMismatch unless the alphabets are equal.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);
bool is_palindrome(std::span<const Letter> w);

/// Number of (possibly overlapping) occurrences of v in u. v must be nonempty.
std::size_t count_occurrences(const Word& u, const Word& v);
std::size_t count_occurrences(std::span<const Letter> u, std::span<const Letter> v);

/// Parses a word literal over a known alphabet (one character per letter).
Word parse_word(const Alphabet& alphabet, std::string_view literal);

/// Parses a word literal and infers its alphabet: all-digit literals get the
/// anonymous alphabet of size max-digit + 1, anything else the sorted set of
/// distinct characters.
Word parse_word(std::string_view literal);

}  // namespace palsub
