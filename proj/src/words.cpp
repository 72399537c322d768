#include "palsub/words.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "palsub/errors.hpp"

namespace palsub {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::AlphabetMismatch: return "alphabet_mismatch";
    case ErrorKind::EmptyPattern: return "empty_pattern";
    case ErrorKind::OracleCapExceeded: return "oracle_cap_exceeded";
    case ErrorKind::NonEndomorphism: return "non_endomorphism";
    case ErrorKind::NotPrimitive: return "not_primitive";
    case ErrorKind::NotProlongable: return "not_prolongable";
    case ErrorKind::InvalidConjugator: return "invalid_conjugator";
    case ErrorKind::NotAPrefix: return "u_not_a_prefix";
    case ErrorKind::StabilityNotReached: return "stability_not_reached";
    case ErrorKind::DepthExhausted: return "depth_exhausted";
    case ErrorKind::PreconditionFailed: return "precondition_failed";
    case ErrorKind::NoQualifyingPrefix: return "no_qualifying_prefix";
    case ErrorKind::Parse: return "parse_error";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Alphabet

std::string Alphabet::default_name(std::size_t index) {
  static constexpr std::string_view kNames =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (index < kNames.size()) return std::string(1, kNames[index]);
  return "[" + std::to_string(index) + "]";
}

Alphabet::Alphabet(std::size_t size) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "alphabet size must be positive");
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < size; ++i) names.push_back(default_name(i));
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet::Alphabet(std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorKind::InvalidArgument, "alphabet size must be positive");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty letter name");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate letter name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& Alphabet::name(Letter a) const {
  if (a >= size()) throw Error(ErrorKind::InvalidArgument, "letter index out of range");
  return (*names_)[a];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((*names_)[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

bool Alphabet::is_anonymous() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((*names_)[i] != default_name(i)) return false;
  return true;
}

bool Alphabet::operator==(const Alphabet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b))
    throw Error(ErrorKind::AlphabetMismatch, std::string(what) + ": alphabets differ");
}

// -------------------------------------------------------------------- Word

namespace {

void check_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  for (Letter a : letters)
    if (a >= alphabet.size())
      throw Error(ErrorKind::InvalidArgument,
                  "letter " + std::to_string(a) + " outside alphabet of size " +
                      std::to_string(alphabet.size()));
}

}  // namespace

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  check_letters(alphabet_, letters_);
}

Word::Word(Alphabet alphabet, std::initializer_list<Letter> letters)
    : Word(std::move(alphabet), std::vector<Letter>(letters)) {}

Word::Word(Alphabet alphabet, std::span<const Letter> letters)
    : Word(std::move(alphabet), std::vector<Letter>(letters.begin(), letters.end())) {}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw Error(ErrorKind::InvalidArgument, "substr position out of range");
  len = std::min(len, size() - pos);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

bool Word::starts_with(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet_, "starts_with");
  return w.size() <= size() && std::equal(w.begin(), w.end(), begin());
}

bool Word::ends_with(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet_, "ends_with");
  return w.size() <= size() && std::equal(w.begin(), w.end(), end() - static_cast<std::ptrdiff_t>(w.size()));
}

void Word::push_back(Letter a) {
  if (a >= alphabet_.size()) throw Error(ErrorKind::InvalidArgument, "letter outside alphabet");
  letters_.push_back(a);
}

void Word::append(const Word& w) {
  require_same_alphabet(alphabet_, w.alphabet_, "append");
  letters_.insert(letters_.end(), w.begin(), w.end());
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Letter a : letters_) out += alphabet_.name(a);
  return out;
}

bool Word::operator==(const Word& other) const {
  return letters_ == other.letters_ && alphabet_ == other.alphabet_;
}

bool Word::operator<(const Word& other) const {
  require_same_alphabet(alphabet_, other.alphabet_, "compare");
  return letters_ < other.letters_;
}

Word operator+(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.append(rhs);
  return out;
}

// --------------------------------------------------------------- functions

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(letters));
}

bool is_palindrome(std::span<const Letter> w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

bool is_palindrome(const Word& w) { return is_palindrome(w.view()); }

std::size_t count_occurrences(std::span<const Letter> u, std::span<const Letter> v) {
  if (v.empty()) throw Error(ErrorKind::EmptyPattern, "count_occurrences: empty pattern");
  // KMP failure function on v.
  std::vector<std::size_t> fail(v.size(), 0);
  for (std::size_t i = 1, k = 0; i < v.size(); ++i) {
    while (k > 0 && v[i] != v[k]) k = fail[k - 1];
    if (v[i] == v[k]) ++k;
    fail[i] = k;
  }
  std::size_t count = 0;
  for (std::size_t i = 0, k = 0; i < u.size(); ++i) {
    while (k > 0 && u[i] != v[k]) k = fail[k - 1];
    if (u[i] == v[k]) ++k;
    if (k == v.size()) {
      ++count;
      k = fail[k - 1];
    }
  }
  return count;
}

std::size_t count_occurrences(const Word& u, const Word& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "count_occurrences");
  return count_occurrences(u.view(), v.view());
}

Word parse_word(const Alphabet& alphabet, std::string_view literal) {
  std::vector<Letter> letters;
  letters.reserve(literal.size());
  for (std::size_t i = 0; i < literal.size(); ++i) {
    auto a = alphabet.find(std::string_view(&literal[i], 1));
    if (!a)
      throw ParseError("unknown letter '" + std::string(1, literal[i]) + "'", 1, i + 1);
    letters.push_back(*a);
  }
  return Word(alphabet, std::move(letters));
}

Word parse_word(std::string_view literal) {
  if (literal.empty()) return Word(Alphabet(1));
  bool digits = std::all_of(literal.begin(), literal.end(),
                            [](char c) { return c >= '0' && c <= '9'; });
  if (digits) {
    char hi = *std::max_element(literal.begin(), literal.end());
    return parse_word(Alphabet(static_cast<std::size_t>(hi - '0') + 1), literal);
  }
  std::set<char> chars;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';')
      throw ParseError("unexpected character in word literal", 1, i + 1);
    chars.insert(c);
  }
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return parse_word(Alphabet(std::move(names)), literal);
}

}  // namespace palsub
