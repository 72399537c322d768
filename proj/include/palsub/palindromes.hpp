#pragma once

// Palindromic factors, defect and richness.
//
// All public counts include the empty palindrome, so a word u is rich exactly
// when its count equals |u| + 1.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "palsub/morphic_word.hpp"
#include "palsub/words.hpp"

namespace palsub {

/// Palindromic tree (eertree) built by appending letters.
///
/// Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
/// Every other node is a distinct nonempty palindromic factor.
class Eertree {
 public:
  struct Node {
    long length;
    std::size_t suffix_link;
    std::size_t first_end;  ///< end index (exclusive) of the first occurrence
    std::vector<std::pair<Letter, std::size_t>> edges;
  };

  static constexpr std::size_t kImaginaryRoot = 0;
  static constexpr std::size_t kEmptyRoot = 1;

  Eertree();

  void push_back(Letter a);

  std::size_t text_size() const noexcept { return text_.size(); }
  /// Nonempty distinct palindromes seen so far.
  std::size_t proper_count() const noexcept { return nodes_.size() - 2; }
  /// proper_counts()[k] is the number of nonempty distinct palindromic
  /// factors of the first k letters.
  const std::vector<std::size_t>& proper_counts() const noexcept { return counts_; }
  /// Node of the longest palindromic suffix of the current text.
  std::size_t longest_suffix() const noexcept { return last_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  std::size_t child(std::size_t v, Letter a) const;
  std::size_t extendable(std::size_t v, std::size_t pos) const;

  std::vector<Node> nodes_;
  std::vector<Letter> text_;
  std::vector<std::size_t> counts_;
  std::size_t last_ = kEmptyRoot;
};

inline constexpr std::size_t kNaiveOracleCap = 4096;

/// Pal(w) by enumerating every factor. Refuses words longer than `cap`.
std::set<std::vector<Letter>> palindromic_factors_naive(const Word& w,
                                                        std::size_t cap = kNaiveOracleCap);

/// |Pal(w[0..k))| for k = 0..|w|, empty palindrome included.
std::vector<std::size_t> eertree_count(std::span<const Letter> w);
std::vector<std::size_t> eertree_count(const Word& w);

/// |w| + 1 - |Pal(w)|.
std::size_t defect(std::span<const Letter> w);
std::size_t defect(const Word& w);

/// Defect of the length-n prefix of x (the maximum over shorter prefixes,
/// since defect never decreases under extension).
std::size_t defect_of_prefix(InfiniteWord& x, std::size_t n);

enum class RichnessVerdict { Rich, NotRich, RichUpToLength };

struct RichnessWitness {
  Word palindrome;       ///< palindromic factor p
  Word complete_return;  ///< non-palindromic complete first return to p
  std::size_t position;  ///< start of complete_return in the inspected word
};

struct RichnessReport {
  RichnessVerdict verdict = RichnessVerdict::Rich;
  std::optional<RichnessWitness> witness;
  std::size_t checked_length = 0;

  bool violated() const noexcept { return verdict == RichnessVerdict::NotRich; }
};

/// One-shot check of a finite word: every complete first return to every
/// palindromic factor must be a palindrome. Verdict is Rich or NotRich.
RichnessReport richness_check(std::span<const Letter> w, const Alphabet& alphabet);
RichnessReport richness_check(const Word& w);

/// Same test on the length-n prefix of x. Verdict is RichUpToLength or NotRich.
RichnessReport richness_check_returns(InfiniteWord& x, std::size_t n);

/// Ascending lengths L with w[0..L) a palindrome, starting with 0.
std::vector<std::size_t> palindromic_prefixes(std::span<const Letter> w);
std::vector<std::size_t> palindromic_prefixes(const Word& w);

}  // namespace palsub
