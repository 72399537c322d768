#include "palsub/palindromes.hpp"

#include <limits>

#include "palindrome_index.hpp"
#include "palsub/errors.hpp"

namespace palsub {

// ----------------------------------------------------------------- Eertree

Eertree::Eertree() : counts_{0} {
  nodes_.push_back({-1, kImaginaryRoot, 0, {}});
  nodes_.push_back({0, kImaginaryRoot, 0, {}});
}

std::size_t Eertree::child(std::size_t v, Letter a) const {
  for (const auto& [letter, target] : nodes_[v].edges)
    if (letter == a) return target;
  return 0;
}

// Follows suffix links from v until a palindrome X with text[pos-|X|-1]
// equal to text[pos] is reached.
std::size_t Eertree::extendable(std::size_t v, std::size_t pos) const {
  while (true) {
    const long before = static_cast<long>(pos) - nodes_[v].length - 1;
    if (before >= 0 && text_[static_cast<std::size_t>(before)] == text_[pos]) return v;
    v = nodes_[v].suffix_link;
  }
}

void Eertree::push_back(Letter a) {
  const std::size_t pos = text_.size();
  text_.push_back(a);
  const std::size_t v = extendable(last_, pos);
  if (std::size_t existing = child(v, a); existing != 0) {
    last_ = existing;
    counts_.push_back(proper_count());
    return;
  }
  Node fresh{nodes_[v].length + 2, kEmptyRoot, pos + 1, {}};
  if (fresh.length > 1) fresh.suffix_link = child(extendable(nodes_[v].suffix_link, pos), a);
  nodes_.push_back(std::move(fresh));
  const std::size_t id = nodes_.size() - 1;
  nodes_[v].edges.emplace_back(a, id);
  last_ = id;
  counts_.push_back(proper_count());
}

// ------------------------------------------------------------------ counts

std::set<std::vector<Letter>> palindromic_factors_naive(const Word& w, std::size_t cap) {
  if (w.size() > cap)
    throw Error(ErrorKind::OracleCapExceeded,
                "naive palindrome oracle refuses words longer than " + std::to_string(cap));
  std::set<std::vector<Letter>> out{{}};
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j <= l.size(); ++j) {
      std::span<const Letter> f(l.data() + i, j - i);
      if (is_palindrome(f)) out.emplace(f.begin(), f.end());
    }
  return out;
}

std::vector<std::size_t> eertree_count(std::span<const Letter> w) {
  Eertree tree;
  for (Letter a : w) tree.push_back(a);
  std::vector<std::size_t> out = tree.proper_counts();
  for (auto& c : out) ++c;
  return out;
}

std::vector<std::size_t> eertree_count(const Word& w) { return eertree_count(w.view()); }

std::size_t defect(std::span<const Letter> w) { return w.size() + 1 - eertree_count(w).back(); }

std::size_t defect(const Word& w) { return defect(w.view()); }

std::size_t defect_of_prefix(InfiniteWord& x, std::size_t n) { return defect(x.view(n)); }

// ---------------------------------------------------------------- richness

RichnessReport richness_check(std::span<const Letter> w, const Alphabet& alphabet) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const detail::PalindromeIndex index(w);
  Eertree tree;
  std::vector<std::size_t> last_start;
  RichnessReport report;
  report.checked_length = w.size();

  // Every occurrence of a palindrome ends at some position and sits on the
  // suffix-link chain of the longest palindromic suffix there. Consecutive
  // occurrences of the same palindrome delimit its complete first returns.
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    tree.push_back(w[pos]);
    last_start.resize(tree.node_count(), kUnseen);
    for (std::size_t v = tree.longest_suffix(); tree.node(v).length > 0; v = tree.node(v).suffix_link) {
      const auto len = static_cast<std::size_t>(tree.node(v).length);
      const std::size_t start = pos + 1 - len;
      const std::size_t prev = last_start[v];
      last_start[v] = start;
      if (prev == kUnseen || index.is_palindrome(prev, start + len - prev)) continue;
      report.verdict = RichnessVerdict::NotRich;
      report.witness = RichnessWitness{Word(alphabet, w.subspan(start, len)),
                                       Word(alphabet, w.subspan(prev, start + len - prev)), prev};
      return report;
    }
  }
  report.verdict = RichnessVerdict::Rich;
  return report;
}

RichnessReport richness_check(const Word& w) { return richness_check(w.view(), w.alphabet()); }

RichnessReport richness_check_returns(InfiniteWord& x, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "richness_check_returns needs n >= 1");
  RichnessReport report = richness_check(x.view(n), x.alphabet());
  if (report.verdict == RichnessVerdict::Rich) report.verdict = RichnessVerdict::RichUpToLength;
  return report;
}

std::vector<std::size_t> palindromic_prefixes(std::span<const Letter> w) {
  const detail::PalindromeIndex index(w);
  std::vector<std::size_t> out{0};
  for (std::size_t len = 1; len <= w.size(); ++len)
    if (index.is_palindrome(0, len)) out.push_back(len);
  return out;
}

std::vector<std::size_t> palindromic_prefixes(const Word& w) { return palindromic_prefixes(w.view()); }

}  // namespace palsub
