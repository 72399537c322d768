#pragma once

// Return words and derived words.
//
// A first return to a prefix u of x is a factor v such that vu occurs in x,
// begins and ends in u, and contains u exactly twice. Writing x as the
// concatenation of its first returns and replacing each return by its rank of
// first occurrence gives the derived word D_u(x).
//
// Return sets are collected from finite prefixes. The set is accepted once it
// is identical for two consecutive prefix lengths N and 2N; that pair is the
// stability record carried into every downstream certificate.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "palsub/morphic_word.hpp"

namespace palsub {

struct DerivationLimits {
  std::size_t initial_length = 64;     ///< first prefix length N inspected
  std::size_t stable_letters = 64;     ///< derived letters required at N
  std::size_t max_parent_length = std::size_t{1} << 24;
};

struct StabilityRecord {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  bool operator==(const StabilityRecord&) const = default;
};

struct ReturnStructure {
  Word u;
  std::vector<Word> returns;  ///< ordered by first occurrence
  Word derived_prefix;       ///< derived letters from the length-n2 prefix
  StabilityRecord stability;
};

/// D_u(parent), produced lazily. The alphabet is fixed when the return set
/// stabilises; meeting a new return afterwards throws StabilityNotReached.
class DerivedWord : public InfiniteWord {
 public:
  DerivedWord(std::shared_ptr<InfiniteWord> parent, Word u, DerivationLimits limits = {});

  const Alphabet& alphabet() const override { return *alphabet_; }
  std::span<const Letter> view(std::size_t n) override;

  const Word& u() const noexcept { return u_; }
  const ReturnStructure& structure() const noexcept { return structure_; }
  /// Letter i ↦ i-th return word.
  const Morphism& return_morphism() const { return *f_u_; }
  const std::shared_ptr<InfiniteWord>& parent() const noexcept { return parent_; }

 private:
  void scan_to(std::size_t parent_length);

  std::shared_ptr<InfiniteWord> parent_;
  Word u_;
  DerivationLimits limits_;
  std::vector<std::size_t> failure_;  // KMP table of u
  std::size_t scanned_ = 0;
  std::size_t matched_ = 0;
  std::optional<std::size_t> last_start_;
  std::map<std::vector<Letter>, Letter> index_;
  std::vector<Word> returns_;
  std::vector<Letter> derived_;
  bool frozen_ = false;
  std::optional<Alphabet> alphabet_;
  std::optional<Morphism> f_u_;
  ReturnStructure structure_;
};

/// Return structure of x at the nonempty prefix u (doubling from n0).
ReturnStructure first_returns(std::shared_ptr<InfiniteWord> x, const Word& u,
                              std::size_t n0 = 64);

struct DerivedResult {
  std::shared_ptr<DerivedWord> word;
  Morphism f_u;
  ReturnStructure structure;
};

DerivedResult derived_word(std::shared_ptr<InfiniteWord> x, const Word& u,
                           DerivationLimits limits = {});

/// One level S_k of the iterated derivation at the first letter.
struct ChainLevel {
  std::shared_ptr<InfiniteWord> word;
  std::optional<Morphism> g;  ///< g_k : A_k -> A_{k-1}; absent for S_0
  std::optional<ReturnStructure> structure;
};

/// S_0 = y, S_{k+1} = D_{first letter}(S_k), built one level at a time.
class DerivedChain {
 public:
  explicit DerivedChain(std::shared_ptr<InfiniteWord> y, DerivationLimits limits = {});

  std::size_t size() const noexcept { return levels_.size(); }
  const ChainLevel& level(std::size_t k) const { return levels_.at(k); }
  ChainLevel& level(std::size_t k) { return levels_.at(k); }
  /// Appends S_{size()}. Stability errors propagate.
  const ChainLevel& extend();
  /// g_1, ..., g_{size()-1}.
  std::vector<Morphism> morphisms() const;

 private:
  DerivationLimits limits_;
  std::vector<ChainLevel> levels_;
};

DerivedChain iterate_derived(std::shared_ptr<InfiniteWord> y, std::size_t max_depth,
                             DerivationLimits limits = {});

}  // namespace palsub
