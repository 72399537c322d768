#include "palsub/derived.hpp"

#include <algorithm>

#include "palsub/errors.hpp"

namespace palsub {

DerivedWord::DerivedWord(std::shared_ptr<InfiniteWord> parent, Word u, DerivationLimits limits)
    : parent_(std::move(parent)), u_(std::move(u)), limits_(limits), structure_{u_, {}, u_, {}} {
  if (u_.empty()) throw Error(ErrorKind::InvalidArgument, "derived word needs a nonempty prefix");
  require_same_alphabet(parent_->alphabet(), u_.alphabet(), "derived_word");
  if (!std::ranges::equal(parent_->view(u_.size()), u_.view()))
    throw Error(ErrorKind::NotAPrefix, "'" + u_.str() + "' is not a prefix of the word");

  failure_.assign(u_.size(), 0);
  for (std::size_t i = 1, k = 0; i < u_.size(); ++i) {
    while (k > 0 && u_[i] != u_[k]) k = failure_[k - 1];
    if (u_[i] == u_[k]) ++k;
    failure_[i] = k;
  }

  std::size_t n = std::max(limits_.initial_length, u_.size());
  while (true) {
    if (2 * n > limits_.max_parent_length)
      throw Error(ErrorKind::StabilityNotReached,
                  "return set to '" + u_.str() + "' did not stabilise below prefix length " +
                      std::to_string(limits_.max_parent_length));
    scan_to(n);
    const std::size_t returns_at_n = returns_.size();
    const std::size_t letters_at_n = derived_.size();
    scan_to(2 * n);
    if (returns_.size() == returns_at_n && letters_at_n >= limits_.stable_letters) break;
    n *= 2;
  }

  frozen_ = true;
  alphabet_.emplace(returns_.size());
  f_u_.emplace(*alphabet_, parent_->alphabet(), returns_);
  structure_.returns = returns_;
  structure_.derived_prefix = Word(*alphabet_, derived_);
  structure_.stability = {n, 2 * n};
}

void DerivedWord::scan_to(std::size_t parent_length) {
  if (parent_length <= scanned_) return;
  const auto x = parent_->view(parent_length);
  for (std::size_t i = scanned_; i < parent_length; ++i) {
    while (matched_ > 0 && x[i] != u_[matched_]) matched_ = failure_[matched_ - 1];
    if (x[i] == u_[matched_]) ++matched_;
    if (matched_ < u_.size()) continue;
    matched_ = failure_[matched_ - 1];

    const std::size_t start = i + 1 - u_.size();
    if (last_start_) {
      std::vector<Letter> ret(x.begin() + static_cast<std::ptrdiff_t>(*last_start_),
                              x.begin() + static_cast<std::ptrdiff_t>(start));
      auto it = index_.find(ret);
      if (it == index_.end()) {
        if (frozen_)
          throw Error(ErrorKind::StabilityNotReached,
                      "new return to '" + u_.str() + "' found at position " +
                          std::to_string(*last_start_) + " after the return set was fixed");
        it = index_.emplace(ret, static_cast<Letter>(returns_.size())).first;
        returns_.emplace_back(parent_->alphabet(), std::move(ret));
      }
      derived_.push_back(it->second);
    }
    last_start_ = start;
  }
  scanned_ = parent_length;
}

std::span<const Letter> DerivedWord::view(std::size_t n) {
  while (derived_.size() < n) {
    const std::size_t next = std::max<std::size_t>(2 * scanned_, 64);
    if (next > limits_.max_parent_length)
      throw Error(ErrorKind::StabilityNotReached,
                  "derived prefix of length " + std::to_string(n) +
                      " needs more than the parent length cap " +
                      std::to_string(limits_.max_parent_length));
    scan_to(next);
  }
  return std::span<const Letter>(derived_).first(n);
}

ReturnStructure first_returns(std::shared_ptr<InfiniteWord> x, const Word& u, std::size_t n0) {
  DerivationLimits limits;
  limits.initial_length = n0;
  return DerivedWord(std::move(x), u, limits).structure();
}

DerivedResult derived_word(std::shared_ptr<InfiniteWord> x, const Word& u, DerivationLimits limits) {
  auto word = std::make_shared<DerivedWord>(std::move(x), u, limits);
  return DerivedResult{word, word->return_morphism(), word->structure()};
}

DerivedChain::DerivedChain(std::shared_ptr<InfiniteWord> y, DerivationLimits limits) : limits_(limits) {
  levels_.push_back({std::move(y), std::nullopt, std::nullopt});
}

const ChainLevel& DerivedChain::extend() {
  auto& parent = levels_.back().word;
  auto derived = derived_word(parent, parent->prefix(1), limits_);
  levels_.push_back({derived.word, std::move(derived.f_u), std::move(derived.structure)});
  return levels_.back();
}

std::vector<Morphism> DerivedChain::morphisms() const {
  std::vector<Morphism> out;
  for (std::size_t k = 1; k < levels_.size(); ++k) out.push_back(*levels_[k].g);
  return out;
}

DerivedChain iterate_derived(std::shared_ptr<InfiniteWord> y, std::size_t max_depth,
                             DerivationLimits limits) {
  DerivedChain chain(std::move(y), limits);
  for (std::size_t k = 0; k < max_depth; ++k) chain.extend();
  return chain;
}

}  // namespace palsub
