#pragma once

// Lazily generated infinite words.

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "palsub/morphism.hpp"

namespace palsub {

/// An infinite word that can be unrolled to any finite prefix.
///
/// view(n) grows the cached prefix to at least n letters and returns its first
/// n letters. The returned span stays valid until the next call that grows the
/// cache.
class InfiniteWord {
 public:
  virtual ~InfiniteWord() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual std::span<const Letter> view(std::size_t n) = 0;

  Word prefix(std::size_t n) { return Word(alphabet(), view(n)); }
};

/// outer(σ^ω(seed)) for a primitive substitution σ prolongable on `seed`.
///
/// Copies share the prefix cache; growth is serialized by a mutex.
class MorphicWordSpec : public InfiniteWord {
 public:
  MorphicWordSpec(Morphism inner, Letter seed, std::optional<Morphism> outer = std::nullopt);

  const Morphism& inner() const noexcept { return inner_; }
  Letter seed() const noexcept { return seed_; }
  const std::optional<Morphism>& outer() const noexcept { return outer_; }

  const Alphabet& alphabet() const override;
  std::span<const Letter> view(std::size_t n) override;

  bool operator==(const MorphicWordSpec& other) const {
    return inner_ == other.inner_ && seed_ == other.seed_ && outer_ == other.outer_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<Letter> fixed_point;
    std::size_t expanded = 0;  // fixed_point letters whose inner image is appended
    std::vector<Letter> output;
    std::size_t emitted = 0;  // fixed_point letters mapped through outer
  };

  Morphism inner_;
  Letter seed_;
  std::optional<Morphism> outer_;
  std::shared_ptr<Cache> cache_;
};

/// Length-n prefix of the word described by `x`.
Word generate_prefix(MorphicWordSpec& x, std::size_t n);

}  // namespace palsub
