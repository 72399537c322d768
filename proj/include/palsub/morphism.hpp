#pragma once

// Non-erasing morphisms between finite alphabets: application, composition,
// incidence matrices, primitivity, fixed points and conjugacy.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "palsub/words.hpp"

namespace palsub {

class Morphism {
 public:
  /// One nonempty image per domain letter, each over `codomain`.
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  const Word& image(Letter a) const { return images_.at(a); }
  std::span<const Word> images() const noexcept { return images_; }

  bool is_endomorphism() const { return domain_ == codomain_; }
  /// Sum of image lengths.
  std::size_t total_length() const;
  std::size_t max_image_length() const;

  bool operator==(const Morphism& other) const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

Word apply(const Morphism& f, const Word& w);
/// Appends f(w) to `out` without alphabet checks.
void apply_to(const Morphism& f, std::span<const Letter> w, std::vector<Letter>& out);

/// g∘f, i.e. a ↦ g(f(a)).
Morphism compose(const Morphism& g, const Morphism& f);

/// Composition of a chain, fs[0]∘fs[1]∘...∘fs.back().
Morphism compose_all(std::span<const Morphism> fs);

/// Entry (b, a) is |f(a)|_b.
using IncidenceMatrix = std::vector<std::vector<std::uint64_t>>;
IncidenceMatrix incidence_matrix(const Morphism& f);

/// Some power of the incidence matrix is entrywise positive. Powers are
/// checked up to the Wielandt exponent (k-1)^2 + 1 with saturating entries.
bool is_primitive(const Morphism& f);

/// f(a) starts with a and |f(a)| >= 2.
bool is_prolongable(const Morphism& f, Letter a);

/// Length-n prefix of the fixed point f^ω(a).
Word fixed_point_prefix(const Morphism& f, Letter a, std::size_t n);

enum class Side {
  Right,  ///< f(a) u = u g(a)
  Left,   ///< u f(a) = g(a) u
};

struct ConjugacyWitness {
  Word u;
  Side side = Side::Right;

  bool operator==(const ConjugacyWitness&) const = default;
};

/// The unique g with f(a)u = u g(a) (Right) or u f(a) = g(a)u (Left).
/// Throws ErrorKind::InvalidConjugator when no such g exists.
Morphism conjugate_by(const Morphism& f, const Word& u, Side side);

/// Direct evaluation of the conjugacy equation for every letter.
bool satisfies_conjugacy(const Morphism& f, const Morphism& g, const ConjugacyWitness& w);

/// Swaps the roles of f and g: f(a)u = u g(a) iff u g(a) = f(a) u.
ConjugacyWitness swap_sides(const ConjugacyWitness& w);

/// Longest u with f(a)u = u g(a) solvable, i.e. the longest common prefix of
/// the periodic words f(a)^ω, capped at `cap`.
std::size_t right_conjugator_limit(const Morphism& f, std::size_t cap);
/// Mirror of right_conjugator_limit for left conjugators.
std::size_t left_conjugator_limit(const Morphism& f, std::size_t cap);

/// The unique candidate conjugator of length `len` on the given side.
/// Requires len <= the corresponding limit.
Word conjugator_candidate(const Morphism& f, std::size_t len, Side side);

/// Shortest witness with |u| <= bound, right side preferred at equal length.
/// An empty result only means "not conjugate within bound".
std::optional<ConjugacyWitness> are_conjugate(const Morphism& f, const Morphism& g,
                                              std::size_t bound);

}  // namespace palsub
