#pragma once

// Membership tests for the palindromic morphism classes:
//
//   P           a ↦ p q_a          (p and every q_a palindromes)
//   extended P  a ↦ q_a p
//   P_ret       marker p: f(a)p is a palindrome that begins and ends in p,
//               contains p exactly twice, and f is injective on letters
//   P′          conjugate to some morphism in P
//
// Every positive answer carries a witness that can be re-checked by direct
// equation evaluation (see recheck_witnesses).

#include <optional>
#include <string>
#include <vector>

#include "palsub/morphism.hpp"

namespace palsub {

/// f(a) = p q_a (prefix form) or f(a) = q_a p (suffix form).
struct PalindromicSplit {
  Word p;
  std::vector<Word> q;
};

/// Longest common palindromic prefix p whose cofactors are all palindromes.
std::optional<PalindromicSplit> find_class_p(const Morphism& f);
/// Suffix-form counterpart of find_class_p.
std::optional<PalindromicSplit> find_extended_p(const Morphism& f);

bool is_class_p_split(const Morphism& f, const PalindromicSplit& s);
bool is_extended_p_split(const Morphism& f, const PalindromicSplit& s);

/// The four marker conditions, checked verbatim.
bool is_p_ret_marker(const Morphism& f, const Word& p);
/// Shortest marker with |p| <= bound.
std::optional<Word> find_p_ret_marker(const Morphism& f, std::size_t bound);

enum class PPrimeVerdict { Yes, NoUpToBound };

struct PPrimeWitness {
  ConjugacyWitness conjugator;  ///< relates f (as "f") to `conjugate` (as "g")
  Morphism conjugate;           ///< a class-P morphism
  PalindromicSplit split;       ///< class-P split of `conjugate`
};

/// Searches conjugators |u| <= bound on both sides for a conjugate in P or
/// in extended P (the latter is moved into P by one more conjugation with p).
std::optional<PPrimeWitness> find_p_prime(const Morphism& f, std::size_t bound);

struct ClassificationResult {
  bool in_p = false;
  std::optional<PalindromicSplit> p_witness;
  bool in_extended_p = false;
  std::optional<PalindromicSplit> extended_p_witness;
  bool in_p_ret = false;
  std::optional<Word> marker;
  PPrimeVerdict in_p_prime = PPrimeVerdict::NoUpToBound;
  std::optional<PPrimeWitness> p_prime_witness;
  std::size_t search_bound = 0;
};

/// Default bound is the sum of image lengths.
ClassificationResult classify(const Morphism& f, std::optional<std::size_t> bound = std::nullopt);

/// Re-verifies every witness in `r` against f. Returns the failed checks.
std::vector<std::string> recheck_witnesses(const Morphism& f, const ClassificationResult& r);

}  // namespace palsub
