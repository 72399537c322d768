#pragma once

// Shared helpers and generators for the test binaries.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "palsub/classify.hpp"
#include "palsub/morphism.hpp"
#include "palsub/serialize.hpp"
#include "palsub/words.hpp"

namespace palsub::test {

inline Morphism rules(const std::string& literal) { return parse_morphism(literal); }

inline std::shared_ptr<MorphicWordSpec> spec(const std::string& literal) {
  return std::make_shared<MorphicWordSpec>(parse_spec(literal));
}

inline std::string image_str(const Morphism& f, Letter a) { return f.image(a).str(); }

/// Every word of length `len` over k letters, in lexicographic order.
inline std::vector<std::vector<Letter>> all_words(std::size_t k, std::size_t len) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> w(len, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == k - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

/// Quadratic sliding-window occurrence count, overlaps included.
inline std::size_t scan_count(const std::vector<Letter>& u, const std::vector<Letter>& v) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + v.size() <= u.size(); ++i)
    if (std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(i))) ++c;
  return c;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Word word(const Alphabet& a, std::size_t min_len, std::size_t max_len) {
    std::vector<Letter> l(uniform(min_len, max_len));
    for (auto& x : l) x = static_cast<Letter>(uniform(0, a.size() - 1));
    return Word(a, std::move(l));
  }

  Word palindrome(const Alphabet& a, std::size_t min_len, std::size_t max_len) {
    Word half = word(a, 0, max_len);
    const std::size_t len = uniform(min_len, max_len);
    std::vector<Letter> l(len);
    for (std::size_t i = 0; i < (len + 1) / 2; ++i) {
      Letter x = i < half.size() ? half[i] : static_cast<Letter>(uniform(0, a.size() - 1));
      l[i] = l[len - 1 - i] = x;
    }
    return Word(a, std::move(l));
  }

  Morphism morphism(const Alphabet& dom, const Alphabet& cod, std::size_t max_len) {
    std::vector<Word> images;
    for (std::size_t i = 0; i < dom.size(); ++i) images.push_back(word(cod, 1, max_len));
    return Morphism(dom, cod, std::move(images));
  }

  /// a ↦ p q_a with palindromes p, q_a and total image length <= max_len.
  Morphism class_p(const Alphabet& dom, const Alphabet& cod, std::size_t max_len) {
    Word p = palindrome(cod, 0, max_len - 1);
    std::vector<Word> images;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const std::size_t room = max_len - p.size();
      Word q = palindrome(cod, p.empty() ? 1 : 0, room);
      images.push_back(p + q);
    }
    return Morphism(dom, cod, std::move(images));
  }

  /// a ↦ q_a p with palindromes p, q_a.
  Morphism extended_p(const Alphabet& dom, const Alphabet& cod, std::size_t max_len, Word& p_out) {
    Word p = palindrome(cod, 0, max_len - 1);
    std::vector<Word> images;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      Word q = palindrome(cod, p.empty() ? 1 : 0, max_len - p.size());
      images.push_back(q + p);
    }
    p_out = p;
    return Morphism(dom, cod, std::move(images));
  }

  Alphabet alphabet(std::size_t max_size) { return Alphabet(uniform(1, max_size)); }
  Alphabet alphabet(std::size_t min_size, std::size_t max_size) { return Alphabet(uniform(min_size, max_size)); }

  /// A valid conjugate of f through a random admissible conjugator.
  std::pair<Morphism, ConjugacyWitness> conjugate(const Morphism& f, std::size_t max_u) {
    Side side = uniform(0, 1) ? Side::Right : Side::Left;
    std::size_t limit = side == Side::Right ? right_conjugator_limit(f, max_u) : left_conjugator_limit(f, max_u);
    Word u = conjugator_candidate(f, uniform(0, limit), side);
    return {conjugate_by(f, u, side), ConjugacyWitness{u, side}};
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Whether some nonempty palindrome p with |p| <= max_len satisfies the four
/// P_ret conditions, by brute force over the codomain.
inline bool brute_force_p_ret(const Morphism& f, std::size_t max_len) {
  const std::size_t k = f.codomain().size();
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& letters : all_words(k, len)) {
      Word p(f.codomain(), letters);
      if (!is_palindrome(p)) continue;
      bool ok = true;
      for (Letter a = 0; ok && a < f.domain().size(); ++a) {
        std::vector<Letter> fp = f.image(a).letters();
        fp.insert(fp.end(), letters.begin(), letters.end());
        ok = is_palindrome(std::span<const Letter>(fp)) && scan_count(fp, letters) == 2 &&
             std::equal(letters.begin(), letters.end(), fp.begin());
        for (Letter b = 0; ok && b < a; ++b) ok = !(f.image(a) == f.image(b));
      }
      if (ok) return true;
    }
  return false;
}

// Builds a P_ret morphism from a marker p: each image is r minus its final
// copy of p, where r is a palindrome that starts with p and contains p twice.
inline std::optional<Morphism> random_p_ret(Gen& gen, const Alphabet& dom, const Alphabet& cod) {
  Word p = gen.palindrome(cod, 1, 3);
  std::vector<Word> images;
  for (Letter a = 0; a < dom.size(); ++a) {
    bool placed = false;
    for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
      const std::size_t len = p.size() + gen.uniform(1, 4);
      std::vector<Letter> r = gen.palindrome(cod, len, len).letters();
      for (std::size_t i = 0; i < p.size(); ++i) r[i] = r[len - 1 - i] = p[i];
      Word rw(cod, r);
      if (!is_palindrome(rw) || count_occurrences(rw, p) != 2) continue;
      Word img = rw.prefix(len - p.size());
      bool fresh = true;
      for (const auto& other : images) fresh = fresh && !(other == img);
      if (!fresh) continue;
      images.push_back(img);
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return Morphism(dom, cod, images);
}

}  // namespace palsub::test
