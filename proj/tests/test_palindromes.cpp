#include <set>

#include "doctest.h"
#include "palsub/errors.hpp"
#include "palsub/palindromes.hpp"
#include "support.hpp"

using namespace palsub;
using palsub::test::all_words;

namespace {

// Distinct palindromic factors by enumerating every (i, j) window.
std::size_t oracle_pal_count(const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> seen{{}};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      std::vector<Letter> f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
      std::vector<Letter> r(f.rbegin(), f.rend());
      if (f == r) seen.insert(f);
    }
  return seen.size();
}

// Rich iff every complete first return to every palindromic factor is a
// palindrome. Quadratic in the number of factor occurrences.
bool oracle_returns_rich(const std::vector<Letter>& w) {
  auto pal = [](const std::vector<Letter>& v, std::size_t i, std::size_t j) {
    while (i + 1 < j) {
      if (v[i] != v[j - 1]) return false;
      ++i;
      --j;
    }
    return true;
  };
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t len = 1; i + len <= n; ++len) {
      if (!pal(w, i, i + len)) continue;
      for (std::size_t k = i + 1; k + len <= n; ++k) {
        if (!std::equal(w.begin() + static_cast<std::ptrdiff_t>(i),
                        w.begin() + static_cast<std::ptrdiff_t>(i + len),
                        w.begin() + static_cast<std::ptrdiff_t>(k)))
          continue;
        if (!pal(w, i, k + len)) return false;
        break;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("eertree on small examples") {
  Word w = parse_word("aababbaa");
  CHECK(oracle_pal_count(w.letters()) == 8);
  CHECK(eertree_count(w).back() == 8);
  CHECK(palindromic_factors_naive(w).size() == 8);
  CHECK(defect(w) == 1);
  CHECK(defect(parse_word("aababbab")) == 0);
  CHECK(eertree_count(Word(Alphabet(2))) == std::vector<std::size_t>{1});
  CHECK(eertree_count(parse_word("abba")) == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("naive oracle refuses long inputs") {
  Word w(Alphabet(1), std::vector<Letter>(50, 0));
  try {
    (void)palindromic_factors_naive(w, 10);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleCapExceeded);
  }
}

TEST_CASE("eertree matches the window oracle on every binary word up to length 12") {
  for (std::size_t len = 0; len <= 12; ++len)
    for (const auto& l : all_words(2, len)) {
      auto counts = eertree_count(std::span<const Letter>(l));
      REQUIRE(counts.size() == len + 1);
      REQUIRE(counts.back() == oracle_pal_count(l));
    }
}

TEST_CASE("eertree matches the window oracle on every ternary word up to length 8") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& l : all_words(3, len)) REQUIRE(eertree_count(std::span<const Letter>(l)).back() == oracle_pal_count(l));
}

TEST_CASE("each letter adds at most one new palindrome") {
  palsub::test::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    Word w = gen.word(Alphabet(gen.uniform(1, 4)), 0, 60);
    auto counts = eertree_count(w);
    CHECK(counts.front() == 1);
    for (std::size_t k = 1; k < counts.size(); ++k) {
      CHECK(counts[k] - counts[k - 1] <= 1);
      CHECK(counts[k] <= k + 1);
    }
  }
}

TEST_CASE("defect zero matches the return characterisation on random words") {
  palsub::test::Gen gen(2024);
  std::size_t rich = 0;
  for (int i = 0; i < 200; ++i) {
    Alphabet a(gen.uniform(2, 3));
    // Short words and a binary bias keep both verdicts well represented.
    Word w = gen.word(a, 1, gen.uniform(0, 1) ? 12 : 40);
    const bool by_defect = defect(w) == 0;
    REQUIRE(by_defect == oracle_returns_rich(w.letters()));
    RichnessReport r = richness_check(w);
    REQUIRE(by_defect == !r.violated());
    if (r.violated()) {
      REQUIRE(r.witness);
      CHECK_FALSE(is_palindrome(r.witness->complete_return));
      CHECK(r.witness->complete_return.starts_with(r.witness->palindrome));
      CHECK(r.witness->complete_return.ends_with(r.witness->palindrome));
      CHECK(count_occurrences(r.witness->complete_return, r.witness->palindrome) == 2);
    }
    rich += by_defect;
  }
  CHECK(rich > 20);
  CHECK(rich < 180);
}

TEST_CASE("palindromic prefixes") {
  CHECK(palindromic_prefixes(parse_word("00100")) == std::vector<std::size_t>{0, 1, 2, 5});
  CHECK(palindromic_prefixes(parse_word("ab")) == std::vector<std::size_t>{0, 1});
  palsub::test::Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    Word w = gen.word(Alphabet(2), 0, 30);
    std::vector<std::size_t> expected;
    for (std::size_t k = 0; k <= w.size(); ++k)
      if (is_palindrome(w.prefix(k))) expected.push_back(k);
    CHECK(palindromic_prefixes(w) == expected);
  }
}

TEST_CASE("richness of fixed-point prefixes") {
  auto tau = palsub::test::spec("b->ccb;c->cb@c");
  CHECK(richness_check_returns(*tau, 2000).verdict == RichnessVerdict::RichUpToLength);
  CHECK(defect_of_prefix(*tau, 2000) == 0);

  auto tm = palsub::test::spec("0->01;1->10@0");
  RichnessReport r = richness_check_returns(*tm, 64);
  CHECK(r.violated());
  REQUIRE(r.witness);
  CHECK_FALSE(is_palindrome(r.witness->complete_return));

  CHECK(richness_check(parse_word("aba")).verdict == RichnessVerdict::Rich);
  CHECK_THROWS_AS(richness_check_returns(*tau, 0), Error);
}

TEST_CASE("defect grows along the Thue-Morse word") {
  auto tm = palsub::test::spec("0->01;1->10@0");
  const std::size_t d256 = defect_of_prefix(*tm, 256);
  const std::size_t d4096 = defect_of_prefix(*tm, 4096);
  CHECK(d256 >= 1);
  CHECK(d4096 > d256);
}
