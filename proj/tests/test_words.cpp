#include "doctest.h"
#include "palsub/errors.hpp"
#include "support.hpp"

using namespace palsub;
using palsub::test::all_words;
using palsub::test::scan_count;

TEST_CASE("alphabet names and equality") {
  Alphabet anon(3);
  CHECK(anon.name(0) == "0");
  CHECK(anon.is_anonymous());
  CHECK(anon == Alphabet(std::vector<std::string>{"0", "1", "2"}));
  CHECK_FALSE(anon == Alphabet(std::vector<std::string>{"a", "b", "c"}));
  CHECK(Alphabet::default_name(10) == "a");
  CHECK(Alphabet::default_name(100) == "[100]");
  CHECK_THROWS_AS(Alphabet(0), Error);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{"a", "a"}), Error);
}

TEST_CASE("words reject letters outside the alphabet") {
  CHECK_THROWS_AS(Word(Alphabet(2), {0, 2}), Error);
  Word w = parse_word("abc");
  CHECK(w.alphabet().size() == 3);
  CHECK(w.str() == "abc");
  CHECK(parse_word("0120").alphabet() == Alphabet(3));
  CHECK_THROWS_AS(parse_word(Alphabet(2), "012"), ParseError);
}

TEST_CASE("mixing alphabets is a contract violation") {
  Word a = parse_word("ab");
  Word b = parse_word("01");
  try {
    (void)count_occurrences(a, b);
    FAIL("expected alphabet mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlphabetMismatch);
  }
  CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("reverse") {
  CHECK(reverse(parse_word("ab")).str() == "ba");
  CHECK(reverse(Word(Alphabet(2))).empty());
  CHECK(reverse(parse_word("aba")).str() == "aba");
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(parse_word("aba")));
  CHECK(is_palindrome(Word(Alphabet(2))));
  CHECK_FALSE(is_palindrome(parse_word("ab")));
}

TEST_CASE("count_occurrences") {
  CHECK(count_occurrences(parse_word("010"), parse_word(Alphabet(2), "0")) == 2);
  CHECK(count_occurrences(parse_word("000"), parse_word(Alphabet(1), "00")) == 2);
  Word u = parse_word("011010011001011");
  Word v = parse_word(Alphabet(2), "0110");
  REQUIRE(scan_count(u.letters(), v.letters()) == 2);
  CHECK(count_occurrences(u, v) == 2);
  try {
    (void)count_occurrences(u, Word(Alphabet(2)));
    FAIL("expected empty pattern error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyPattern);
  }
}

TEST_CASE("reverse and palindrome invariants over all binary words up to length 10") {
  Alphabet bin(2);
  for (std::size_t len = 0; len <= 10; ++len)
    for (const auto& l : all_words(2, len)) {
      Word w(bin, l);
      CHECK(reverse(reverse(w)) == w);
      CHECK(is_palindrome(w) == is_palindrome(reverse(w)));
    }
}

TEST_CASE("count_occurrences agrees with a quadratic scan on binary words up to length 10") {
  Alphabet bin(2);
  std::size_t checked = 0;
  for (std::size_t vlen = 1; vlen <= 3; ++vlen)
    for (const auto& v : all_words(2, vlen))
      for (std::size_t len = 0; len <= 10; ++len)
        for (const auto& u : all_words(2, len)) {
          REQUIRE(count_occurrences(Word(bin, u), Word(bin, v)) == scan_count(u, v));
          ++checked;
        }
  CHECK(checked > 0);
}

TEST_CASE("occurrences across a concatenation boundary") {
  palsub::test::Gen gen(7);
  Alphabet bin(2);
  for (int i = 0; i < 500; ++i) {
    Word u = gen.word(bin, 0, 12);
    Word v = gen.word(bin, 0, 12);
    Word x = gen.word(bin, 1, 4);
    const std::size_t joined = count_occurrences(u + v, x);
    const std::size_t separate = count_occurrences(u, x) + count_occurrences(v, x);
    CHECK(joined >= separate);
    CHECK(joined <= separate + x.size() - 1);
  }
}
