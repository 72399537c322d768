#include <set>

#include "doctest.h"
#include "palsub/errors.hpp"
#include "palsub/morphism.hpp"
#include "support.hpp"

using namespace palsub;
using palsub::test::all_words;
using palsub::test::rules;

namespace {

// Letter sets of f^k(a), propagated without any matrix arithmetic.
bool oracle_primitive(const Morphism& f) {
  const std::size_t k = f.domain().size();
  std::vector<std::set<Letter>> reach(k);
  for (Letter a = 0; a < k; ++a) reach[a] = {a};
  for (std::size_t step = 0; step < 64; ++step) {
    std::vector<std::set<Letter>> next(k);
    for (Letter a = 0; a < k; ++a)
      for (Letter b : reach[a])
        for (Letter c : f.image(b).letters()) next[a].insert(c);
    reach = next;
    bool full = true;
    for (const auto& s : reach) full = full && s.size() == k;
    if (full) return true;
  }
  return false;
}

// Checks f(a)u = u g(a) (or the left form) by building both words.
bool oracle_conjugate(const Morphism& f, const Morphism& g, const std::vector<Letter>& u, bool right) {
  for (Letter a = 0; a < f.domain().size(); ++a) {
    std::vector<Letter> lhs = right ? f.image(a).letters() : u;
    std::vector<Letter> rhs = right ? u : g.image(a).letters();
    const auto& lt = right ? u : f.image(a).letters();
    const auto& rt = right ? g.image(a).letters() : u;
    lhs.insert(lhs.end(), lt.begin(), lt.end());
    rhs.insert(rhs.end(), rt.begin(), rt.end());
    if (lhs != rhs) return false;
  }
  return true;
}

// Shortest conjugator length up to `bound` by trying every word.
std::optional<std::size_t> oracle_shortest_conjugator(const Morphism& f, const Morphism& g, std::size_t bound) {
  for (std::size_t len = 0; len <= bound; ++len)
    for (const auto& u : all_words(f.codomain().size(), len))
      if (oracle_conjugate(f, g, u, true) || oracle_conjugate(f, g, u, false)) return len;
  return std::nullopt;
}

}  // namespace

TEST_CASE("morphism construction") {
  Alphabet ab(std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(Morphism(ab, ab, {Word(ab), parse_word(ab, "a")}), Error);
  CHECK_THROWS_AS(Morphism(ab, ab, {parse_word(ab, "a")}), Error);
  Morphism f = rules("a->ac;b->acab;c->ab");
  CHECK(f.is_endomorphism());
  CHECK(f.total_length() == 8);
  CHECK(f.max_image_length() == 4);
  CHECK(Morphism::identity(ab).image(1).str() == "b");
}

TEST_CASE("apply and compose") {
  Morphism f = rules("a->ac;b->acab;c->ab");
  CHECK(apply(f, parse_word(f.domain(), "ab")).str() == "acacab");
  Morphism fib = rules("0->01;1->0");
  Morphism sq = compose(fib, fib);
  CHECK(palsub::test::image_str(sq, 0) == "010");
  CHECK(palsub::test::image_str(sq, 1) == "01");

  Morphism g = rules("0->1;1->10");
  Morphism gf = compose(g, fib);  // g after fib
  CHECK(palsub::test::image_str(gf, 0) == "110");
  CHECK(palsub::test::image_str(gf, 1) == "1");
  std::vector<Morphism> fs{g, fib, fib};
  CHECK(compose_all(fs) == compose(g, compose(fib, fib)));
  CHECK_THROWS_AS(compose(rules("a->b;b->a"), fib), Error);
}

TEST_CASE("composition is associative and matches sequential application") {
  palsub::test::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    Alphabet a = gen.alphabet(3), b = gen.alphabet(3), c = gen.alphabet(3), d = gen.alphabet(3);
    Morphism f = gen.morphism(a, b, 3), g = gen.morphism(b, c, 3), h = gen.morphism(c, d, 3);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    Word w = gen.word(a, 0, 6);
    CHECK(apply(compose(g, f), w) == apply(g, apply(f, w)));
  }
}

TEST_CASE("incidence matrix and primitivity") {
  Morphism labbe = rules("a->ac;b->acab;c->ab");
  IncidenceMatrix m = incidence_matrix(labbe);
  // Column a is the letter count of f(a).
  CHECK(m[0][0] == 1);
  CHECK(m[1][0] == 0);
  CHECK(m[2][0] == 1);
  CHECK(m[0][1] == 2);
  CHECK(m[1][1] == 1);
  CHECK(m[2][1] == 1);
  CHECK(is_primitive(labbe));
  CHECK(is_primitive(rules("0->01;1->10")));
  CHECK_FALSE(is_primitive(rules("0->0;1->01")));
  CHECK_FALSE(is_primitive(rules("0->1;1->0")));
  CHECK(is_primitive(rules("0->1;1->01")));
}

TEST_CASE("primitivity agrees with letter-set propagation on every small endomorphism") {
  std::size_t primitive = 0, total = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    Alphabet a(k);
    std::vector<Word> choices;
    for (std::size_t len = 1; len <= 3; ++len)
      for (const auto& l : all_words(k, len)) choices.emplace_back(a, l);
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Word> images;
      for (auto i : idx) images.push_back(choices[i]);
      Morphism f(a, a, images);
      const bool expected = oracle_primitive(f);
      REQUIRE(is_primitive(f) == expected);
      primitive += expected;
      ++total;
      std::size_t j = k;
      while (j > 0 && idx[j - 1] + 1 == choices.size()) idx[--j] = 0;
      if (j == 0) break;
      ++idx[j - 1];
    }
  }
  CHECK(total == 3 + 14 * 14 + 39 * 39 * 39);
  CHECK(primitive > 0);
}

TEST_CASE("fixed points") {
  Morphism labbe = rules("a->ac;b->acab;c->ab");
  CHECK(fixed_point_prefix(labbe, 0, 26).str() == "acabacacabacabacabacacabac");
  CHECK(fixed_point_prefix(rules("a->ab;b->acac;c->ac"), 0, 32).str() == "abacacabacabacabacacabacabacacab");
  CHECK(fixed_point_prefix(rules("0->01;1->10"), 0, 32).str() == "01101001100101101001011001101001");
  CHECK(fixed_point_prefix(rules("0->01;1->10"), 0, 0).empty());
  CHECK(is_prolongable(labbe, 0));
  CHECK_FALSE(is_prolongable(labbe, 1));
  try {
    (void)fixed_point_prefix(labbe, 1, 10);
    FAIL("expected not prolongable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotProlongable);
  }
}

TEST_CASE("fixed point prefixes are stable under the morphism") {
  Morphism f = rules("0->01;1->001");
  Word x = fixed_point_prefix(f, 0, 500);
  Word fx = apply(f, x);
  CHECK(fx.prefix(500) == x);
}

TEST_CASE("conjugate_by") {
  Morphism fib = rules("0->01;1->0");
  Morphism g = conjugate_by(fib, parse_word(fib.codomain(), "0"), Side::Right);
  CHECK(palsub::test::image_str(g, 0) == "10");
  CHECK(palsub::test::image_str(g, 1) == "0");
  CHECK(satisfies_conjugacy(fib, g, {parse_word(fib.codomain(), "0"), Side::Right}));
  CHECK(satisfies_conjugacy(g, fib, swap_sides({parse_word(fib.codomain(), "0"), Side::Right})));
  try {
    (void)conjugate_by(fib, parse_word(fib.codomain(), "0"), Side::Left);
    FAIL("expected invalid conjugator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidConjugator);
  }
  CHECK(conjugate_by(fib, Word(fib.codomain()), Side::Left) == fib);
}

TEST_CASE("are_conjugate known witnesses") {
  Morphism f = rules("0->001;1->0010010010010");
  Morphism g = rules("0->010;1->0100100010010");
  auto w = are_conjugate(f, g, f.total_length());
  REQUIRE(w);
  CHECK(w->u.str() == "0010010");
  CHECK(w->side == Side::Right);
  CHECK(oracle_conjugate(f, g, w->u.letters(), true));

  Morphism tm = rules("0->01;1->10");
  Morphism flat = rules("0->01;1->01");
  CHECK_FALSE(are_conjugate(tm, flat, 8));
  CHECK_FALSE(oracle_shortest_conjugator(tm, flat, 8));
}

TEST_CASE("are_conjugate finds the shortest witness found by exhaustive search") {
  palsub::test::Gen gen(99);
  std::size_t conj = 0;
  for (int i = 0; i < 300; ++i) {
    Alphabet dom = gen.alphabet(3);
    Alphabet cod = gen.alphabet(2, 2);
    Morphism f = gen.morphism(dom, cod, 4);
    Morphism g = gen.uniform(0, 2) ? gen.conjugate(f, 6).first : gen.morphism(dom, cod, 4);
    auto found = are_conjugate(f, g, 6);
    auto expected = oracle_shortest_conjugator(f, g, 6);
    REQUIRE(found.has_value() == expected.has_value());
    if (found) {
      CHECK(found->u.size() == *expected);
      CHECK(oracle_conjugate(f, g, found->u.letters(), found->side == Side::Right));
      ++conj;
    }
  }
  CHECK(conj > 100);
}
