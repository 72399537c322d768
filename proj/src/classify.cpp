#include "palsub/classify.hpp"

#include <algorithm>

#include "palsub/errors.hpp"

namespace palsub {

namespace {

const Word& shortest_image(const Morphism& f) {
  const auto images = f.images();
  return *std::min_element(images.begin(), images.end(),
                           [](const Word& x, const Word& y) { return x.size() < y.size(); });
}

// Tries p = the length-`len` prefix (or suffix) of the shortest image.
std::optional<PalindromicSplit> try_split(const Morphism& f, std::size_t len, bool prefix_form) {
  const Word& s = shortest_image(f);
  Word p = prefix_form ? s.prefix(len) : s.substr(s.size() - len);
  if (!is_palindrome(p)) return std::nullopt;
  PalindromicSplit split{p, {}};
  for (const auto& img : f.images()) {
    if (prefix_form ? !img.starts_with(p) : !img.ends_with(p)) return std::nullopt;
    Word q = prefix_form ? img.substr(len) : img.prefix(img.size() - len);
    if (!is_palindrome(q)) return std::nullopt;
    split.q.push_back(std::move(q));
  }
  return split;
}

std::optional<PalindromicSplit> find_split(const Morphism& f, bool prefix_form) {
  for (std::size_t len = shortest_image(f).size() + 1; len-- > 0;)
    if (auto s = try_split(f, len, prefix_form)) return s;
  return std::nullopt;
}

bool check_split(const Morphism& f, const PalindromicSplit& s, bool prefix_form) {
  if (s.q.size() != f.domain().size() || !(s.p.alphabet() == f.codomain())) return false;
  if (!is_palindrome(s.p)) return false;
  for (Letter a = 0; a < f.domain().size(); ++a) {
    const Word& q = s.q[a];
    if (!(q.alphabet() == f.codomain()) || !is_palindrome(q)) return false;
    if (!(f.image(a) == (prefix_form ? s.p + q : q + s.p))) return false;
  }
  return true;
}

Word signed_conjugator(const Morphism& f, long shift, Side& side) {
  side = shift >= 0 ? Side::Right : Side::Left;
  return conjugator_candidate(f, static_cast<std::size_t>(shift >= 0 ? shift : -shift), side);
}

}  // namespace

std::optional<PalindromicSplit> find_class_p(const Morphism& f) { return find_split(f, true); }
std::optional<PalindromicSplit> find_extended_p(const Morphism& f) { return find_split(f, false); }

bool is_class_p_split(const Morphism& f, const PalindromicSplit& s) { return check_split(f, s, true); }
bool is_extended_p_split(const Morphism& f, const PalindromicSplit& s) {
  return check_split(f, s, false);
}

bool is_p_ret_marker(const Morphism& f, const Word& p) {
  if (p.empty() || !(p.alphabet() == f.codomain()) || !is_palindrome(p)) return false;
  for (Letter a = 0; a < f.domain().size(); ++a) {
    Word fp = f.image(a) + p;
    if (!is_palindrome(fp)) return false;
    if (!fp.starts_with(p) || !fp.ends_with(p)) return false;
    if (count_occurrences(fp, p) != 2) return false;
    for (Letter b = 0; b < a; ++b)
      if (f.image(a) == f.image(b)) return false;
  }
  return true;
}

std::optional<Word> find_p_ret_marker(const Morphism& f, std::size_t bound) {
  // p must be a prefix of every f(a)p, hence of every f(a)^ω.
  const std::size_t limit = right_conjugator_limit(f, bound);
  const Word common = conjugator_candidate(f, limit, Side::Right);
  for (std::size_t len = 1; len <= limit; ++len) {
    Word p = common.prefix(len);
    if (is_p_ret_marker(f, p)) return p;
  }
  return std::nullopt;
}

std::optional<PPrimeWitness> find_p_prime(const Morphism& f, std::size_t bound) {
  const std::size_t right = right_conjugator_limit(f, bound);
  const std::size_t left = left_conjugator_limit(f, bound);
  for (std::size_t len = 0; len <= std::max(right, left); ++len) {
    for (Side side : {Side::Right, Side::Left}) {
      if (len > (side == Side::Right ? right : left)) continue;
      if (len == 0 && side == Side::Left) continue;
      ConjugacyWitness w{conjugator_candidate(f, len, side), side};
      Morphism h = conjugate_by(f, w.u, side);
      if (auto split = find_class_p(h)) return PPrimeWitness{std::move(w), std::move(h), *split};

      // a ↦ q_a p is conjugate to a ↦ p q_a through the left conjugator p.
      auto ext = find_extended_p(h);
      if (!ext) continue;
      const long shift = (side == Side::Right ? 1L : -1L) * static_cast<long>(len) -
                         static_cast<long>(ext->p.size());
      Side target_side;
      Word u = signed_conjugator(f, shift, target_side);
      try {
        Morphism target = conjugate_by(f, u, target_side);
        PalindromicSplit split{ext->p, ext->q};
        if (is_class_p_split(target, split))
          return PPrimeWitness{ConjugacyWitness{std::move(u), target_side}, std::move(target),
                               std::move(split)};
      } catch (const Error&) {
        // fall through to longer conjugators
      }
    }
  }
  return std::nullopt;
}

ClassificationResult classify(const Morphism& f, std::optional<std::size_t> bound) {
  ClassificationResult r;
  r.search_bound = bound.value_or(f.total_length());
  r.p_witness = find_class_p(f);
  r.in_p = r.p_witness.has_value();
  r.extended_p_witness = find_extended_p(f);
  r.in_extended_p = r.extended_p_witness.has_value();
  r.marker = find_p_ret_marker(f, r.search_bound);
  r.in_p_ret = r.marker.has_value();
  r.p_prime_witness = find_p_prime(f, r.search_bound);
  r.in_p_prime = r.p_prime_witness ? PPrimeVerdict::Yes : PPrimeVerdict::NoUpToBound;
  return r;
}

std::vector<std::string> recheck_witnesses(const Morphism& f, const ClassificationResult& r) {
  std::vector<std::string> failures;
  if (r.in_p != r.p_witness.has_value() || (r.p_witness && !is_class_p_split(f, *r.p_witness)))
    failures.emplace_back("class_p_witness");
  if (r.in_extended_p != r.extended_p_witness.has_value() ||
      (r.extended_p_witness && !is_extended_p_split(f, *r.extended_p_witness)))
    failures.emplace_back("extended_p_witness");
  if (r.in_p_ret != r.marker.has_value() || (r.marker && !is_p_ret_marker(f, *r.marker)))
    failures.emplace_back("p_ret_marker");
  const bool yes = r.in_p_prime == PPrimeVerdict::Yes;
  if (yes != r.p_prime_witness.has_value())
    failures.emplace_back("p_prime_witness");
  else if (r.p_prime_witness) {
    const auto& w = *r.p_prime_witness;
    if (!satisfies_conjugacy(f, w.conjugate, w.conjugator))
      failures.emplace_back("p_prime_conjugacy");
    if (!is_class_p_split(w.conjugate, w.split)) failures.emplace_back("p_prime_class_p");
  }
  return failures;
}

}  // namespace palsub
