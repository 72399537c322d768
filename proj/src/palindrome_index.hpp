#pragma once

// Manacher radii: O(1) palindrome tests for arbitrary factors after O(n) setup.

#include <span>
#include <vector>

#include "palsub/words.hpp"

namespace palsub::detail {

class PalindromeIndex {
 public:
  explicit PalindromeIndex(std::span<const Letter> w) : radius_(2 * w.size() + 1, 0) {
    // t = #w0#w1#...#, separators encoded as -1. radius_[c] is the largest k
    // with t[c-k..c+k] a palindrome; that equals the letter count of the
    // longest palindromic factor centred at c.
    std::vector<long> t(2 * w.size() + 1, -1);
    for (std::size_t i = 0; i < w.size(); ++i) t[2 * i + 1] = static_cast<long>(w[i]);
    const long n = static_cast<long>(t.size());
    long centre = 0, right = 0;
    for (long i = 0; i < n; ++i) {
      long k = i < right ? std::min(right - i, radius_[2 * centre - i]) : 0;
      while (i - k - 1 >= 0 && i + k + 1 < n && t[i - k - 1] == t[i + k + 1]) ++k;
      radius_[i] = k;
      if (i + k > right) {
        centre = i;
        right = i + k;
      }
    }
  }

  /// w[start, start + len) is a palindrome.
  bool is_palindrome(std::size_t start, std::size_t len) const {
    return radius_[2 * start + len] >= static_cast<long>(len);
  }

 private:
  std::vector<long> radius_;
};

}  // namespace palsub::detail
