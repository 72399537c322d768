#pragma once

// Decomposition y = g(x) of a rich (or finite-defect) primitive morphic word
// into a morphism g conjugate to class P and a rich word x fixed by a
// primitive substitution h conjugate to class P.
//
// The derived words S_0 = y, S_{k+1} = D_0(S_k) are computed until two of
// them agree on a prefix of length cmp_len. With S_m = S_n and connecting
// morphisms g_k : S_k ↦ S_{k-1},
//
//   h = g_{m+1} ∘ ... ∘ g_n   (h(x) = x, x = S_m)
//   g = g_1 ∘ ... ∘ g_m       (y = g(x); identity when m = 0)
//
// Equalities are certified at prefix scale only; verify_certificate re-runs
// every check at any requested length.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palsub/classify.hpp"
#include "palsub/derived.hpp"
#include "palsub/palindromes.hpp"

namespace palsub {

struct DecomposeOptions {
  std::size_t depth = 12;
  std::size_t cmp_len = 4096;
  std::optional<std::size_t> conjugator_bound;  ///< default: sum of image lengths
  std::size_t marker_bound = 64;
  DerivationLimits limits;
};

/// Smallest (n, then m) with S_m and S_n over equal alphabets and equal on
/// their first cmp_len letters, among the levels already built.
std::optional<std::pair<std::size_t, std::size_t>> find_repetition(DerivedChain& chain,
                                                                   std::size_t cmp_len);

enum class CertificateStatus { Complete, Partial, Failed };

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::size_t length = 0;
  std::vector<CertificateCheck> checks;

  bool all_passed() const;
  const CertificateCheck* find(std::string_view name) const;
};

struct DecompositionCertificate {
  MorphicWordSpec y;
  /// Finite-defect path only: y = ret_factor(D_{ret_prefix}(y)).
  std::optional<Morphism> ret_factor;
  std::optional<Word> ret_prefix;
  std::vector<Morphism> chain;  ///< g_1 ... g_n
  std::vector<StabilityRecord> stability;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t cmp_len = 0;
  Morphism h;
  MorphicWordSpec x;
  Morphism g;
  ClassificationResult h_classification;
  ClassificationResult g_classification;
  bool h_primitive = false;
  std::optional<std::size_t> x_rich_up_to;
  VerificationReport verification;
  CertificateStatus status = CertificateStatus::Failed;
  std::string reason;
};

/// Requires richness of y up to cmp_len (ErrorKind::PreconditionFailed);
/// throws ErrorKind::DepthExhausted when no repetition appears within depth.
DecompositionCertificate decompose_rich(const MorphicWordSpec& y, const DecomposeOptions& options = {});

/// Requires the defect of z to be equal at cmp_len and 2*cmp_len. Tries the
/// palindromic prefixes u of z (|u| <= marker_bound) shortest first until the
/// return morphism at u is in P_ret and D_u(z) is rich up to cmp_len.
DecompositionCertificate decompose_finite_defect(const MorphicWordSpec& z,
                                                 const DecomposeOptions& options = {});

/// Re-derives every check from the certificate contents at prefix length L.
VerificationReport verify_certificate(const DecompositionCertificate& cert, std::size_t length);

std::string_view to_string(CertificateStatus status);

}  // namespace palsub
