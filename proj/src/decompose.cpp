#include "palsub/decompose.hpp"

#include <algorithm>

#include "palsub/errors.hpp"

namespace palsub {

std::string_view to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Complete: return "complete";
    case CertificateStatus::Partial: return "partial";
    case CertificateStatus::Failed: return "failed";
  }
  return "failed";
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CertificateCheck* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::optional<std::pair<std::size_t, std::size_t>> find_repetition(DerivedChain& chain,
                                                                   std::size_t cmp_len) {
  if (cmp_len == 0) throw Error(ErrorKind::InvalidArgument, "cmp_len must be positive");
  for (std::size_t n = 1; n < chain.size(); ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      auto& a = *chain.level(m).word;
      auto& b = *chain.level(n).word;
      if (!(a.alphabet() == b.alphabet())) continue;
      const Word pa = a.prefix(cmp_len);
      if (std::ranges::equal(pa.view(), b.view(cmp_len))) return std::pair{m, n};
    }
  }
  return std::nullopt;
}

namespace {

struct RichCore {
  std::vector<Morphism> chain;
  std::vector<StabilityRecord> stability;
  std::size_t m;
  std::size_t n;
  Morphism h;
  Morphism g;
  Letter x_seed;
};

RichCore decompose_core(const std::shared_ptr<InfiniteWord>& y, const DecomposeOptions& options) {
  DerivedChain chain(y, options.limits);
  std::optional<std::pair<std::size_t, std::size_t>> rep;
  for (std::size_t k = 1; k <= options.depth && !rep; ++k) {
    chain.extend();
    rep = find_repetition(chain, options.cmp_len);
  }
  if (!rep)
    throw Error(ErrorKind::DepthExhausted,
                "no repetition among derived words up to depth " + std::to_string(options.depth));

  const auto [m, n] = *rep;
  std::vector<Morphism> gs = chain.morphisms();
  std::vector<StabilityRecord> stability;
  for (std::size_t k = 1; k < chain.size(); ++k) stability.push_back(chain.level(k).structure->stability);
  Morphism h = compose_all(std::span<const Morphism>(gs).subspan(m, n - m));
  Morphism g = m == 0 ? Morphism::identity(y->alphabet())
                      : compose_all(std::span<const Morphism>(gs).first(m));
  const Letter seed = chain.level(m).word->view(1)[0];
  return RichCore{std::move(gs), std::move(stability), m, n, std::move(h), std::move(g), seed};
}

DecompositionCertificate assemble(const MorphicWordSpec& y, std::optional<Morphism> ret_factor,
                                  std::optional<Word> ret_prefix,
                                  std::optional<StabilityRecord> ret_stability, RichCore core,
                                  const DecomposeOptions& options) {
  Morphism g = ret_factor ? compose(*ret_factor, core.g) : core.g;
  const bool h_primitive = is_primitive(core.h);
  if (!h_primitive)
    throw Error(ErrorKind::NotPrimitive,
                "repetition found but the induced substitution h is not primitive");
  MorphicWordSpec x(core.h, core.x_seed);

  std::vector<StabilityRecord> stability;
  if (ret_stability) stability.push_back(*ret_stability);
  stability.insert(stability.end(), core.stability.begin(), core.stability.end());

  ClassificationResult hc = classify(core.h, options.conjugator_bound);
  ClassificationResult gc = classify(g, options.conjugator_bound);
  auto x_rich = richness_check_returns(x, options.cmp_len);

  DecompositionCertificate cert{
      y, std::move(ret_factor), std::move(ret_prefix), std::move(core.chain), std::move(stability),
      core.m, core.n, options.cmp_len, core.h, x, std::move(g), std::move(hc), std::move(gc),
      h_primitive,
      x_rich.violated() ? std::nullopt : std::optional<std::size_t>(options.cmp_len),
      {}, CertificateStatus::Complete, ""};

  cert.verification = verify_certificate(cert, options.cmp_len);
  std::vector<std::string> problems;
  if (cert.h_classification.in_p_prime != PPrimeVerdict::Yes) problems.emplace_back("h not in P' within bound");
  if (cert.g_classification.in_p_prime != PPrimeVerdict::Yes) problems.emplace_back("g not in P' within bound");
  if (!cert.x_rich_up_to) problems.emplace_back("x not rich up to cmp_len");
  for (const auto& c : cert.verification.checks)
    if (!c.passed) {
      cert.status = CertificateStatus::Failed;
      problems.push_back("check " + c.name + " failed");
    }
  if (cert.status != CertificateStatus::Failed && !problems.empty())
    cert.status = CertificateStatus::Partial;
  for (std::size_t i = 0; i < problems.size(); ++i)
    cert.reason += (i ? "; " : "") + problems[i];
  return cert;
}

}  // namespace

DecompositionCertificate decompose_rich(const MorphicWordSpec& y, const DecomposeOptions& options) {
  auto source = std::make_shared<MorphicWordSpec>(y);
  auto rich = richness_check_returns(*source, options.cmp_len);
  if (rich.violated())
    throw Error(ErrorKind::PreconditionFailed,
                "input is not rich: complete first return '" + rich.witness->complete_return.str() +
                    "' to '" + rich.witness->palindrome.str() + "' is not a palindrome");
  return assemble(y, std::nullopt, std::nullopt, std::nullopt, decompose_core(source, options), options);
}

DecompositionCertificate decompose_finite_defect(const MorphicWordSpec& z,
                                                 const DecomposeOptions& options) {
  auto source = std::make_shared<MorphicWordSpec>(z);
  const std::size_t d1 = defect_of_prefix(*source, options.cmp_len);
  const std::size_t d2 = defect_of_prefix(*source, 2 * options.cmp_len);
  if (d1 != d2)
    throw Error(ErrorKind::PreconditionFailed,
                "defect still growing: " + std::to_string(d1) + " at length " +
                    std::to_string(options.cmp_len) + ", " + std::to_string(d2) + " at length " +
                    std::to_string(2 * options.cmp_len));

  const Word head = source->prefix(options.marker_bound);
  for (std::size_t len : palindromic_prefixes(head)) {
    if (len == 0) continue;
    std::optional<DerivedResult> derived;
    try {
      derived = derived_word(source, head.prefix(len), options.limits);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StabilityNotReached) continue;
      throw;
    }
    const std::size_t bound = std::max(options.conjugator_bound.value_or(derived->f_u.total_length()), len);
    if (!classify(derived->f_u, bound).in_p_ret) continue;
    if (richness_check_returns(*derived->word, options.cmp_len).violated()) continue;

    RichCore core = decompose_core(derived->word, options);
    return assemble(z, derived->f_u, head.prefix(len), derived->structure.stability, std::move(core),
                    options);
  }
  throw Error(ErrorKind::NoQualifyingPrefix,
              "no palindromic prefix of length <= " + std::to_string(options.marker_bound) +
                  " has a P_ret return morphism and a rich derived word");
}

VerificationReport verify_certificate(const DecompositionCertificate& cert, std::size_t length) {
  VerificationReport report;
  report.length = length;
  auto run = [&](std::string name, auto&& check) {
    CertificateCheck c{std::move(name), false, ""};
    try {
      c.detail = check();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    if (c.passed) c.detail = "ok";
    report.checks.push_back(std::move(c));
  };

  MorphicWordSpec x = cert.x;
  MorphicWordSpec y = cert.y;

  run("prefix_match", [&]() -> std::string {
    Word image = apply(cert.g, x.prefix(length));
    if (image.size() < length) return "g(x) prefix shorter than requested length";
    const Word expected = y.prefix(length);
    for (std::size_t i = 0; i < length; ++i)
      if (image[i] != expected[i]) return "g(x) and y differ at position " + std::to_string(i);
    return "";
  });

  run("fixed_point", [&]() -> std::string {
    const Word xp = x.prefix(length);
    Word image = apply(cert.h, xp);
    if (image.size() < length) return "h(x) prefix shorter than requested length";
    for (std::size_t i = 0; i < length; ++i)
      if (image[i] != xp[i]) return "h(x) and x differ at position " + std::to_string(i);
    // |h^k(first letter)| must grow strictly.
    Word iterate(cert.h.domain(), std::vector<Letter>{xp[0]});
    for (int k = 0; k < 4; ++k) {
      Word next = apply(cert.h, iterate);
      if (next.size() <= iterate.size() || !next.starts_with(iterate))
        return "h is not growing on the first letter of x";
      iterate = std::move(next);
    }
    return "";
  });

  run("h_primitive", [&]() -> std::string {
    return is_primitive(cert.h) ? "" : "h is not primitive";
  });

  auto witness_check = [&](const Morphism& f, const ClassificationResult& c) -> std::string {
    if (c.in_p_prime != PPrimeVerdict::Yes) return "no P' witness within bound";
    auto failures = recheck_witnesses(f, c);
    std::string out;
    for (const auto& s : failures) out += (out.empty() ? "" : ", ") + s;
    return out;
  };
  run("h_witness", [&] { return witness_check(cert.h, cert.h_classification); });
  run("g_witness", [&] { return witness_check(cert.g, cert.g_classification); });

  run("chain_composition", [&]() -> std::string {
    if (cert.m >= cert.n || cert.n > cert.chain.size()) return "invalid repetition indices";
    std::span<const Morphism> gs(cert.chain);
    if (!(compose_all(gs.subspan(cert.m, cert.n - cert.m)) == cert.h))
      return "h differs from the composition of the chain";
    Morphism g = cert.m == 0 ? Morphism::identity(cert.h.domain()) : compose_all(gs.first(cert.m));
    if (cert.ret_factor) g = compose(*cert.ret_factor, g);
    if (!(g == cert.g)) return "g differs from the composition of the chain";
    return "";
  });

  return report;
}

}  // namespace palsub
