#include "palsub/morphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "palsub/errors.hpp"

namespace palsub {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw Error(ErrorKind::InvalidArgument, "morphism needs one image per domain letter");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty())
      throw Error(ErrorKind::InvalidArgument,
                  "erasing morphism: image of '" + domain_.name(static_cast<Letter>(a)) + "' is empty");
    require_same_alphabet(images_[a].alphabet(), codomain_, "morphism image");
  }
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (Letter a = 0; a < alphabet.size(); ++a) images.emplace_back(alphabet, std::vector<Letter>{a});
  return Morphism(alphabet, alphabet, std::move(images));
}

std::size_t Morphism::total_length() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.size();
  return total;
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const auto& w : images_) m = std::max(m, w.size());
  return m;
}

bool Morphism::operator==(const Morphism& other) const {
  return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
}

void apply_to(const Morphism& f, std::span<const Letter> w, std::vector<Letter>& out) {
  for (Letter a : w) {
    const auto& img = f.image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
}

Word apply(const Morphism& f, const Word& w) {
  require_same_alphabet(f.domain(), w.alphabet(), "apply");
  std::vector<Letter> out;
  apply_to(f, w.view(), out);
  return Word(f.codomain(), std::move(out));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_alphabet(f.codomain(), g.domain(), "compose");
  std::vector<Word> images;
  images.reserve(f.domain().size());
  for (const auto& img : f.images()) images.push_back(apply(g, img));
  return Morphism(f.domain(), g.codomain(), std::move(images));
}

Morphism compose_all(std::span<const Morphism> fs) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "compose_all: empty chain");
  Morphism acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = compose(fs[i], acc);
  return acc;
}

IncidenceMatrix incidence_matrix(const Morphism& f) {
  if (!f.is_endomorphism())
    throw Error(ErrorKind::NonEndomorphism, "incidence matrix needs an endomorphism");
  const std::size_t k = f.domain().size();
  IncidenceMatrix m(k, std::vector<std::uint64_t>(k, 0));
  for (Letter a = 0; a < k; ++a)
    for (Letter b : f.image(a)) ++m[b][a];
  return m;
}

namespace {

constexpr std::uint64_t kSaturation = std::uint64_t{1} << 32;

IncidenceMatrix multiply_saturating(const IncidenceMatrix& x, const IncidenceMatrix& y) {
  const std::size_t k = x.size();
  IncidenceMatrix z(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (y[l][j] == 0) continue;
        z[i][j] = std::min(kSaturation, z[i][j] + std::min(kSaturation, x[i][l] * y[l][j]));
      }
    }
  return z;
}

bool all_positive(const IncidenceMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](std::uint64_t v) { return v > 0; });
  });
}

}  // namespace

bool is_primitive(const Morphism& f) {
  if (!f.is_endomorphism()) return false;
  const IncidenceMatrix m = incidence_matrix(f);
  const std::size_t k = m.size();
  const std::size_t wielandt = (k - 1) * (k - 1) + 1;
  IncidenceMatrix power = m;
  for (std::size_t n = 1; n <= wielandt; ++n) {
    if (all_positive(power)) return true;
    power = multiply_saturating(power, m);
  }
  return false;
}

bool is_prolongable(const Morphism& f, Letter a) {
  if (!f.is_endomorphism() || a >= f.domain().size()) return false;
  const Word& img = f.image(a);
  return img.size() >= 2 && img[0] == a;
}

Word fixed_point_prefix(const Morphism& f, Letter a, std::size_t n) {
  if (!is_prolongable(f, a))
    throw Error(ErrorKind::NotProlongable,
                "fixed_point_prefix: image of the seed must start with the seed and have length >= 2");
  // x = f(x_0) f(x_1) ...; each image is appended as soon as its letter is known.
  std::vector<Letter> x = f.image(a).letters();
  for (std::size_t i = 1; x.size() < n; ++i) {
    const auto& img = f.image(x[i]).letters();
    x.insert(x.end(), img.begin(), img.end());
  }
  x.resize(n);
  return Word(f.domain(), std::move(x));
}

Morphism conjugate_by(const Morphism& f, const Word& u, Side side) {
  require_same_alphabet(f.codomain(), u.alphabet(), "conjugate_by");
  std::vector<Word> images;
  images.reserve(f.domain().size());
  for (Letter a = 0; a < f.domain().size(); ++a) {
    const Word& img = f.image(a);
    if (side == Side::Right) {
      Word fu = img + u;
      if (!fu.starts_with(u))
        throw Error(ErrorKind::InvalidConjugator,
                    "'" + u.str() + "' is not a prefix of f(" + f.domain().name(a) + ")u");
      images.push_back(fu.substr(u.size()));
    } else {
      Word uf = u + img;
      if (!uf.ends_with(u))
        throw Error(ErrorKind::InvalidConjugator,
                    "'" + u.str() + "' is not a suffix of u f(" + f.domain().name(a) + ")");
      images.push_back(uf.prefix(img.size()));
    }
  }
  return Morphism(f.domain(), f.codomain(), std::move(images));
}

bool satisfies_conjugacy(const Morphism& f, const Morphism& g, const ConjugacyWitness& w) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()) ||
      !(w.u.alphabet() == f.codomain()))
    return false;
  for (Letter a = 0; a < f.domain().size(); ++a) {
    bool ok = w.side == Side::Right ? f.image(a) + w.u == w.u + g.image(a)
                                    : w.u + f.image(a) == g.image(a) + w.u;
    if (!ok) return false;
  }
  return true;
}

ConjugacyWitness swap_sides(const ConjugacyWitness& w) {
  return {w.u, w.side == Side::Right ? Side::Left : Side::Right};
}

std::size_t right_conjugator_limit(const Morphism& f, std::size_t cap) {
  const auto images = f.images();
  for (std::size_t i = 0; i < cap; ++i) {
    const Letter c = images[0][i % images[0].size()];
    for (const auto& img : images.subspan(1))
      if (img[i % img.size()] != c) return i;
  }
  return cap;
}

std::size_t left_conjugator_limit(const Morphism& f, std::size_t cap) {
  const auto images = f.images();
  auto at = [](const Word& w, std::size_t i) { return w[w.size() - 1 - i % w.size()]; };
  for (std::size_t i = 0; i < cap; ++i) {
    const Letter c = at(images[0], i);
    for (const auto& img : images.subspan(1))
      if (at(img, i) != c) return i;
  }
  return cap;
}

Word conjugator_candidate(const Morphism& f, std::size_t len, Side side) {
  const Word& w = f.image(0);
  std::vector<Letter> u(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (side == Side::Right)
      u[i] = w[i % w.size()];
    else
      u[len - 1 - i] = w[w.size() - 1 - i % w.size()];
  }
  return Word(f.codomain(), std::move(u));
}

std::optional<ConjugacyWitness> are_conjugate(const Morphism& f, const Morphism& g,
                                              std::size_t bound) {
  if (f.domain().size() != g.domain().size() || f.codomain().size() != g.codomain().size())
    return std::nullopt;
  require_same_alphabet(f.domain(), g.domain(), "are_conjugate");
  require_same_alphabet(f.codomain(), g.codomain(), "are_conjugate");
  for (Letter a = 0; a < f.domain().size(); ++a)
    if (f.image(a).size() != g.image(a).size()) return std::nullopt;

  const std::size_t right = right_conjugator_limit(f, bound);
  const std::size_t left = left_conjugator_limit(f, bound);
  for (std::size_t len = 0; len <= bound; ++len) {
    if (len > right && len > left) break;
    for (Side side : {Side::Right, Side::Left}) {
      if (len > (side == Side::Right ? right : left)) continue;
      if (len == 0 && side == Side::Left) continue;
      ConjugacyWitness w{conjugator_candidate(f, len, side), side};
      if (satisfies_conjugacy(f, g, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace palsub
