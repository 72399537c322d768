#include "palsub/morphic_word.hpp"

#include "palsub/errors.hpp"

namespace palsub {

MorphicWordSpec::MorphicWordSpec(Morphism inner, Letter seed, std::optional<Morphism> outer)
    : inner_(std::move(inner)), seed_(seed), outer_(std::move(outer)), cache_(std::make_shared<Cache>()) {
  if (!inner_.is_endomorphism())
    throw Error(ErrorKind::NonEndomorphism, "inner substitution must be an endomorphism");
  if (!is_primitive(inner_))
    throw Error(ErrorKind::NotPrimitive, "inner substitution is not primitive");
  if (!is_prolongable(inner_, seed_))
    throw Error(ErrorKind::NotProlongable, "inner substitution is not prolongable on the seed");
  if (outer_) require_same_alphabet(outer_->domain(), inner_.domain(), "outer morphism domain");
  cache_->fixed_point = inner_.image(seed_).letters();
  cache_->expanded = 1;
}

const Alphabet& MorphicWordSpec::alphabet() const {
  return outer_ ? outer_->codomain() : inner_.domain();
}

std::span<const Letter> MorphicWordSpec::view(std::size_t n) {
  std::lock_guard lock(cache_->mutex);
  Cache& c = *cache_;
  auto grow_fixed_point = [&](std::size_t needed) {
    while (c.fixed_point.size() < needed) {
      const auto& img = inner_.image(c.fixed_point[c.expanded++]).letters();
      c.fixed_point.insert(c.fixed_point.end(), img.begin(), img.end());
    }
  };
  if (!outer_) {
    grow_fixed_point(n);
    return std::span<const Letter>(c.fixed_point).first(n);
  }
  while (c.output.size() < n) {
    grow_fixed_point(c.emitted + 1);
    const auto& img = outer_->image(c.fixed_point[c.emitted++]).letters();
    c.output.insert(c.output.end(), img.begin(), img.end());
  }
  return std::span<const Letter>(c.output).first(n);
}

Word generate_prefix(MorphicWordSpec& x, std::size_t n) { return x.prefix(n); }

}  // namespace palsub
