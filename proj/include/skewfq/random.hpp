#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "skewfq/skew.hpp"

namespace skewfq {

/// Seeded generators for property suites. Values are drawn as rng() % bound,
/// so a seed reproduces the same sequence on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  FqElem element(const Field& field) { return field->element(below(field->order())); }
  FqElem nonzero(const Field& field) { return field->element(1 + below(field->order() - 1)); }
  TruncElem element(const TruncRing& ring) { return ring->element(below(ring->order())); }

  /// Degree exactly `degree` (leading coefficient nonzero, 1 when monic).
  FieldSkew skew(const FrobeniusTwist& tw, std::size_t degree, bool monic = false) {
    std::vector<FqElem> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(element(tw.field));
    c.push_back(monic ? tw.field->one() : nonzero(tw.field));
    return FieldSkew(tw, std::move(c));
  }

  /// Degree uniformly in [lo, hi].
  FieldSkew skew_between(const FrobeniusTwist& tw, std::size_t lo, std::size_t hi, bool monic = false) {
    return skew(tw, lo + below(hi - lo + 1), monic);
  }

  TruncSkew skew(const DerivationTwist& tw, std::size_t degree) {
    std::vector<TruncElem> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(element(tw.ring));
    c.push_back(tw.ring->one());
    return TruncSkew(tw, std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace skewfq
