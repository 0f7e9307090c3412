#pragma once

#include <string>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/poly/polynomial.hpp"

namespace cmtwist {

/// Ring homomorphism source -> target given by the images of the source
/// variables.
template <Scalar K>
class RingMap {
public:
  RingMap(RingPtr<K> source, RingPtr<K> target, std::vector<Polynomial<K>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->arity())
      throw ContextMismatch("ring map needs " + std::to_string(source_->arity()) + " images");
    for (const auto& im : images_) require_same_ring(im.ring(), target_);
  }

  static RingMap identity(const RingPtr<K>& ring) {
    std::vector<Polynomial<K>> ims;
    for (std::size_t i = 0; i < ring->arity(); ++i) ims.push_back(Polynomial<K>::variable(ring, i));
    return RingMap(ring, ring, std::move(ims));
  }

  /// Builds from `name -> image` pairs; unnamed source variables map to 0.
  static RingMap from_assignments(const RingPtr<K>& source, const RingPtr<K>& target,
                                  const std::vector<std::pair<std::string, Polynomial<K>>>& assignments) {
    std::vector<Polynomial<K>> ims(source->arity(), Polynomial<K>(target));
    for (const auto& [name, im] : assignments) ims[source->require(name)] = im;
    return RingMap(source, target, std::move(ims));
  }

  const RingPtr<K>& source() const { return source_; }
  const RingPtr<K>& target() const { return target_; }
  const std::vector<Polynomial<K>>& images() const { return images_; }
  const Polynomial<K>& image(std::size_t i) const { return images_[i]; }

  /// True when every image is zero or homogeneous of degree 1.
  bool is_graded() const {
    for (const auto& im : images_) {
      auto g = im.grading();
      if (!g.homogeneous || (g.degree && *g.degree != 1)) return false;
    }
    return true;
  }

  Polynomial<K> apply(const Polynomial<K>& f) const {
    require_same_ring(f.ring(), source_);
    if (images_.empty()) return Polynomial<K>::constant(target_, f.constant_term());
    return f.substitute(images_);
  }
  Polynomial<K> operator()(const Polynomial<K>& f) const { return apply(f); }

  /// (this ∘ inner): first inner, then this.
  RingMap after(const RingMap& inner) const {
    require_same_ring(inner.target_, source_);
    std::vector<Polynomial<K>> ims;
    for (const auto& im : inner.images_) ims.push_back(apply(im));
    return RingMap(inner.source_, target_, std::move(ims));
  }

private:
  RingPtr<K> source_;
  RingPtr<K> target_;
  std::vector<Polynomial<K>> images_;
};

} // namespace cmtwist
