#ifndef PERMOD_PERMGRP_HPP
#define PERMOD_PERMGRP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace permod {

/// Permutation of {0..n-1} as a point-image table; composition is the right
/// action (i acted on by g then h).
class Permutation {
public:
  static Permutation identity(uint32_t n);
  static Permutation from_images(std::vector<uint32_t> images);

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t apply(uint32_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Permutation then(const Permutation& h) const;  // i -> (i*this)*h
  Permutation inverse() const;
  bool is_identity() const;
  uint32_t order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  explicit Permutation(std::vector<uint32_t> img) : img_(std::move(img)) {}
  std::vector<uint32_t> img_;
};

/// Enumeration cap: 10^6 elements unless PERMOD_ELEMENT_CAP overrides it.
uint64_t default_element_cap();
inline constexpr uint64_t kUseDefaultCap = 0;

/// Group generated by explicit permutations of {0..n-1}.  Immutable except
/// for the memoized full element list, which is computed once under a lock.
class PermGroup {
public:
  PermGroup(uint32_t degree, std::vector<Permutation> generators);

  PermGroup(const PermGroup& o) : n_(o.n_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    elems_ = o.elems_;
  }
  PermGroup(PermGroup&& o) noexcept : n_(o.n_), gens_(std::move(o.gens_)) {
    std::lock_guard<std::mutex> lock(o.mu_);
    elems_ = std::move(o.elems_);
  }
  PermGroup& operator=(const PermGroup&) = delete;
  PermGroup& operator=(PermGroup&&) = delete;

  uint32_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Full element list by breadth-first closure over the generators,
  /// identity first, deterministic discovery order.  Throws when the order
  /// exceeds the cap.
  const std::vector<Permutation>& elements(uint64_t cap = kUseDefaultCap) const;
  uint64_t order(uint64_t cap = kUseDefaultCap) const {
    return elements(cap).size();
  }

private:
  uint32_t n_;
  std::vector<Permutation> gens_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<Permutation>> elems_;
};

struct BlockSystem {
  std::vector<std::vector<uint32_t>> blocks;
};

std::vector<uint32_t> orbit_of(const PermGroup& g, uint32_t x);
bool is_transitive(const PermGroup& g);

/// Smallest block containing {a, b} (union-find refinement over generators).
std::vector<uint32_t> minimal_block(const PermGroup& g, uint32_t a, uint32_t b);
bool is_primitive(const PermGroup& g);
bool is_doubly_transitive(const PermGroup& g);

/// The distinct G-translates of a block partition the points.
BlockSystem block_system(const PermGroup& g, const std::vector<uint32_t>& delta);
bool is_block(const PermGroup& g, const std::vector<uint32_t>& delta,
              uint64_t cap = kUseDefaultCap);

/// Induced action on the n(n-1)/2 unordered pairs, indexed lexicographically.
PermGroup pairs_action(const PermGroup& g);
uint32_t pair_index(uint32_t n, uint32_t i, uint32_t j);
std::pair<uint32_t, uint32_t> pair_points(uint32_t n, uint32_t idx);

std::vector<Permutation> point_stabilizer(const PermGroup& g, uint32_t x,
                                          uint64_t cap = kUseDefaultCap);
std::vector<Permutation> setwise_stabilizer(const PermGroup& g,
                                            const std::vector<uint32_t>& xs,
                                            uint64_t cap = kUseDefaultCap);

/// Group file: line 1 is the degree, each following nonempty line one
/// generator as space-separated 0-indexed images.
PermGroup load_group_file(const std::string& path);

PermGroup cyclic_group(uint32_t n);

}  // namespace permod

#endif
