#include "permod/permgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permod {

Permutation Permutation::identity(uint32_t n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint32_t i : images) {
    if (i >= images.size() || seen[i])
      throw std::invalid_argument("image table is not a bijection");
    seen[i] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& h) const {
  std::vector<uint32_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = h.img_[img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = uint32_t(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

uint32_t Permutation::order() const {
  Permutation p = *this;
  uint32_t o = 1;
  while (!p.is_identity()) {
    p = p.then(*this);
    ++o;
  }
  return o;
}

PermGroup::PermGroup(uint32_t degree, std::vector<Permutation> generators)
    : n_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != n_) throw std::invalid_argument("generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Permutation::identity(n_));
}

uint64_t default_element_cap() {
  static const uint64_t cap = [] {
    if (const char* env = std::getenv("PERMOD_ELEMENT_CAP")) {
      char* end = nullptr;
      uint64_t v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return uint64_t(1000000);
  }();
  return cap;
}

const std::vector<Permutation>& PermGroup::elements(uint64_t cap) const {
  if (cap == kUseDefaultCap) cap = default_element_cap();
  std::lock_guard<std::mutex> lock(mu_);
  if (elems_) return *elems_;
  std::vector<Permutation> out;
  std::set<std::vector<uint32_t>> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(n_);
  seen.insert(id.images());
  out.push_back(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& h : gens_) {
      Permutation gh = g.then(h);
      if (seen.insert(gh.images()).second) {
        if (out.size() >= cap)
          throw std::runtime_error("group order exceeds enumeration cap");
        out.push_back(gh);
        frontier.push_back(std::move(gh));
      }
    }
  }
  elems_ = std::move(out);
  return *elems_;
}

std::vector<uint32_t> orbit_of(const PermGroup& g, uint32_t x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<uint32_t> orb{x}, work{x};
  seen[x] = true;
  while (!work.empty()) {
    uint32_t y = work.back();
    work.pop_back();
    for (const auto& gen : g.generators()) {
      uint32_t z = gen.apply(y);
      if (!seen[z]) {
        seen[z] = true;
        orb.push_back(z);
        work.push_back(z);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool is_transitive(const PermGroup& g) {
  if (g.degree() == 0) throw std::invalid_argument("degree must be >= 1");
  return orbit_of(g, 0).size() == g.degree();
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<uint32_t> minimal_block(const PermGroup& g, uint32_t a, uint32_t b) {
  if (!is_transitive(g)) throw std::invalid_argument("group is not transitive");
  if (a == b) throw std::invalid_argument("points must be distinct");
  UnionFind uf(g.degree());
  uf.merge(a, b);
  std::vector<std::pair<uint32_t, uint32_t>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (const auto& gen : g.generators()) {
      uint32_t xg = gen.apply(x), yg = gen.apply(y);
      if (uf.merge(xg, yg)) work.emplace_back(xg, yg);
    }
  }
  std::vector<uint32_t> block;
  uint32_t ra = uf.find(a);
  for (uint32_t i = 0; i < g.degree(); ++i)
    if (uf.find(i) == ra) block.push_back(i);
  return block;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("group is not transitive");
  if (g.degree() == 1) return true;
  for (uint32_t b = 1; b < g.degree(); ++b)
    if (minimal_block(g, 0, b).size() != g.degree()) return false;
  return true;
}

bool is_doubly_transitive(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("group is not transitive");
  const uint32_t n = g.degree();
  if (n < 2) throw std::invalid_argument("degree must be >= 2");
  // orbit of the ordered pair (0,1) in the induced action on distinct pairs
  auto idx = [n](uint32_t i, uint32_t j) { return i * n + j; };
  std::vector<bool> seen(size_t(n) * n, false);
  std::vector<std::pair<uint32_t, uint32_t>> work{{0, 1}};
  seen[idx(0, 1)] = true;
  uint64_t count = 1;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (const auto& gen : g.generators()) {
      uint32_t xg = gen.apply(x), yg = gen.apply(y);
      if (!seen[idx(xg, yg)]) {
        seen[idx(xg, yg)] = true;
        ++count;
        work.emplace_back(xg, yg);
      }
    }
  }
  return count == uint64_t(n) * (n - 1);
}

bool is_block(const PermGroup& g, const std::vector<uint32_t>& delta, uint64_t cap) {
  std::set<uint32_t> d(delta.begin(), delta.end());
  if (d.empty()) return false;
  for (const auto& el : g.elements(cap)) {
    std::set<uint32_t> img;
    for (uint32_t x : d) img.insert(el.apply(x));
    bool equal = img == d;
    if (!equal) {
      for (uint32_t x : img)
        if (d.count(x)) return false;  // proper overlap
    }
  }
  return true;
}

BlockSystem block_system(const PermGroup& g, const std::vector<uint32_t>& delta) {
  if (!is_block(g, delta)) throw std::invalid_argument("delta is not a block");
  std::set<std::vector<uint32_t>> seen;
  std::vector<uint32_t> d = delta;
  std::sort(d.begin(), d.end());
  BlockSystem sys;
  for (const auto& el : g.elements()) {
    std::vector<uint32_t> img;
    img.reserve(d.size());
    for (uint32_t x : d) img.push_back(el.apply(x));
    std::sort(img.begin(), img.end());
    if (seen.insert(img).second) sys.blocks.push_back(img);
  }
  std::sort(sys.blocks.begin(), sys.blocks.end());
  return sys;
}

uint32_t pair_index(uint32_t n, uint32_t i, uint32_t j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<uint32_t, uint32_t> pair_points(uint32_t n, uint32_t idx) {
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t row = n - 1 - i;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw std::invalid_argument("pair index out of range");
}

PermGroup pairs_action(const PermGroup& g) {
  const uint32_t n = g.degree();
  if (n < 2) throw std::invalid_argument("pairs action needs degree >= 2");
  const uint32_t m = n * (n - 1) / 2;
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    std::vector<uint32_t> img(m);
    for (uint32_t idx = 0; idx < m; ++idx) {
      auto [i, j] = pair_points(n, idx);
      img[idx] = pair_index(n, gen.apply(i), gen.apply(j));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup(m, std::move(gens));
}

std::vector<Permutation> point_stabilizer(const PermGroup& g, uint32_t x,
                                          uint64_t cap) {
  std::vector<Permutation> out;
  for (const auto& el : g.elements(cap))
    if (el.apply(x) == x) out.push_back(el);
  return out;
}

std::vector<Permutation> setwise_stabilizer(const PermGroup& g,
                                            const std::vector<uint32_t>& xs,
                                            uint64_t cap) {
  std::set<uint32_t> want(xs.begin(), xs.end());
  std::vector<Permutation> out;
  for (const auto& el : g.elements(cap)) {
    std::set<uint32_t> img;
    for (uint32_t x : want) img.insert(el.apply(x));
    if (img == want) out.push_back(el);
  }
  return out;
}

PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::string line;
  uint32_t n = 0;
  if (!std::getline(in, line)) throw std::invalid_argument("empty group file");
  {
    std::istringstream is(line);
    if (!(is >> n) || n == 0) throw std::invalid_argument("bad degree line");
  }
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::vector<uint32_t> img;
    uint32_t v;
    while (is >> v) img.push_back(v);
    if (img.empty()) continue;
    if (img.size() != n)
      throw std::invalid_argument("generator line has wrong length");
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Permutation::from_images(std::move(img))});
}

}  // namespace permod
