#pragma once

// Permutations of {1, ..., d} in one-line notation.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

class Permutation {
 public:
  Permutation() = default;

  // images[k] is the image of k+1. Throws unless images is a bijection of {1..d}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int d = static_cast<int>(images_.size());
    std::vector<bool> seen(d + 1, false);
    for (int x : images_) {
      if (x < 1 || x > d || seen[x]) throw std::invalid_argument("Permutation: not a bijection of {1.." + std::to_string(d) + "}");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // The longest element w0 = (d, d-1, ..., 1).
  static Permutation longest(std::size_t d) {
    std::vector<int> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<int>(d - i);
    return Permutation(std::move(v));
  }

  // The adjacent transposition exchanging t and t+1.
  static Permutation adjacent_transposition(std::size_t d, std::size_t t) {
    if (t < 1 || t + 1 > d) throw std::invalid_argument("adjacent_transposition: t out of range");
    auto p = identity(d);
    std::swap(p.images_[t - 1], p.images_[t]);
    return p;
  }

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k + 1);
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[k] != static_cast<int>(k + 1)) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (a ∘ b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a(b.images()[k]);
  return Permutation(std::move(v));
}

// Number of pairs i < j with perm(i) > perm(j).
inline std::size_t inversions(const Permutation& perm) {
  const auto& v = perm.images();
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

inline std::size_t inversions(const std::vector<int>& images) { return inversions(Permutation(images)); }

// All permutations of {1..d} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::string to_string(const Permutation& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p.images()[k]);
  }
  return s + ")";
}

}  // namespace schubert
