#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootres {

// A permutation of {0..degree-1} stored as its image array. Products act
// on the right: (a * b)(x) = b(a(x)), so "a then b". The external form is
// 1-based (image arrays and cycle notation); the ordering is lexicographic
// on images, which makes the identity the least permutation of a degree.
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;

  static Perm identity(std::size_t degree);
  // Throws InputError unless `images` is a bijection on {1..n}.
  static Perm from_one_based(std::span<const std::int64_t> images);
  // Cycle notation such as "(1 2)(3 4 5)" or "()". Throws InputError.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  std::vector<std::int64_t> one_based() const;
  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

Perm commutator(const Perm& x, const Perm& y);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace rootres
