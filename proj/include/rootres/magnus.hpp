#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rootres {

// A word in a free group. Letter +i stands for x_i, -i for x_i^-1 (i >= 1).
struct FreeWord {
  std::vector<int> letters;

  // "x1 x2^-1 x1^-1 x2"; also accepts x1^k for integer k. Throws InputError.
  static FreeWord parse(std::string_view text);
  std::string str() const;
  FreeWord reduced() const;
  bool is_freely_trivial() const { return reduced().letters.empty(); }
  // Largest generator index occurring, 0 for the empty word.
  std::size_t rank() const;
  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

struct SeriesLimits {
  std::size_t max_rank = 4;
  std::size_t max_degree = 8;
};

// Monomial t_{i1} ... t_{ik} as 0-based variable indices.
using Monomial = std::vector<std::uint8_t>;

// Degree (then lexicographic) order, the order witnesses are chosen in.
bool graded_less(const Monomial& a, const Monomial& b);

// Noncommutative polynomial in t_1..t_rank over Z (modulus 0) or Z/p,
// truncated past degree_bound.
class TruncatedSeries {
 public:
  // Throws InputError past `limits` or for a modulus that is neither 0 nor prime.
  TruncatedSeries(std::size_t rank, std::size_t degree_bound, std::uint32_t modulus,
                  const SeriesLimits& limits = {});

  static TruncatedSeries one(std::size_t rank, std::size_t degree_bound, std::uint32_t modulus,
                             const SeriesLimits& limits = {});

  std::size_t rank() const noexcept { return rank_; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }

  std::int64_t coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, std::int64_t c);
  bool is_one() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::int64_t normalize(std::int64_t c) const;

  std::size_t rank_;
  std::size_t degree_bound_;
  std::uint32_t modulus_;
  std::map<Monomial, std::int64_t> terms_;
};

// Throws InputError on mismatched rank, degree bound or modulus.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Inverse of 1 + u as the finite geometric series sum (-u)^k. Throws
// InputError unless the constant term is 1.
TruncatedSeries series_inv_unit(const TruncatedSeries& a);

// Image of w under x_i -> 1 + t_i in the truncated ring.
TruncatedSeries magnus_eval(const FreeWord& w, std::size_t rank, std::size_t degree_bound,
                            std::uint32_t modulus, const SeriesLimits& limits = {});

struct FreeWordSeparation {
  std::size_t rank = 0;
  std::size_t degree = 0;
  std::uint32_t modulus = 0;
  Monomial monomial;
  std::int64_t coefficient = 0;
};

// Least d <= max_degree at which the image of w is not 1, with the first
// non-zero non-constant term in graded order as witness. Throws InputError
// for a freely trivial word and HypothesisFailure when max_degree runs out.
FreeWordSeparation separate_free_word(const FreeWord& w, std::uint32_t modulus,
                                      std::size_t max_degree, const SeriesLimits& limits = {});

}  // namespace rootres
