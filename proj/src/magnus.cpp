#include "rootres/magnus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "rootres/error.hpp"
#include "rootres/perm_group.hpp"

namespace rootres {

FreeWord FreeWord::parse(std::string_view text) {
  FreeWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("free word '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + msg);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) {
    const auto start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    long long v = 0;
    const char* first = text.data() + start;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + pos, v);
    if (ec != std::errc{} || ptr != text.data() + pos || first == text.data() + pos) fail("expected an integer");
    return v;
  };
  skip_ws();
  if (text.substr(pos) == "1") return w;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != 'x') fail("expected a generator x<i>");
    ++pos;
    const auto idx = read_int(false);
    if (idx < 1 || idx > 255) fail("generator index out of range");
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int(true);
      if (std::llabs(e) > 1000) fail("exponent too large");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) fail("expected whitespace");
    for (long long k = 0; k < std::llabs(e); ++k) w.letters.push_back(e > 0 ? static_cast<int>(idx) : -static_cast<int>(idx));
  }
  return w;
}

std::string FreeWord::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (auto l : letters) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

FreeWord FreeWord::reduced() const {
  FreeWord out;
  for (auto l : letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

std::size_t FreeWord::rank() const {
  std::size_t r = 0;
  for (auto l : letters) r = std::max(r, static_cast<std::size_t>(std::abs(l)));
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t rank, std::size_t degree_bound, std::uint32_t modulus,
                                 const SeriesLimits& limits)
    : rank_(rank), degree_bound_(degree_bound), modulus_(modulus) {
  if (rank > limits.max_rank) {
    throw InputError("series rank " + std::to_string(rank) + " exceeds the limit " + std::to_string(limits.max_rank));
  }
  if (degree_bound > limits.max_degree) {
    throw InputError("degree bound " + std::to_string(degree_bound) + " exceeds the limit " +
                     std::to_string(limits.max_degree));
  }
  if (modulus != 0 && !is_prime(modulus)) throw InputError("series modulus must be 0 or a prime");
}

TruncatedSeries TruncatedSeries::one(std::size_t rank, std::size_t degree_bound, std::uint32_t modulus,
                                     const SeriesLimits& limits) {
  TruncatedSeries s(rank, degree_bound, modulus, limits);
  s.add_term({}, 1);
  return s;
}

std::int64_t TruncatedSeries::normalize(std::int64_t c) const {
  if (modulus_ == 0) return c;
  const auto p = static_cast<std::int64_t>(modulus_);
  return ((c % p) + p) % p;
}

std::int64_t TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, std::int64_t c) {
  if (m.size() > degree_bound_) return;
  for (auto v : m) {
    if (v >= rank_) throw InputError("monomial uses a variable beyond the series rank");
  }
  c = normalize(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    std::int64_t sum = 0;
    if (__builtin_add_overflow(it->second, c, &sum)) throw InputError("series coefficient overflow");
    sum = normalize(sum);
    if (sum == 0) {
      terms_.erase(it);
    } else {
      it->second = sum;
    }
  }
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank() != b.rank() || a.degree_bound() != b.degree_bound() || a.modulus() != b.modulus()) {
    throw InputError("series_mul: operands differ in rank, degree bound or modulus");
  }
  TruncatedSeries out(a.rank(), a.degree_bound(), a.modulus(),
                      SeriesLimits{a.rank(), a.degree_bound()});
  Monomial m;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.size() + mb.size() > a.degree_bound()) continue;
      std::int64_t c = 0;
      if (__builtin_mul_overflow(ca, cb, &c)) throw InputError("series coefficient overflow");
      m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, c);
    }
  }
  return out;
}

TruncatedSeries series_inv_unit(const TruncatedSeries& a) {
  if (a.coefficient({}) != 1) throw InputError("series_inv_unit: constant term is not 1");
  const SeriesLimits lim{a.rank(), a.degree_bound()};
  TruncatedSeries neg_aug(a.rank(), a.degree_bound(), a.modulus(), lim);
  for (const auto& [m, c] : a.terms()) {
    if (!m.empty()) neg_aug.add_term(m, -c);
  }
  TruncatedSeries result = TruncatedSeries::one(a.rank(), a.degree_bound(), a.modulus(), lim);
  TruncatedSeries power = result;
  for (std::size_t k = 1; k <= a.degree_bound(); ++k) {
    power = series_mul(power, neg_aug);
    for (const auto& [m, c] : power.terms()) result.add_term(m, c);
  }
  return result;
}

TruncatedSeries magnus_eval(const FreeWord& w, std::size_t rank, std::size_t degree_bound,
                            std::uint32_t modulus, const SeriesLimits& limits) {
  if (w.rank() > rank) throw InputError("word uses a generator beyond rank " + std::to_string(rank));
  TruncatedSeries acc = TruncatedSeries::one(rank, degree_bound, modulus, limits);
  std::vector<TruncatedSeries> pos, neg;
  for (std::size_t i = 0; i < rank; ++i) {
    TruncatedSeries x = TruncatedSeries::one(rank, degree_bound, modulus, limits);
    x.add_term({static_cast<std::uint8_t>(i)}, 1);
    neg.push_back(series_inv_unit(x));
    pos.push_back(std::move(x));
  }
  for (auto l : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
    acc = series_mul(acc, l > 0 ? pos[i] : neg[i]);
  }
  return acc;
}

FreeWordSeparation separate_free_word(const FreeWord& w, std::uint32_t modulus, std::size_t max_degree,
                                      const SeriesLimits& limits) {
  const FreeWord r = w.reduced();
  if (r.letters.empty()) throw InputError("word is freely trivial; there is nothing to separate");
  const auto rank = r.rank();
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const auto image = magnus_eval(r, rank, d, modulus, limits);
    if (image.is_one()) continue;
    const Monomial* best = nullptr;
    std::int64_t coeff = 0;
    for (const auto& [m, c] : image.terms()) {
      if (m.empty()) continue;
      if (!best || graded_less(m, *best)) {
        best = &m;
        coeff = c;
      }
    }
    if (!best) throw InternalError("image differs from 1 only in its constant term");
    return {rank, d, modulus, *best, coeff};
  }
  throw HypothesisFailure("no separating degree up to " + std::to_string(max_degree) + " for " + w.str());
}

}  // namespace rootres
