#include "rootres/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "rootres/error.hpp"

namespace rootres {

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images));
}

Perm Perm::from_one_based(std::span<const std::int64_t> images) {
  const auto n = images.size();
  std::vector<Point> out(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InputError("permutation image " + std::to_string(v) + " at position " +
                       std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
    }
    const auto z = static_cast<Point>(v - 1);
    if (seen[z]) {
      throw InputError("permutation repeats image " + std::to_string(v));
    }
    seen[z] = true;
    out[i] = z;
  }
  return Perm(std::move(out));
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  Perm result = identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("cycle notation '" + std::string(text) + "' at offset " +
                     std::to_string(pos) + ": " + msg);
  };
  skip_ws();
  if (pos == text.size()) fail("empty permutation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) fail("point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (value == 0) fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
    }
    std::vector<bool> in_cycle(degree, false);
    for (auto p : cycle) {
      if (in_cycle[p]) fail("point repeated within a cycle");
      in_cycle[p] = true;
    }
    if (cycle.size() > 1) {
      std::vector<Point> images = identity(degree).images_;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      result = result * Perm(std::move(images));
    }
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(out));
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Perm acc = identity(degree());
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::int64_t> Perm::one_based() const {
  std::vector<std::int64_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j + 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm commutator(const Perm& x, const Perm& y) {
  return x.inverse() * y.inverse() * x * y;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace rootres
