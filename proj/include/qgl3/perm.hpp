#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qgl3/errors.hpp"

namespace qgl3 {

// Permutation of {1..n} in one-line notation.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > int(images.size()) || seen[v - 1])
        throw DimensionError("not a permutation");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(im);
  }

  static Permutation longest(int n) {  // w_0
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = n - i;
    return Permutation(im);
  }

  // Parses one-line notation like "231".
  static Permutation parse(const std::string& s) {
    std::vector<int> im;
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw DimensionError("bad permutation string");
      im.push_back(ch - '0');
    }
    return Permutation(im);
  }

  int size() const { return int(images.size()); }
  int operator()(int i) const { return images[i - 1]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images <=> b.images;
  }

  int length() const {  // inversion count
    int inv = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (images[i] > images[j]) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> im(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      im[images[i] - 1] = int(i) + 1;
    return Permutation(im);
  }

  // (a. b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> im(a.images.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b(int(i) + 1));
    return Permutation(im);
  }

  Permutation w0_conjugate() const {  // w_0 . this . w_0
    Permutation w0 = longest(size());
    return w0 * (*this) * w0;
  }

  // Image of an index set, returned sorted ascending.
  std::vector<int> image_set(const std::vector<int>& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(images[v - 1]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int v : images) s += char('0' + v);
    return s;
  }

  static std::vector<Permutation> all(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
  }
};

// Index pair for the 36 H-primes.
struct WIndex {
  Permutation plus, minus;

  friend bool operator==(const WIndex&, const WIndex&) = default;
  friend auto operator<=>(const WIndex& a, const WIndex& b) {
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }

  std::string to_string() const {
    return plus.to_string() + "," + minus.to_string();
  }

  static WIndex parse(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
      throw DimensionError("expected \"w+,w-\"");
    return {Permutation::parse(s.substr(0, comma)),
            Permutation::parse(s.substr(comma + 1))};
  }
};

}  // namespace qgl3
