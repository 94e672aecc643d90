#pragma once

// Brute-force oracles for the length spectrum, independent of the
// reduction-cycle and coset machinery.

#include <cmath>
#include <cstdint>
#include <tuple>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "zal/lengthspec.hpp"

namespace zal::bruteforce {

using zal::lengthspec::Mat2;

// Primitive hyperbolic classes of PSL2(Z) are primitive cyclic words in
// R = [[1,1],[0,1]] and L = [[1,0],[1,1]] containing both letters. Words are
// grown letter by letter; the trace never decreases, so trace > T prunes, and
// a word of length n with both letters has trace >= n + 1.
inline std::map<std::int64_t, std::int64_t> lyndon_counts(std::int64_t T) {
  std::map<std::int64_t, std::int64_t> out;
  const Mat2 R{1, 1, 0, 1}, L{1, 0, 1, 1};
  std::vector<int> word;
  auto is_lyndon = [](const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        int x = w[(i + r) % n], y = w[i];
        if (x < y) return false;
        if (x > y) break;
        if (i + 1 == n) return false;  // equal rotation: periodic
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self, const Mat2& m, bool has_r, bool has_l) -> void {
    if (m.trace() > T || static_cast<std::int64_t>(word.size()) > T - 1) return;
    if (has_r && has_l && is_lyndon(word)) out[m.trace()] += 1;
    for (int letter : {0, 1}) {
      word.push_back(letter);
      self(self, m * (letter == 0 ? R : L), has_r || letter == 0, has_l || letter == 1);
      word.pop_back();
    }
  };
  dfs(dfs, Mat2{}, false, false);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline Mat2 canon(const Mat2& x) {
  Mat2 n = -x;
  auto key = [](const Mat2& m) { return std::tuple(m.a, m.b, m.c, m.d); };
  return key(n) < key(x) ? n : x;
}

// Gamma-conjugacy classes of primitive hyperbolic elements of trace t: all
// elements of Gamma with entries bounded by B, joined under conjugation by
// elements of Gamma with entries bounded by G.
inline std::int64_t union_find_count(const zal::lengthspec::GroupSpec& spec, std::int64_t t, std::int64_t B,
                                     std::int64_t G) {
  using zal::lengthspec::in_group;
  std::vector<Mat2> gens;
  for (std::int64_t a = -G; a <= G; ++a)
    for (std::int64_t b = -G; b <= G; ++b)
      for (std::int64_t c = -G; c <= G; ++c) {
        if (a == 0) {
          if (b * c != -1) continue;
          for (std::int64_t d = -G; d <= G; ++d)
            if (in_group(spec, {a, b, c, d})) gens.push_back({a, b, c, d});
          continue;
        }
        if ((1 + b * c) % a != 0) continue;
        std::int64_t d = (1 + b * c) / a;
        if (std::abs(d) <= G && in_group(spec, {a, b, c, d})) gens.push_back({a, b, c, d});
      }
  auto key = [](const Mat2& m) { return std::tuple(m.a, m.b, m.c, m.d); };
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, std::size_t> index;
  std::vector<Mat2> verts;
  for (std::int64_t a = -B; a <= B; ++a) {
    std::int64_t d = t - a, n = a * d - 1;
    for (std::int64_t b = -B; b <= B; ++b) {
      if (b == 0 || n % b != 0) continue;
      std::int64_t c = n / b;
      if (std::abs(c) > B || std::abs(d) > B) continue;
      Mat2 x{a, b, c, d};
      if (!in_group(spec, x)) continue;
      index.emplace(key(x), verts.size());
      verts.push_back(x);
    }
  }
  UnionFind uf(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (const Mat2& g : gens) {
      Mat2 y = g * verts[i] * g.inverse();
      for (const Mat2& z : {y, -y}) {
        auto it = index.find(key(z));
        if (it != index.end()) uf.join(i, it->second);
      }
    }
  }
  std::set<std::size_t> roots;
  std::int64_t count = 0;
  auto member = [&](const Mat2& y) { return in_group(spec, y); };
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::size_t r = uf.find(i);
    if (!roots.insert(r).second) continue;
    if (!zal::lengthspec::is_proper_power(verts[i], member)) ++count;
  }
  return count;
}

// Number of SL2(Z)-classes of forms of discriminant D, by union-find over all
// forms with bounded coefficients under S and T.
inline std::int64_t form_class_count(std::int64_t D, std::int64_t box) {
  using F = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  std::map<F, std::size_t> index;
  std::vector<F> forms;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b) {
      if (a == 0) continue;
      std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (std::abs(c) > box || c == 0) continue;
      index.emplace(F{a, b, c}, forms.size());
      forms.push_back({a, b, c});
    }
  UnionFind uf(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto [a, b, c] = forms[i];
    for (const F& g : {F{c, -b, a}, F{a, b + 2 * a, a + b + c}, F{a, b - 2 * a, a - b + c}}) {
      auto it = index.find(g);
      if (it != index.end()) uf.join(i, it->second);
    }
  }
  // every class meets the reduced forms; only components that do are counted
  const double sd = std::sqrt(static_cast<double>(D));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto [a, b, c] = forms[i];
    double two_a = 2.0 * std::abs(static_cast<double>(a));
    if (b > 0 && b < sd && sd - b < two_a && two_a < sd + b) roots.insert(uf.find(i));
  }
  return static_cast<std::int64_t>(roots.size());
}

}  // namespace zal::bruteforce
