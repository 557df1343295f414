#pragma once

// Brute-force references shared by the unit and acceptance tests.

#include "qcliff/characters.hpp"

#include <functional>
#include <vector>

namespace qtest {

/// All weights in [lo, hi]^n.
inline std::vector<qcliff::Weight> box(std::size_t n, long lo, long hi) {
  std::vector<qcliff::Weight> out;
  qcliff::Weight w{std::vector<long>(n, lo)};
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < n && w.v[i] == hi) w.v[i++] = lo;
    if (i == n) break;
    ++w.v[i];
  }
  return out;
}

/// Strict partitions with parts <= hi, padded by zeros to length n.
inline std::vector<qcliff::Weight> strict_weights(std::size_t n, long hi) {
  std::vector<qcliff::Weight> out;
  std::vector<long> v;
  std::function<void(long)> rec = [&](long below) {
    qcliff::Weight w{v};
    w.v.resize(n, 0);
    out.push_back(w);
    if (v.size() == n) return;
    for (long x = below - 1; x >= 1; --x) {
      v.push_back(x);
      rec(x);
      v.pop_back();
    }
  };
  rec(hi + 1);
  return out;
}

inline std::vector<long> positive_parts(const qcliff::Weight& w) {
  std::vector<long> p;
  for (long x : w.v)
    if (x > 0) p.push_back(x);
  return p;
}

/// Schur P-function P_λ(x_1..x_n) from marked shifted tableaux. Letters are
/// coded 2k-1 for k' and 2k for k; rows and columns weakly increase, a primed
/// letter repeats in no row, an unprimed one in no column, and the main
/// diagonal is unprimed. Q_λ = 2^{ℓ(λ)} P_λ.
inline qcliff::CharacterPoly schur_p(const std::vector<long>& parts, std::size_t n) {
  std::vector<std::vector<int>> cell(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) cell[i].assign(static_cast<std::size_t>(parts[i]), 0);
  qcliff::CharacterPoly out(n);
  std::vector<long> content(n, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t k) {
    if (i == parts.size()) {
      qcliff::Exponent e(n);
      for (std::size_t a = 0; a < n; ++a) e[a] = 2 * content[a];
      out.add(e, 1);
      return;
    }
    if (k == cell[i].size()) {
      fill(i + 1, 0);
      return;
    }
    const std::size_t col = i + k;  // shifted column
    for (int v = 1; v <= static_cast<int>(2 * n); ++v) {
      const bool primed = v % 2 == 1;
      if (k == 0 && primed) continue;
      if (k > 0) {
        const int left = cell[i][k - 1];
        if (v < left || (v == left && primed)) continue;
      }
      if (i > 0 && col - (i - 1) < cell[i - 1].size()) {
        const int up = cell[i - 1][col - (i - 1)];
        if (v < up || (v == up && !primed)) continue;
      }
      cell[i][k] = v;
      ++content[static_cast<std::size_t>((v - 1) / 2)];
      fill(i, k + 1);
      --content[static_cast<std::size_t>((v - 1) / 2)];
    }
  };
  fill(0, 0);
  return out;
}

inline qcliff::CharacterPoly schur_q(const std::vector<long>& parts, std::size_t n) {
  mpz_class scale = 1;
  for (std::size_t k = 0; k < parts.size(); ++k) scale *= 2;
  return scale * schur_p(parts, n);
}

}  // namespace qtest
