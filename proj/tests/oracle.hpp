// SPDX-License-Identifier: Apache-2.0
#pragma once

// Naive reference checks used to cross-examine the library. They share no code
// with the verifier: counting goes through std::map, field arithmetic through
// explicit polynomial reduction, and ranks through codeword enumeration.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "aoa/design.hpp"

namespace oracle {

using Rows = std::vector<std::vector<std::uint32_t>>;

inline Rows rows_of(const aoa::Table& t) {
  Rows r(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) r[i].assign(t.row(i).begin(), t.row(i).end());
  return r;
}

inline void subsets(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, r, 0, cur, out);
  return out;
}

/// Every listed column set, with the given radices, sees every tuple equally
/// often (rows / product of radices times).
inline bool balanced(const Rows& rows, const std::vector<std::size_t>& cols, const std::vector<std::uint64_t>& radix) {
  std::uint64_t cells = 1;
  for (auto r : radix) cells *= r;
  if (cells == 0 || rows.size() % cells != 0) return false;
  std::map<std::vector<std::uint32_t>, std::uint64_t> count;
  for (const auto& row : rows) {
    std::vector<std::uint32_t> key;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (row[cols[j]] >= radix[j]) return false;
      key.push_back(row[cols[j]]);
    }
    ++count[key];
  }
  if (count.size() != cells) return false;
  for (const auto& [k, c] : count)
    if (c != rows.size() / cells) return false;
  return true;
}

inline bool is_oa(const Rows& rows, std::size_t k, unsigned t, std::uint64_t v) {
  for (const auto& cols : subsets(k, t))
    if (!balanced(rows, cols, std::vector<std::uint64_t>(t, v))) return false;
  return true;
}

/// The first k entries form an OA of strength t; any s of them plus entry k
/// (radix v^(t-s)) are balanced.
inline bool is_aoa(const Rows& rows, std::size_t k, unsigned s, unsigned t, std::uint64_t v) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < t; ++i) n *= v;
  if (rows.size() != n || !is_oa(rows, k, t, v)) return false;
  std::uint64_t aug = 1;
  for (unsigned i = s; i < t; ++i) aug *= v;
  for (auto cols : subsets(k, s)) {
    cols.push_back(k);
    std::vector<std::uint64_t> radix(s, v);
    radix.push_back(aug);
    if (!balanced(rows, cols, radix)) return false;
  }
  return true;
}

/// Z_n difference matrix check with plain modular arithmetic.
inline bool is_cyclic_dm(const Rows& d, std::uint32_t n) {
  const std::size_t k = d.front().size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::set<std::uint32_t> seen;
      for (const auto& row : d) seen.insert((row[a] + n - row[b]) % n);
      if (seen.size() != n) return false;
    }
  return true;
}

/// Difference matrix over Z_r1 x Z_r2 x ..., elements mixed-radix with the
/// first factor most significant; subtraction digit by digit.
inline bool is_product_dm(const Rows& d, const std::vector<std::uint32_t>& radix) {
  auto sub = [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0, w = 1;
    for (std::size_t i = radix.size(); i-- > 0;) {
      const std::uint32_t r = radix[i];
      out += ((a % r + r - b % r) % r) * w;
      a /= r;
      b /= r;
      w *= r;
    }
    return out;
  };
  std::uint32_t n = 1;
  for (auto r : radix) n *= r;
  if (d.size() != n) return false;
  const std::size_t k = d.front().size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::set<std::uint32_t> seen;
      for (const auto& row : d) seen.insert(sub(row[a], row[b]));
      if (seen.size() != n) return false;
    }
  return true;
}

/// GF(p^m) multiplication by schoolbook product and reduction modulo the monic
/// modulus (low-first, leading 1 included).
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned m,
                            const std::vector<std::uint32_t>& modulus) {
  std::vector<std::uint64_t> x(m), y(m), prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  if (m > 1) {
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
    }
  }
  std::uint32_t out = 0;
  for (int i = static_cast<int>(m) - 1; i >= 0; --i) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return out;
}

inline std::uint32_t gf_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned m) {
  std::uint32_t out = 0, w = 1;
  for (unsigned i = 0; i < m; ++i) {
    out += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return out;
}

/// All codewords of a generator over GF(p^m), by brute force.
inline Rows all_codewords(const std::vector<std::vector<std::uint32_t>>& g, std::uint32_t p, unsigned m,
                          const std::vector<std::uint32_t>& modulus) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  const std::size_t t = g.size(), k = g.front().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t; ++i) total *= q;
  Rows out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> coef(t);
    std::uint64_t r = idx;
    for (std::size_t i = t; i-- > 0;) {
      coef[i] = static_cast<std::uint32_t>(r % q);
      r /= q;
    }
    std::vector<std::uint32_t> word(k, 0);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t c = 0; c < k; ++c) word[c] = gf_add(word[c], gf_mul(coef[i], g[i][c], p, m, modulus), p, m);
    out.push_back(word);
  }
  return out;
}

/// Rank from the number of distinct codewords, MDS from the minimum weight.
inline std::size_t rank_by_count(const Rows& words, std::uint32_t q) {
  std::set<std::vector<std::uint32_t>> distinct(words.begin(), words.end());
  std::size_t r = 0;
  for (std::size_t n = distinct.size(); n > 1; n /= q) ++r;
  return r;
}

inline bool is_mds(const std::vector<std::vector<std::uint32_t>>& g, std::uint32_t p, unsigned m,
                   const std::vector<std::uint32_t>& modulus) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  const auto words = all_codewords(g, p, m, modulus);
  if (rank_by_count(words, q) != g.size()) return false;
  const std::size_t k = g.front().size();
  for (const auto& w : words) {
    std::size_t weight = 0;
    for (auto x : w) weight += x != 0;
    if (weight != 0 && weight < k - g.size() + 1) return false;
  }
  return true;
}

/// Rank by Gaussian elimination over GF(p^m), with inverses found by trying
/// every element. Cheap where codeword enumeration is not (large t).
inline std::size_t rank_by_elimination(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p, unsigned m,
                                       const std::vector<std::uint32_t>& modulus) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  auto neg = [&](std::uint32_t x) {
    for (std::uint32_t y = 0; y < q; ++y)
      if (gf_add(x, y, p, m) == 0) return y;
    return 0u;
  };
  auto inv = [&](std::uint32_t x) {
    for (std::uint32_t y = 1; y < q; ++y)
      if (gf_mul(x, y, p, m, modulus) == 1) return y;
    return 0u;
  };
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const auto iv = inv(a[rank][c]);
    for (auto& x : a[rank]) x = gf_mul(x, iv, p, m, modulus);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const auto f = neg(a[r][c]);
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = gf_add(a[r][j], gf_mul(f, a[rank][j], p, m, modulus), p, m);
    }
    ++rank;
  }
  return rank;
}

/// MDS as "every set of g.size() columns is independent", by elimination.
inline bool is_mds_by_rank(const std::vector<std::vector<std::uint32_t>>& g, std::uint32_t p, unsigned m,
                           const std::vector<std::uint32_t>& modulus) {
  const std::size_t t = g.size(), k = g.front().size();
  if (t > k) return false;
  for (const auto& cols : subsets(k, t)) {
    std::vector<std::vector<std::uint32_t>> sub(t);
    for (std::size_t r = 0; r < t; ++r)
      for (auto c : cols) sub[r].push_back(g[r][c]);
    if (rank_by_elimination(sub, p, m, modulus) != t) return false;
  }
  return true;
}

/// Column bound for OA(t, k, v) written out from its three cases.
inline std::uint64_t column_bound(unsigned t, std::uint64_t v) {
  if (t >= v) return t + 1;
  if (t == 2) return v + 1;
  return v % 2 == 0 ? v + t - 1 : v + t - 2;
}

}  // namespace oracle
