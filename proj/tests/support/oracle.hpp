#pragma once

// Brute-force reference computations for the tests. Everything here works
// from definitions over plain matrices and bit masks and shares no code with
// the library beyond the types it is compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;  // m[a][b] == (a <= b)
using Mask = std::uint64_t;

inline Matrix closure(int n, const std::vector<std::pair<int, int>>& covers) {
  Matrix m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) m[i][i] = true;
  for (auto [a, b] : covers) m[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][k] && m[k][j]) m[i][j] = true;
  return m;
}

inline bool in(Mask s, int e) { return ((s >> e) & 1U) != 0; }

inline Mask maximal(const Matrix& le, Mask s) {
  Mask out = 0;
  const int n = static_cast<int>(le.size());
  for (int a = 0; a < n; ++a) {
    if (!in(s, a)) continue;
    bool dominated = false;
    for (int b = 0; b < n; ++b)
      if (b != a && in(s, b) && le[a][b]) dominated = true;
    if (!dominated) out |= Mask{1} << a;
  }
  return out;
}

inline Mask down(const Matrix& le, Mask s) {
  Mask out = 0;
  const int n = static_cast<int>(le.size());
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      if (in(s, a) && le[x][a]) out |= Mask{1} << x;
  return out;
}

/// All downsets by filtering every subset, ordered by (size, value).
inline std::vector<Mask> downsets(const Matrix& le) {
  const int n = static_cast<int>(le.size());
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (down(le, s) == s) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  return out;
}

inline Mask sharp(const Matrix& le, Mask x, Mask y) { return maximal(le, x) & maximal(le, y); }
inline Mask dollar(const Matrix& le, Mask x, Mask y) {
  return (maximal(le, x) & down(le, y)) | (down(le, x) & maximal(le, y));
}

/// Partitions of 0..n-1 as block-id vectors, canonical (first-occurrence) and
/// in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> all_partitions(int n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t blocks) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t b = 0; b <= blocks && (i > 0 || b == 0); ++b) {
      cur.push_back(b);
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

using BinaryTable = std::vector<std::vector<std::uint32_t>>;

/// Every partition compatible with the binary tables, checked over all
/// pairs of related argument pairs (no translation shortcut).
inline std::vector<std::vector<std::uint32_t>> congruences(int n, const std::vector<BinaryTable>& ops) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& p : all_partitions(n)) {
    bool ok = true;
    for (const auto& f : ops) {
      for (int x = 0; x < n && ok; ++x)
        for (int x2 = 0; x2 < n && ok; ++x2) {
          if (p[x] != p[x2]) continue;
          for (int y = 0; y < n && ok; ++y)
            for (int y2 = 0; y2 < n && ok; ++y2)
              if (p[y] == p[y2] && p[f[x][y]] != p[f[x2][y2]]) ok = false;
        }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

/// Canonical block ids from arbitrary keys.
template <typename K>
std::vector<std::uint32_t> canonical(const std::vector<K>& keys) {
  std::map<K, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  for (const auto& k : keys) out.push_back(ids.try_emplace(k, static_cast<std::uint32_t>(ids.size())).first->second);
  return out;
}

/// Number of labeled posets on n elements by filtering all relations.
inline std::size_t count_labeled_posets(int n) {
  std::vector<std::pair<int, int>> offdiag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag.size()); ++bits) {
    Matrix m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if ((bits >> i) & 1U) m[offdiag[i].first][offdiag[i].second] = true;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && m[a][b] && m[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (m[a][b] && m[b][c] && !m[a][c]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
