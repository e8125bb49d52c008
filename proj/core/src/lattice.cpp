#include "pants/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pants {

void require_valid(const SurfaceSig& sig) {
  if (!sig.valid()) {
    throw std::invalid_argument("invalid surface signature: need 2g + n > 2, got g=" +
                                std::to_string(sig.genus) + " n=" + std::to_string(sig.punctures));
  }
}

ClassVector zero_class(int genus) { return ClassVector(static_cast<size_t>(2 * genus), 0); }

bool is_zero(const ClassVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

bool is_primitive(const ClassVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g == 1;
}

static Int iabs(Int x) { return x < 0 ? -x : x; }

static void check_same_length(const ClassVector& u, const ClassVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("class vector length mismatch: " + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()));
  }
}

ClassVector add(const ClassVector& u, const ClassVector& v) {
  check_same_length(u, v);
  ClassVector w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

ClassVector sub(const ClassVector& u, const ClassVector& v) {
  check_same_length(u, v);
  ClassVector w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

ClassVector negate(const ClassVector& v) {
  ClassVector w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

ClassVector scale(Int k, const ClassVector& v) {
  ClassVector w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = k * v[i];
  return w;
}

ClassVector canonical_sign(const ClassVector& v) {
  for (Int x : v) {
    if (x > 0) return v;
    if (x < 0) return negate(v);
  }
  return v;
}

Int symplectic_pairing(const ClassVector& u, const ClassVector& v) {
  check_same_length(u, v);
  if (u.size() % 2 != 0) throw std::invalid_argument("class vectors must have even length");
  Int s = 0;
  for (size_t i = 0; i + 1 < u.size(); i += 2) {
    s += u[i] * v[i + 1] - u[i + 1] * v[i];
  }
  return s;
}

// Row-style Hermite normal form. Pivots positive, entries above a pivot
// reduced into [0, pivot). Canonical for the row lattice.
SpanBasis span_basis(const std::vector<ClassVector>& vectors) {
  if (vectors.empty()) return {};
  const size_t dim = vectors[0].size();
  std::vector<ClassVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("mixed class vector lengths in span");
    if (!is_zero(v)) rows.push_back(v);
  }

  std::vector<size_t> pivot_rows;  // row index per established pivot, in column order
  size_t top = 0;                  // rows below `top` are settled pivots
  for (size_t col = 0; col < dim && top < rows.size(); ++col) {
    // gcd-eliminate all entries of `col` below `top` into a single row
    while (true) {
      size_t best = rows.size();
      for (size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() || iabs(rows[r][col]) < iabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;  // column clear below top
      std::swap(rows[top], rows[best]);
      bool any = false;
      for (size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Int q = rows[r][col] / rows[top][col];
        for (size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) any = true;
      }
      if (!any) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (size_t c = 0; c < dim; ++c) rows[top][c] = -rows[top][c];
    }
    // reduce the settled rows above against this pivot
    for (size_t p : pivot_rows) {
      Int q = rows[p][col] / rows[top][col];
      if (rows[p][col] % rows[top][col] < 0) q -= 1;  // floor division
      if (q != 0) {
        for (size_t c = 0; c < dim; ++c) rows[p][c] -= q * rows[top][c];
      }
    }
    pivot_rows.push_back(top);
    ++top;
  }

  SpanBasis out;
  out.rows.assign(rows.begin(), rows.begin() + static_cast<long>(top));
  return out;
}

std::vector<Int> smith_invariants(std::vector<ClassVector> rows) {
  if (rows.empty()) return {};
  const size_t m = rows.size(), n = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("ragged matrix");
  }
  if (n == 0) return {};

  auto& a = rows;
  size_t t = 0;
  while (t < m && t < n) {
    // find a nonzero entry in the remaining block
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i) {
      for (size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (pi == m || iabs(a[i][j]) < iabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t by row operations
      for (size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      // clear row t by column operations
      for (size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
    }
    ++t;
  }

  std::vector<Int> d;
  for (size_t i = 0; i < t; ++i) {
    if (a[i][i] != 0) d.push_back(iabs(a[i][i]));
  }
  // enforce the divisibility chain d_1 | d_2 | ...
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    for (size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] != 0) {
        Int g = std::gcd(d[i], d[j]);
        Int l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
      }
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool spans_full(const std::vector<ClassVector>& vectors, int dim) {
  if (dim == 0) return true;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) {
      throw std::invalid_argument("spans_full: vector length does not match dimension");
    }
  }
  if (vectors.empty()) return false;
  auto d = smith_invariants(vectors);
  if (static_cast<int>(d.size()) != dim) return false;
  return std::all_of(d.begin(), d.end(), [](Int x) { return x == 1; });
}

bool is_lagrangian(const std::vector<ClassVector>& vectors, int genus) {
  for (size_t i = 0; i < vectors.size(); ++i) {
    for (size_t j = i + 1; j < vectors.size(); ++j) {
      if (symplectic_pairing(vectors[i], vectors[j]) != 0) return false;
    }
  }
  return span_basis(vectors).rank() == genus;
}

std::string to_string(const ClassVector& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace pants
