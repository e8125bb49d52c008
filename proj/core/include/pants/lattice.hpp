#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pants {

using Int = std::int64_t;

/// Homology class in the fixed symplectic basis (a_1, b_1, ..., a_g, b_g).
/// Length is always 2g for the ambient surface.
using ClassVector = std::vector<Int>;

/// Genus / puncture signature of a surface. Valid whenever 2g + n > 2.
struct SurfaceSig {
  int genus = 0;
  int punctures = 0;

  bool valid() const { return genus >= 0 && punctures >= 0 && 2 * genus + punctures > 2; }
  int vertex_count() const { return 2 * genus - 2 + punctures; }
  int edge_count() const { return 3 * genus - 3 + punctures; }
  int homology_rank() const { return 2 * genus; }

  bool operator==(const SurfaceSig&) const = default;
};

void require_valid(const SurfaceSig& sig);

ClassVector zero_class(int genus);
bool is_zero(const ClassVector& v);
/// gcd of the coordinates is 1 (zero vectors are not primitive).
bool is_primitive(const ClassVector& v);

ClassVector add(const ClassVector& u, const ClassVector& v);
ClassVector sub(const ClassVector& u, const ClassVector& v);
ClassVector negate(const ClassVector& v);
ClassVector scale(Int k, const ClassVector& v);

/// Canonical representative of {v, -v}: first nonzero coordinate positive.
ClassVector canonical_sign(const ClassVector& v);

/// Standard intersection form on H_1: sum_i (u_{2i} v_{2i+1} - u_{2i+1} v_{2i}).
/// Throws on length mismatch.
Int symplectic_pairing(const ClassVector& u, const ClassVector& v);

/// Canonical basis (row-style Hermite normal form) of the integer span of a
/// set of vectors. Equal sublattices yield identical rows.
struct SpanBasis {
  std::vector<ClassVector> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool operator==(const SpanBasis&) const = default;
};

SpanBasis span_basis(const std::vector<ClassVector>& vectors);

/// Invariant factors d_1 | d_2 | ... of the integer matrix formed by stacking
/// the vectors as rows (Smith normal form diagonal, nonnegative, zero entries
/// dropped).
std::vector<Int> smith_invariants(std::vector<ClassVector> rows);

/// True iff the vectors span all of Z^dim: the Smith normal form has `dim`
/// invariant factors, all equal to 1.
bool spans_full(const std::vector<ClassVector>& vectors, int dim);

/// True iff the span has rank g and the symplectic pairing vanishes on all
/// pairs of the input.
bool is_lagrangian(const std::vector<ClassVector>& vectors, int genus);

std::string to_string(const ClassVector& v);

}  // namespace pants
