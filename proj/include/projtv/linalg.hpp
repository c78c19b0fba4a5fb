#pragma once

// Dense exact-rational vectors and matrices, sized for desk-scale geometry
// (ambient dimension <= ~8, tens of rows). Everything is deterministic and
// allocation-simple; no pivot-magnitude heuristics are needed over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "projtv/rat.hpp"

namespace projtv {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

bool is_zero(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);

RatMat identity(size_t n);
RatMat transpose(const RatMat& m);
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);

/// In-place reduced row echelon form; returns the pivot columns in order.
/// Zero rows are removed.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

/// Canonical basis of {x : m x = 0}: one vector per free column of the RREF,
/// each cleared to coprime integers with positive leading sign.
RatMat kernel_basis(const RatMat& m, size_t cols);

/// Unique solution of a square nonsingular system; nullopt when singular or
/// inconsistent (uses full elimination, exact).
std::optional<RatVec> solve_square(RatMat a, RatVec b);

/// Scale a nonzero rational vector to coprime integer entries whose first
/// nonzero entry is positive. Zero vectors are returned unchanged.
RatVec normalize_integer_vector(RatVec v);

/// Same clearing to coprime integers but keeping the orientation; use for
/// directions and witnesses, where a sign flip changes the object.
RatVec integer_direction(RatVec v);

/// Lexicographic comparison, entrywise by rational value.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const RatMat& a, const RatMat& b);

/// Exact symmetric LDL^T pivots without permutation; empty when a zero pivot
/// blocks the factorization before completion. A symmetric matrix is positive
/// definite iff all returned pivots exist and are positive.
std::optional<std::vector<Rat>> ldlt_pivots(RatMat m);

bool is_positive_definite(const RatMat& m);

}  // namespace projtv
