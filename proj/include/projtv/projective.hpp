#pragma once

// Points and flats of RP^d in exact homogeneous coordinates. Every object is
// kept in a canonical form so equality is syntactic: points as coprime
// integer tuples with positive leading entry, subspaces as reduced
// row-echelon bases of the corresponding linear subspace of R^{d+1}.

#include <optional>
#include <string>
#include <vector>

#include "projtv/linalg.hpp"

namespace projtv {

struct ProjPoint {
    RatVec coords;  // canonical: coprime integers, first nonzero positive

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    size_t ambient() const { return coords.size(); }
};

/// Throws on the zero vector.
ProjPoint make_point(RatVec homogeneous);

/// Affine point (x_1..x_d) -> (x_1 : ... : x_d : 1).
ProjPoint point_from_affine(const RatVec& affine);

/// Chart z=1 coordinates; nullopt for points at infinity.
std::optional<RatVec> to_affine(const ProjPoint& p);

struct LinSubspace {
    size_t ambient_dim = 0;
    RatMat basis;  // RREF, rank == basis.size(); empty for the zero subspace

    size_t rank() const { return basis.size(); }
    /// Projective dimension of P(subspace); -1 for the zero subspace.
    long proj_dim() const { return static_cast<long>(rank()) - 1; }
    bool operator==(const LinSubspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

/// Row space of the given spanning vectors in canonical echelon form.
/// Idempotent; throws when the ambient dimension is zero or rows disagree.
LinSubspace canonicalize(const RatMat& spanning, size_t ambient_dim);

LinSubspace zero_subspace(size_t ambient_dim);
LinSubspace full_space(size_t ambient_dim);
LinSubspace span_of_point(const ProjPoint& p);

/// {f : f(x) = 0 for all x in S}, identified with coordinate space through
/// the standard bilinear form. An involution on canonical subspaces.
LinSubspace annihilator(const LinSubspace& s);

LinSubspace join(const LinSubspace& a, const LinSubspace& b);
LinSubspace meet(const LinSubspace& a, const LinSubspace& b);

/// V-hat for the projective hyperplane at infinity {x_{d+1} = 0}.
LinSubspace hyperplane_at_infinity(size_t d);

struct PointConfig {
    size_t d = 0;  // ambient projective dimension; coords have d+1 entries
    std::vector<ProjPoint> points;
    std::optional<std::vector<std::string>> colors;

    size_t size() const { return points.size(); }
};

PointConfig make_config(size_t d, std::vector<ProjPoint> pts,
                        std::optional<std::vector<std::string>> colors = std::nullopt);

struct GeneralPositionResult {
    bool ok = false;
    std::vector<size_t> violating;  // one offending r-subset when !ok
};

/// True iff no r points of X together with V lie in a hyperplane, i.e. every
/// r-subset S has rank(join(V, span S)) = d+1. Throws when r > |X| or r < 1.
GeneralPositionResult general_position(const PointConfig& x, const LinSubspace& v, size_t r);

}  // namespace projtv
