#pragma once

// Static SVG rendering of planar instances: the affine chart z = 1 with
// points at infinity marked on a boundary circle, the subspaces V and W, and
// a sample of extremal hyperplane pairs taken from certificate witnesses.

#include <optional>
#include <string>
#include <vector>

#include "projtv/pieces.hpp"

namespace projtv {

struct PlotData {
    PointConfig x;
    std::optional<LinSubspace> V, W;
    std::vector<HyperplanePair> witness_pairs;
};

/// Writes a deterministic SVG for a d = 2 instance. Throws on other
/// dimensions or unwritable paths.
void render_svg(const PlotData& data, const std::string& path);

}  // namespace projtv
