#pragma once

#include <optional>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

bool is_planar(const Graph& g);

/// A spherical rotation system for g, or nullopt if g is not planar.
std::optional<PlaneEmbedding> planar_embedding(const Graph& g);

}  // namespace oneplanar
