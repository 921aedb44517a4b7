#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

/// Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct OnePlanarVerdict {
  Verdict status = Verdict::Unknown;
  std::optional<OnePlaneDrawing> witness;  // set iff status == Yes
  std::string reason;
  SearchStats stats;
};

/// Edge-count filter, planarity short-circuit, then an exhaustive search that
/// builds 1-plane drawings edge by edge (each new edge either joins two
/// corners of a common face or crosses one uncrossed edge).
OnePlanarVerdict is_one_planar(const Graph& g, const SearchBudget& budget = {});

struct EnumerationLimits {
  int max_n = 9;
  std::size_t max_m = 24;
  SearchBudget budget;
};

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DrawingCatalog {
  /// Pairwise non-isomorphic drawings, sorted by drawing code.
  std::vector<OnePlaneDrawing> drawings;
  /// False if the budget ran out before the search space was exhausted.
  bool complete = true;
  SearchStats stats;
  std::uint64_t labeled_drawings = 0;
};

/// Every 1-plane drawing of a connected g on the sphere, once per isomorphism
/// class (homeomorphisms may reverse orientation). Throws LimitError above the
/// limits or for disconnected g.
DrawingCatalog enumerate_drawings(const Graph& g, const EnumerationLimits& limits = {});

/// Independent decision procedure: tries every set of pairwise edge-disjoint
/// crossing pairs in order of size, replaces each crossing by a wheel W4 whose
/// rim forces the two edges to alternate, and tests planarity. Exponential;
/// meant for cross-checking on small graphs.
OnePlanarVerdict crossing_set_one_planar(const Graph& g, const SearchBudget& budget = {});

}  // namespace oneplanar
