// Reuse-pattern cell coloring. A pattern with shifts (i, j) tiles the
// lattice with co-channel cells on the sublattice spanned by the shift
// vector and its 60-degree (hex) or 90-degree (square) rotation; cells are
// colored by their coset. A coloring is valid for path length T when every
// self-avoiding walk of T cells sees T distinct colors.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mobicache/topology.hpp"

namespace mobicache {

struct ReusePattern {
  Lattice lattice = Lattice::hexagonal;
  int i = 1;
  int j = 1;

  // i = ceil(T/2), j = floor(T/2): the cluster-size-minimizing shifts.
  static ReusePattern for_path_length(Lattice lattice, int path_length);

  // Number of colors: i^2 + j^2 + ij on hex lattices, i^2 + j^2 on square.
  int cluster_size() const;
  // Euclidean distance between nearest co-channel cell centers, in cell
  // diameters: sqrt(3C) hex, sqrt(C) square.
  double co_channel_distance() const;

  // Sublattice generators in axial/grid coordinates.
  AxialOffset generator_a() const;
  AxialOffset generator_b() const;

  // Period of the pattern along the q (column) and r (row) axes. A torus
  // is compatible iff cols and rows are multiples of these.
  int period_cols() const;
  int period_rows() const;

  // Coset label in [0, cluster_size) of axial cell (q, r); label 0 at the
  // origin.
  int color_at(int q, int r) const;
};

struct Coloring {
  enum class Source { reuse_pattern, explicit_assignment };

  CellGrid grid;
  int num_colors = 0;                    // L
  std::vector<int> color_of;             // per cell, values in [0, L)
  std::vector<std::vector<CellId>> groups;  // inverse map; may be uneven on bounded grids
  Source source = Source::explicit_assignment;
  std::optional<ReusePattern> pattern;

  static Coloring from_colors(const CellGrid& grid, std::vector<int> color_of,
                              Source source = Source::explicit_assignment);
};

// Theorem/corollary minimum L for an unbounded lattice; path_length >= 2.
int min_colors(Lattice lattice, int path_length);

// Reuse-pattern coloring with L = min_colors(lattice, T). Torus grids must
// have rows/cols that are multiples of the pattern periods (the error
// message names the smallest compatible torus); bounded grids restrict the
// infinite-lattice pattern and may yield uneven groups.
Coloring color_cells(const CellGrid& grid, int path_length);

struct ColoringCheck {
  bool valid = true;
  std::optional<MobilityPath> counterexample;  // first offending path in DFS order
};

// Path-based validity: every self-avoiding walk of exactly T cells has
// pairwise-distinct colors. T=1 is trivially valid.
ColoringCheck verify_coloring(const CellGrid& grid, const Coloring& coloring, int path_length);

// Equivalent formulation: every two same-colored cells are >= T hops apart.
bool same_color_cells_far_apart(const CellGrid& grid, const Coloring& coloring, int path_length);

// Exact chromatic number of the T-path conflict graph (cells conflict when
// some T-cell walk contains both), by clique lower bound plus backtracking.
// Refuses grids larger than max_cells.
int brute_force_min_colors(const CellGrid& grid, int path_length, int max_cells = 30);

}  // namespace mobicache
