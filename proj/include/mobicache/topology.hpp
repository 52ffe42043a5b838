// Finite cell grids (hexagonal in axial coordinates, square), adjacency,
// hop distances, and streaming enumeration of self-avoiding mobility paths.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mobicache {

using CellId = int;

enum class Lattice { hexagonal, square };

struct AxialOffset {
  int dq;
  int dr;
};

// Neighbor offsets in canonical order; hex uses axial coordinates.
const std::vector<AxialOffset>& lattice_offsets(Lattice lattice);

// Finite rows x cols grid; cell (q, r) has id r*cols + q. Torus grids wrap
// both coordinates; bounded grids clip. Torus dims must be >= 3 so the
// neighbor sets stay 6- (hex) or 4-regular (square).
struct CellGrid {
  Lattice lattice = Lattice::square;
  int rows = 0;
  int cols = 0;
  bool wrap = true;

  CellGrid() = default;
  CellGrid(Lattice lat, int rows_, int cols_, bool wrap_);

  int cell_count() const { return rows * cols; }
  CellId id_of(int q, int r) const { return r * cols + q; }
  int q_of(CellId c) const { return c % cols; }
  int r_of(CellId c) const { return c / cols; }
  bool valid(CellId c) const { return c >= 0 && c < cell_count(); }
  void require_valid(CellId c) const;

  // Neighbor under a single offset, or -1 if it leaves a bounded grid.
  CellId step(CellId c, AxialOffset d) const;

  std::string spec_string() const;
};

// `<lattice>:<rows>x<cols>[:torus|:bounded]`, e.g. "hex:6x4:torus".
// Wrap suffix defaults to torus.
CellGrid parse_grid_spec(const std::string& spec);

std::vector<CellId> neighbors(const CellGrid& grid, CellId c);

// Hop count of the shortest adjacency path (BFS).
int graph_distance(const CellGrid& grid, CellId a, CellId b);

struct MobilityPath {
  std::vector<CellId> cells;

  std::size_t length() const { return cells.size(); }
  bool valid_for(const CellGrid& grid) const;  // adjacent steps, all distinct
};

// Streams every self-avoiding walk of exactly `length` cells, depth first
// from ascending start cells; reversals are distinct walks. Return false
// from the visitor to stop early. Yields nothing when length > K.
void for_each_path(const CellGrid& grid, int length,
                   const std::function<bool(const std::vector<CellId>&)>& visit);

std::uint64_t count_paths(const CellGrid& grid, int length);

// Materialized variant for small instances (tests, counterexamples).
std::vector<MobilityPath> collect_paths(const CellGrid& grid, int length);

}  // namespace mobicache
