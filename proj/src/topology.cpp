#include "mobicache/topology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mobicache {

const std::vector<AxialOffset>& lattice_offsets(Lattice lattice) {
  static const std::vector<AxialOffset> hex = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
  static const std::vector<AxialOffset> square = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  return lattice == Lattice::hexagonal ? hex : square;
}

CellGrid::CellGrid(Lattice lat, int rows_, int cols_, bool wrap_)
    : lattice(lat), rows(rows_), cols(cols_), wrap(wrap_) {
  const int min_dim = wrap ? 3 : 2;
  if (rows < min_dim || cols < min_dim)
    throw std::invalid_argument("grid dimensions must be at least " +
                                std::to_string(min_dim) + "x" + std::to_string(min_dim) +
                                (wrap ? " on a torus" : ""));
}

void CellGrid::require_valid(CellId c) const {
  if (!valid(c)) throw std::out_of_range("invalid cell id " + std::to_string(c));
}

CellId CellGrid::step(CellId c, AxialOffset d) const {
  int q = q_of(c) + d.dq;
  int r = r_of(c) + d.dr;
  if (wrap) {
    q = (q % cols + cols) % cols;
    r = (r % rows + rows) % rows;
  } else if (q < 0 || q >= cols || r < 0 || r >= rows) {
    return -1;
  }
  return id_of(q, r);
}

std::string CellGrid::spec_string() const {
  std::string s = lattice == Lattice::hexagonal ? "hex:" : "sq:";
  s += std::to_string(rows) + "x" + std::to_string(cols);
  s += wrap ? ":torus" : ":bounded";
  return s;
}

CellGrid parse_grid_spec(const std::string& spec) {
  auto fail = [&] { throw std::invalid_argument("bad grid spec '" + spec + "'"); };
  auto c1 = spec.find(':');
  if (c1 == std::string::npos) fail();
  std::string lat = spec.substr(0, c1);
  Lattice lattice;
  if (lat == "hex" || lat == "hexagonal")
    lattice = Lattice::hexagonal;
  else if (lat == "sq" || lat == "square")
    lattice = Lattice::square;
  else
    fail();

  auto c2 = spec.find(':', c1 + 1);
  std::string dims = spec.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
  auto x = dims.find('x');
  if (x == std::string::npos) fail();
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(dims.substr(0, x));
    cols = std::stoi(dims.substr(x + 1));
  } catch (...) {
    fail();
  }

  bool wrap = true;
  if (c2 != std::string::npos) {
    std::string tail = spec.substr(c2 + 1);
    if (tail == "torus")
      wrap = true;
    else if (tail == "bounded")
      wrap = false;
    else
      fail();
  }
  return CellGrid(lattice, rows, cols, wrap);
}

std::vector<CellId> neighbors(const CellGrid& grid, CellId c) {
  grid.require_valid(c);
  std::vector<CellId> out;
  out.reserve(6);
  for (const auto& d : lattice_offsets(grid.lattice)) {
    CellId n = grid.step(c, d);
    if (n >= 0 && n != c) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int graph_distance(const CellGrid& grid, CellId a, CellId b) {
  grid.require_valid(a);
  grid.require_valid(b);
  if (a == b) return 0;
  std::vector<int> dist(grid.cell_count(), -1);
  std::deque<CellId> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    CellId cur = queue.front();
    queue.pop_front();
    for (CellId n : neighbors(grid, cur)) {
      if (dist[n] >= 0) continue;
      dist[n] = dist[cur] + 1;
      if (n == b) return dist[n];
      queue.push_back(n);
    }
  }
  throw std::logic_error("grid is disconnected");  // cannot happen for rectangles
}

bool MobilityPath::valid_for(const CellGrid& grid) const {
  if (cells.empty()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!grid.valid(cells[i])) return false;
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (cells[i] == cells[j]) return false;
  }
  for (std::size_t i = 1; i < cells.size(); ++i) {
    auto nb = neighbors(grid, cells[i - 1]);
    if (!std::binary_search(nb.begin(), nb.end(), cells[i])) return false;
  }
  return true;
}

namespace {

bool extend(const CellGrid& grid, std::vector<CellId>& walk, std::vector<char>& used,
            int length, const std::function<bool(const std::vector<CellId>&)>& visit) {
  if (static_cast<int>(walk.size()) == length) return visit(walk);
  for (CellId n : neighbors(grid, walk.back())) {
    if (used[n]) continue;
    used[n] = 1;
    walk.push_back(n);
    bool keep_going = extend(grid, walk, used, length, visit);
    walk.pop_back();
    used[n] = 0;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_path(const CellGrid& grid, int length,
                   const std::function<bool(const std::vector<CellId>&)>& visit) {
  if (length < 1) throw std::invalid_argument("path length must be >= 1");
  if (length > grid.cell_count()) return;
  std::vector<CellId> walk;
  std::vector<char> used(grid.cell_count(), 0);
  walk.reserve(length);
  for (CellId start = 0; start < grid.cell_count(); ++start) {
    used[start] = 1;
    walk.push_back(start);
    bool keep_going = extend(grid, walk, used, length, visit);
    walk.pop_back();
    used[start] = 0;
    if (!keep_going) return;
  }
}

std::uint64_t count_paths(const CellGrid& grid, int length) {
  std::uint64_t n = 0;
  for_each_path(grid, length, [&](const std::vector<CellId>&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<MobilityPath> collect_paths(const CellGrid& grid, int length) {
  std::vector<MobilityPath> out;
  for_each_path(grid, length, [&](const std::vector<CellId>& walk) {
    out.push_back(MobilityPath{walk});
    return true;
  });
  return out;
}

}  // namespace mobicache
