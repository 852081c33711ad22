#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace sti {

inline constexpr int kBandCount = 50;

enum class CellTag : std::uint8_t { Infeasible, Negative, Band, Saturated };

/// Classification of one raster cell by the strength a + b - c - h at its
/// midpoint: Negative below 0, Band(k) for [k/50, (k+1)/50), Saturated from 1.
struct CellClass {
  CellTag tag = CellTag::Infeasible;
  std::uint8_t band = 0;  // meaningful only for CellTag::Band

  static CellClass infeasible() noexcept { return {}; }
  static CellClass from_strength(double strength) noexcept;

  friend bool operator==(const CellClass&, const CellClass&) = default;
};

/// points x points classification of the (alpha, beta) square [0, pi]^2 at
/// fixed gamma. Cell (row i, column j) is sampled at
/// alpha = (j + 0.5) pi / points, beta = (i + 0.5) pi / points.
class FrameGrid {
 public:
  FrameGrid(double gamma, std::size_t points, std::vector<CellClass> cells);

  double gamma() const noexcept { return gamma_; }
  std::size_t points() const noexcept { return points_; }
  double cell_size() const noexcept;
  double column_alpha(std::size_t col) const noexcept;
  double row_beta(std::size_t row) const noexcept;

  const CellClass& at(std::size_t row, std::size_t col) const noexcept {
    return cells_[row * points_ + col];
  }
  std::span<const CellClass> cells() const noexcept { return cells_; }

 private:
  double gamma_;
  std::size_t points_;
  std::vector<CellClass> cells_;
};

/// Requires 0 < gamma < pi/2 and points >= 16 (DomainError otherwise).
/// Infeasible cells are never solved. Rows are rendered on `threads` workers
/// (0 = hardware concurrency); the grid does not depend on the worker count.
FrameGrid render_frame(double gamma, std::size_t points, unsigned threads = 0);

/// (number of Negative cells) * cell_size^2, a raster estimate of the
/// failure area at the frame's gamma.
double negative_fraction(const FrameGrid& frame) noexcept;

/// Graymap byte for a cell: Infeasible 255, Negative 0, Band(k) 40 + 4k,
/// Saturated 239.
std::uint8_t pgm_byte(const CellClass& cell) noexcept;

/// Binary PGM: "P5\n<points> <points>\n255\n" followed by the rows, the first
/// row being the one with beta nearest pi.
std::vector<std::uint8_t> encode_pgm(const FrameGrid& frame);

/// Throws std::runtime_error naming the path when the file cannot be written.
void write_pgm(const FrameGrid& frame, const std::filesystem::path& path);

/// Segment in (alpha, beta) coordinates.
struct GuideLine {
  double x1;
  double y1;
  double x2;
  double y2;
};

/// The Euclidean diagonal alpha + beta = pi - gamma and the two edges of the
/// square where gamma is the greatest angle.
std::vector<GuideLine> guide_lines(double gamma);

/// {"gamma": ..., "points": ..., "guide_lines": [{"x1", "y1", "x2", "y2"}, ...]}
std::string sidecar_json(const FrameGrid& frame);

/// `pgm` with its extension replaced by ".json".
std::filesystem::path sidecar_path(const std::filesystem::path& pgm);

void write_sidecar(const FrameGrid& frame, const std::filesystem::path& path);

}  // namespace sti
