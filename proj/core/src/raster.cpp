#include "sti/raster.hpp"

#include "sti/angles.hpp"
#include "sti/hyptrig.hpp"
#include "sti/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sti {

namespace {

void write_file(const std::filesystem::path& path, const char* data,
                std::size_t size, const char* what) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out.write(data, static_cast<std::streamsize>(size));
  if (out) out.flush();
  if (!out) {
    throw std::runtime_error(std::string("cannot write ") + what + " to '" +
                             path.string() + "': " + std::strerror(errno));
  }
}

}  // namespace

CellClass CellClass::from_strength(double strength) noexcept {
  if (strength < 0.0) return {CellTag::Negative, 0};
  if (strength >= 1.0) return {CellTag::Saturated, 0};
  const auto k = static_cast<int>(std::floor(strength * kBandCount));
  return {CellTag::Band, static_cast<std::uint8_t>(std::min(k, kBandCount - 1))};
}

FrameGrid::FrameGrid(double gamma, std::size_t points,
                     std::vector<CellClass> cells)
    : gamma_(gamma), points_(points), cells_(std::move(cells)) {
  if (cells_.size() != points_ * points_) {
    throw std::invalid_argument("FrameGrid: cell count does not match points^2");
  }
}

double FrameGrid::cell_size() const noexcept {
  return kPi / static_cast<double>(points_);
}

double FrameGrid::column_alpha(std::size_t col) const noexcept {
  return (static_cast<double>(col) + 0.5) * kPi / static_cast<double>(points_);
}

double FrameGrid::row_beta(std::size_t row) const noexcept {
  return column_alpha(row);
}

FrameGrid render_frame(double gamma, std::size_t points, unsigned threads) {
  if (!(gamma > 0.0 && gamma < kHalfPi)) {
    std::ostringstream os;
    os.precision(17);
    os << "render_frame: requires 0 < gamma < pi/2 (gamma=" << gamma << ")";
    throw DomainError(os.str());
  }
  if (points < 16) {
    throw DomainError("render_frame: requires points >= 16 (points=" +
                      std::to_string(points) + ")");
  }
  std::vector<CellClass> cells(points * points);
  const double step = kPi / static_cast<double>(points);
  parallel_for(points, threads, [&](std::size_t row) {
    const double beta = (static_cast<double>(row) + 0.5) * step;
    for (std::size_t col = 0; col < points; ++col) {
      const double alpha = (static_cast<double>(col) + 0.5) * step;
      const auto angles = AngleTriple::try_make(alpha, beta, gamma);
      cells[row * points + col] =
          angles ? CellClass::from_strength(solve_triangle(*angles).strength)
                 : CellClass::infeasible();
    }
  });
  return FrameGrid(gamma, points, std::move(cells));
}

double negative_fraction(const FrameGrid& frame) noexcept {
  const auto cells = frame.cells();
  const auto negative = std::count_if(cells.begin(), cells.end(), [](const CellClass& c) {
    return c.tag == CellTag::Negative;
  });
  const double size = frame.cell_size();
  return static_cast<double>(negative) * size * size;
}

std::uint8_t pgm_byte(const CellClass& cell) noexcept {
  switch (cell.tag) {
    case CellTag::Infeasible:
      return 255;
    case CellTag::Negative:
      return 0;
    case CellTag::Band:
      return static_cast<std::uint8_t>(40 + 4 * cell.band);
    case CellTag::Saturated:
      return 239;
  }
  return 255;
}

std::vector<std::uint8_t> encode_pgm(const FrameGrid& frame) {
  const std::size_t n = frame.points();
  const std::string header =
      "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + n * n);
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = 0; c < n; ++c) bytes.push_back(pgm_byte(frame.at(r, c)));
  }
  return bytes;
}

void write_pgm(const FrameGrid& frame, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_pgm(frame);
  write_file(path, reinterpret_cast<const char*>(bytes.data()), bytes.size(),
             "PGM");
}

std::vector<GuideLine> guide_lines(double gamma) {
  const double corner = std::min(kPi - 2.0 * gamma, gamma);
  return {
      {0.0, kPi - gamma, kPi - gamma, 0.0},
      {0.0, gamma, corner, gamma},
      {gamma, 0.0, gamma, corner},
  };
}

std::string sidecar_json(const FrameGrid& frame) {
  nlohmann::json lines = nlohmann::json::array();
  for (const GuideLine& l : guide_lines(frame.gamma())) {
    lines.push_back({{"x1", l.x1}, {"y1", l.y1}, {"x2", l.x2}, {"y2", l.y2}});
  }
  const nlohmann::json doc = {{"gamma", frame.gamma()},
                              {"points", frame.points()},
                              {"guide_lines", std::move(lines)}};
  return doc.dump(2) + "\n";
}

std::filesystem::path sidecar_path(const std::filesystem::path& pgm) {
  std::filesystem::path out = pgm;
  out.replace_extension(".json");
  return out;
}

void write_sidecar(const FrameGrid& frame, const std::filesystem::path& path) {
  const std::string text = sidecar_json(frame);
  write_file(path, text.data(), text.size(), "sidecar JSON");
}

}  // namespace sti
