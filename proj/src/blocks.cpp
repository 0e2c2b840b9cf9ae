#include "qsylv/blocks.hpp"

#include <numeric>
#include <string>

#include "qsylv/errors.hpp"

namespace qsylv {

BlockGrid::BlockGrid(std::vector<std::size_t> row_bands,
                     std::vector<std::size_t> col_bands)
    : row_bands_(std::move(row_bands)),
      col_bands_(std::move(col_bands)),
      cells_(row_bands_.size() * col_bands_.size()) {}

BlockGrid& BlockGrid::set(std::size_t band_row, std::size_t band_col,
                          QMatrix block) {
  if (band_row >= row_bands_.size() || band_col >= col_bands_.size()) {
    throw DimError("block grid: cell (" + std::to_string(band_row) + "," +
                   std::to_string(band_col) + ") outside the " +
                   std::to_string(row_bands_.size()) + "x" +
                   std::to_string(col_bands_.size()) + " grid");
  }
  cells_[band_row * col_bands_.size() + band_col] = std::move(block);
  return *this;
}

QMatrix BlockGrid::assemble() const {
  const std::size_t total_rows =
      std::accumulate(row_bands_.begin(), row_bands_.end(), std::size_t{0});
  const std::size_t total_cols =
      std::accumulate(col_bands_.begin(), col_bands_.end(), std::size_t{0});
  QMatrix out(total_rows, total_cols);

  std::size_t row_off = 0;
  for (std::size_t br = 0; br < row_bands_.size(); ++br) {
    std::size_t col_off = 0;
    for (std::size_t bc = 0; bc < col_bands_.size(); ++bc) {
      const auto& cell = cells_[br * col_bands_.size() + bc];
      if (cell) {
        if (cell->rows() != row_bands_[br] || cell->cols() != col_bands_[bc]) {
          throw DimError(
              "block grid: cell (" + std::to_string(br) + "," +
              std::to_string(bc) + ") is " + std::to_string(cell->rows()) +
              "x" + std::to_string(cell->cols()) + ", band expects " +
              std::to_string(row_bands_[br]) + "x" +
              std::to_string(col_bands_[bc]));
        }
        for (std::size_t r = 0; r < cell->rows(); ++r)
          for (std::size_t c = 0; c < cell->cols(); ++c)
            out(row_off + r, col_off + c) = (*cell)(r, c);
      }
      col_off += col_bands_[bc];
    }
    row_off += row_bands_[br];
  }
  return out;
}

QMatrix hcat(const std::vector<QMatrix>& parts) {
  std::vector<std::size_t> rows{parts.empty() ? 0 : parts.front().rows()};
  std::vector<std::size_t> cols;
  cols.reserve(parts.size());
  for (const auto& p : parts) cols.push_back(p.cols());
  BlockGrid grid(rows, cols);
  for (std::size_t i = 0; i < parts.size(); ++i) grid.set(0, i, parts[i]);
  return grid.assemble();
}

QMatrix vcat(const std::vector<QMatrix>& parts) {
  std::vector<std::size_t> rows;
  rows.reserve(parts.size());
  for (const auto& p : parts) rows.push_back(p.rows());
  std::vector<std::size_t> cols{parts.empty() ? 0 : parts.front().cols()};
  BlockGrid grid(rows, cols);
  for (std::size_t i = 0; i < parts.size(); ++i) grid.set(i, 0, parts[i]);
  return grid.assemble();
}

}  // namespace qsylv
