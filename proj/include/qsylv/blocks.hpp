#pragma once

#include <optional>
#include <vector>

#include "qsylv/qmatrix.hpp"

namespace qsylv {

// Dense assembly of a block grid with fixed row/column band sizes. Absent
// cells are zero; a placed cell must match its band extents exactly, else
// assemble() throws DimError naming the cell.
class BlockGrid {
 public:
  BlockGrid(std::vector<std::size_t> row_bands,
            std::vector<std::size_t> col_bands);

  BlockGrid& set(std::size_t band_row, std::size_t band_col, QMatrix block);

  std::size_t band_rows() const { return row_bands_.size(); }
  std::size_t band_cols() const { return col_bands_.size(); }

  QMatrix assemble() const;

 private:
  std::vector<std::size_t> row_bands_;
  std::vector<std::size_t> col_bands_;
  std::vector<std::optional<QMatrix>> cells_;
};

QMatrix hcat(const std::vector<QMatrix>& parts);
QMatrix vcat(const std::vector<QMatrix>& parts);

}  // namespace qsylv
