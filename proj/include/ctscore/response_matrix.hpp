#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctscore {

/// Raised for any malformed or invalid response data. Row/column are 1-based
/// positions among data rows/value columns when the failure is cell-specific.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what,
                     std::optional<std::size_t> row = std::nullopt,
                     std::optional<std::size_t> col = std::nullopt)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> col() const { return col_; }

private:
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

/// One item's outcome column across all examinees.
struct ItemVector {
  std::string item_id;
  std::vector<std::uint8_t> values;

  std::size_t size() const { return values.size(); }
};

/// Binary examinee x item outcome table (1 = restored correctly).
///
/// Cells are stored examinee-major. The matrix is validated on construction
/// and immutable afterwards.
class ResponseMatrix {
public:
  /// Throws DataError unless every cell is 0/1, both dimensions are >= 2,
  /// the grid matches the label counts and labels are unique.
  ResponseMatrix(std::vector<std::string> examinee_ids,
                 std::vector<std::string> item_ids,
                 std::vector<std::uint8_t> cells,
                 std::size_t imputed_cells = 0);

  /// Builds a matrix with generated labels ("e1".., "i1..").
  static ResponseMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t examinees() const { return examinee_ids_.size(); }
  std::size_t items() const { return item_ids_.size(); }

  std::uint8_t at(std::size_t examinee, std::size_t item) const {
    return cells_[examinee * items() + item];
  }
  std::span<const std::uint8_t> row(std::size_t examinee) const {
    return {cells_.data() + examinee * items(), items()};
  }
  std::span<const std::uint8_t> cells() const { return cells_; }

  const std::vector<std::string>& examinee_ids() const { return examinee_ids_; }
  const std::vector<std::string>& item_ids() const { return item_ids_; }

  /// Number of empty/NA cells that were read as incorrect during parsing.
  std::size_t imputed_cells() const { return imputed_cells_; }

  ResponseMatrix transposed() const;

  friend bool operator==(const ResponseMatrix& a, const ResponseMatrix& b) {
    return a.examinee_ids_ == b.examinee_ids_ && a.item_ids_ == b.item_ids_ &&
           a.cells_ == b.cells_;
  }

private:
  std::vector<std::string> examinee_ids_;
  std::vector<std::string> item_ids_;
  std::vector<std::uint8_t> cells_;
  std::size_t imputed_cells_ = 0;
};

enum class MissingPolicy { error, as_incorrect };

struct ParseOptions {
  char delimiter = ',';
  bool header_row = false;
  bool id_column = false;
  MissingPolicy missing_policy = MissingPolicy::error;
  /// Input has items as rows and examinees as columns.
  bool transpose = false;
};

ResponseMatrix parse_response_csv(std::string_view text,
                                  const ParseOptions& options = {});

struct WriteOptions {
  char delimiter = ',';
  bool header_row = true;
  bool id_column = true;
};

/// Inverse of parse_response_csv for the same header/id/delimiter choices.
std::string to_csv(const ResponseMatrix& matrix, const WriteOptions& options = {});

/// Throws DataError when index is out of range.
ItemVector item_vector(const ResponseMatrix& matrix, std::size_t index);

}  // namespace ctscore
