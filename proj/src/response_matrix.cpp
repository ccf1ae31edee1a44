#include "ctscore/response_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace ctscore {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = line.find(delimiter, start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return fields;
}

bool is_missing_token(std::string_view s) {
  if (s.empty()) return true;
  if (s.size() == 2) {
    return std::toupper(static_cast<unsigned char>(s[0])) == 'N' &&
           std::toupper(static_cast<unsigned char>(s[1])) == 'A';
  }
  return false;
}

std::vector<std::string> generated_labels(char prefix, std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DataError(std::string("duplicate ") + what + " id '" + label + "'");
    }
  }
}

}  // namespace

ResponseMatrix::ResponseMatrix(std::vector<std::string> examinee_ids,
                               std::vector<std::string> item_ids,
                               std::vector<std::uint8_t> cells,
                               std::size_t imputed_cells)
    : examinee_ids_(std::move(examinee_ids)),
      item_ids_(std::move(item_ids)),
      cells_(std::move(cells)),
      imputed_cells_(imputed_cells) {
  if (examinee_ids_.size() < 2) throw DataError("need at least 2 examinees");
  if (item_ids_.size() < 2) throw DataError("need at least 2 items");
  if (cells_.size() != examinee_ids_.size() * item_ids_.size()) {
    throw DataError("cell count does not match examinee x item dimensions");
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] > 1) {
      throw DataError("non-binary cell", k / item_ids_.size() + 1, k % item_ids_.size() + 1);
    }
  }
  require_unique(examinee_ids_, "examinee");
  require_unique(item_ids_, "item");
}

ResponseMatrix ResponseMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<std::uint8_t> cells;
  cells.reserve(m * n);
  for (std::size_t e = 0; e < m; ++e) {
    if (rows[e].size() != n) throw DataError("ragged row", e + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = rows[e][i];
      if (v != 0 && v != 1) throw DataError("non-binary cell", e + 1, i + 1);
      cells.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return ResponseMatrix(generated_labels('e', m), generated_labels('i', n), std::move(cells));
}

ResponseMatrix ResponseMatrix::transposed() const {
  const std::size_t m = examinees(), n = items();
  std::vector<std::uint8_t> out(m * n);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t i = 0; i < n; ++i) out[i * m + e] = at(e, i);
  return ResponseMatrix(item_ids_, examinee_ids_, std::move(out), imputed_cells_);
}

ResponseMatrix parse_response_csv(std::string_view text, const ParseOptions& options) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DataError("empty input");

  std::size_t first_data = 0;
  std::vector<std::string> column_labels;
  std::optional<std::size_t> expected_fields;

  if (options.header_row) {
    auto fields = split_fields(lines[0], options.delimiter);
    expected_fields = fields.size();
    for (std::size_t f = options.id_column ? 1 : 0; f < fields.size(); ++f) {
      column_labels.push_back(unquote(fields[f]));
    }
    first_data = 1;
  }

  std::vector<std::string> row_labels;
  std::vector<std::uint8_t> grid;
  std::size_t columns = 0;
  std::size_t imputed = 0;

  for (std::size_t l = first_data; l < lines.size(); ++l) {
    const std::size_t data_row = l - first_data + 1;
    auto fields = split_fields(lines[l], options.delimiter);
    if (!expected_fields) expected_fields = fields.size();
    if (fields.size() != *expected_fields) {
      throw DataError("ragged row " + std::to_string(data_row) + ": expected " +
                          std::to_string(*expected_fields) + " fields, got " +
                          std::to_string(fields.size()),
                      data_row);
    }
    std::size_t offset = 0;
    if (options.id_column) {
      row_labels.push_back(unquote(fields[0]));
      offset = 1;
    }
    columns = fields.size() - offset;
    for (std::size_t f = offset; f < fields.size(); ++f) {
      const std::size_t col = f - offset + 1;
      const auto token = trim(fields[f]);
      if (token == "0") {
        grid.push_back(0);
      } else if (token == "1") {
        grid.push_back(1);
      } else if (is_missing_token(token) && options.missing_policy == MissingPolicy::as_incorrect) {
        grid.push_back(0);
        ++imputed;
      } else {
        throw DataError("non-binary cell at row " + std::to_string(data_row) + ", col " +
                            std::to_string(col) + ": '" + std::string(token) + "'",
                        data_row, col);
      }
    }
  }

  const std::size_t rows = lines.size() - first_data;
  const bool items_are_rows = options.transpose;
  if (row_labels.empty()) row_labels = generated_labels(items_are_rows ? 'i' : 'e', rows);
  if (column_labels.empty()) column_labels = generated_labels(items_are_rows ? 'e' : 'i', columns);

  if (!items_are_rows) {
    return ResponseMatrix(std::move(row_labels), std::move(column_labels), std::move(grid), imputed);
  }
  if (rows < 2) throw DataError("need at least 2 items");
  if (columns < 2) throw DataError("need at least 2 examinees");
  std::vector<std::uint8_t> cells(rows * columns);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < columns; ++c) cells[c * rows + r] = grid[r * columns + c];
  return ResponseMatrix(std::move(column_labels), std::move(row_labels), std::move(cells), imputed);
}

std::string to_csv(const ResponseMatrix& matrix, const WriteOptions& options) {
  std::string out;
  const char d = options.delimiter;
  if (options.header_row) {
    if (options.id_column) out += "id";
    for (std::size_t i = 0; i < matrix.items(); ++i) {
      if (i > 0 || options.id_column) out += d;
      out += matrix.item_ids()[i];
    }
    out += '\n';
  }
  for (std::size_t e = 0; e < matrix.examinees(); ++e) {
    if (options.id_column) out += matrix.examinee_ids()[e];
    for (std::size_t i = 0; i < matrix.items(); ++i) {
      if (i > 0 || options.id_column) out += d;
      out += matrix.at(e, i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

ItemVector item_vector(const ResponseMatrix& matrix, std::size_t index) {
  if (index >= matrix.items()) {
    throw DataError("item index " + std::to_string(index) + " out of range (n = " +
                    std::to_string(matrix.items()) + ")");
  }
  ItemVector v{matrix.item_ids()[index], {}};
  v.values.reserve(matrix.examinees());
  for (std::size_t e = 0; e < matrix.examinees(); ++e) v.values.push_back(matrix.at(e, index));
  return v;
}

}  // namespace ctscore
