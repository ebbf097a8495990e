#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "troprank/matrix.hpp"

namespace troprank {

enum class MatrixFormat { csv, json };

struct MatrixFile {
  MatrixFormat format = MatrixFormat::csv;
  TropMatrix matrix = TropMatrix::filled(1, 1, 0);
};

/// One row per non-blank line, comma-separated rational literals.
TropMatrix parse_csv(std::string_view text);

/// {"rows": d, "cols": n, "entries": [[...], ...]} with entries as rational strings or integers.
TropMatrix parse_json(std::string_view text);

/// JSON when the first non-blank character is '{', CSV otherwise. Errors are DomainError (bad
/// literal, with its row and column) or ShapeError (ragged or mismatched dimensions).
MatrixFile parse_matrix(std::string_view text);

/// Throws DomainError when the file cannot be read.
MatrixFile read_matrix_file(const std::filesystem::path& path);

std::string to_csv(const TropMatrix& m);
std::string to_json(const TropMatrix& m);

}  // namespace troprank
