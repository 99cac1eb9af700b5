#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nekbound/bounds.hpp"
#include "nekbound/classify.hpp"
#include "nekbound/matrix.hpp"

namespace nekbound {

enum class Provenance { builtin_paper, file };

struct NamedMatrix {
    std::string name;
    Matrix matrix;
    Provenance provenance;
};

/// Matrix Market reader. Accepts
///   %%MatrixMarket matrix coordinate|array real|complex|integer general
/// Coordinate entries are 1-indexed, unspecified entries are zero; array
/// data is dense column-major. Throws ParseError, NotSquareError, or
/// UnsupportedFormatError (pattern and symmetric variants).
Matrix parse_matrix_market(std::istream& in);

/// Coordinate-format writer; round-trips bit exactly through the reader.
void write_matrix_market(const Matrix& a, std::ostream& out);

/// One row per line, comma separated. Cells are real numbers or complex
/// literals of the form a+bi / a-bi (no whitespace inside a cell's number).
Matrix parse_csv(std::istream& in);

/// The six built-in example matrices, named A1..A6. Throws UnknownNameError.
NamedMatrix builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

/// Fixed 4-decimal rendering, rounding halves away from zero.
std::string format_fixed4(double x);

// --- report serialization ---------------------------------------------
// JSON field names are part of the CLI contract:
//   {name, n, class: {sdd, nekrasov, h_matrix}, margins: {sdd, nekrasov},
//    bounds: {varah, bound2, bound3, best}, exact}
// with null standing in for anything absent.

nlohmann::ordered_json classification_json(const std::string& name, const Matrix& a,
                                   const Classification& c);

nlohmann::ordered_json report_json(const std::string& name, const Matrix& a,
                           const Classification& c, const BoundReport& b);

}  // namespace nekbound
