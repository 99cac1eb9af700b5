#include "nekbound/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "nekbound/errors.hpp"

namespace nekbound {

namespace {

// Everything here is dense row-major storage; refuse size lines that would
// ask for absurd allocations.
constexpr std::size_t kMaxDenseOrder = 4096;

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

double parse_double(const std::string& token, std::size_t line) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last)
        throw ParseError(line, "invalid number '" + token + "'");
    if (!std::isfinite(value))
        throw ParseError(line, "non-finite value '" + token + "'");
    return value;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, "invalid index '" + token + "'");
    return value;
}

struct MmHeader {
    bool coordinate;
    bool complex_field;
};

MmHeader parse_mm_header(const std::string& line) {
    const std::vector<std::string> t = split_ws(line);
    if (t.size() < 5 || lowercase(t[0]) != "%%matrixmarket")
        throw ParseError(1, "missing %%MatrixMarket header");
    const std::string object = lowercase(t[1]);
    const std::string format = lowercase(t[2]);
    const std::string field = lowercase(t[3]);
    const std::string symmetry = lowercase(t[4]);
    if (object != "matrix")
        throw UnsupportedFormatError("unsupported Matrix Market object: " + object);
    if (format != "coordinate" && format != "array")
        throw ParseError(1, "unknown Matrix Market format '" + format + "'");
    if (field != "real" && field != "complex" && field != "integer")
        throw UnsupportedFormatError("unsupported Matrix Market field: " + field);
    if (symmetry != "general")
        throw UnsupportedFormatError("unsupported Matrix Market symmetry: " + symmetry);
    return MmHeader{format == "coordinate", field == "complex"};
}

// Next non-comment, non-blank line. Returns false at end of stream.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return true;
    }
    return false;
}

}  // namespace

Matrix parse_matrix_market(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty input");
    ++lineno;
    const MmHeader header = parse_mm_header(line);

    if (!next_data_line(in, line, lineno)) throw ParseError(lineno, "missing size line");
    const std::vector<std::string> dims = split_ws(line);
    const std::size_t expected_dims = header.coordinate ? 3 : 2;
    if (dims.size() != expected_dims)
        throw ParseError(lineno, "malformed size line");
    const std::size_t rows = parse_index(dims[0], lineno);
    const std::size_t cols = parse_index(dims[1], lineno);
    if (rows != cols) throw NotSquareError(rows, cols);
    if (rows == 0) throw ParseError(lineno, "matrix order must be at least 1");
    if (rows > kMaxDenseOrder)
        throw ParseError(lineno, "matrix order " + std::to_string(rows) +
                                     " exceeds the dense-storage limit of " +
                                     std::to_string(kMaxDenseOrder));

    Matrix a(rows);
    if (header.coordinate) {
        const std::size_t nnz = parse_index(dims[2], lineno);
        for (std::size_t k = 0; k < nnz; ++k) {
            if (!next_data_line(in, line, lineno))
                throw ParseError(lineno + 1, "unexpected end of file: expected " +
                                                 std::to_string(nnz) + " entries");
            const std::vector<std::string> t = split_ws(line);
            const std::size_t expected = header.complex_field ? 4 : 3;
            if (t.size() != expected)
                throw ParseError(lineno, "malformed coordinate entry");
            const std::size_t i = parse_index(t[0], lineno);
            const std::size_t j = parse_index(t[1], lineno);
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw ParseError(lineno, "index out of range");
            const double re = parse_double(t[2], lineno);
            const double im = header.complex_field ? parse_double(t[3], lineno) : 0.0;
            a(i - 1, j - 1) = Complex{re, im};
        }
        if (next_data_line(in, line, lineno))
            throw ParseError(lineno, "trailing data after declared entries");
    } else {
        // Dense array data, column-major.
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) {
                if (!next_data_line(in, line, lineno))
                    throw ParseError(lineno + 1, "unexpected end of file in array data");
                const std::vector<std::string> t = split_ws(line);
                const std::size_t expected = header.complex_field ? 2 : 1;
                if (t.size() != expected)
                    throw ParseError(lineno, "malformed array entry");
                const double re = parse_double(t[0], lineno);
                const double im = header.complex_field ? parse_double(t[1], lineno) : 0.0;
                a(i, j) = Complex{re, im};
            }
        if (next_data_line(in, line, lineno))
            throw ParseError(lineno, "trailing data after array entries");
    }
    return a;
}

void write_matrix_market(const Matrix& a, std::ostream& out) {
    const std::size_t n = a.order();
    bool complex_field = false;
    std::size_t nnz = 0;
    for (const Complex& v : a.entries()) {
        if (v != Complex{}) ++nnz;
        if (v.imag() != 0.0) complex_field = true;
    }
    out << "%%MatrixMarket matrix coordinate " << (complex_field ? "complex" : "real")
        << " general\n";
    out << n << " " << n << " " << nnz << "\n";
    char buf[64];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex v = a(i, j);
            if (v == Complex{}) continue;
            out << (i + 1) << " " << (j + 1);
            std::snprintf(buf, sizeof buf, " %.17g", v.real());
            out << buf;
            if (complex_field) {
                std::snprintf(buf, sizeof buf, " %.17g", v.imag());
                out << buf;
            }
            out << "\n";
        }
}

namespace {

// A cell is `re`, `re+imi`, `re-imi`, or a bare `imi`.
Complex parse_csv_cell(std::string cell, std::size_t line) {
    // trim
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw ParseError(line, "empty cell");
    cell = cell.substr(b, e - b + 1);

    if (cell.back() != 'i') return Complex{parse_double(cell, line), 0.0};

    std::string body = cell.substr(0, cell.size() - 1);
    if (body.empty()) throw ParseError(line, "invalid complex literal '" + cell + "'");
    // Split at the last sign that is not an exponent sign and not leading.
    std::size_t pos = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            pos = k;
            break;
        }
    }
    if (pos == std::string::npos) return Complex{0.0, parse_double(body, line)};
    const std::string re = body.substr(0, pos);
    std::string im = body.substr(pos);
    if (im == "+" || im == "-") im += "1";  // a+i, a-i
    return Complex{parse_double(re, line), parse_double(im, line)};
}

}  // namespace

Matrix parse_csv(std::istream& in) {
    std::vector<std::vector<Complex>> rows;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Complex> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string cell =
                line.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            row.push_back(parse_csv_cell(cell, lineno));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw ParseError(lineno, "ragged rows: expected " + std::to_string(width) +
                                         " cells, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "empty input");
    if (width != rows.size()) throw NotSquareError(rows.size(), width);
    Matrix a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) a(i, j) = rows[i][j];
    return a;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "A5", "A6"};
    return names;
}

NamedMatrix builtin(const std::string& name) {
    if (name == "A1")
        return {name,
                Matrix{{-7, 1, -0.2, 2}, {7, 88, 2, -3}, {2, 0.5, 13, -2}, {0.5, 3, 1, 6}},
                Provenance::builtin_paper};
    if (name == "A2")
        return {name,
                Matrix{{8, 1, -0.2, 3.3}, {7, 13, 2, -3}, {-1.3, 6.7, 13, -2}, {0.5, 3, 1, 6}},
                Provenance::builtin_paper};
    if (name == "A3")
        return {name,
                Matrix{{21, -9.1, -4.2, -2.1},
                       {-0.7, 9.1, -4.2, -2.1},
                       {-0.7, -0.7, 4.9, -2.1},
                       {-0.7, -0.7, -0.7, 2.8}},
                Provenance::builtin_paper};
    if (name == "A4")
        return {name,
                Matrix{{5, 1, 0.2, 2}, {1, 21, 1, -3}, {2, 0.5, 6.4, -2}, {0.5, -1, 1, 9}},
                Provenance::builtin_paper};
    if (name == "A5")
        return {name, Matrix{{6, -3, -2}, {-1, 11, -8}, {-7, -3, 10}},
                Provenance::builtin_paper};
    if (name == "A6")
        return {name,
                Matrix{{8, -0.5, -0.5, -0.5},
                       {-9, 16, -5, -5},
                       {-6, -4, 15, -3},
                       {-4.9, -0.9, -0.9, 6}},
                Provenance::builtin_paper};
    throw UnknownNameError(name);
}

std::string format_fixed4(double x) {
    // round half away from zero, then print the rounded value
    double r = std::round(x * 10000.0) / 10000.0;
    if (r == 0.0) r = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

namespace {

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::ordered_json margins_json(const Classification& c) {
    nlohmann::ordered_json m;
    m["sdd"] = c.sdd_margins;
    if (c.nekrasov_margins)
        m["nekrasov"] = *c.nekrasov_margins;
    else
        m["nekrasov"] = nullptr;
    return m;
}

nlohmann::ordered_json gudkov_json(const Classification& c) {
    nlohmann::ordered_json g;
    if (c.gudkov_permutation) {
        std::vector<std::size_t> one_based(c.gudkov_permutation->size());
        for (std::size_t i = 0; i < one_based.size(); ++i)
            one_based[i] = (*c.gudkov_permutation)[i] + 1;
        g["permutation"] = one_based;
    } else {
        g["permutation"] = nullptr;
    }
    g["exhaustive"] = c.gudkov_exhaustive;
    return g;
}

}  // namespace

namespace {

nlohmann::ordered_json base_json(const std::string& name, const Matrix& a, const Classification& c) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["n"] = a.order();
    j["class"] = {{"sdd", c.is_sdd}, {"nekrasov", c.is_nekrasov}, {"h_matrix", c.is_h_matrix}};
    j["margins"] = margins_json(c);
    return j;
}

}  // namespace

nlohmann::ordered_json classification_json(const std::string& name, const Matrix& a,
                                   const Classification& c) {
    nlohmann::ordered_json j = base_json(name, a, c);
    j["gudkov"] = gudkov_json(c);
    return j;
}

nlohmann::ordered_json report_json(const std::string& name, const Matrix& a,
                           const Classification& c, const BoundReport& b) {
    nlohmann::ordered_json j = base_json(name, a, c);
    j["bounds"] = {{"varah", optional_json(b.varah)},
                   {"bound2", optional_json(b.bound2)},
                   {"bound3", optional_json(b.bound3)},
                   {"best", optional_json(b.best)}};
    j["exact"] = optional_json(b.exact);
    return j;
}

}  // namespace nekbound
