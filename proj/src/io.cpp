#include "opradius/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace opradius {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::out_of_range& e) {
        throw std::runtime_error(std::string("non-finite entry (number overflow): ") + e.what());
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex read_entry(const json& cell, const std::string& where) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw std::runtime_error("malformed entry at " + where + ": expected [re, im]");
    const double re = cell[0].get<double>();
    const double im = cell[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
        throw std::runtime_error("non-finite entry at " + where);
    return {re, im};
}

} // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("data"))
        throw std::runtime_error("matrix document must contain \"dim\" and \"data\"");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw std::runtime_error("\"dim\" must be a positive integer");
    const int n = doc["dim"].get<int>();
    const json& data = doc["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != n)
        throw std::runtime_error("dimension mismatch: expected " + std::to_string(n) + " rows");
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const json& row = data[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::runtime_error("dimension mismatch: row " + std::to_string(i) + " must have " +
                                     std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j)
            entries.push_back(read_entry(row[static_cast<size_t>(j)],
                                         "(" + std::to_string(i) + "," + std::to_string(j) + ")"));
    }
    return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix parse_matrix_file(const std::string& path) { return parse_matrix_json(slurp(path)); }

std::string matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    json doc;
    doc["dim"] = m.dim();
    doc["data"] = std::move(rows);
    return doc.dump();
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << matrix_to_json(m) << '\n';
}

std::vector<ComplexVector> parse_vectors_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array())
        throw std::runtime_error("vector document must contain a \"vectors\" array");
    std::vector<ComplexVector> out;
    size_t vi = 0;
    for (const json& vec : doc["vectors"]) {
        if (!vec.is_array() || vec.empty())
            throw std::runtime_error("vector " + std::to_string(vi) + " must be a nonempty array");
        ComplexVector v;
        v.reserve(vec.size());
        size_t ei = 0;
        for (const json& cell : vec)
            v.push_back(read_entry(cell, "vector " + std::to_string(vi) + "[" + std::to_string(ei++) + "]"));
        out.push_back(std::move(v));
        ++vi;
    }
    return out;
}

std::vector<ComplexVector> parse_vectors_file(const std::string& path) {
    return parse_vectors_json(slurp(path));
}

} // namespace opradius
