#pragma once

#include "rbg/error.hpp"
#include "rbg/types.hpp"

#include <nlohmann/json.hpp>

namespace rbg::io {

using Json = nlohmann::ordered_json;

inline Json vector_to_json(const Vector& v) {
    Json arr = Json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

inline Vector vector_from_json(const Json& j) {
    Vector v(static_cast<Index>(j.size()));
    Index i = 0;
    for (const auto& e : j) v[i++] = e.get<double>();
    return v;
}

/// Dense matrices travel as {"rows", "cols", "data"} with row-major data.
inline Json matrix_to_json(const Matrix& m) {
    Json data = Json::array();
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Matrix matrix_from_json(const Json& j) {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    const Json& data = j.at("data");
    if (static_cast<Index>(data.size()) != rows * cols)
        throw validation_error("matrix data length does not match rows*cols");
    Matrix m(rows, cols);
    Index k = 0;
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<size_t>(k++)].get<double>();
    return m;
}

/// Index lists are serialized 1-based.
inline Json indices_to_json(const IndexList& idx) {
    Json arr = Json::array();
    for (Index i : idx) arr.push_back(i + 1);
    return arr;
}

inline IndexList indices_from_json(const Json& j) {
    IndexList idx;
    idx.reserve(j.size());
    for (const auto& e : j) idx.push_back(e.get<Index>() - 1);
    return idx;
}

/// 64-bit FNV-1a of a serialized document, as fixed-width hex.
std::string fnv1a_hex(const std::string& text);

} // namespace rbg::io
