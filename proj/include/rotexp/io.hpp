#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "smallmat.hpp"

// Matrix and result documents exchanged by the command-line tool.
//
//   matrix:  {"n": 4, "rows": [[...], ...], "kind": "antisymmetric" | "rotation" | "general"}
//   result:  {"tool": "rotexp", "version": ..., "operation": ..., "primary": ..., "outputs": {...}, ...}
//
// Numbers are written with 17 significant digits so every double survives a round trip.

namespace rotexp::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName    = "rotexp";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Malformed or ill-shaped input; the message locates the problem.
class document_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MatrixDocument {
    std::size_t                      n = 0;
    std::vector<std::vector<double>> rows;
    std::optional<std::string>       kind;
};

[[nodiscard]] inline bool is_known_kind(std::string_view k) {
    return k == "antisymmetric" || k == "rotation" || k == "general";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline std::string describe_parse_error(const json::parse_error& e, std::string_view text) {
    // nlohmann reports the byte just past the offending token (1-based).
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = line_column(text, byte);
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what;
}

} // namespace detail

[[nodiscard]] inline json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw document_error(detail::describe_parse_error(e, text));
    }
}

[[nodiscard]] inline MatrixDocument matrix_from_json(const json& j) {
    if (!j.is_object()) throw document_error("matrix document must be an object with fields \"n\" and \"rows\"");
    if (!j.contains("n")) throw document_error("matrix document is missing field \"n\"");
    if (!j.contains("rows")) throw document_error("matrix document is missing field \"rows\"");

    const json& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 1) throw document_error("\"n\" must be a positive integer");

    MatrixDocument doc;
    doc.n = static_cast<std::size_t>(jn.get<long long>());

    const json& rows = j.at("rows");
    if (!rows.is_array()) throw document_error("\"rows\" must be an array of arrays");
    if (rows.size() != doc.n) {
        throw document_error("\"rows\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(doc.n));
    }
    doc.rows.reserve(doc.n);
    for (std::size_t i = 0; i < doc.n; ++i) {
        const json& row = rows[i];
        if (!row.is_array()) throw document_error("row " + std::to_string(i + 1) + " is not an array");
        if (row.size() != doc.n) {
            throw document_error("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(doc.n));
        }
        std::vector<double> values(doc.n);
        for (std::size_t k = 0; k < doc.n; ++k) {
            const json& x = row[k];
            if (!x.is_number() || !std::isfinite(x.get<double>())) {
                throw document_error("row " + std::to_string(i + 1) + ", column " + std::to_string(k + 1) +
                                     " is not a finite number");
            }
            values[k] = x.get<double>();
        }
        doc.rows.push_back(std::move(values));
    }

    if (j.contains("kind") && !j.at("kind").is_null()) {
        const json& k = j.at("kind");
        if (!k.is_string() || !is_known_kind(k.get<std::string>())) {
            throw document_error("\"kind\" must be one of \"antisymmetric\", \"rotation\", \"general\"");
        }
        doc.kind = k.get<std::string>();
    }
    return doc;
}

[[nodiscard]] inline bool is_result_document(const json& j) {
    return j.is_object() && j.contains("tool") && j.contains("outputs");
}

/// Structural check of a result document; returns it unchanged.
[[nodiscard]] inline const json& validate_result(const json& j) {
    if (!is_result_document(j)) throw document_error("not a result document");
    for (const char* field : {"tool", "version", "operation"}) {
        if (!j.contains(field) || !j.at(field).is_string()) {
            throw document_error(std::string("result document field \"") + field + "\" must be a string");
        }
    }
    if (!j.at("outputs").is_object()) throw document_error("result document field \"outputs\" must be an object");
    return j;
}

[[nodiscard]] inline json parse_result(std::string_view text) {
    json j = parse_json(text);
    (void)validate_result(j);
    return j;
}

/// Reads a matrix document, or pulls one output matrix out of a result document
/// (`select`, defaulting to the result's "primary" output) so results can be piped.
[[nodiscard]] inline MatrixDocument read_matrix(std::string_view text, const std::optional<std::string>& select = {}) {
    const json j = parse_json(text);
    if (!is_result_document(j)) {
        if (select) throw document_error("--select applies only to result documents");
        return matrix_from_json(j);
    }
    (void)validate_result(j);
    std::string name;
    if (select) name = *select;
    else if (j.contains("primary") && j.at("primary").is_string()) name = j.at("primary").get<std::string>();
    else throw document_error("result document has no primary output; use --select");

    const json& outputs = j.at("outputs");
    if (!outputs.contains(name)) throw document_error("result document has no output \"" + name + "\"");
    const json& m = outputs.at(name);
    if (!m.is_object() || !m.contains("rows")) throw document_error("output \"" + name + "\" is not a matrix");
    return matrix_from_json(m);
}

// ---------------------------------------------------------------------------
// Conversion
// ---------------------------------------------------------------------------

template<std::size_t N>
[[nodiscard]] Mat<N> to_mat(const MatrixDocument& doc) {
    if (doc.n != N) throw document_error("document has n = " + std::to_string(doc.n) + ", expected " + std::to_string(N));
    Mat<N> m{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = doc.rows[i][j];
    return m;
}

template<std::size_t N>
[[nodiscard]] MatrixDocument from_mat(const Mat<N>& m, std::optional<std::string> kind = {}) {
    MatrixDocument doc{N, std::vector<std::vector<double>>(N, std::vector<double>(N)), std::move(kind)};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) doc.rows[i][j] = m(i, j);
    return doc;
}

[[nodiscard]] inline json to_json(const MatrixDocument& doc) {
    json j;
    j["n"]    = doc.n;
    j["rows"] = doc.rows;
    if (doc.kind) j["kind"] = *doc.kind;
    return j;
}

template<std::size_t N>
[[nodiscard]] json matrix_json(const Mat<N>& m, std::optional<std::string> kind = {}) {
    return to_json(from_mat(m, std::move(kind)));
}

template<std::size_t N>
[[nodiscard]] json vector_json(const Vec<N>& v) {
    json a = json::array();
    for (double x : v.data) a.push_back(x);
    return a;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// %.17g; null for non-finite values, -0.0 for negative zero.
[[nodiscard]] inline std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0 && std::signbit(x)) return "-0.0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline bool is_flat_numeric(const json& a) {
    for (const auto& x : a)
        if (!x.is_number()) return false;
    return true;
}

inline void emit(std::string& out, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
            out += pad + "  " + json(it.key()).dump() + ": ";
            emit(out, it.value(), indent + 1);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (is_flat_numeric(j)) {
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ", ";
                emit(out, j[k], indent);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += pad + "  ";
            emit(out, j[k], indent + 1);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
        return;
    }
    case json::value_t::number_float: out += format_number(j.get<double>()); return;
    default: out += j.dump(); return;
    }
}

} // namespace detail

/// Indented JSON with numeric arrays on one line and floats at 17 significant digits.
[[nodiscard]] inline std::string dump(const json& j) {
    std::string out;
    detail::emit(out, j, 0);
    out += '\n';
    return out;
}

} // namespace rotexp::io
