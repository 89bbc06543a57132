#include "young/io.hpp"

#include <sstream>

#include "json.hpp"
#include "young/errors.hpp"

namespace young {

using json = nlohmann::ordered_json;

namespace {

json rows_json(const TableauRows& rows) {
    json comps = json::array();
    for (const auto& comp : rows) {
        json c = json::array();
        for (const auto& row : comp) {
            json r = json::array();
            for (int v : row) r.push_back(v ? json(v) : json(nullptr));
            c.push_back(r);
        }
        comps.push_back(c);
    }
    return comps;
}

TableauRows rows_from_json(const json& j) {
    TableauRows rows;
    for (const auto& comp : j) {
        std::vector<std::vector<int>> c;
        for (const auto& row : comp) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.is_null() ? 0 : v.get<int>());
            c.push_back(std::move(r));
        }
        rows.push_back(std::move(c));
    }
    return rows;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote in CSV");
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

std::string to_json(const MatrixDocument& doc) {
    json j;
    j["shape"] = doc.shape;
    j["field"] = doc.field;
    json params = json::object();
    for (const auto& [k, v] : doc.params) params[k] = v;
    j["params"] = params;
    json basis = json::array();
    for (const auto& b : doc.basis) basis.push_back(rows_json(b));
    j["basis"] = basis;
    json rows = json::array();
    for (const auto& row : doc.matrix.dense()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(1) + "\n";
}

MatrixDocument matrix_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        MatrixDocument doc;
        doc.shape = j.at("shape").get<std::string>();
        doc.field = j.at("field").get<std::string>();
        if (j.contains("params"))
            for (const auto& [k, v] : j["params"].items()) doc.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        if (j.contains("basis"))
            for (const auto& b : j["basis"]) doc.basis.push_back(rows_from_json(b));
        FieldDesc f = FieldDesc::parse(doc.field);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& row : j.at("rows")) {
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(Scalar::parse(v.get<std::string>(), f));
            rows.push_back(std::move(r));
        }
        doc.matrix = Matrix::from_dense(rows, f);
        if (!doc.basis.empty() && static_cast<int>(doc.basis.size()) != doc.matrix.cols())
            throw ParseError("basis length does not match the matrix");
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    }
}

std::string to_csv(const Matrix& m, const std::vector<std::string>& words) {
    std::string s;
    for (std::size_t k = 0; k < words.size(); ++k) s += (k ? "," : "") + csv_field(words[k]);
    s += "\n";
    for (const auto& row : m.dense()) {
        for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + csv_field(row[k].to_string());
        s += "\n";
    }
    return s;
}

Matrix matrix_from_csv(std::string_view text, const FieldDesc& field) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV");
    std::size_t width = csv_split(line).size();
    std::vector<std::vector<Scalar>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = csv_split(line);
        if (cells.size() != width) throw ParseError("CSV row width does not match the header");
        std::vector<Scalar> r;
        for (const auto& c : cells) r.push_back(Scalar::parse(c, field));
        rows.push_back(std::move(r));
    }
    if (rows.size() != width) throw ParseError("CSV matrix is not square");
    return Matrix::from_dense(rows, field);
}

std::string tableau_to_json(const Tableau& t) { return rows_json(t.rows()).dump(); }

}  // namespace young
