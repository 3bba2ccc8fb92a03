#include "mutfan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mutfan {

namespace {

using Json = nlohmann::ordered_json;

Json parseText(const std::string& text, const char* what) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw std::runtime_error(std::string("malformed JSON in ") + what);
    }
    return doc;
}

std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Rat ratFromJson(const Json& v, const char* what) {
    if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    if (v.is_string()) return ratFromString(v.get<std::string>());
    throw std::runtime_error(std::string(what) + " must be an integer or a \"p/q\" string");
}

long long intFromJson(const Json& v, const char* what) {
    if (!v.is_number_integer()) {
        throw std::runtime_error(std::string(what) + " must be an integer");
    }
    return v.get<long long>();
}

Json ratToJson(const Rat& v) { return Json(ratToString(v)); }

Json matrixBody(const ExchangeMatrix& b) {
    Json doc;
    doc["n"] = b.size();
    Json rows = Json::array();
    for (int i = 0; i < b.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < b.size(); ++j) {
            row.push_back(b.entry(i, j).convert_to<long long>());
        }
        rows.push_back(std::move(row));
    }
    doc["B"] = std::move(rows);
    return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

ExtendedExchangeMatrix readMatrixText(const std::string& text) {
    Json doc = parseText(text, "matrix file");
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("B")) {
        throw std::runtime_error("matrix file needs fields \"n\" and \"B\"");
    }
    long long n = intFromJson(doc["n"], "\"n\"");
    const Json& mat = doc["B"];
    if (!mat.is_array() || static_cast<long long>(mat.size()) != n) {
        throw std::runtime_error("\"B\" must be an array of n rows");
    }
    std::vector<std::vector<Int>> rows;
    for (const Json& row : mat) {
        if (!row.is_array() || static_cast<long long>(row.size()) != n) {
            throw std::runtime_error("every row of \"B\" must have n entries");
        }
        std::vector<Int> conv;
        for (const Json& v : row) conv.emplace_back(intFromJson(v, "matrix entry"));
        rows.push_back(std::move(conv));
    }

    std::vector<std::pair<std::string, std::vector<Rat>>> coefRows;
    if (doc.contains("rows")) {
        const Json& ext = doc["rows"];
        if (!ext.is_object()) throw std::runtime_error("\"rows\" must be an object");
        for (const auto& [label, row] : ext.items()) {
            if (!row.is_array() || static_cast<long long>(row.size()) != n) {
                throw std::runtime_error("row \"" + label + "\" must have n entries");
            }
            std::vector<Rat> conv;
            for (const Json& v : row) conv.push_back(ratFromJson(v, "row entry"));
            coefRows.emplace_back(label, std::move(conv));
        }
    }
    try {
        return ExtendedExchangeMatrix(ExchangeMatrix::fromRows(rows), std::move(coefRows));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

ExtendedExchangeMatrix readMatrixFile(const std::string& path) {
    return readMatrixText(readFileOrThrow(path));
}

std::string writeMatrixText(const ExtendedExchangeMatrix& m) {
    Json doc = matrixBody(m.base());
    if (!m.rows().empty()) {
        Json rows = Json::object();
        for (const auto& [label, row] : m.rows()) {
            Json conv = Json::array();
            for (const Rat& v : row) conv.push_back(ratToJson(v));
            rows[label] = std::move(conv);
        }
        doc["rows"] = std::move(rows);
    }
    return dump(doc);
}

std::string writeMatrixText(const ExchangeMatrix& b) { return dump(matrixBody(b)); }

LinearRelation readRelationText(const std::string& text) {
    Json doc = parseText(text, "relation file");
    if (!doc.is_object() || !doc.contains("coeffs") || !doc.contains("vectors")) {
        throw std::runtime_error("relation file needs fields \"coeffs\" and \"vectors\"");
    }
    const Json& coeffs = doc["coeffs"];
    const Json& vectors = doc["vectors"];
    if (!coeffs.is_array() || !vectors.is_array() || coeffs.size() != vectors.size()) {
        throw std::runtime_error("\"coeffs\" and \"vectors\" must be arrays of equal length");
    }
    LinearRelation rel;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Rat c = ratFromJson(coeffs[i], "coefficient");
        const Json& vec = vectors[i];
        if (!vec.is_array()) throw std::runtime_error("every vector must be an array");
        RatVec v;
        for (const Json& entry : vec) v.push_back(ratFromJson(entry, "vector entry"));
        if (!rel.terms.empty() && v.size() != rel.terms.front().second.size()) {
            throw std::runtime_error("all vectors must have the same length");
        }
        rel.terms.emplace_back(std::move(c), std::move(v));
    }
    return rel;
}

LinearRelation readRelationFile(const std::string& path) {
    return readRelationText(readFileOrThrow(path));
}

std::string writeRelationText(const LinearRelation& r) {
    Json doc;
    Json coeffs = Json::array();
    Json vectors = Json::array();
    for (const auto& [c, v] : r.terms) {
        coeffs.push_back(ratToJson(c));
        Json vec = Json::array();
        for (const Rat& x : v) vec.push_back(ratToJson(x));
        vectors.push_back(std::move(vec));
    }
    doc["coeffs"] = std::move(coeffs);
    doc["vectors"] = std::move(vectors);
    return dump(doc);
}

std::string writeWallsText(const FanApproximation& fan) {
    Json walls = Json::array();
    for (const PulledBackHyperplane& wall : fan.walls) {
        Json entry;
        entry["seq"] = wall.sequence;
        entry["j"] = wall.coordinate;
        Json pieces = Json::array();
        for (const WallPiece& piece : wall.pieces) {
            Json p;
            Json normal = Json::array();
            for (const Int& x : piece.normal) normal.push_back(ratToJson(Rat(x)));
            p["normal"] = std::move(normal);
            Json cell = Json::array();
            for (const auto& gen : piece.cell) {
                Json g = Json::array();
                for (const Int& x : gen) g.push_back(ratToJson(Rat(x)));
                cell.push_back(std::move(g));
            }
            p["cell"] = std::move(cell);
            pieces.push_back(std::move(p));
        }
        entry["pieces"] = std::move(pieces);
        walls.push_back(std::move(entry));
    }
    return dump(walls);
}

}  // namespace mutfan
