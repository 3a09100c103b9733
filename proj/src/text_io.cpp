#include "z4v/text_io.hpp"

#include <fstream>
#include <sstream>

namespace z4v {

namespace {

template <class T, class Parse>
Matrix<T> parse_matrix(std::string_view text, Parse parse) {
    std::vector<std::vector<T>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string w;
        std::vector<T> row;
        while (words >> w) {
            if (row.empty() && w[0] == '#') break;
            row.push_back(parse(w));
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix has no rows");
    return Matrix<T>::from_rows(rows);
}

template <class T>
std::string format(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <class T>
nlohmann::json as_json(const Matrix<T>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : m.row(i)) row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

RMatrix parse_r_matrix(std::string_view text) {
    return parse_matrix<RElement>(text, [](const std::string& w) { return parse_element(w); });
}

Z4Matrix parse_z4_matrix(std::string_view text) {
    return parse_matrix<Z4>(text, [](const std::string& w) { return parse_z4(w); });
}

RVector parse_r_vector(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string w;
    RVector out;
    while (in >> w) out.push_back(parse_element(w));
    if (out.empty()) throw ParseError("empty vector");
    return out;
}

std::string format_matrix(const RMatrix& m) { return format(m); }
std::string format_matrix(const Z4Matrix& m) { return format(m); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json matrix_json(const RMatrix& m) { return as_json(m); }
nlohmann::json matrix_json(const Z4Matrix& m) { return as_json(m); }

nlohmann::json distribution_json(const WeightDistribution& d) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [w, c] : d.coeffs) coeffs.push_back({w, c.str()});
    return {{"metric", std::string(metric_name(d.metric))},
            {"n", d.n},
            {"size", d.total().str()},
            {"max_weight", d.length_scale},
            {"coeffs", coeffs}};
}

WeightDistribution distribution_from_json(const nlohmann::json& j) {
    try {
        WeightDistribution d;
        d.metric = parse_metric(j.at("metric").get<std::string>());
        d.n = j.at("n").get<std::size_t>();
        const BigInt size(j.at("size").get<std::string>());
        for (const auto& term : j.at("coeffs")) d.coeffs[term.at(0).get<int>()] = BigInt(term.at(1).get<std::string>());
        if (d.total() != size) throw ParseError("coefficients do not sum to size");
        d.length_scale = j.contains("max_weight") ? j["max_weight"].get<std::size_t>()
                                                  : length_scale(d.metric, d.n, d.metric != Metric::lee);
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad distribution JSON: ") + e.what());
    }
}

} // namespace z4v
