#include "graphevt/io.hpp"

#include "graphevt/format.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphevt {
namespace {

using nlohmann::json;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

template <class T>
T parse_number(const std::string& s, std::size_t line) {
    T value{};
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "not a number: '" + s + "'");
    return value;
}

// Reads the header and every data row, checking the column count.
std::vector<std::vector<std::string>> read_table(std::istream& in, const std::string& header) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || strip_cr(line) != header)
        throw ParseError(1, "expected header '" + header + "'");
    const std::size_t cols = split_csv(header).size();
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty())
            continue;
        auto cells = split_csv(line);
        if (cells.size() != cols)
            throw ParseError(lineno, "expected " + std::to_string(cols) + " fields");
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

void write_sequence_jsonl(std::ostream& out, std::span<const Graph> graphs) {
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        nlohmann::ordered_json obj;
        obj["t"] = t + 1;
        obj["n"] = graphs[t].num_vertices();
        json edges = json::array();
        for (const auto& [u, v] : graphs[t].edges())
            edges.push_back({u, v});
        obj["edges"] = std::move(edges);
        out << obj.dump() << '\n';
    }
}

std::vector<Graph> read_sequence_jsonl(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
        }
        try {
            if (!obj.is_object())
                throw ParseError(lineno, "expected a JSON object");
            const auto t = obj.at("t").get<std::int64_t>();
            if (t != static_cast<std::int64_t>(graphs.size() + 1))
                throw ParseError(lineno, "expected t = " + std::to_string(graphs.size() + 1));
            const auto n = obj.at("n").get<std::int64_t>();
            if (n < 0 || n > std::int64_t{1} << 31)
                throw ParseError(lineno, "vertex count out of range");
            std::vector<Edge> edges;
            for (const auto& e : obj.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError(lineno, "edge must be a pair [u, v]");
                const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
                if (u < 0 || v < 0 || u >= n || v >= n)
                    throw ParseError(lineno, "edge endpoint out of range");
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
            graphs.emplace_back(static_cast<std::size_t>(n), edges);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return graphs;
}

void write_labels_csv(std::ostream& out, std::span<const int> labels) {
    out << "t,label\n";
    for (std::size_t t = 0; t < labels.size(); ++t)
        out << t + 1 << ',' << labels[t] << '\n';
}

std::vector<int> read_labels_csv(std::istream& in) {
    std::vector<int> labels;
    std::size_t lineno = 1;
    for (const auto& row : read_table(in, "t,label")) {
        ++lineno;
        const int l = parse_number<int>(row[1], lineno);
        if (l != 0 && l != 1)
            throw ParseError(lineno, "label must be 0 or 1");
        labels.push_back(l);
    }
    return labels;
}

void write_scores_csv(std::ostream& out, const ScoreRows& rows) {
    out << "t,v,score,flagged\n";
    for (std::size_t t = 0; t < rows.score.size(); ++t)
        out << t + 1 << ',' << format_double(rows.v[t]) << ',' << format_double(rows.score[t])
            << ',' << (rows.flagged[t] ? 1 : 0) << '\n';
}

ScoreRows read_scores_csv(std::istream& in) {
    ScoreRows rows;
    std::size_t lineno = 1;
    for (const auto& row : read_table(in, "t,v,score,flagged")) {
        ++lineno;
        rows.v.push_back(parse_number<double>(row[1], lineno));
        rows.score.push_back(parse_number<double>(row[2], lineno));
        rows.flagged.push_back(parse_number<int>(row[3], lineno) != 0);
    }
    return rows;
}

void write_diagnostics_csv(std::ostream& out,
                           std::span<const std::pair<std::string, std::string>> rows) {
    out << "key,value\n";
    for (const auto& [k, v] : rows)
        out << k << ',' << v << '\n';
}

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << "experiment,setting,seed,method,auc\n";
    for (const ResultRow& r : rows)
        out << r.experiment << ',' << format_double(r.setting) << ',' << r.seed << ','
            << r.method << ',' << format_double(r.auc) << '\n';
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
    std::vector<ResultRow> out;
    std::size_t lineno = 1;
    for (const auto& row : read_table(in, "experiment,setting,seed,method,auc")) {
        ++lineno;
        out.push_back({parse_number<int>(row[0], lineno), parse_number<double>(row[1], lineno),
                       parse_number<std::uint64_t>(row[2], lineno), row[3],
                       parse_number<double>(row[4], lineno)});
    }
    return out;
}

std::map<std::string, std::string> read_config(std::istream& in) {
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ParseError(lineno, "empty key");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

} // namespace graphevt
