#pragma once

#include "graphevt/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphevt {

/// Malformed input file; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One JSON object per line: {"t":<1-based>,"n":<count>,"edges":[[u,v],...]}
/// with 0-based vertex ids and edges in canonical order.
void write_sequence_jsonl(std::ostream& out, std::span<const Graph> graphs);

/// Blank lines are skipped; `t` must count up from 1.
std::vector<Graph> read_sequence_jsonl(std::istream& in);

/// `t,label`
void write_labels_csv(std::ostream& out, std::span<const int> labels);
std::vector<int> read_labels_csv(std::istream& in);

struct ScoreRows {
    std::vector<double> v;
    std::vector<double> score;
    std::vector<bool> flagged;
};

/// `t,v,score,flagged`
void write_scores_csv(std::ostream& out, const ScoreRows& rows);
ScoreRows read_scores_csv(std::istream& in);

/// `key,value`
void write_diagnostics_csv(std::ostream& out,
                           std::span<const std::pair<std::string, std::string>> rows);

struct ResultRow {
    int experiment = 0;
    double setting = 0.0;
    std::uint64_t seed = 0;
    std::string method;
    double auc = 0.0;
};

/// `experiment,setting,seed,method,auc`
void write_results_csv(std::ostream& out, std::span<const ResultRow> rows);
std::vector<ResultRow> read_results_csv(std::istream& in);

/// `key = value` lines; `#` starts a comment. Keys and values are trimmed.
std::map<std::string, std::string> read_config(std::istream& in);

} // namespace graphevt
