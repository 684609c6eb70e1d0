/**
 * Plain-text I/O: matrices as one row per line with whitespace-separated
 * entries ("p/q" or integers); '#' starts a comment line.
 */

#pragma once

#include "rbp/matrix.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace rbp {

inline RatMatrix read_matrix(std::istream& in)
{
    std::vector<RatVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        RatVector row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rat(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("read_matrix: no rows");
    return RatMatrix(rows);
}

/// Rectangular variant used for poset functions on [n] x [m] grids.
inline std::vector<RatVector> read_grid(std::istream& in)
{
    std::vector<RatVector> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        RatVector row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rat(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("read_grid: no rows");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw std::invalid_argument("read_grid: ragged rows");
    return rows;
}

inline std::vector<Int> parse_int_list(const std::string& s)
{
    std::vector<Int> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(Int(tok));
    }
    return out;
}

}  // namespace rbp
