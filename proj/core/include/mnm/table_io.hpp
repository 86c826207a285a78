#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mnm/rational.hpp"

namespace mnm {

/// One line of the tie-probability table. The rational is kept as decimal
/// strings so that it survives a CSV round trip exactly.
struct TableRow {
    unsigned k = 0;
    std::string prob_num;
    std::string prob_den;
    double prob_float = 0.0;
    double log_k = 0.0;
    double log_p = 0.0;

    [[nodiscard]] ExactRational probability() const;
    static TableRow make(unsigned k, const ExactRational& probability);
};

inline constexpr const char* kTableHeader = "k,prob_num,prob_den,prob_float,log_k,log_p";

/// Rows for k = 1..kmax of the two-player fair game.
std::vector<TableRow> tie_table(unsigned kmax);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

/// Throws ParseError on a missing header, wrong field count or bad numbers.
std::vector<TableRow> read_table_csv(std::istream& in);

}  // namespace mnm
