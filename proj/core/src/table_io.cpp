#include "mnm/table_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mnm/error.hpp"
#include "mnm/exact.hpp"

namespace mnm {

ExactRational TableRow::probability() const {
    return ExactRational::parse(prob_num + "/" + prob_den);
}

TableRow TableRow::make(unsigned k, const ExactRational& probability) {
    TableRow row;
    row.k = k;
    row.prob_num = probability.numerator().get_str();
    row.prob_den = probability.denominator().get_str();
    row.prob_float = probability.to_double();
    row.log_k = std::log(static_cast<double>(k));
    row.log_p = std::log(row.prob_float);
    return row;
}

std::vector<TableRow> tie_table(unsigned kmax) {
    if (kmax == 0) {
        throw DomainError("table needs kmax >= 1");
    }
    const std::vector<ExactRational> diagonal = tie_prob_diagonal(kmax);
    std::vector<TableRow> rows;
    rows.reserve(kmax);
    for (unsigned k = 1; k <= kmax; ++k) {
        rows.push_back(TableRow::make(k, diagonal[k]));
    }
    return rows;
}

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& field, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line) + ": bad number '" + field + "'");
    }
    return v;
}

}  // namespace

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << kTableHeader << '\n';
    for (const auto& r : rows) {
        out << r.k << ',' << r.prob_num << ',' << r.prob_den << ',' << format_double(r.prob_float) << ','
            << format_double(r.log_k) << ',' << format_double(r.log_p) << '\n';
    }
}

std::vector<TableRow> read_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty table");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kTableHeader) {
        throw ParseError("unexpected table header '" + line + "'");
    }
    std::vector<TableRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) {
            fields.push_back(f);
        }
        if (fields.size() != 6) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 6 fields");
        }
        TableRow row;
        const double k = parse_double(fields[0], line_no);
        if (k < 1 || k != std::floor(k)) {
            throw ParseError("line " + std::to_string(line_no) + ": bad k");
        }
        row.k = static_cast<unsigned>(k);
        row.prob_num = fields[1];
        row.prob_den = fields[2];
        try {
            (void)row.probability();
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad rational");
        }
        row.prob_float = parse_double(fields[3], line_no);
        row.log_k = parse_double(fields[4], line_no);
        row.log_p = parse_double(fields[5], line_no);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace mnm
