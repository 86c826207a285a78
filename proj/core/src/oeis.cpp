#include "mnm/oeis.hpp"

#include <sstream>

#include "mnm/error.hpp"

namespace mnm {

std::map<long, BigInt> parse_bfile(std::string_view text) {
    std::map<long, BigInt> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        std::string extra;
        if (!(fields >> index >> value) || (fields >> extra)) {
            throw ParseError("b-file line " + std::to_string(line_no) + " is not 'n a(n)'");
        }
        BigInt parsed;
        if (parsed.set_str(value, 10) != 0) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": bad integer '" + value + "'");
        }
        if (!terms.emplace(index, std::move(parsed)).second) {
            throw ParseError("b-file index " + std::to_string(index) + " repeated");
        }
    }
    return terms;
}

OeisCheckReport check_terms(std::string_view sequence_id, const std::vector<BigInt>& ours,
                            const std::map<long, BigInt>& bfile) {
    OeisCheckReport report;
    report.sequence_id = std::string(sequence_id);
    const long offset = bfile.empty() ? 0 : bfile.begin()->first;
    for (std::size_t i = 0; i < ours.size(); ++i) {
        ++report.terms_checked;
        const auto it = bfile.find(offset + static_cast<long>(i));
        if (it == bfile.end() || it->second != ours[i]) {
            report.first_mismatch = OeisMismatch{i + 1, ours[i].get_str(),
                                                 it == bfile.end() ? "<missing>" : it->second.get_str()};
            break;
        }
    }
    report.matched = !report.first_mismatch.has_value();
    return report;
}

}  // namespace mnm
