#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnm/rational.hpp"

namespace mnm {

inline constexpr std::string_view kTieSequenceId = "A084771";

struct OeisMismatch {
    std::size_t index = 0;  // 1-based position in our list
    std::string ours;
    std::string theirs;     // "<missing>" when the b-file ran out
};

struct OeisCheckReport {
    std::string sequence_id;
    std::size_t terms_checked = 0;
    bool matched = false;
    std::optional<OeisMismatch> first_mismatch;
};

/// Parses an OEIS b-file ("n a(n)" per line, '#' comments allowed).
std::map<long, BigInt> parse_bfile(std::string_view text);

/// Compares ours[i] against the b-file entry at (first b-file index) + i.
OeisCheckReport check_terms(std::string_view sequence_id, const std::vector<BigInt>& ours,
                            const std::map<long, BigInt>& bfile);

/// The A084771 b-file bundled with the library.
std::string_view bundled_tie_sequence_bfile();

}  // namespace mnm
