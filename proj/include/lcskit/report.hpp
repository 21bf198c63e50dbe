#pragma once

#include <span>
#include <string>

#include "lcskit/relative.hpp"

namespace lcs {

/// {"schema":1,"factors":[{"n":1,"torsion":[2,2],"free_rank":0},...],
///  "diagnostics":[...]}. Torsion entries too large for int64 are strings.
std::string render_json(const LcsReport& report, int indent = 2);

/// Inverse of render_json. Throws std::invalid_argument on schema errors.
LcsReport parse_report_json(const std::string& text);

/// Fixed-width table, one row per weight:
///   n  factor      generators  r_basics  kernel  max_word_length  collected_words
std::string render_table(const LcsReport& report);

/// Reads back the rows of render_table.
LcsReport parse_report_table(const std::string& text);

/// Text listing of ambient basics and R-basics per stage.
std::string render_basics(std::span<const StageRecord> stages, const HallBasis& basis,
                          std::span<const std::string> names);

}  // namespace lcs
