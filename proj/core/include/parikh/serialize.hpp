// serialize.hpp -- JSON system definitions and matrix serialization

#pragma once

#include <string>
#include <string_view>

#include "parikh/matrix.hpp"
#include "parikh/prs.hpp"
#include "parikh/thue.hpp"

namespace parikh {

/// System definition format:
///
///   { "alphabet": "abc",
///     "rules": [ { "id": "R1",
///                  "left":  {"prefix":"ab","infix":"abc","suffix":"ba"},
///                  "right": {"prefix":"ba","infix":"abc","suffix":"ab"} },
///                { "id": "swap-ac",
///                  "left": {"prefix":"ac"}, "right": {"prefix":"ca"} } ] }
///
/// A missing "infix" denotes a finite rule; "infix" is a glyph string
/// naming the allowed infix letters.  Missing "prefix"/"suffix" mean the
/// empty word.  A Parikh rewriting system adds "counters": ["ab","abc"].
std::string to_json(const ThueSystem& system, int indent = -1);
std::string to_json(const ParikhRewritingSystem& prs, int indent = -1);

ThueSystem thue_from_json(std::string_view text);
ParikhRewritingSystem prs_from_json(std::string_view text);

/// Matrices serialize as row-major nested integer arrays.
std::string to_json(const ParikhMatrix& matrix);

/// Resolves a --system / --prs argument: a preset name unless force_file
/// is set or no preset matches, in which case the argument names a JSON
/// file.  File errors raise std::invalid_argument.
ThueSystem load_thue_system(const std::string& name_or_path, bool force_file = false);
ParikhRewritingSystem load_prs(const std::string& name_or_path, bool force_file = false);

} // namespace parikh
