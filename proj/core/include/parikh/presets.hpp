// presets.hpp -- built-in named systems

#pragma once

#include <string_view>
#include <vector>

#include "parikh/prs.hpp"
#include "parikh/thue.hpp"

namespace parikh {

/// Names of the embedded Thue systems:
///   binary-swap      {(ab,ba)} over a<b
///   binary-ex1506b   {(ab x ba, ba x ab) | x in {a,b}*} over a<b
///   ternary-ex0701c  {(ac,ca)} + {(ab x ba, ba x ab) | x in {a,b}*}
///                    + {(bc x cb, cb x bc) | x in {b,c}*} over a<b<c
///   salomaa          {(ac,ca)} + {(ab x ba, ba x ab) | x in {a,b,c}*}
///                    + {(bc x cb, cb x bc) | x in {a,b,c}*} over a<b<c
///   binary-R1R2      {(abb,bab),(bab,bba),(bba,abb)}
///                    + {(baa,aba),(aba,aab),(aab,baa)} over a<b
const std::vector<std::string>& thue_preset_names();

/// Names of the embedded Parikh rewriting systems:
///   binary-swap-ab    (binary-swap, counter ab)
///   salomaa-abc       (salomaa, counter abc)
///   ternary-allswaps  ({(ac,ca),(bc,cb),(ab,ba)}, counters ab, bc, abc)
///   binary-R1R2-ab    (binary-R1R2, counter ab)
const std::vector<std::string>& prs_preset_names();

bool is_thue_preset(std::string_view name);
bool is_prs_preset(std::string_view name);

/// Embedded system lookup; unknown names raise std::invalid_argument.
ThueSystem thue_preset(std::string_view name);
ParikhRewritingSystem prs_preset(std::string_view name);

/// The two rule triples behind binary-R1R2, exposed so callers can build
/// arbitrary sub-systems of them:
///   first triple:  (abb,bab), (bab,bba), (bba,abb)
///   second triple: (baa,aba), (aba,aab), (aab,baa)
std::vector<RuleFamily> binary_triple_rules_abb();
std::vector<RuleFamily> binary_triple_rules_baa();

} // namespace parikh
