#include "parikh/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace parikh {

namespace {

RuleFamily finite_rule(const OrderedAlphabet& alphabet, const std::string& lhs,
                       const std::string& rhs)
{
    RuleFamily family;
    family.id = lhs + "-" + rhs;
    family.left.prefix = parse_word(alphabet, lhs);
    family.right.prefix = parse_word(alphabet, rhs);
    return family;
}

RuleFamily infix_rule(const OrderedAlphabet& alphabet, const std::string& id,
                      const std::string& lp, const std::string& ls,
                      const std::string& gamma, const std::string& rp,
                      const std::string& rs)
{
    RuleFamily family;
    family.id = id;
    family.left = RewritePattern{parse_word(alphabet, lp),
                                 alphabet.parse_subset(gamma),
                                 parse_word(alphabet, ls)};
    family.right = RewritePattern{parse_word(alphabet, rp),
                                  alphabet.parse_subset(gamma),
                                  parse_word(alphabet, rs)};
    return family;
}

} // namespace

std::vector<RuleFamily> binary_triple_rules_abb()
{
    OrderedAlphabet ab("ab");
    return {finite_rule(ab, "abb", "bab"), finite_rule(ab, "bab", "bba"),
            finite_rule(ab, "bba", "abb")};
}

std::vector<RuleFamily> binary_triple_rules_baa()
{
    OrderedAlphabet ab("ab");
    return {finite_rule(ab, "baa", "aba"), finite_rule(ab, "aba", "aab"),
            finite_rule(ab, "aab", "baa")};
}

const std::vector<std::string>& thue_preset_names()
{
    static const std::vector<std::string> names{
        "binary-swap", "binary-ex1506b", "ternary-ex0701c", "salomaa",
        "binary-R1R2"};
    return names;
}

const std::vector<std::string>& prs_preset_names()
{
    static const std::vector<std::string> names{
        "binary-swap-ab", "salomaa-abc", "ternary-allswaps", "binary-R1R2-ab"};
    return names;
}

bool is_thue_preset(std::string_view name)
{
    const auto& names = thue_preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_prs_preset(std::string_view name)
{
    const auto& names = prs_preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ThueSystem thue_preset(std::string_view name)
{
    OrderedAlphabet ab("ab");
    OrderedAlphabet abc("abc");

    if (name == "binary-swap")
        return ThueSystem(ab, {finite_rule(ab, "ab", "ba")});

    if (name == "binary-ex1506b")
        return ThueSystem(ab,
                          {infix_rule(ab, "ab-ba", "ab", "ba", "ab", "ba", "ab")});

    if (name == "ternary-ex0701c")
        return ThueSystem(
            abc, {finite_rule(abc, "ac", "ca"),
                  infix_rule(abc, "ab-ba", "ab", "ba", "ab", "ba", "ab"),
                  infix_rule(abc, "bc-cb", "bc", "cb", "bc", "cb", "bc")});

    if (name == "salomaa")
        return ThueSystem(
            abc, {finite_rule(abc, "ac", "ca"),
                  infix_rule(abc, "ab-ba", "ab", "ba", "abc", "ba", "ab"),
                  infix_rule(abc, "bc-cb", "bc", "cb", "abc", "cb", "bc")});

    if (name == "binary-R1R2") {
        std::vector<RuleFamily> rules = binary_triple_rules_abb();
        for (RuleFamily& family : binary_triple_rules_baa())
            rules.push_back(std::move(family));
        return ThueSystem(ab, std::move(rules));
    }

    throw std::invalid_argument("unknown system preset '" + std::string(name) +
                                "'");
}

ParikhRewritingSystem prs_preset(std::string_view name)
{
    if (name == "binary-swap-ab") {
        ThueSystem system = thue_preset("binary-swap");
        Counter ab = Counter::parse(system.alphabet(), "ab");
        return ParikhRewritingSystem(std::move(system), {ab});
    }
    if (name == "salomaa-abc") {
        ThueSystem system = thue_preset("salomaa");
        Counter abc = Counter::parse(system.alphabet(), "abc");
        return ParikhRewritingSystem(std::move(system), {abc});
    }
    if (name == "ternary-allswaps") {
        OrderedAlphabet abc("abc");
        ThueSystem system(abc, {finite_rule(abc, "ac", "ca"),
                                finite_rule(abc, "bc", "cb"),
                                finite_rule(abc, "ab", "ba")});
        return ParikhRewritingSystem(
            std::move(system),
            {Counter::parse(abc, "ab"), Counter::parse(abc, "bc"),
             Counter::parse(abc, "abc")});
    }
    if (name == "binary-R1R2-ab") {
        ThueSystem system = thue_preset("binary-R1R2");
        Counter ab = Counter::parse(system.alphabet(), "ab");
        return ParikhRewritingSystem(std::move(system), {ab});
    }
    throw std::invalid_argument("unknown system preset '" + std::string(name) +
                                "'");
}

} // namespace parikh
