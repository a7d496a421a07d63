#include "parikh/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "parikh/presets.hpp"

namespace parikh {

namespace {

using nlohmann::json;

json pattern_to_json(const OrderedAlphabet& alphabet, const RewritePattern& p)
{
    json out;
    out["prefix"] = render_word(alphabet, p.prefix);
    if (p.infix)
        out["infix"] = alphabet.subset_glyphs(*p.infix);
    if (!p.suffix.empty())
        out["suffix"] = render_word(alphabet, p.suffix);
    return out;
}

RewritePattern pattern_from_json(const OrderedAlphabet& alphabet, const json& in)
{
    if (!in.is_object())
        throw std::invalid_argument("a rule side must be a JSON object");
    RewritePattern p;
    p.prefix = parse_word(alphabet, in.value("prefix", std::string{}));
    if (in.contains("infix"))
        p.infix = alphabet.parse_subset(in.at("infix").get<std::string>());
    p.suffix = parse_word(alphabet, in.value("suffix", std::string{}));
    return p;
}

json system_to_json(const ThueSystem& system)
{
    json rules = json::array();
    for (const RuleFamily& family : system.rules()) {
        json rule;
        rule["id"] = family.id;
        rule["left"] = pattern_to_json(system.alphabet(), family.left);
        rule["right"] = pattern_to_json(system.alphabet(), family.right);
        rules.push_back(std::move(rule));
    }
    return json{{"alphabet", system.alphabet().glyphs()},
                {"rules", std::move(rules)}};
}

ThueSystem system_from_json(const json& in)
{
    if (!in.is_object() || !in.contains("alphabet") || !in.contains("rules"))
        throw std::invalid_argument(
            "a system definition needs \"alphabet\" and \"rules\"");
    OrderedAlphabet alphabet(in.at("alphabet").get<std::string>());
    std::vector<RuleFamily> rules;
    for (const json& rule : in.at("rules")) {
        RuleFamily family;
        family.id = rule.value("id", std::string{});
        if (family.id.empty())
            throw std::invalid_argument("every rule needs a nonempty \"id\"");
        family.left = pattern_from_json(alphabet, rule.at("left"));
        family.right = pattern_from_json(alphabet, rule.at("right"));
        rules.push_back(std::move(family));
    }
    return ThueSystem(std::move(alphabet), std::move(rules));
}

json parse_text(std::string_view text)
{
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw std::invalid_argument("malformed JSON system definition");
    return parsed;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open system file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::string to_json(const ThueSystem& system, int indent)
{
    return system_to_json(system).dump(indent);
}

std::string to_json(const ParikhRewritingSystem& prs, int indent)
{
    json out = system_to_json(prs.system());
    json counters = json::array();
    for (const Counter& counter : prs.counters())
        counters.push_back(render_word(prs.alphabet(), counter.word()));
    out["counters"] = std::move(counters);
    return out.dump(indent);
}

ThueSystem thue_from_json(std::string_view text)
{
    return system_from_json(parse_text(text));
}

ParikhRewritingSystem prs_from_json(std::string_view text)
{
    json in = parse_text(text);
    ThueSystem system = system_from_json(in);
    std::vector<Counter> counters;
    if (!in.contains("counters"))
        throw std::invalid_argument(
            "a Parikh rewriting system definition needs \"counters\"");
    for (const json& counter : in.at("counters"))
        counters.push_back(
            Counter::parse(system.alphabet(), counter.get<std::string>()));
    return ParikhRewritingSystem(std::move(system), std::move(counters));
}

std::string to_json(const ParikhMatrix& matrix)
{
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < matrix.dimension(); ++j)
            row.push_back(matrix.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

ThueSystem load_thue_system(const std::string& name_or_path, bool force_file)
{
    if (!force_file && is_thue_preset(name_or_path))
        return thue_preset(name_or_path);
    return thue_from_json(read_file(name_or_path));
}

ParikhRewritingSystem load_prs(const std::string& name_or_path, bool force_file)
{
    if (!force_file && is_prs_preset(name_or_path))
        return prs_preset(name_or_path);
    return prs_from_json(read_file(name_or_path));
}

} // namespace parikh
