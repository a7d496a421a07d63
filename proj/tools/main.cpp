// parikh -- command line front end for Parikh matrices, M-equivalence,
// Thue systems, and Parikh rewriting systems.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parikh/audit.hpp"
#include "parikh/constructions.hpp"
#include "parikh/errors.hpp"
#include "parikh/irreducible.hpp"
#include "parikh/mclass.hpp"
#include "parikh/presets.hpp"
#include "parikh/search.hpp"
#include "parikh/serialize.hpp"
#include "parikh/suite.hpp"

namespace {

using nlohmann::json;
using namespace parikh;

// Exit codes: 0 success / property holds, 1 property violated,
// 2 resource cap exceeded (or checked arithmetic overflow),
// 3 invalid input.
constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kCapExceeded = 2;
constexpr int kInvalidInput = 3;

struct GlobalOptions {
    bool json_output = false;
    std::uint64_t cap = 500'000;
    unsigned threads = 1;
    bool from_file = false;

    SearchLimits limits() const { return SearchLimits{cap, cap}; }
    Parallelism parallelism() const { return Parallelism{threads}; }
};

/// Words arrive as glyph strings; "-" stands in for the empty word.
Word word_arg(const OrderedAlphabet& alphabet, const std::string& text)
{
    if (text == "-")
        return Word{};
    return parse_word(alphabet, text);
}

json word_json(const OrderedAlphabet& alphabet, const Word& w)
{
    return render_word(alphabet, w);
}

json step_json(const OrderedAlphabet& alphabet, const DirectStep& step)
{
    return json{{"rule", step.rule_id},
                {"direction", to_string(step.direction)},
                {"position", step.position},
                {"infix", render_word(alphabet, step.infix)},
                {"source", render_word(alphabet, step.source)},
                {"result", render_word(alphabet, step.result)}};
}

json chain_json(const OrderedAlphabet& alphabet,
                const std::vector<IrreducibleStep>& chain)
{
    json steps = json::array();
    for (const IrreducibleStep& step : chain)
        steps.push_back(json{{"source", render_word(alphabet, step.source)},
                             {"target", render_word(alphabet, step.target)},
                             {"order", step.order}});
    return steps;
}

void print(const json& payload) { std::cout << payload.dump() << "\n"; }

int run(int argc, char** argv)
{
    CLI::App app{"Parikh matrices, M-equivalence, and rewriting systems"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_flag("--json", global.json_output, "emit JSON instead of text");
    app.add_option("--cap", global.cap,
                   "state cap for searches and class enumerations")
        ->capture_default_str();
    app.add_option("--threads", global.threads,
                   "worker count for audits and the verification suite")
        ->capture_default_str();
    app.add_flag("--from-file", global.from_file,
                 "treat system arguments as file paths even when a preset "
                 "has the same name");

    std::string alphabet_arg, word1_arg, word2_arg, pattern_arg;
    std::string system_arg, prs_arg, budget_arg = "default";
    std::size_t max_len = 0;
    std::uint32_t max_order = 1;

    auto* count = app.add_subcommand("count", "scattered subword count |w|_u");
    count->add_option("alphabet", alphabet_arg)->required();
    count->add_option("word", word1_arg)->required();
    count->add_option("pattern", pattern_arg)->required();

    auto* matrix = app.add_subcommand("matrix", "Parikh matrix of a word");
    matrix->add_option("alphabet", alphabet_arg)->required();
    matrix->add_option("word", word1_arg)->required();

    auto* equiv = app.add_subcommand("equiv", "M-equivalence of two words");
    equiv->add_option("alphabet", alphabet_arg)->required();
    equiv->add_option("word", word1_arg)->required();
    equiv->add_option("other", word2_arg)->required();

    auto* neighbors =
        app.add_subcommand("neighbors", "direct transformations of a word");
    neighbors->add_option("--system", system_arg, "system file or preset")
        ->required();
    neighbors->add_option("word", word1_arg)->required();

    auto* dist_cmd =
        app.add_subcommand("dist", "least number of direct steps between words");
    dist_cmd->add_option("--system", system_arg)->required();
    dist_cmd->add_option("word", word1_arg)->required();
    dist_cmd->add_option("other", word2_arg)->required();

    auto* class_cmd = app.add_subcommand("class", "full rewrite class of a word");
    class_cmd->add_option("--system", system_arg)->required();
    class_cmd->add_option("word", word1_arg)->required();

    auto* audit = app.add_subcommand(
        "audit", "bounded exhaustive soundness/completeness audit");
    std::string audit_kind;
    bool audit_prs_flag = false;
    audit->add_option("kind", audit_kind, "sound or complete")
        ->required()
        ->check(CLI::IsMember({"sound", "complete"}));
    audit->add_option("--system", system_arg)->required();
    audit->add_option("--max-len", max_len, "audit words up to this length")
        ->required();
    audit->add_flag("--prs", audit_prs_flag,
                    "audit the counter-constrained relation of a Parikh "
                    "rewriting system");

    auto* irr = app.add_subcommand("irr", "irreducibility of a transformation");
    irr->add_option("--prs", prs_arg, "Parikh rewriting system file or preset")
        ->required();
    irr->add_option("word", word1_arg)->required();
    irr->add_option("other", word2_arg)->required();

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "split a transformation into irreducible steps");
    decompose_cmd->add_option("--prs", prs_arg)->required();
    decompose_cmd->add_option("word", word1_arg)->required();
    decompose_cmd->add_option("other", word2_arg)->required();

    auto* path = app.add_subcommand(
        "path", "chain of irreducible transformations of bounded order");
    path->add_option("--prs", prs_arg)->required();
    path->add_option("--max-order", max_order, "largest step order allowed")
        ->required();
    path->add_option("word", word1_arg)->required();
    path->add_option("other", word2_arg)->required();

    auto* derive = app.add_subcommand(
        "derive", "enumerate irreducible transformations as explicit rules");
    derive->add_option("--prs", prs_arg)->required();
    derive->add_option("--max-len", max_len)->required();

    auto* verify =
        app.add_subcommand("verify-paper", "run the bundled verification suite");
    verify->add_option("--budget", budget_arg,
                       "zero, quick, default, or high-memory")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    const SearchLimits limits = global.limits();
    const Parallelism parallelism = global.parallelism();

    if (count->parsed()) {
        OrderedAlphabet alphabet(alphabet_arg);
        Word w = word_arg(alphabet, word1_arg);
        Word u = word_arg(alphabet, pattern_arg);
        std::uint64_t result = count_subword(w, u);
        if (global.json_output)
            print(json{{"alphabet", alphabet.glyphs()},
                       {"word", word_json(alphabet, w)},
                       {"pattern", word_json(alphabet, u)},
                       {"count", result}});
        else
            std::cout << result << "\n";
        return kOk;
    }

    if (matrix->parsed()) {
        OrderedAlphabet alphabet(alphabet_arg);
        Word w = word_arg(alphabet, word1_arg);
        ParikhMatrix m = parikh_matrix(alphabet, w);
        if (global.json_output)
            print(json{{"alphabet", alphabet.glyphs()},
                       {"word", word_json(alphabet, w)},
                       {"matrix", json::parse(to_json(m))}});
        else
            std::cout << format_matrix(m);
        return kOk;
    }

    if (equiv->parsed()) {
        OrderedAlphabet alphabet(alphabet_arg);
        Word w = word_arg(alphabet, word1_arg);
        Word w2 = word_arg(alphabet, word2_arg);
        bool equal = m_equivalent(alphabet, w, w2);
        if (global.json_output)
            print(json{{"alphabet", alphabet.glyphs()},
                       {"word", word_json(alphabet, w)},
                       {"other", word_json(alphabet, w2)},
                       {"equivalent", equal}});
        else
            std::cout << (equal ? "true" : "false") << "\n";
        return equal ? kOk : kViolated;
    }

    if (neighbors->parsed()) {
        ThueSystem system = load_thue_system(system_arg, global.from_file);
        const OrderedAlphabet& alphabet = system.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        std::vector<DirectStep> steps = direct_neighbors(system, w);
        if (global.json_output) {
            json out{{"word", word_json(alphabet, w)}, {"steps", json::array()}};
            for (const DirectStep& step : steps)
                out["steps"].push_back(step_json(alphabet, step));
            print(out);
        } else {
            for (const DirectStep& step : steps)
                std::cout << render_word(alphabet, step.result) << "  (rule "
                          << step.rule_id << ", " << to_string(step.direction)
                          << ", pos " << step.position << ", infix \""
                          << render_word(alphabet, step.infix) << "\")\n";
        }
        return kOk;
    }

    if (dist_cmd->parsed()) {
        ThueSystem system = load_thue_system(system_arg, global.from_file);
        const OrderedAlphabet& alphabet = system.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        Word w2 = word_arg(alphabet, word2_arg);
        auto d = dist(system, w, w2, limits);
        if (global.json_output) {
            json out{{"word", word_json(alphabet, w)},
                     {"other", word_json(alphabet, w2)}};
            if (d)
                out["distance"] = *d;
            else
                out["reachable"] = false;
            print(out);
        } else {
            if (d)
                std::cout << *d << "\n";
            else
                std::cout << "unreachable\n";
        }
        return d ? kOk : kViolated;
    }

    if (class_cmd->parsed()) {
        ThueSystem system = load_thue_system(system_arg, global.from_file);
        const OrderedAlphabet& alphabet = system.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        std::vector<Word> cls = r_class(system, w, limits);
        if (global.json_output) {
            json words = json::array();
            for (const Word& member : cls)
                words.push_back(word_json(alphabet, member));
            print(json{{"word", word_json(alphabet, w)},
                       {"size", cls.size()},
                       {"words", std::move(words)}});
        } else {
            for (const Word& member : cls)
                std::cout << render_word(alphabet, member) << "\n";
        }
        return kOk;
    }

    if (audit->parsed()) {
        json out{{"kind", audit_kind}, {"max_len", max_len}};
        bool holds = false;
        std::optional<std::pair<std::string, std::string>> pair_witness;
        std::optional<json> step_witness;

        if (audit_prs_flag) {
            ParikhRewritingSystem prs = load_prs(system_arg, global.from_file);
            const OrderedAlphabet& alphabet = prs.alphabet();
            PairReport report =
                audit_kind == "sound"
                    ? audit_prs_sound(prs, max_len, limits, parallelism)
                    : audit_prs_complete(prs, max_len, limits, parallelism);
            holds = report.holds;
            if (report.witness)
                pair_witness = {render_word(alphabet, report.witness->first),
                                render_word(alphabet, report.witness->second)};
        } else {
            ThueSystem system = load_thue_system(system_arg, global.from_file);
            const OrderedAlphabet& alphabet = system.alphabet();
            if (audit_kind == "sound") {
                SoundnessReport report =
                    audit_parikh_sound(system, max_len, limits, parallelism);
                holds = report.holds;
                if (report.witness)
                    step_witness = step_json(alphabet, *report.witness);
            } else {
                PairReport report =
                    audit_parikh_complete(system, max_len, limits, parallelism);
                holds = report.holds;
                if (report.witness)
                    pair_witness = {
                        render_word(alphabet, report.witness->first),
                        render_word(alphabet, report.witness->second)};
            }
        }

        if (global.json_output) {
            out["holds"] = holds;
            if (pair_witness)
                out["witness"] = json{{"first", pair_witness->first},
                                      {"second", pair_witness->second}};
            else if (step_witness)
                out["witness"] = *step_witness;
            else
                out["witness"] = nullptr;
            print(out);
        } else {
            std::cout << (holds ? "holds" : "fails") << "\n";
            if (pair_witness)
                std::cout << "witness: " << pair_witness->first << " / "
                          << pair_witness->second << "\n";
            else if (step_witness)
                std::cout << "witness: " << step_witness->dump() << "\n";
        }
        return holds ? kOk : kViolated;
    }

    if (irr->parsed()) {
        ParikhRewritingSystem prs = load_prs(prs_arg, global.from_file);
        const OrderedAlphabet& alphabet = prs.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        Word w2 = word_arg(alphabet, word2_arg);
        IrreducibilityResult result = irreducible(prs, w, w2, limits);
        if (global.json_output) {
            json out{{"word", word_json(alphabet, w)},
                     {"other", word_json(alphabet, w2)},
                     {"irreducible", result.irreducible}};
            if (result.order)
                out["order"] = *result.order;
            if (result.splitter)
                out["splitter"] = render_word(alphabet, *result.splitter);
            print(out);
        } else {
            if (result.irreducible)
                std::cout << "irreducible, order " << *result.order << "\n";
            else
                std::cout << "reducible, splitter "
                          << render_word(alphabet, *result.splitter) << "\n";
        }
        return result.irreducible ? kOk : kViolated;
    }

    if (decompose_cmd->parsed()) {
        ParikhRewritingSystem prs = load_prs(prs_arg, global.from_file);
        const OrderedAlphabet& alphabet = prs.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        Word w2 = word_arg(alphabet, word2_arg);
        std::vector<IrreducibleStep> chain = decompose(prs, w, w2, limits);
        std::uint64_t total = 0;
        for (const IrreducibleStep& step : chain)
            total += step.order;
        if (global.json_output)
            print(json{{"word", word_json(alphabet, w)},
                       {"other", word_json(alphabet, w2)},
                       {"steps", chain_json(alphabet, chain)},
                       {"order_sum", total}});
        else {
            for (const IrreducibleStep& step : chain)
                std::cout << render_word(alphabet, step.source) << " => "
                          << render_word(alphabet, step.target) << "  (order "
                          << step.order << ")\n";
            std::cout << "order sum " << total << "\n";
        }
        return kOk;
    }

    if (path->parsed()) {
        ParikhRewritingSystem prs = load_prs(prs_arg, global.from_file);
        const OrderedAlphabet& alphabet = prs.alphabet();
        Word w = word_arg(alphabet, word1_arg);
        Word w2 = word_arg(alphabet, word2_arg);
        auto chain = irreducible_graph_path(prs, w, w2, max_order, limits);
        if (global.json_output) {
            json out{{"word", word_json(alphabet, w)},
                     {"other", word_json(alphabet, w2)},
                     {"max_order", max_order},
                     {"found", chain.has_value()}};
            if (chain)
                out["steps"] = chain_json(alphabet, *chain);
            print(out);
        } else {
            if (!chain)
                std::cout << "none\n";
            else
                for (const IrreducibleStep& step : *chain)
                    std::cout << render_word(alphabet, step.source) << " => "
                              << render_word(alphabet, step.target)
                              << "  (order " << step.order << ")\n";
        }
        return chain ? kOk : kViolated;
    }

    if (derive->parsed()) {
        ParikhRewritingSystem prs = load_prs(prs_arg, global.from_file);
        const OrderedAlphabet& alphabet = prs.alphabet();
        DerivedSystem derived =
            derive_thue_system(prs, max_len, limits, parallelism);
        if (global.json_output) {
            json rules = json::array();
            for (const auto& [lhs, rhs] : derived.pairs)
                rules.push_back(json::array({render_word(alphabet, lhs),
                                             render_word(alphabet, rhs)}));
            json histogram = json::object();
            for (const auto& [order, count_] : derived.order_histogram)
                histogram[std::to_string(order)] = count_;
            print(json{{"alphabet", alphabet.glyphs()},
                       {"rules", std::move(rules)},
                       {"order_histogram", std::move(histogram)}});
        } else {
            for (const auto& [lhs, rhs] : derived.pairs)
                std::cout << render_word(alphabet, lhs) << " <-> "
                          << render_word(alphabet, rhs) << "\n";
            std::cout << "orders:";
            for (const auto& [order, count_] : derived.order_histogram)
                std::cout << " " << order << "x" << count_;
            std::cout << "\n";
        }
        return kOk;
    }

    if (verify->parsed()) {
        SuiteOptions options;
        options.profile = parse_budget(budget_arg);
        options.limits = limits;
        options.parallelism = parallelism;
        SuiteReport report = run_verification_suite(options);
        if (global.json_output)
            std::cout << to_json(report, 2) << "\n";
        else
            std::cout << format_report(report);
        return report.exit_code();
    }

    return kInvalidInput;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const NotRelatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}
