#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "parikh/constructions.hpp"
#include "parikh/errors.hpp"
#include "parikh/irreducible.hpp"
#include "parikh/mclass.hpp"
#include "parikh/presets.hpp"
#include "parikh/prs.hpp"
#include "parikh/search.hpp"

using namespace parikh;
using testutil::wd;

namespace {

DirectStep step_to(const ThueSystem& system, const Word& from, const Word& to)
{
    for (DirectStep& step : direct_neighbors(system, from))
        if (step.result == to)
            return step;
    FAIL("no direct step between the given words");
    return {};
}

} // namespace

TEST_CASE("counter validation")
{
    OrderedAlphabet abc("abc");
    CHECK(Counter::parse(abc, "ab").word() == wd(abc, "ab"));
    CHECK(Counter::parse(abc, "abc").word() == wd(abc, "abc"));
    CHECK(Counter::parse(abc, "bc").lo() == 1);
    CHECK_THROWS_WITH_AS(Counter::parse(abc, "a"),
                         "counter 'a' must have at least two letters",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Counter::parse(abc, "ac"),
        "counter 'ac' is not a contiguous ascending run of the alphabet",
        std::invalid_argument);
    CHECK_THROWS_AS(Counter::parse(abc, "ba"), std::invalid_argument);
}

TEST_CASE("system validation")
{
    OrderedAlphabet ab("ab");
    OrderedAlphabet a("a");

    RuleFamily unbalanced;
    unbalanced.id = "drop";
    unbalanced.left.prefix = wd(ab, "ab");
    unbalanced.right.prefix = wd(ab, "a");
    CHECK_THROWS_WITH_AS(
        ParikhRewritingSystem(ThueSystem(ab, {unbalanced}), {}),
        "rule 'drop' does not preserve the Parikh vector",
        std::invalid_argument);

    RuleFamily swap;
    swap.id = "swap";
    swap.left.prefix = wd(ab, "ab");
    swap.right.prefix = wd(ab, "ba");
    CHECK_NOTHROW(ParikhRewritingSystem(ThueSystem(ab, {swap}), {}));
}

TEST_CASE("constrained transformation relation")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    OrderedAlphabet ab("ab");

    // reachable but counter-blocked
    CHECK(count_subword(wd(ab, "aabb"), wd(ab, "ab")) == 4);
    CHECK(count_subword(wd(ab, "abab"), wd(ab, "ab")) == 3);
    CHECK(transforms(swap.system(), wd(ab, "aabb"), wd(ab, "abab")));
    CHECK(!prs_transforms(swap, wd(ab, "aabb"), wd(ab, "abab")));

    CHECK(prs_transforms(swap, wd(ab, "abba"), wd(ab, "baab")));
    CHECK(prs_transforms(swap, wd(ab, "abba"), wd(ab, "abba")));

    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    OrderedAlphabet abc("abc");
    CHECK(prs_transforms(salomaa, wd(abc, "aabcbaaaccab"),
                         wd(abc, "baacaaabccba")));
}

TEST_CASE("constrained relation is an equivalence on bounded samples")
{
    ParikhRewritingSystem r1r2 = prs_preset("binary-R1R2-ab");
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Word u = testutil::random_word(rng, 2, 6);
        Word v = testutil::random_word(rng, 2, 6);
        Word w = testutil::random_word(rng, 2, 6);
        CHECK(prs_transforms(r1r2, u, u));
        CHECK(prs_transforms(r1r2, u, v) == prs_transforms(r1r2, v, u));
        if (prs_transforms(r1r2, u, v) && prs_transforms(r1r2, v, w))
            CHECK(prs_transforms(r1r2, u, w));
        if (prs_transforms(r1r2, u, v))
            CHECK(transforms(r1r2.system(), u, v));
    }
}

TEST_CASE("counters are conserved across M-equivalence")
{
    // every counter is a Parikh matrix entry, so M-equivalent words agree
    // on all counters; the completeness audit relies on this
    OrderedAlphabet abc("abc");
    std::mt19937_64 rng(32);
    std::vector<Counter> counters{Counter::parse(abc, "ab"),
                                  Counter::parse(abc, "bc"),
                                  Counter::parse(abc, "abc")};
    int nontrivial = 0;
    for (int trial = 0; trial < 300 && nontrivial < 10; ++trial) {
        Word w = testutil::random_word(rng, 3, 7);
        std::vector<Word> cls = m_class(abc, w);
        if (cls.size() > 1)
            ++nontrivial;
        for (const Word& v : cls)
            for (const Counter& c : counters)
                CHECK(count_subword(w, c.word()) == count_subword(v, c.word()));
    }
    CHECK(nontrivial >= 10);
}

TEST_CASE("a sound and complete system matches M-equivalence at the bound")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    REQUIRE(audit_prs_sound(swap, 6).holds);
    REQUIRE(audit_prs_complete(swap, 6).holds);

    OrderedAlphabet ab("ab");
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        Word u = testutil::random_word(rng, 2, 6);
        Word v = testutil::random_word(rng, 2, 6);
        CHECK(prs_transforms(swap, u, v) == m_equivalent(ab, u, v));
    }
}

TEST_CASE("counter deltas")
{
    ThueSystem salomaa = thue_preset("salomaa");
    OrderedAlphabet abc("abc");
    Counter abc_counter = Counter::parse(abc, "abc");

    CHECK(counter_delta(step_to(salomaa, wd(abc, "abbcacb"), wd(abc, "abcbabc")),
                        abc_counter) == 1);
    CHECK(counter_delta(step_to(salomaa, wd(abc, "ac"), wd(abc, "ca")),
                        abc_counter) == 0);
    CHECK(counter_delta(step_to(salomaa, wd(abc, "abcba"), wd(abc, "bacab")),
                        abc_counter) == -1);
}

TEST_CASE("soundness and completeness audits on the presets")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    CHECK(audit_prs_sound(swap, 8).holds);
    CHECK(audit_prs_complete(swap, 8).holds);

    ParikhRewritingSystem allswaps = prs_preset("ternary-allswaps");
    CHECK(audit_prs_sound(allswaps, 6).holds);
    CHECK(audit_prs_complete(allswaps, 6).holds);
}

TEST_CASE("singleton-intersection subsystem is not complete")
{
    OrderedAlphabet ab("ab");
    ParikhRewritingSystem prs(
        ThueSystem(ab, {binary_triple_rules_abb()[0], binary_triple_rules_baa()[0]}),
        {Counter::parse(ab, "ab")});
    CHECK(audit_prs_sound(prs, 6).holds);

    PairReport report = audit_prs_complete(prs, 4);
    CHECK(!report.holds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first == wd(ab, "abba"));
    CHECK(report.witness->second == wd(ab, "baab"));
}

TEST_CASE("irreducibility verdicts")
{
    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    OrderedAlphabet abc("abc");

    IrreducibilityResult one = irreducible(salomaa, wd(abc, "ac"), wd(abc, "ca"));
    CHECK(one.irreducible);
    CHECK(one.order == 1u);

    IrreducibilityResult two =
        irreducible(salomaa, wd(abc, "abbcacb"), wd(abc, "bacabbc"));
    CHECK(two.irreducible);
    CHECK(two.order == 2u);

    IrreducibilityResult three =
        irreducible(salomaa, wd(abc, "aabcbaaaccab"), wd(abc, "baacaaabccba"));
    CHECK(three.irreducible);
    CHECK(three.order == 3u);

    ParikhRewritingSystem r1r2 = prs_preset("binary-R1R2-ab");
    OrderedAlphabet ab("ab");
    IrreducibilityResult binary =
        irreducible(r1r2, wd(ab, "bbaaabaab"), wd(ab, "abbabaaba"));
    CHECK(binary.irreducible);
    CHECK(binary.order == 3u);
}

TEST_CASE("reducible transformations expose a splitter")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    OrderedAlphabet ab("ab");
    // distance 4 between abbaab..? use doubled pair: abba->baab twice apart
    Word w = wd(ab, "abbaabba");
    Word v = wd(ab, "baabbaab");
    IrreducibilityResult r = irreducible(swap, w, v);
    CHECK(!r.irreducible);
    REQUIRE(r.splitter.has_value());
    // the splitter is counter-equal, strictly between, and additive
    CHECK(prs_transforms(swap, w, *r.splitter));
    CHECK(prs_transforms(swap, *r.splitter, v));
    auto d = dist(swap.system(), w, v);
    auto d1 = dist(swap.system(), w, *r.splitter);
    auto d2 = dist(swap.system(), *r.splitter, v);
    CHECK(*d1 + *d2 == *d);
}

TEST_CASE("irreducibility preconditions are errors")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    OrderedAlphabet ab("ab");
    CHECK_THROWS_AS(irreducible(swap, wd(ab, "ab"), wd(ab, "ab")),
                    NotRelatedError);
    CHECK_THROWS_AS(irreducible(swap, wd(ab, "aabb"), wd(ab, "abab")),
                    NotRelatedError); // counters differ
    CHECK_THROWS_AS(irreducible(swap, wd(ab, "ab"), wd(ab, "aabb")),
                    NotRelatedError); // different vectors
    CHECK_THROWS_AS(decompose(swap, wd(ab, "aabb"), wd(ab, "abab")),
                    NotRelatedError);
    CHECK_THROWS_AS(
        irreducible_graph_path(swap, wd(ab, "aabb"), wd(ab, "abab"), 2),
        NotRelatedError);
}

TEST_CASE("decomposition chains are exact")
{
    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    OrderedAlphabet abc("abc");

    CHECK(decompose(salomaa, wd(abc, "abbcacb"), wd(abc, "abbcacb")).empty());

    // already irreducible: one step
    std::vector<IrreducibleStep> single =
        decompose(salomaa, wd(abc, "ac"), wd(abc, "ca"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].order == 1);

    // the worked example: orders must sum to dist = 3
    Word w = wd(abc, "abbcacb");
    Word v = wd(abc, "baacbbc");
    std::vector<IrreducibleStep> chain = decompose(salomaa, w, v);
    REQUIRE(!chain.empty());
    CHECK(chain.front().source == w);
    CHECK(chain.back().target == v);
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        total += chain[i].order;
        if (i > 0)
            CHECK(chain[i].source == chain[i - 1].target);
        IrreducibilityResult check =
            irreducible(salomaa, chain[i].source, chain[i].target);
        CHECK(check.irreducible);
        CHECK(check.order == chain[i].order);
    }
    CHECK(total == 3);
    CHECK(dist(salomaa.system(), w, v) == 3);
}

TEST_CASE("decomposition on random related pairs")
{
    ParikhRewritingSystem r1r2 = prs_preset("binary-R1R2-ab");
    std::mt19937_64 rng(33);
    int decomposed = 0;
    for (int trial = 0; trial < 250 && decomposed < 12; ++trial) {
        Word w = testutil::random_word(rng, 2, 7);
        std::vector<Word> cls = r_class(r1r2.system(), w);
        std::vector<std::uint64_t> base = counter_values(r1r2, w);
        std::vector<Word> cell;
        for (const Word& v : cls)
            if (v != w && counter_values(r1r2, v) == base)
                cell.push_back(v);
        if (cell.empty())
            continue;
        const Word& v = cell[rng() % cell.size()];
        ++decomposed;
        std::vector<IrreducibleStep> chain = decompose(r1r2, w, v);
        std::uint32_t total = 0;
        for (const IrreducibleStep& step : chain)
            total += step.order;
        CHECK(total == *dist(r1r2.system(), w, v));
    }
    CHECK(decomposed >= 12);
}

TEST_CASE("bounded-order paths")
{
    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    OrderedAlphabet abc("abc");

    auto self = irreducible_graph_path(salomaa, wd(abc, "abbcacb"),
                                       wd(abc, "abbcacb"), 2);
    REQUIRE(self.has_value());
    CHECK(self->empty());

    auto blocked = irreducible_graph_path(salomaa, wd(abc, "aabcbaaaccab"),
                                          wd(abc, "baacaaabccba"), 2);
    CHECK(!blocked.has_value());

    auto found = irreducible_graph_path(salomaa, wd(abc, "abcbcbacab"),
                                        wd(abc, "bacabcbcba"), 2);
    REQUIRE(found.has_value());
    CHECK(!found->empty());
    CHECK(found->front().source == wd(abc, "abcbcbacab"));
    CHECK(found->back().target == wd(abc, "bacabcbcba"));
    for (std::size_t i = 0; i < found->size(); ++i) {
        const IrreducibleStep& step = (*found)[i];
        CHECK(step.order <= 2);
        if (i > 0)
            CHECK(step.source == (*found)[i - 1].target);
        IrreducibilityResult check =
            irreducible(salomaa, step.source, step.target);
        CHECK(check.irreducible);
        CHECK(check.order == step.order);
    }

    ParikhRewritingSystem r1r2 = prs_preset("binary-R1R2-ab");
    OrderedAlphabet ab("ab");
    auto binary = irreducible_graph_path(r1r2, wd(ab, "bbaaabaab"),
                                         wd(ab, "abbabaaba"), 2);
    CHECK(binary.has_value());
}

TEST_CASE("derived systems")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    DerivedSystem derived = derive_thue_system(swap, 6);

    // every rule is an instance of ab x ba -> ba x ab, orders all two
    REQUIRE(!derived.pairs.empty());
    CHECK(derived.order_histogram.size() == 1);
    CHECK(derived.order_histogram.count(2) == 1);

    // enumerate words of length <= 6 and their family steps
    ThueSystem family = thue_preset("binary-ex1506b");
    std::set<std::pair<Word, Word>> expected;
    OrderedAlphabet ab("ab");
    for (int len = 0; len <= 6; ++len)
        for (int bits = 0; bits < (1 << len); ++bits) {
            Word w;
            for (int i = 0; i < len; ++i)
                w.push_back((bits >> i) & 1);
            for (const DirectStep& step : direct_neighbors(family, w))
                expected.insert(std::minmax(step.source, step.result));
        }
    std::set<std::pair<Word, Word>> actual(derived.pairs.begin(),
                                           derived.pairs.end());
    CHECK(actual == expected);

    // salomaa: the transposition is derived with order one
    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    DerivedSystem ternary = derive_thue_system(salomaa, 6);
    OrderedAlphabet abc("abc");
    CHECK(std::find(ternary.pairs.begin(), ternary.pairs.end(),
                    std::make_pair(wd(abc, "ac"), wd(abc, "ca"))) !=
          ternary.pairs.end());
    CHECK(ternary.order_histogram.at(1) >= 1);
}

TEST_CASE("derived system converts to a Thue system and re-audits")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    ThueSystem derived = derive_thue_system(swap, 6).to_thue_system();
    CHECK(audit_parikh_sound(derived, 6).holds);
    CHECK(audit_parikh_complete(derived, 6).holds);
}

TEST_CASE("derivation is indifferent to the worker count")
{
    ParikhRewritingSystem swap = prs_preset("binary-swap-ab");
    DerivedSystem serial = derive_thue_system(swap, 6, {}, {1});
    DerivedSystem parallel = derive_thue_system(swap, 6, {}, {4});
    CHECK(serial.pairs == parallel.pairs);
    CHECK(serial.order_histogram == parallel.order_histogram);
}

TEST_CASE("high order pair construction")
{
    OrderedAlphabet abc("abc");
    auto [w1, w1b] = high_order_pair(1);
    CHECK(w1 == wd(abc, "abcbaacab"));
    CHECK(w1b == wd(abc, "bacaabcba"));

    auto [w2, w2b] = high_order_pair(2);
    CHECK(w2 == wd(abc, "aabcbaaaccab"));
    CHECK(w2b == wd(abc, "baacaaabccba"));

    ParikhRewritingSystem salomaa = prs_preset("salomaa-abc");
    CHECK(dist(salomaa.system(), w1, w1b) == 2);
    IrreducibilityResult r1 = irreducible(salomaa, w1, w1b);
    CHECK(r1.irreducible);
    CHECK(r1.order == 2u);
}

TEST_CASE("doubling any rule yields an ambiguous pair for each preset")
{
    for (const char* name :
         {"binary-swap-ab", "salomaa-abc", "ternary-allswaps", "binary-R1R2-ab"}) {
        ParikhRewritingSystem prs = prs_preset(name);
        const RuleFamily& rule = prs.system().rules().front();
        // take the x = lambda instance of the first rule
        Word lhs = rule.left.prefix + rule.left.suffix;
        Word rhs = rule.right.prefix + rule.right.suffix;
        std::uint32_t size =
            static_cast<std::uint32_t>(prs.alphabet().size());
        auto [w, w2] = build_ambiguous_pair(lhs, rhs, size);
        CHECK(w != w2);
        CHECK(prs_transforms(prs, w, w2));
    }
}
