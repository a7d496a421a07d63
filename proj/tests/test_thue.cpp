#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "parikh/audit.hpp"
#include "parikh/errors.hpp"
#include "parikh/mclass.hpp"
#include "parikh/presets.hpp"
#include "parikh/search.hpp"
#include "parikh/serialize.hpp"

using namespace parikh;
using testutil::wd;

namespace {

Word apply_step(const DirectStep& step, const ThueSystem& system)
{
    // re-derive the result from (rule, direction, position, infix)
    const RuleFamily* family = nullptr;
    for (const RuleFamily& f : system.rules())
        if (f.id == step.rule_id)
            family = &f;
    REQUIRE(family != nullptr);
    const RewritePattern& from = step.direction == StepDirection::forward
                                     ? family->left
                                     : family->right;
    const RewritePattern& to = step.direction == StepDirection::forward
                                   ? family->right
                                   : family->left;
    std::size_t window =
        from.prefix.size() + step.infix.size() + from.suffix.size();
    Word out = step.source.subword(0, step.position);
    out.append(to.prefix);
    out.append(step.infix);
    out.append(to.suffix);
    out.append(step.source.subword(step.position + window,
                                   step.source.size() - step.position - window));
    return out;
}

} // namespace

TEST_CASE("system validation names the offending rule")
{
    OrderedAlphabet ab("ab");
    CHECK_THROWS_AS(ThueSystem(ab, {}), std::invalid_argument);

    RuleFamily degenerate;
    degenerate.id = "same";
    degenerate.left.prefix = wd(ab, "ab");
    degenerate.right.prefix = wd(ab, "ab");
    CHECK_THROWS_WITH_AS(ThueSystem(ab, {degenerate}),
                         "rule 'same': the two sides of a finite rule must differ",
                         std::invalid_argument);

    RuleFamily lopsided;
    lopsided.id = "lopsided";
    lopsided.left = RewritePattern{wd(ab, "ab"), ab.parse_subset("ab"), wd(ab, "ba")};
    lopsided.right.prefix = wd(ab, "ba");
    CHECK_THROWS_AS(ThueSystem(ab, {lopsided}), std::invalid_argument);

    RuleFamily dup1, dup2;
    dup1.id = dup2.id = "dup";
    dup1.left.prefix = wd(ab, "ab");
    dup1.right.prefix = wd(ab, "ba");
    dup2.left.prefix = wd(ab, "aab");
    dup2.right.prefix = wd(ab, "baa");
    CHECK_THROWS_AS(ThueSystem(ab, {dup1, dup2}), std::invalid_argument);
}

TEST_CASE("finite-rule patterns canonicalize prefix+suffix")
{
    OrderedAlphabet ab("ab");
    RuleFamily split;
    split.id = "split";
    split.left.prefix = wd(ab, "a");
    split.left.suffix = wd(ab, "b");
    split.right.prefix = wd(ab, "ba");
    ThueSystem system(ab, {split});
    CHECK(system.rules()[0].left.prefix == wd(ab, "ab"));
    CHECK(system.rules()[0].left.suffix.empty());
}

TEST_CASE("direct neighbors of the binary swap")
{
    ThueSystem swap = thue_preset("binary-swap");
    OrderedAlphabet ab("ab");

    std::vector<Word> n = neighbor_words(swap, wd(ab, "ab"));
    CHECK(n == std::vector<Word>{wd(ab, "ba")});

    std::vector<DirectStep> steps = direct_neighbors(swap, wd(ab, "ab"));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].rule_id == "ab-ba");
    CHECK(steps[0].direction == StepDirection::forward);
    CHECK(steps[0].position == 0);
    CHECK(steps[0].infix.empty());
    CHECK(steps[0].result == wd(ab, "ba"));
}

TEST_CASE("parametric families match every admissible infix")
{
    ThueSystem family = thue_preset("binary-ex1506b");
    OrderedAlphabet ab("ab");

    std::vector<Word> n = neighbor_words(family, wd(ab, "abba"));
    CHECK(n == std::vector<Word>{wd(ab, "baab")});

    // ab·ab·ba matches with x = ab and with x = lambda at position 2
    std::vector<DirectStep> steps = direct_neighbors(family, wd(ab, "ababba"));
    bool with_infix = false, without = false;
    for (const DirectStep& step : steps) {
        if (step.position == 0 && step.infix == wd(ab, "ab"))
            with_infix = true;
        if (step.position == 2 && step.infix.empty())
            without = true;
        CHECK(apply_step(step, family) == step.result);
    }
    CHECK(with_infix);
    CHECK(without);
}

TEST_CASE("salomaa neighbors include the transposition")
{
    ThueSystem salomaa = thue_preset("salomaa");
    OrderedAlphabet abc("abc");
    std::vector<Word> n = neighbor_words(salomaa, wd(abc, "ac"));
    CHECK(std::find(n.begin(), n.end(), wd(abc, "ca")) != n.end());
}

TEST_CASE("neighbor relation is symmetric")
{
    std::mt19937_64 rng(21);
    for (const char* name : {"binary-swap", "binary-ex1506b", "salomaa",
                             "ternary-ex0701c", "binary-R1R2"}) {
        ThueSystem system = thue_preset(name);
        std::size_t size = system.alphabet().size();
        for (int trial = 0; trial < 40; ++trial) {
            Word w = testutil::random_word(rng, size, 7);
            for (const Word& n : neighbor_words(system, w)) {
                std::vector<Word> back = neighbor_words(system, n);
                CHECK(std::binary_search(back.begin(), back.end(), w));
            }
        }
    }
}

TEST_CASE("steps of vector-preserving systems preserve the vector")
{
    std::mt19937_64 rng(22);
    ThueSystem salomaa = thue_preset("salomaa");
    for (int trial = 0; trial < 60; ++trial) {
        Word w = testutil::random_word(rng, 3, 9);
        for (const Word& n : neighbor_words(salomaa, w))
            CHECK(parikh_vector(n, 3) == parikh_vector(w, 3));
    }
}

TEST_CASE("reachability")
{
    OrderedAlphabet abc("abc");
    OrderedAlphabet ab("ab");

    ThueSystem restricted = thue_preset("ternary-ex0701c");
    CHECK(!transforms(restricted, wd(abc, "abbcbacb"), wd(abc, "bacbabbc")));

    ThueSystem family = thue_preset("binary-ex1506b");
    CHECK(transforms(family, wd(ab, "abba"), wd(ab, "baab")));

    CHECK(transforms(family, wd(ab, "abab"), wd(ab, "abab")));
}

TEST_CASE("distances")
{
    OrderedAlphabet abc("abc");
    OrderedAlphabet ab("ab");

    ThueSystem salomaa = thue_preset("salomaa");
    CHECK(dist(salomaa, wd(abc, "abbcacb"), wd(abc, "baacbbc")) == 3);
    CHECK(dist(salomaa, wd(abc, "abbcacb"), wd(abc, "abbcacb")) == 0);

    ThueSystem r1r2 = thue_preset("binary-R1R2");
    CHECK(dist(r1r2, wd(ab, "bbaaabaab"), wd(ab, "abbabaaba")) == 3);

    ThueSystem restricted = thue_preset("ternary-ex0701c");
    CHECK(!dist(restricted, wd(abc, "abbcbacb"), wd(abc, "bacbabbc")).has_value());
}

TEST_CASE("bidirectional and plain breadth-first distances agree")
{
    std::mt19937_64 rng(23);
    for (const char* name : {"binary-swap", "salomaa", "binary-R1R2"}) {
        ThueSystem system = thue_preset(name);
        std::size_t size = system.alphabet().size();
        for (int trial = 0; trial < 30; ++trial) {
            Word w = testutil::random_word(rng, size, 7);
            Word v = Word(w); // random anagram: shuffle
            {
                std::string s = v.indices();
                std::shuffle(s.begin(), s.end(), rng);
                v = Word(std::move(s));
            }
            CHECK(dist(system, w, v) == dist_unidirectional(system, w, v));
        }
    }
}

TEST_CASE("distance is a metric on sampled class triples")
{
    std::mt19937_64 rng(24);
    ThueSystem salomaa = thue_preset("salomaa");
    OrderedAlphabet abc("abc");
    int sampled = 0;
    while (sampled < 15) {
        Word w = testutil::random_word(rng, 3, 6);
        std::vector<Word> cls = r_class(salomaa, w);
        if (cls.size() < 3)
            continue;
        ++sampled;
        for (int k = 0; k < 5; ++k) {
            const Word& x = cls[rng() % cls.size()];
            const Word& y = cls[rng() % cls.size()];
            const Word& z = cls[rng() % cls.size()];
            auto dxy = dist(salomaa, x, y);
            auto dyx = dist(salomaa, y, x);
            auto dyz = dist(salomaa, y, z);
            auto dxz = dist(salomaa, x, z);
            REQUIRE(dxy.has_value());
            REQUIRE(dyz.has_value());
            REQUIRE(dxz.has_value());
            CHECK(*dxy == *dyx);                  // symmetry
            CHECK((*dxy == 0) == (x == y));       // identity of indiscernibles
            CHECK(*dxz <= *dxy + *dyz);           // triangle inequality
        }
    }
}

TEST_CASE("transforms agrees with dist presence")
{
    std::mt19937_64 rng(25);
    ThueSystem r1r2 = thue_preset("binary-R1R2");
    for (int trial = 0; trial < 40; ++trial) {
        Word w = testutil::random_word(rng, 2, 7);
        Word v = testutil::random_word(rng, 2, 7);
        CHECK(transforms(r1r2, w, v) == dist(r1r2, w, v).has_value());
    }
}

TEST_CASE("rewrite classes")
{
    OrderedAlphabet ab("ab");
    ThueSystem swap = thue_preset("binary-swap");
    CHECK(r_class(swap, wd(ab, "ab")) ==
          std::vector<Word>{wd(ab, "ab"), wd(ab, "ba")});

    OrderedAlphabet abc("abc");
    ThueSystem restricted = thue_preset("ternary-ex0701c");
    std::vector<Word> cls = r_class(restricted, wd(abc, "abbcbacb"));
    CHECK(!std::binary_search(cls.begin(), cls.end(), wd(abc, "bacbabbc")));
    CHECK(cls.size() <= multinomial(parikh_vector(wd(abc, "abbcbacb"), 3)));

    SearchLimits tight;
    tight.max_visited = 3;
    CHECK_THROWS_AS(r_class(swap, wd(ab, "aabbab"), tight), CapExceededError);
}

TEST_CASE("soundness audits")
{
    ThueSystem family = thue_preset("binary-ex1506b");
    CHECK(audit_parikh_sound(family, 8).holds);

    ThueSystem salomaa = thue_preset("salomaa");
    SoundnessReport report = audit_parikh_sound(salomaa, 6);
    CHECK(!report.holds);
    REQUIRE(report.witness.has_value());
    OrderedAlphabet abc("abc");
    CHECK(report.witness->source == wd(abc, "bcacb"));
    CHECK(report.witness->result == wd(abc, "cbabc"));
    CHECK(!m_equivalent(abc, report.witness->source, report.witness->result));

    // abcba -> bacab is another genuine violation, visible in the
    // abc-count; it sits in a later class than the reported witness
    bool found = false;
    for (const DirectStep& step : direct_neighbors(salomaa, wd(abc, "abcba")))
        found = found || step.result == wd(abc, "bacab");
    CHECK(found);
    CHECK(count_subword(wd(abc, "abcba"), wd(abc, "abc")) == 1);
    CHECK(count_subword(wd(abc, "bacab"), wd(abc, "abc")) == 0);

    ParikhRewritingSystem allswaps = prs_preset("ternary-allswaps");
    SoundnessReport swaps = audit_parikh_sound(allswaps.system(), 4);
    CHECK(!swaps.holds);
    REQUIRE(swaps.witness.has_value());
    CHECK(!m_equivalent(abc, swaps.witness->source, swaps.witness->result));
    // ab -> ba changes the ab-count, one of the violations the audit hits
    CHECK(count_subword(wd(abc, "ab"), wd(abc, "ab")) !=
          count_subword(wd(abc, "ba"), wd(abc, "ab")));
}

TEST_CASE("completeness audits")
{
    ThueSystem family = thue_preset("binary-ex1506b");
    CHECK(audit_parikh_complete(family, 8).holds);

    OrderedAlphabet abc("abc");
    ThueSystem restricted = thue_preset("ternary-ex0701c");
    PairReport report = audit_parikh_complete(restricted, 8);
    CHECK(!report.holds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first == wd(abc, "abbcbacb"));
    CHECK(report.witness->second == wd(abc, "bacbabbc"));
}

TEST_CASE("systems that change word length")
{
    OrderedAlphabet abc("abc");
    RuleFamily collapse;
    collapse.id = "ab-c";
    collapse.left.prefix = wd(abc, "ab");
    collapse.right.prefix = wd(abc, "c");
    ThueSystem system(abc, {collapse});
    CHECK(!system.vector_preserving());

    CHECK(r_class(system, wd(abc, "ab")) ==
          std::vector<Word>{wd(abc, "ab"), wd(abc, "c")});
    CHECK(dist(system, wd(abc, "ab"), wd(abc, "c")) == 1);

    // growing rule: one side of the search explodes, but the exhausted
    // side still settles unreachability before any cap is hit
    RuleFamily grow;
    grow.id = "a-aa";
    grow.left.prefix = wd(abc, "a");
    grow.right.prefix = wd(abc, "aa");
    ThueSystem growing(abc, {grow});
    CHECK(dist(growing, wd(abc, "a"), wd(abc, "aaaa")) == 3);
    CHECK(!dist(growing, wd(abc, "a"), wd(abc, "b")).has_value());
    SearchLimits tight;
    tight.max_visited = 50;
    CHECK_THROWS_AS(dist(growing, wd(abc, "a"), wd(abc, "ba"), tight),
                    CapExceededError);
}

TEST_CASE("completeness audits on non-preserving systems")
{
    // letter-flipping rules change the Parikh vector but keep classes
    // finite, so the general audit branch can settle them
    OrderedAlphabet ab("ab");
    RuleFamily flip_a, flip_b;
    flip_a.id = "ab-bb";
    flip_a.left.prefix = wd(ab, "ab");
    flip_a.right.prefix = wd(ab, "bb");
    flip_b.id = "ba-bb";
    flip_b.left.prefix = wd(ab, "ba");
    flip_b.right.prefix = wd(ab, "bb");

    ThueSystem bridged(ab, {flip_a, flip_b});
    CHECK(!bridged.vector_preserving());
    CHECK(audit_parikh_complete(bridged, 4).holds);

    // with only one flip, abba and baab fall into different classes
    ThueSystem broken(ab, {flip_a});
    PairReport report = audit_parikh_complete(broken, 4);
    CHECK(!report.holds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first == wd(ab, "abba"));
    CHECK(report.witness->second == wd(ab, "baab"));
}

TEST_CASE("a finite Parikh sound system is not complete")
{
    OrderedAlphabet ab("ab");
    RuleFamily rule;
    rule.id = "abba-baab";
    rule.left.prefix = wd(ab, "abba");
    rule.right.prefix = wd(ab, "baab");
    ThueSystem finite(ab, {rule});

    CHECK(audit_parikh_sound(finite, 8).holds);
    PairReport report = audit_parikh_complete(finite, 8);
    CHECK(!report.holds);
    CHECK(report.witness.has_value());
}

TEST_CASE("class graphs agree with the word-level searches")
{
    ThueSystem salomaa = thue_preset("salomaa");
    OrderedAlphabet abc("abc");
    Word w = wd(abc, "abbcacb");
    ClassGraph graph(salomaa, parikh_vector(w, 3));
    REQUIRE(graph.size() == multinomial(parikh_vector(w, 3)));

    std::uint32_t src = *graph.index_of(w);
    const std::vector<std::int32_t>& d = graph.distances_from(src);
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 25; ++trial) {
        std::uint32_t target = rng() % graph.size();
        auto expected = dist(salomaa, w, graph.word(target));
        if (expected)
            CHECK(d[target] == static_cast<std::int32_t>(*expected));
        else
            CHECK(d[target] == -1);
    }

    // depth-limited maps agree on the covered ball
    std::vector<std::int32_t> ball = graph.bfs_limited(src, 2);
    for (std::uint32_t i = 0; i < graph.size(); ++i)
        if (d[i] >= 0 && d[i] <= 2)
            CHECK(ball[i] == d[i]);
        else
            CHECK(ball[i] == -1);

    ThueSystem nonpreserving(
        abc, {[&] {
            RuleFamily f;
            f.id = "grow";
            f.left.prefix = wd(abc, "a");
            f.right.prefix = wd(abc, "aa");
            return f;
        }()});
    CHECK_THROWS_AS(ClassGraph(nonpreserving, ParikhVector{1, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("audits are indifferent to the worker count")
{
    ThueSystem restricted = thue_preset("ternary-ex0701c");
    PairReport serial = audit_parikh_complete(restricted, 6, {}, {1});
    PairReport parallel = audit_parikh_complete(restricted, 6, {}, {4});
    CHECK(serial.holds == parallel.holds);
    CHECK(serial.witness == parallel.witness);
    CHECK(serial.stats.words == parallel.stats.words);

    ThueSystem salomaa = thue_preset("salomaa");
    SoundnessReport s1 = audit_parikh_sound(salomaa, 6, {}, {1});
    SoundnessReport s3 = audit_parikh_sound(salomaa, 6, {}, {3});
    CHECK(!s1.holds);
    CHECK(s1.witness == s3.witness);
    CHECK(s1.stats.words == s3.stats.words);
    CHECK(s1.stats.steps == s3.stats.steps);
}
