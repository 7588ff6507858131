#include <gtest/gtest.h>

#include "gammafuzz/enumerate.hpp"
#include "gammafuzz/error.hpp"
#include "gammafuzz/fuzzy_ops.hpp"
#include "oracles.hpp"

using namespace gammafuzz;

namespace {

Membership m(std::int64_t p, std::int64_t q = 1) { return Membership(p, q); }

struct Case {
    const char* structure;
    const char* chain;
};

const Case cases[] = {{"maxmin2", "0,1"}, {"maxmin2", "0,1/2,1"}, {"trunc3", "0,1"},
                      {"trunc3", "0,1/2,1"}, {"null2", "0,1"},     {"null2", "0,1/2,1"},
                      {"trivial1", "0,1"}};

std::string label(const Case& c) { return std::string(c.structure) + " " + c.chain; }

} // namespace

TEST(Sum, Example) {
    const auto f = oracle::load_fixture("maxmin2");
    const auto& g = *f.structure;
    const FuzzySubset a(g, {m(1), m(1, 2)}), b(g, {m(1), m(1, 3)});
    EXPECT_EQ(sum_oplus(a, b).grades(), (oracle::Grades{m(1), m(1, 2)}));
    EXPECT_EQ(sum_oplus(theta(g), a), a);
}

TEST(Product, Examples) {
    const auto f = oracle::load_fixture("maxmin2");
    const auto& g = *f.structure;
    const FuzzySubset a(g, {m(1), m(1, 2)}), b(g, {m(1), m(1, 3)});
    EXPECT_EQ(gamma_product(a, b).grades(), (oracle::Grades{m(1), m(1, 3)}));

    const auto n = oracle::load_fixture("null2");
    EXPECT_EQ(gamma_product(one(*n.structure), one(*n.structure))[1], m(0));
}

TEST(Compose, Example) {
    const auto f = oracle::load_fixture("maxmin2");
    const auto& g = *f.structure;
    const FuzzySubset a(g, {m(1), m(1, 2)}), b(g, {m(1), m(1, 3)});
    EXPECT_EQ(compose(a, b).grades(), (oracle::Grades{m(1), m(1, 3)}));
    EXPECT_EQ(compose_oracle(a, b, 2).grades(), (oracle::Grades{m(1), m(1, 3)}));
}

TEST(Compose, OneIsLeftIdentityWithLeftUnity) {
    for (const char* name : {"maxmin2", "trunc3", "trivial1"}) {
        const auto f = oracle::load_fixture(name);
        ASSERT_TRUE(f.structure->has_unity(Side::left));
        for (const auto& mu : enumerate_ideals(*f.structure, Chain::parse("0,1/2,1"), IdealKind::left).members) {
            EXPECT_EQ(compose(one(*f.structure), mu), mu) << name << " " << mu.to_string();
        }
    }
}

TEST(Ops, AmbientMismatchThrows) {
    const auto a = oracle::load_fixture("maxmin2");
    const auto b = oracle::load_fixture("null2");
    EXPECT_THROW(sum_oplus(one(*a.structure), one(*b.structure)), AmbientMismatch);
    EXPECT_THROW(gamma_product(one(*a.structure), one(*b.structure)), AmbientMismatch);
    EXPECT_THROW(compose(one(*a.structure), one(*b.structure)), AmbientMismatch);
}

TEST(Oracle, RejectsZeroTerms) {
    const auto f = oracle::load_fixture("maxmin2");
    EXPECT_THROW(compose_oracle(one(*f.structure), one(*f.structure), 0), std::invalid_argument);
}

TEST(Oracle, ThetaComposeThetaIsTheta) {
    for (const char* name : {"maxmin2", "trunc3", "null2", "trivial1"}) {
        const auto f = oracle::load_fixture(name);
        const auto th = theta(*f.structure);
        EXPECT_EQ(compose_oracle(th, th, f.structure->s_size()), th) << name;
    }
}

TEST(Oracle, SingleTermIsTheProduct) {
    for (const auto& c : cases) {
        const auto f = oracle::load_fixture(c.structure);
        const auto fam = enumerate_ideals(*f.structure, Chain::parse(c.chain), IdealKind::left).members;
        for (const auto& a : fam)
            for (const auto& b : fam) EXPECT_EQ(compose_oracle(a, b, 1), gamma_product(a, b)) << label(c);
    }
}

// Every grade vector, not just ideals: the operations must match their
// definitions on arbitrary subsets too.
TEST(Ops, MatchDefinitionsOnAllSubsets) {
    const std::vector<Membership> chain{m(0), m(1, 2), m(1)};
    for (const char* name : {"maxmin2", "trunc3", "null2"}) {
        const auto f = oracle::load_fixture(name);
        const auto& g = *f.structure;
        const auto& t = f.doc.tables;
        std::vector<oracle::Grades> all;
        std::vector<std::size_t> digits(g.s_size(), 0);
        while (true) {
            oracle::Grades mu;
            for (auto d : digits) mu.push_back(chain[d]);
            all.push_back(mu);
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == chain.size()) digits[i++] = 0;
            if (i == digits.size()) break;
        }
        for (const auto& a : all)
            for (const auto& b : all) {
                const FuzzySubset fa(g, a), fb(g, b);
                ASSERT_EQ(sum_oplus(fa, fb).grades(), oracle::sum(t, a, b));
                ASSERT_EQ(gamma_product(fa, fb).grades(), oracle::product(t, a, b));
                ASSERT_EQ(meet(fa, fb).grades(), oracle::meet(a, b));
                ASSERT_EQ(compose(fa, fb), compose_oracle(fa, fb, g.s_size())) << fa.to_string() << fb.to_string();
            }
    }
}

// Independent check of the oracle itself by listing term sequences.
TEST(Oracle, AgreesWithSequenceEnumeration) {
    for (const char* name : {"maxmin2", "trunc3", "null2"}) {
        const auto f = oracle::load_fixture(name);
        const auto& g = *f.structure;
        const auto fam = enumerate_ideals(g, Chain::parse("0,1/2,1"), IdealKind::two_sided).members;
        const std::size_t depth = std::min<std::size_t>(g.s_size(), 2);
        for (const auto& a : fam)
            for (const auto& b : fam) {
                EXPECT_EQ(compose_oracle(a, b, depth).grades(),
                          oracle::compose_by_sequences(f.doc.tables, a.grades(), b.grades(), depth))
                    << name << " " << a.to_string() << " " << b.to_string();
            }
    }
}

TEST(Oracle, StabilizesWithinCarrierSize) {
    for (const auto& c : cases) {
        const auto f = oracle::load_fixture(c.structure);
        const auto& g = *f.structure;
        for (int k = 0; k < 3; ++k) {
            const auto fam = enumerate_ideals(g, Chain::parse(c.chain), static_cast<IdealKind>(k)).members;
            for (const auto& a : fam)
                for (const auto& b : fam) {
                    const auto run = compose_oracle_run(a, b, 2 * g.s_size());
                    EXPECT_LE(run.last_change, g.s_size()) << label(c);
                    EXPECT_EQ(run.result, compose(a, b)) << label(c);
                }
        }
    }
}

class OpLaws : public ::testing::TestWithParam<Case> {};

TEST_P(OpLaws, HoldOnEveryEnumeratedLeftIdealPair) {
    const auto c = GetParam();
    const auto f = oracle::load_fixture(c.structure);
    const auto& g = *f.structure;
    const auto chain = Chain::parse(c.chain);
    const auto fam = enumerate_ideals(g, chain, IdealKind::left).members;
    for (const auto& a : fam) {
        EXPECT_EQ(sum_oplus(a, a), a);
        EXPECT_EQ(sum_oplus(theta(g), a), a);
        for (const auto& b : fam) {
            const auto s = sum_oplus(a, b);
            const auto p = gamma_product(a, b);
            const auto o = compose(a, b);
            EXPECT_TRUE(classify(s).left);
            EXPECT_TRUE(classify(o).left);
            EXPECT_TRUE(leq(p, o));
            EXPECT_TRUE(leq(a, s));
            EXPECT_EQ(s, sum_oplus(b, a));
            for (const auto& r : {s, p, o, meet(a, b)}) EXPECT_TRUE(grades_in(r, chain));
            EXPECT_EQ(o, compose_oracle(a, b, g.s_size()));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, OpLaws, ::testing::ValuesIn(cases),
                         [](const auto& info) { return std::string(info.param.structure) + "_" + std::to_string(info.index); });

TEST(Ops, ProductBelowMeetForRightLeftPairs) {
    for (const auto& c : cases) {
        const auto f = oracle::load_fixture(c.structure);
        const auto chain = Chain::parse(c.chain);
        const auto rights = enumerate_ideals(*f.structure, chain, IdealKind::right).members;
        const auto lefts = enumerate_ideals(*f.structure, chain, IdealKind::left).members;
        for (const auto& r : rights)
            for (const auto& l : lefts) EXPECT_TRUE(leq(gamma_product(r, l), meet(r, l))) << label(c);
    }
}
