#include <gtest/gtest.h>

#include "gammafuzz/enumerate.hpp"
#include "gammafuzz/error.hpp"
#include "gammafuzz/fuzzy.hpp"
#include "oracles.hpp"

using namespace gammafuzz;

namespace {

Membership m(std::int64_t p, std::int64_t q = 1) { return Membership(p, q); }

struct Fixture {
    cli::LoadedStructure loaded;
    const GammaSemiring& g() const { return *loaded.structure; }
    const SemiringTables& t() const { return loaded.doc.tables; }
    FuzzySubset mu(std::vector<Membership> grades) const { return FuzzySubset(g(), std::move(grades)); }
};

Fixture load(const char* name) { return Fixture{oracle::load_fixture(name)}; }

} // namespace

TEST(Subset, ShapeChecked) {
    const auto f = load("maxmin2");
    EXPECT_THROW(f.mu({m(1)}), ShapeError);
    EXPECT_EQ(f.mu({m(1), m(1, 2)}).to_string(), "[1,1/2]");
}

TEST(Subset, ThetaAndOne) {
    EXPECT_EQ(theta(load("maxmin2").g()).grades(), (oracle::Grades{m(1), m(0)}));
    EXPECT_EQ(theta(load("trunc3").g()).grades(), (oracle::Grades{m(1), m(0), m(0)}));
    EXPECT_EQ(theta(load("trivial1").g()).grades(), (oracle::Grades{m(1)}));
    EXPECT_EQ(one(load("maxmin2").g()).grades(), (oracle::Grades{m(1), m(1)}));
    EXPECT_EQ(one(load("null2").g()).grades(), (oracle::Grades{m(1), m(1)}));
    EXPECT_EQ(one(load("trivial1").g()).grades(), (oracle::Grades{m(1)}));
}

TEST(Subset, CharacteristicFunctions) {
    for (const char* name : {"maxmin2", "trunc3", "null2", "trivial1"}) {
        const auto f = load(name);
        EXPECT_EQ(characteristic_of(f.g(), CrispSubset::of({0})), theta(f.g()));
        EXPECT_EQ(characteristic_of(f.g(), CrispSubset::full(f.g().s_size())), one(f.g()));
    }
    const auto f = load("maxmin2");
    EXPECT_EQ(characteristic_of(f.g(), CrispSubset::of({1})).grades(), (oracle::Grades{m(0), m(1)}));
}

TEST(Classify, ThetaAndOneCarryEveryFlag) {
    for (const char* name : {"maxmin2", "trunc3", "null2", "trivial1"}) {
        const auto f = load(name);
        const IdealClass all{true, true, true, true, true, true, true};
        EXPECT_EQ(classify(one(f.g())), all) << name;
        EXPECT_EQ(classify(theta(f.g())), all) << name;
    }
    EXPECT_EQ(classify(theta(load("maxmin2").g())).to_string(),
              "{nonempty,zero-is-one,left,right,two-sided,left-k,right-k}");
}

TEST(Classify, LeftAbsorptionFailure) {
    const auto f = load("maxmin2");
    const auto c = classify(f.mu({m(1, 2), m(1)}));
    EXPECT_FALSE(c.left);
    EXPECT_FALSE(c.right);
    EXPECT_FALSE(c.zero_is_one);
    EXPECT_TRUE(c.nonempty);
    EXPECT_FALSE(c.is(IdealKind::left));
}

TEST(Classify, ZeroSubsetIsEmpty) {
    const auto f = load("trunc3");
    const auto c = classify(f.mu({m(0), m(0), m(0)}));
    EXPECT_FALSE(c.nonempty);
    EXPECT_FALSE(c.is(IdealKind::left));
    EXPECT_FALSE(c.is(IdealKind::two_sided));
}

TEST(Classify, AgreesWithOracleOnEveryGradeVector) {
    const std::vector<Membership> chain{m(0), m(1, 3), m(1, 2), m(1)};
    for (const char* name : {"maxmin2", "trunc3", "null2", "trivial1"}) {
        const auto f = load(name);
        const auto n = f.g().s_size();
        std::vector<std::size_t> digits(n, 0);
        while (true) {
            oracle::Grades grades;
            for (auto d : digits) grades.push_back(chain[d]);
            const auto c = classify(f.mu(grades));
            for (int k = 0; k < 3; ++k) {
                const auto kind = static_cast<IdealKind>(k);
                ASSERT_EQ(c.is(kind), oracle::fuzzy_ideal(f.t(), grades, k)) << name << " " << f.mu(grades).to_string();
            }
            ASSERT_EQ(c.left_k, c.left && oracle::k_clause(f.t(), grades));
            ASSERT_EQ(c.right_k, c.right && oracle::k_clause(f.t(), grades));
            ASSERT_EQ(c.zero_is_one, grades[0].is_one());
            std::size_t i = 0;
            while (i < n && ++digits[i] == chain.size()) digits[i++] = 0;
            if (i == n) break;
        }
    }
}

TEST(LevelCut, Examples) {
    const auto f = load("maxmin2");
    const auto mu = f.mu({m(1), m(1, 3)});
    EXPECT_EQ(level_cut(mu, m(1, 2)), CrispSubset::of({0}));
    EXPECT_EQ(level_cut(mu, m(0)), CrispSubset::full(2));
    EXPECT_EQ(level_cut(theta(f.g()), m(1)), CrispSubset::of({0}));
}

TEST(LevelCut, AntitoneInThreshold) {
    const auto f = load("trunc3");
    const auto chain = Chain::parse("0,1/4,1/3,1/2,1");
    for (const auto& mu : enumerate_ideals(f.g(), chain, IdealKind::left).members) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            EXPECT_TRUE(level_cut(mu, chain.values()[i + 1]).subset_of(level_cut(mu, chain.values()[i])));
        }
    }
}

TEST(LevelCut, CutsOfIdealsAreCrispIdeals) {
    for (const char* name : {"maxmin2", "trunc3", "null2"}) {
        const auto f = load(name);
        const auto chain = Chain::parse("0,1/2,1");
        for (int k = 0; k < 3; ++k) {
            for (const auto& mu : enumerate_ideals(f.g(), chain, static_cast<IdealKind>(k)).members) {
                for (const auto& t : chain.values()) {
                    if (t.is_zero()) continue;
                    EXPECT_TRUE(oracle::crisp_ideal(f.t(), level_cut(mu, t).bits(), k)) << mu.to_string();
                }
            }
        }
    }
}

TEST(Lattice, MeetAndOrder) {
    const auto f = load("maxmin2");
    EXPECT_EQ(meet(theta(f.g()), one(f.g())), theta(f.g()));
    for (const auto& mu : enumerate_ideals(f.g(), Chain::parse("0,1/2,1"), IdealKind::left).members) {
        EXPECT_TRUE(leq(theta(f.g()), mu));
        EXPECT_TRUE(leq(mu, one(f.g())));
    }
    EXPECT_FALSE(leq(f.mu({m(1), m(1, 2)}), f.mu({m(1), m(1, 3)})));
}

TEST(Lattice, MeetOfWholeFamilyIsAnIdeal) {
    const auto f = load("maxmin2");
    const auto fam = enumerate_ideals(f.g(), Chain::parse("0,1/2,1"), IdealKind::left).members;
    ASSERT_FALSE(fam.empty());
    EXPECT_TRUE(classify(meet_family(fam)).left);
    EXPECT_THROW(meet_family(std::vector<FuzzySubset>{}), EmptyFamily);
}

TEST(Lattice, MeetOfIdealPairsStaysIdeal) {
    for (const char* name : {"maxmin2", "trunc3", "null2", "trivial1"}) {
        const auto f = load(name);
        for (const char* chain : {"0,1", "0,1/2,1"}) {
            for (int k = 0; k < 3; ++k) {
                const auto kind = static_cast<IdealKind>(k);
                const auto fam = enumerate_ideals(f.g(), Chain::parse(chain), kind).members;
                for (const auto& a : fam)
                    for (const auto& b : fam) EXPECT_TRUE(classify(meet(a, b)).is(kind));
            }
        }
    }
}

TEST(Lattice, AmbientMismatchThrows) {
    const auto a = load("maxmin2");
    const auto b = load("null2");
    EXPECT_THROW(meet(one(a.g()), one(b.g())), AmbientMismatch);
    EXPECT_THROW(leq(one(a.g()), one(b.g())), AmbientMismatch);
}

TEST(Kind, ParseAndPrint) {
    EXPECT_EQ(parse_ideal_kind("two-sided"), IdealKind::two_sided);
    EXPECT_EQ(to_string(IdealKind::right), "right");
    EXPECT_THROW(parse_ideal_kind("both"), std::invalid_argument);
}
