#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "carlab/strata.hpp"

using namespace carlab;

TEST_CASE("enumerate_strata mixed-radix order") {
    const auto one = enumerate_strata(FactorSpec::uniform({2}));
    REQUIRE(one.size() == 2);
    CHECK(one[0].multi == std::vector<int>{1});
    CHECK(one[1].multi == std::vector<int>{2});

    const auto two = enumerate_strata(FactorSpec::uniform({2, 2}));
    REQUIRE(two.size() == 4);
    CHECK(two[0].multi == std::vector<int>{1, 1});
    CHECK(two[1].multi == std::vector<int>{1, 2});
    CHECK(two[2].multi == std::vector<int>{2, 1});
    CHECK(two[3].multi == std::vector<int>{2, 2});

    // age x family history x smoking example: 12 strata
    CHECK(enumerate_strata(FactorSpec::uniform({2, 2, 3})).size() == 12);
}

TEST_CASE("linear index is a bijection") {
    const FactorSpec spec = FactorSpec::uniform({3, 2, 4});
    std::set<int> seen;
    for (const auto& s : enumerate_strata(spec)) {
        CHECK(spec.linear_index(s.multi) == s.linear);
        CHECK(spec.stratum(s.linear).multi == s.multi);
        seen.insert(s.linear);
    }
    CHECK(static_cast<int>(seen.size()) == spec.num_strata());
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == spec.num_strata() - 1);
}

TEST_CASE("marginal_members") {
    const FactorSpec spec = FactorSpec::uniform({2, 2});
    const auto members = marginal_members(spec, 1, 1);
    REQUIRE(members.size() == 2);
    CHECK(members[0].multi == std::vector<int>{1, 1});
    CHECK(members[1].multi == std::vector<int>{1, 2});

    // never-smokers in the 3-factor example: 4 strata
    const FactorSpec smoking = FactorSpec::uniform({2, 2, 3});
    CHECK(marginal_members(smoking, 3, 1).size() == 4);
    for (const auto& s : marginal_members(smoking, 3, 1)) CHECK(s.multi[2] == 1);

    const FactorSpec single = FactorSpec::uniform({3});
    CHECK(marginal_members(single, 1, 2).size() == 1);

    CHECK_THROWS_AS(marginal_members(spec, 3, 1), std::out_of_range);
    CHECK_THROWS_AS(marginal_members(spec, 1, 5), std::out_of_range);
}

TEST_CASE("marginal prevalences add up over member strata") {
    const FactorSpec spec = FactorSpec::independent(
        {2, 3, 2}, {{0.3, 0.7}, {0.25, 0.5, 0.25}, {0.9, 0.1}});
    for (int j = 1; j <= spec.num_factors(); ++j)
        for (int h = 1; h <= spec.num_levels(j); ++h) {
            double sum = 0.0;
            for (const auto& s : marginal_members(spec, j, h))
                sum += spec.stratum_prevalence(s.linear);
            CHECK(std::abs(sum - spec.level_prevalence(j, h)) <= 1e-12);
        }
}

TEST_CASE("sample_covariates frequencies") {
    Rng rng(99);

    SUBCASE("uniform 2x2") {
        const FactorSpec spec = FactorSpec::uniform({2, 2});
        std::array<int, 4> counts{};
        const int n = 100000;
        for (int i = 0; i < n; ++i) ++counts[sample_covariates(spec, rng).stratum.linear];
        const double band = 3.0 * std::sqrt(0.25 * 0.75 / n);
        for (int z = 0; z < 4; ++z)
            CHECK(std::abs(counts[z] / double(n) - 0.25) <= band);
    }

    SUBCASE("degenerate joint mass") {
        const FactorSpec spec = FactorSpec::joint({2, 2}, {1.0, 0.0, 0.0, 0.0});
        for (int i = 0; i < 200; ++i) {
            const auto subject = sample_covariates(spec, rng);
            CHECK(subject.stratum.multi == std::vector<int>{1, 1});
            CHECK(subject.raw_levels() == subject.stratum.multi);
        }
    }

    SUBCASE("binary x (1/4,1/2,1/4) factor") {
        const FactorSpec spec =
            FactorSpec::independent({2, 3}, {{0.5, 0.5}, {0.25, 0.5, 0.25}});
        const int n = 100000;
        int hits = 0;  // stratum (1,2)
        const int target = spec.linear_index({1, 2});
        for (int i = 0; i < n; ++i)
            if (sample_covariates(spec, rng).stratum.linear == target) ++hits;
        const double band = 3.0 * std::sqrt(0.25 * 0.75 / n);
        CHECK(std::abs(hits / double(n) - 0.25) <= band);
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(FactorSpec::uniform({}), std::invalid_argument);
    CHECK_THROWS_AS(FactorSpec::uniform({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FactorSpec::independent({2}, {{0.5, 0.6}}), std::invalid_argument);
    CHECK_THROWS_AS(FactorSpec::independent({2}, {{-0.1, 1.1}}), std::invalid_argument);
    CHECK_THROWS_AS(FactorSpec::joint({2, 2}, {0.5, 0.5}), std::invalid_argument);
    CHECK(FactorSpec::uniform({2, 2}).equal_prevalence());
    CHECK_FALSE(FactorSpec::independent({2}, {{0.4, 0.6}}).equal_prevalence());
}
