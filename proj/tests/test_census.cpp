#include <doctest.h>

#include <random>

#include "census.hpp"
#include "formulas.hpp"

using namespace pc;

TEST_CASE("joint census over GF(3), n = 1..3") {
    Field f(3, 1);

    JointCensus c1 = census_joint(f, 1);
    CHECK(c1.zero_per() == 1);
    CHECK(c1.zero_det() == 1);
    CHECK(c1.meta.total == 3);

    JointCensus c2 = census_joint(f, 2);
    CHECK(c2.zero_per() == 33);
    CHECK(c2.zero_det() == 33);
    CHECK(c2.meta.total == 81);

    JointCensus c3 = census_joint(f, 3);
    CHECK(c3.zero_per() == 8163);
    CHECK(c3.zero_det() == 8451);
    CHECK(c3.meta.total == 19683);
    // the joint table partitions the full space
    bigint sum = 0;
    for (auto v : c3.counts) sum += v;
    CHECK(sum == 19683);
}

TEST_CASE("joint census agrees with the closed forms over GF(5)") {
    Field f(5, 1);
    JointCensus c = census_joint(f, 2);
    CHECK(c.zero_det() == poly_Dn(2).eval(5));
    CHECK(c.zero_per() == poly_Dn(2).eval(5)); // per and det counts coincide at n = 2
}

TEST_CASE("census is independent of worker count and algorithm") {
    Field f(3, 1);
    JointCensus base = census_joint(f, 3, kDefaultBudget, 1, PerAlgo::laplace);
    for (int workers : {2, 3}) {
        JointCensus c = census_joint(f, 3, kDefaultBudget, workers, PerAlgo::laplace);
        CHECK(c.counts == base.counts);
    }
    JointCensus ry = census_joint(f, 3, kDefaultBudget, 2, PerAlgo::ryser);
    CHECK(ry.counts == base.counts);
}

TEST_CASE("rank census of the permanental compound, GF(3) m = 2") {
    Field f(3, 1);
    NrCensus nr = census_nr(f, 2);
    REQUIRE(nr.by_rank.size() == 3);
    CHECK(nr.by_rank[0] == 1);
    CHECK(nr.by_rank[1] == 24);
    CHECK(nr.by_rank[2] == 8);
    CHECK(nr.zero_per() == 33);
}

TEST_CASE("rank census partitions P_m, GF(3) m = 3") {
    Field f(3, 1);
    NrCensus nr = census_nr(f, 3);
    CHECK(nr.zero_per() == 8163);
}

TEST_CASE("V^(r) brute force matches the closed form") {
    for (int q : {3, 5}) {
        Field f(std::uint32_t(q), 1);
        for (int k = 1; k <= 2; ++k)
            for (int r = 0; r <= k; ++r)
                CHECK(bigint(census_vr(f, k, r)) == poly_Vrk(k, r).eval(q));
    }
    Field f9(3, 2);
    CHECK(bigint(census_vr(f9, 1, 1)) == poly_Vrk(1, 1).eval(9));
}

TEST_CASE("V^(r) is invariant under equivalence of the middle matrix") {
    Field f(3, 1);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> dist(0, 2);
    const int k = 3;
    for (int r = 1; r <= 2; ++r) {
        Matrix ref(f, k);
        for (int i = 0; i < r; ++i) ref.at(i, i) = f.one();
        std::uint64_t expect = census_vr_for(ref);
        CHECK(bigint(expect) == poly_Vrk(k, r).eval(3));
        for (int t = 0; t < 5; ++t) {
            Matrix p(f, k), q(f, k);
            do {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) p.at(i, j) = fe(dist(rng));
            } while (det(p) == 0);
            do {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) q.at(i, j) = fe(dist(rng));
            } while (det(q) == 0);
            // b = p * ref * q has the same rank, hence the same pair count
            Matrix b(f, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    fe acc = f.zero();
                    for (int s = 0; s < k; ++s)
                        for (int u = 0; u < k; ++u)
                            acc = f.add(acc, f.mul(f.mul(p.at(i, s), ref.at(s, u)), q.at(u, j)));
                    b.at(i, j) = acc;
                }
            CHECK(rank(b) == r);
            CHECK(census_vr_for(b) == expect);
        }
    }
}

TEST_CASE("recursion reproduces the direct census, GF(3) n = 3") {
    Field f(3, 1);
    CHECK(exact_pn_recursion(f, 3) == 8163);
    CHECK(exact_pn_recursion(f, 3) == census_joint(f, 3).zero_per());
}

TEST_CASE("recursion matches the closed form over GF(5), n = 3") {
    Field f(5, 1);
    CHECK(exact_pn_recursion(f, 3) == poly_P3().eval(5));
}

TEST_CASE("value classes, GF(3) n = 3") {
    Field f(3, 1);
    ValueClassCensus vc = census_value_classes(f, 3);
    REQUIRE(vc.det_hist.size() == 3);
    CHECK(vc.det_hist[0] == 8451);
    CHECK(vc.det_hist[1] == 5616);
    CHECK(vc.det_hist[2] == 5616);
    CHECK(vc.det_hist[1] == poly_Dn_alpha(3).eval(3));
    // nonzero permanent classes are uniform as well
    CHECK(vc.per_hist[0] == 8163);
    CHECK(vc.per_hist[1] == vc.per_hist[2]);
}

TEST_CASE("per and det histograms coincide over GF(2)") {
    Field f(2, 1);
    for (int n = 1; n <= 3; ++n) {
        ValueClassCensus vc = census_value_classes(f, n);
        CHECK(vc.per_hist == vc.det_hist);
    }
}

TEST_CASE("sampling is reproducible and sane") {
    Field f(3, 1);
    SampleEstimate a = sample_prob(f, 3, Stat::det, 0, 20000, 12345, 1);
    SampleEstimate b = sample_prob(f, 3, Stat::det, 0, 20000, 12345, 1);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    double truth = 8451.0 / 19683.0;
    CHECK(std::abs(a.estimate - truth) <= 5 * a.std_error + 1e-12);
    SampleEstimate c = sample_prob(f, 3, Stat::det, 0, 20000, 999, 1);
    CHECK(c.seed == 999);
    CHECK_THROWS_AS(sample_prob(f, 3, Stat::det, 0, 0, 1, 1), Error);
}

TEST_CASE("multi-worker sampling pools all trials") {
    Field f(3, 1);
    SampleEstimate e = sample_prob(f, 2, Stat::per, 0, 30000, 7, 3);
    CHECK(e.trials == 30000);
    double truth = 33.0 / 81.0;
    CHECK(std::abs(e.estimate - truth) <= 5 * e.std_error + 1e-12);
}

TEST_CASE("budget enforcement") {
    Field f(5, 1);
    CHECK_THROWS_AS(census_joint(f, 4, 1000), Error);
    try {
        census_joint(f, 4, 1000);
    } catch (const Error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
    // the check happens before any enumeration, so a big budget passes
    CHECK(check_budget(f, 4, kDefaultBudget) == 625);
}
