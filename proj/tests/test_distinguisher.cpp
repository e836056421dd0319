#include <cmath>
#include <cstdint>
#include <vector>

#include "dmcap/channel.hpp"
#include "dmcap/distinguisher.hpp"
#include "dmcap/distribution.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dmcap;

TEST_CASE("sampling basics") {
    const auto u256 = Distribution::uniform(256);

    SUBCASE("zero draws, zero counts") {
        const auto s = draw_samples(u256, 0, 1);
        CHECK(s.total == 0);
        for (auto c : s.counts) CHECK(c == 0);
    }
    SUBCASE("a point mass puts everything in one cell") {
        const auto s = draw_samples(Distribution::point_mass(8, 3), 500, 9);
        CHECK(s.counts[3] == 500);
        CHECK(s.total == 500);
    }
    SUBCASE("uniform counts concentrate binomially") {
        // mean 3906.25, sigma = sqrt(1e6 * (1/256)(255/256)) = 62.38; allow 5
        // sigma at a fixed seed.
        const auto s = draw_samples(u256, 1'000'000, 0x5eedbeef);
        std::uint64_t total = 0;
        for (auto c : s.counts) {
            CHECK(std::abs(static_cast<double>(c) - 3906.25) < 311.9);
            total += c;
        }
        CHECK(total == 1'000'000);
    }
    SUBCASE("seeding is deterministic") {
        const auto a = draw_samples(u256, 1000, 7);
        const auto b = draw_samples(u256, 1000, 7);
        CHECK(a.counts == b.counts);
        const auto c = draw_samples(u256, 1000, 8);
        CHECK(a.counts != c.counts);
    }
    SUBCASE("half-half split stays near the middle") {
        const auto s = draw_samples(Distribution::uniform(2), 100'000, 21);
        // 5 sigma = 5 * sqrt(1e5)/2 = 790
        CHECK(std::abs(static_cast<double>(s.counts[0]) - 50'000.0) < 790.0);
    }
}

TEST_CASE("log-likelihood-ratio decision") {
    const Distribution biased(std::vector<double>{0.75, 0.25});
    const Distribution fair(std::vector<double>{0.5, 0.5});

    SUBCASE("no evidence falls to the fair side") {
        CHECK(llr_decide(SampleCounts{{0, 0}, 0}, biased, fair) ==
              Decision::Uniform);
    }
    SUBCASE("identical hypotheses always tie") {
        CHECK(llr_decide(SampleCounts{{400, 600}, 1000}, fair, fair) ==
              Decision::Uniform);
    }
    SUBCASE("one sample on a heavy cell is enough") {
        CHECK(llr_decide(SampleCounts{{1, 0}, 1}, biased, fair) ==
              Decision::Biased);
    }
    SUBCASE("a sample the biased source cannot emit settles it") {
        const Distribution spike(std::vector<double>{1.0, 0.0});
        CHECK(llr_decide(SampleCounts{{0, 3}, 3}, spike, fair) ==
              Decision::Uniform);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(llr_decide(SampleCounts{{1, 0}, 1}, biased,
                                   Distribution(std::vector<double>{1.0, 0.0})),
                        std::domain_error);
        CHECK_THROWS_AS(
            llr_decide(SampleCounts{{1, 0, 0}, 1}, biased, fair),
            invalid_alphabet_error);
    }
}

TEST_CASE("error-rate harness") {
    SUBCASE("zero bias degenerates to the tie case") {
        const auto rep =
            estimate_error_rates(make_wht_sparse_channel(3, 1, 0.0), 500, 50, 1);
        CHECK(rep.false_accept_biased == 0.0);
        CHECK(rep.false_accept_uniform == 1.0);
    }
    SUBCASE("zero samples decide Uniform every time") {
        const auto rep =
            estimate_error_rates(make_wht_sparse_channel(3, 1, 0.4), 0, 40, 2);
        CHECK(rep.false_accept_biased == 0.0);
        CHECK(rep.false_accept_uniform == 1.0);
    }
    SUBCASE("report echoes its parameters") {
        const auto rep =
            estimate_error_rates(make_wht_sparse_channel(3, 1, 0.4), 64, 10, 77);
        CHECK(rep.sample_count == 64);
        CHECK(rep.trials == 10);
        CHECK(rep.seed == 77);
        CHECK(rep.generator == "mt19937_64");
    }
    SUBCASE("identical seeds, identical reports") {
        const auto ch = make_wht_sparse_channel(8, 1, 0.3);
        const auto a = estimate_error_rates(ch, 200, 100, 5);
        const auto b = estimate_error_rates(ch, 200, 100, 5);
        CHECK(a.false_accept_biased == b.false_accept_biased);
        CHECK(a.false_accept_uniform == b.false_accept_uniform);
    }
    SUBCASE("strong bias is called out almost surely") {
        const auto rep = estimate_error_rates(make_wht_sparse_channel(8, 1, 0.5),
                                              2000, 300, 11);
        CHECK(rep.false_accept_biased < 0.05);
        CHECK(rep.false_accept_uniform < 0.05);
    }
    SUBCASE("more samples, fewer mistakes") {
        const auto ch = make_wht_sparse_channel(8, 1, 0.3);
        const auto coarse = estimate_error_rates(ch, 100, 400, 3);
        const auto fine = estimate_error_rates(ch, 1600, 400, 3);
        const double sum_coarse =
            coarse.false_accept_biased + coarse.false_accept_uniform;
        const double sum_fine =
            fine.false_accept_biased + fine.false_accept_uniform;
        CHECK(sum_fine <= sum_coarse + 0.05);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(
            estimate_error_rates(make_wht_sparse_channel(3, 1, 0.4), 10, 0, 1),
            std::domain_error);
        CHECK_THROWS_AS(estimate_error_rates(make_bsc(0.5), 10, 5, 1),
                        std::domain_error);  // second row not uniform
    }
}
