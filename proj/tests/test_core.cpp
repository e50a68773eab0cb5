#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <parking/core.hpp>

#include "oracle.hpp"

namespace parking {
namespace {

TEST(SortedProfile, SortsWithoutTouchingInput)
{
    const word x{3, 1, 2};
    EXPECT_EQ(make_sorted_profile(x), (sorted_profile{1, 2, 3}));
    EXPECT_EQ(x, (word{3, 1, 2}));
    EXPECT_EQ(make_sorted_profile(word{}), sorted_profile{});
    EXPECT_EQ(make_sorted_profile(word{2, 2, 1}), (sorted_profile{1, 2, 2}));
}

TEST(Types, RejectNonPositiveEntries)
{
    EXPECT_THROW(word({1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(sorted_profile({2, 1}), std::invalid_argument);
    EXPECT_THROW(position_set({2, 2}), std::invalid_argument);
    EXPECT_THROW(position_set({0}), std::invalid_argument);
}

TEST(IsParking, Examples)
{
    EXPECT_TRUE(is_parking(word{3, 1, 2}, {3, 1, 1}));
    EXPECT_FALSE(is_parking(word{2, 2, 2}, {3, 1, 1}));
    EXPECT_TRUE(is_parking(word{1, 3}, {2, 1, 2}));
    EXPECT_FALSE(is_parking(word{3, 3}, {2, 1, 2}));
}

TEST(IsParking, EmptyWordIsParkingEvenAtZeroThreshold)
{
    EXPECT_TRUE(is_parking(word{}, {0, 0, 0}));
    EXPECT_TRUE(is_parking(word{}, {0, 4, 9}));
}

TEST(IsParking, ZeroFirstThresholdAdmitsNothing)
{
    EXPECT_FALSE(is_parking(word{1}, {1, 0, 5}));
    EXPECT_FALSE(is_parking(word{1, 1}, {2, 0, 5}));
}

TEST(IsParking, LengthMismatchIsInstanceError)
{
    EXPECT_THROW((void)is_parking(word{1, 1}, {3, 1, 1}), instance_error);
}

TEST(IsParking, AgreesWithCountingOracleOnBoxes)
{
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t a = 0; a <= 3; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b) {
                // Box one larger than needed, so non-members are exercised.
                const params p{n, a, b};
                const params wide{n, a + 1, b};
                oracle::for_each_box_word(wide, [&](const std::vector<entry_t>& x) {
                    EXPECT_EQ(is_parking(word(x), p), oracle::is_parking(x, p));
                });
            }
}

TEST(IsParking, PermutationInvariantAndMonotone)
{
    std::mt19937 rng(7);
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t a = 1; a <= 3; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b) {
                const params p{n, a, b};
                for (const auto& m : oracle::members(p)) {
                    std::vector<entry_t> shuffled = m;
                    std::shuffle(shuffled.begin(), shuffled.end(), rng);
                    EXPECT_TRUE(is_parking(word(shuffled), p));
                    EXPECT_TRUE(is_parking(word(m), {n, a + 1, b}));
                    EXPECT_TRUE(is_parking(word(m), {n, a, b + 1}));
                }
            }
}

TEST(Bijection, EncodeExamples)
{
    EXPECT_EQ(bijection_encode(word{1, 3, 1, 2}, {4, 1, 1}), (bijection_parts{{1, 3}, {2, 1}}));
    EXPECT_EQ(bijection_encode(word{1, 1}, {2, 1, 1}), (bijection_parts{{1, 2}, {}}));
    EXPECT_EQ(bijection_encode(word{2, 3}, {2, 2, 1}), (bijection_parts{{}, {1, 2}}));

    EXPECT_TRUE(is_parking(word{2, 1}, reduced_params({4, 1, 1}, 2)));
    EXPECT_EQ(reduced_params({4, 1, 1}, 2), (params{2, 2, 1}));
    EXPECT_EQ(reduced_params({2, 2, 1}, 0), (params{2, 1, 1}));
}

TEST(Bijection, DecodeExamples)
{
    EXPECT_EQ(bijection_decode({{1, 3}, {2, 1}}, {4, 1, 1}), (word{1, 3, 1, 2}));
    EXPECT_EQ(bijection_decode({{1, 2}, {}}, {2, 1, 1}), (word{1, 1}));
    EXPECT_EQ(bijection_decode({{}, {1, 2}}, {2, 2, 1}), (word{2, 3}));
}

TEST(Bijection, EncodeRejectsNonMembers)
{
    EXPECT_THROW((void)bijection_encode(word{2, 2, 2}, {3, 1, 1}), std::domain_error);
    EXPECT_THROW((void)bijection_encode(word{1}, {2, 1, 1}), instance_error);
}

TEST(Bijection, EmptyWordAtZeroThreshold)
{
    const bijection_parts parts = bijection_encode(word{}, {0, 0, 3});
    EXPECT_TRUE(parts.ones_positions.empty());
    EXPECT_TRUE(parts.reduced.empty());
    EXPECT_EQ(bijection_decode(parts, {0, 0, 3}), word{});
    EXPECT_THROW((void)reduced_params({0, 0, 3}, 0), std::domain_error);
}

TEST(Bijection, DecodeRejectsBadParts)
{
    // position out of range
    EXPECT_THROW((void)bijection_decode({{5}, {1, 1, 1}}, {4, 1, 1}), std::domain_error);
    // wrong reduced length
    EXPECT_THROW((void)bijection_decode({{1}, {1}}, {3, 1, 1}), std::domain_error);
    // reduced word not in P(2, 2, 1)
    EXPECT_THROW((void)bijection_decode({{1, 3}, {3, 3}}, {4, 1, 1}), std::domain_error);
    // r = 0 at a = 1 lands in P(n, 0, b), which is empty
    EXPECT_THROW((void)bijection_decode({{}, {1, 1}}, {2, 1, 1}), std::domain_error);
}

TEST(Bijection, RoundTripsBothWaysAndPartitionsByOnes)
{
    for (std::uint32_t n = 0; n <= 5; ++n)
        for (std::uint32_t a = 1; a <= 3; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b) {
                const params p{n, a, b};
                std::vector<std::size_t> by_r(n + 1, 0);
                for (const auto& m : oracle::members(p)) {
                    const word x(m);
                    const bijection_parts parts = bijection_encode(x, p);
                    const std::size_t r = parts.ones_positions.size();
                    ++by_r[r];
                    EXPECT_TRUE(is_parking(parts.reduced, reduced_params(p, static_cast<std::uint32_t>(r))));
                    EXPECT_EQ(bijection_decode(parts, p), x);
                }

                // Every (S, y) in B_{n,r} x P(n-r, a+br-1, b) decodes and re-encodes to itself.
                for (std::uint32_t r = 0; r <= n; ++r) {
                    const params smaller = reduced_params(p, r);
                    const auto ys = oracle::members(smaller);
                    std::vector<bool> choose(n, false);
                    std::fill(choose.end() - r, choose.end(), true);
                    std::size_t images = 0;
                    do {
                        std::vector<std::uint64_t> s;
                        for (std::uint32_t i = 0; i < n; ++i)
                            if (choose[i]) s.push_back(i + 1);
                        for (const auto& y : ys) {
                            const bijection_parts parts{position_set(s), word(y)};
                            const word x = bijection_decode(parts, p);
                            EXPECT_TRUE(is_parking(x, p));
                            EXPECT_EQ(bijection_encode(x, p), parts);
                            ++images;
                        }
                    } while (std::next_permutation(choose.begin(), choose.end()));
                    EXPECT_EQ(images, by_r[r]) << "n=" << n << " a=" << a << " b=" << b << " r=" << r;
                }
            }
}

} // namespace
} // namespace parking
