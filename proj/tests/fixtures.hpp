#ifndef SGTREE_TESTS_FIXTURES_HPP_
#define SGTREE_TESTS_FIXTURES_HPP_

#include <cstdint>

namespace fixtures {

// Counts by genus, frozen from a run of the brute-force oracle
// (oracle::naive_count) before the chain machinery was trusted.
// Index is the genus; entry 0 is unused.
inline constexpr std::uint64_t kCounts[] = {
    0, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693,
};
inline constexpr int kCountsMax = 14;

}  // namespace fixtures

#endif  // SGTREE_TESTS_FIXTURES_HPP_
