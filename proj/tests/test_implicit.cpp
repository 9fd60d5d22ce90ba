#include <doctest.h>

#include <cstdint>
#include <vector>

#include "flatbst/bitops.hpp"
#include "flatbst/builder.hpp"
#include "flatbst/implicit.hpp"
#include "oracles.hpp"

using namespace flatbst;

TEST_CASE("implicit children on known nodes") {
    CHECK(implicit_left(7, 10) == 3);
    CHECK(implicit_left(0, 10) == npos);
    CHECK(implicit_left(9, 10) == 8);

    CHECK(implicit_right(7, 10) == 9);   // candidate 11 missing, one left step
    CHECK(implicit_right(9, 10) == npos);  // candidate 10 missing at level 0
    CHECK(implicit_right(5, 15) == 6);
}

TEST_CASE("implicit navigation equals the built arrays at reachable nodes") {
    for (std::uint64_t n = 1; n <= 1024; ++n) {
        const tree_arrays t = build(n);
        for (const node_index j : testor::reachable_of(t)) {
            if (implicit_left(j, n) != t.left[j] ||
                implicit_right(j, n) != t.right[j]) {
                CAPTURE(n);
                CAPTURE(j);
                REQUIRE(implicit_left(j, n) == t.left[j]);
                REQUIRE(implicit_right(j, n) == t.right[j]);
            }
        }
    }
}

TEST_CASE("search frozen examples") {
    const std::vector<std::int64_t> keys{10, 20, 30, 40, 50};

    const search_outcome hit = search<std::int64_t>(keys, 40);
    CHECK(hit.found);
    CHECK(hit.index == 3);
    CHECK(hit.comparisons == 1);

    const search_outcome last = search<std::int64_t>(keys, 50);
    CHECK(last.found);
    CHECK(last.index == 4);

    const search_outcome low = search<std::int64_t>(keys, 5);
    CHECK_FALSE(low.found);
    CHECK(low.comparisons <= 3);  // msb(5) + 1

    const std::vector<std::int64_t> empty;
    const search_outcome none = search<std::int64_t>(empty, 42);
    CHECK_FALSE(none.found);
    CHECK(none.comparisons == 0);
}

TEST_CASE("search agrees with classic binary search on every probe") {
    for (std::uint64_t n = 1; n <= 512; ++n) {
        std::vector<std::int64_t> keys(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            keys[i] = static_cast<std::int64_t>(3 * i + 1);
        }
        const std::uint64_t bound = msb(n) + 1;
        // Probes: every key, every gap, below the minimum, above the maximum.
        std::vector<std::int64_t> probes;
        for (const std::int64_t k : keys) probes.push_back(k);
        for (std::uint64_t i = 1; i < n; ++i) probes.push_back(keys[i] - 1);
        probes.push_back(keys.front() - 1);
        probes.push_back(keys.back() + 1);

        for (const std::int64_t probe : probes) {
            const search_outcome got = search<std::int64_t>(keys, probe);
            const auto want = testor::classic_search(keys, probe);
            if (got.found != want.has_value() ||
                (got.found && got.index != *want) || got.comparisons > bound) {
                CAPTURE(n);
                CAPTURE(probe);
                REQUIRE(got.found == want.has_value());
                if (want) REQUIRE(got.index == *want);
                REQUIRE(got.comparisons <= bound);
            }
        }
    }
}

TEST_CASE("duplicates: search lands on some equal key") {
    const std::vector<std::int64_t> keys{1, 4, 4, 4, 9, 9, 12};
    for (const std::int64_t probe : {1, 4, 9, 12}) {
        const search_outcome got = search<std::int64_t>(keys, probe);
        REQUIRE(got.found);
        REQUIRE(keys[got.index] == probe);
    }
    CHECK_FALSE(search<std::int64_t>(keys, 5).found);
}
