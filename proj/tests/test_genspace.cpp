#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "treepark/genspace.hpp"

using namespace treepark;

namespace {

std::vector<std::vector<int>> collect_trees(int n, const IndexShard& shard = {}) {
    std::vector<std::vector<int>> out;
    for_each_tree(n, shard, [&](const Tree& t) { out.push_back(t.parents()); });
    return out;
}

std::vector<std::vector<int>> collect_pfs(int n, const IndexShard& shard = {}) {
    std::vector<std::vector<int>> out;
    for_each_parking_function(n, shard, [&](const ParkingFunction& pf) {
        out.push_back(pf.prefs());
    });
    return out;
}

}  // namespace

TEST_CASE("cayley_count") {
    CHECK(cayley_count(1) == 1);
    CHECK(cayley_count(3) == 16);
    CHECK(cayley_count(8) == 4782969);
}

TEST_CASE("tree stream sizes") {
    CHECK(collect_trees(3).size() == 16);
    CHECK(collect_trees(1).size() == 1);
}

TEST_CASE("tree shards partition the space") {
    const auto full = collect_trees(4);
    CHECK(full.size() == 125);

    std::vector<size_t> sizes;
    std::set<std::vector<int>> seen;
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto part = collect_trees(4, {s, 3});
        sizes.push_back(part.size());
        for (const auto& t : part) CHECK(seen.insert(t).second);  // disjoint
    }
    CHECK(sizes == std::vector<size_t>{42, 42, 41});
    CHECK(seen.size() == 125);
}

TEST_CASE("parking function stream matches the brute-force filter for n=4") {
    const auto stream = collect_pfs(4);
    CHECK(stream.size() == 125);
    CHECK(std::set(stream.begin(), stream.end()).size() == 125);

    std::set<std::vector<int>> oracle;
    std::vector<int> v(4);
    for (v[0] = 1; v[0] <= 4; ++v[0])
        for (v[1] = 1; v[1] <= 4; ++v[1])
            for (v[2] = 1; v[2] <= 4; ++v[2])
                for (v[3] = 1; v[3] <= 4; ++v[3])
                    if (is_parking_function(v)) oracle.insert(v);
    CHECK(std::set(stream.begin(), stream.end()) == oracle);
}

TEST_CASE("parking function stream small cases") {
    CHECK(collect_pfs(1) == std::vector<std::vector<int>>{{1}});
    CHECK(collect_pfs(3).size() == 16);
}

TEST_CASE("shard partition property for both generators") {
    for (int n = 1; n <= 5; ++n) {
        const auto full_trees = collect_trees(n);
        const auto full_pfs = collect_pfs(n);
        for (std::uint64_t count = 1; count <= 8; ++count) {
            std::vector<std::vector<int>> trees, pfs;
            for (std::uint64_t s = 0; s < count; ++s) {
                const auto tpart = collect_trees(n, {s, count});
                trees.insert(trees.end(), tpart.begin(), tpart.end());
                const auto ppart = collect_pfs(n, {s, count});
                pfs.insert(pfs.end(), ppart.begin(), ppart.end());
            }
            auto sorted_full_trees = full_trees;
            std::sort(trees.begin(), trees.end());
            std::sort(sorted_full_trees.begin(), sorted_full_trees.end());
            CHECK(trees == sorted_full_trees);

            auto sorted_full_pfs = full_pfs;
            std::sort(pfs.begin(), pfs.end());
            std::sort(sorted_full_pfs.begin(), sorted_full_pfs.end());
            CHECK(pfs == sorted_full_pfs);
        }
    }
}

TEST_CASE("streams are deterministic") {
    CHECK(collect_trees(5) == collect_trees(5));
    CHECK(collect_pfs(5) == collect_pfs(5));
}

TEST_CASE("permutation stream") {
    std::vector<std::vector<int>> words;
    for_each_permutation(3, [&](const Permutation& p) { words.push_back(p.word()); });
    CHECK(words == std::vector<std::vector<int>>{
                       {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});

    int empty_count = 0;
    for_each_permutation(0, [&](const Permutation& p) {
        CHECK(p.n() == 0);
        ++empty_count;
    });
    CHECK(empty_count == 1);

    std::set<std::vector<int>> distinct;
    for_each_permutation(5, [&](const Permutation& p) { distinct.insert(p.word()); });
    CHECK(distinct.size() == 120);
}

TEST_CASE("invalid shards are rejected") {
    CHECK_THROWS_AS(collect_trees(3, {2, 2}), DomainError);
    CHECK_THROWS_AS(collect_pfs(3, {1, 0}), DomainError);
}

TEST_CASE("budget refusal and override") {
    const Budget tiny{10, false};
    CHECK_THROWS_AS(for_each_tree(5, {}, [](const Tree&) {}, tiny), ResourceError);
    CHECK_THROWS_AS(for_each_parking_function(5, {}, [](const ParkingFunction&) {}, tiny),
                    ResourceError);
    CHECK_THROWS_AS(for_each_permutation(5, [](const Permutation&) {}, tiny), ResourceError);

    const Budget lifted{10, true};
    int count = 0;
    for_each_tree(4, {}, [&](const Tree&) { ++count; }, lifted);
    CHECK(count == 125);
}
