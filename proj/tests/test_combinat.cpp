#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "treepark/combinat.hpp"
#include "treepark/genspace.hpp"

using namespace treepark;

namespace {

Tree tree(std::vector<int> parent) {
    const int n = static_cast<int>(parent.size());
    return validate_tree(n, parent);
}

}  // namespace

TEST_CASE("validate_tree accepts valid mappings and rejects cycles") {
    CHECK(tree({0, 0, 0}).n() == 3);
    CHECK(tree({2, 0, 0, 3}).parent_of(4) == 3);
    CHECK_THROWS_AS(validate_tree(3, {2, 1, 0}), CycleError);
    CHECK_THROWS_AS(validate_tree(3, {0, 0, 4}), DomainError);
    CHECK_THROWS_AS(validate_tree(3, {0, 2, 0}), CycleError);  // 2 -> 2
    CHECK_THROWS_AS(validate_tree(2, {0}), DomainError);
}

TEST_CASE("prufer decode of hand-checked codes") {
    CHECK(prufer_decode({2, {0}}) == tree({0, 0}));
    CHECK(prufer_decode({1, {}}) == tree({0}));
}

TEST_CASE("prufer decode is injective: 16 distinct trees for n=3") {
    std::set<std::vector<int>> seen;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            seen.insert(prufer_decode({3, {a, b}}).parents());
    CHECK(seen.size() == 16);
}

TEST_CASE("prufer encode inverts decode") {
    CHECK(prufer_encode(tree({0, 0})) == PruferCode{2, {0}});
    CHECK(prufer_encode(tree({0})) == PruferCode{1, {}});

    // All 125 codes for n=4 round-trip.
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                const PruferCode code{4, {a, b, c}};
                CHECK(prufer_encode(prufer_decode(code)) == code);
            }
}

TEST_CASE("tree_inversions") {
    CHECK(tree_inversions(tree({0, 1, 2})) == 0);
    CHECK(tree_inversions(tree({0, 0, 0})) == 0);
    CHECK(tree_inversions(tree({3, 0, 0})) == 1);  // pair (1,3)
}

TEST_CASE("tree_inversions agrees with a path-enumeration oracle") {
    for_each_tree(5, {}, [](const Tree& t) {
        int inv = 0;
        for (int i = 1; i <= t.n(); ++i) {
            std::set<int> ancestors;
            for (int v = t.parent_of(i); v != 0; v = t.parent_of(v)) ancestors.insert(v);
            for (int j : ancestors)
                if (j > i) ++inv;
        }
        CHECK(tree_inversions(t) == inv);
    });
}

TEST_CASE("tree_leaves") {
    CHECK(tree_leaves(tree({0, 1, 2})) == 1);
    CHECK(tree_leaves(tree({0, 0, 0})) == 3);
    CHECK(tree_leaves(tree({3, 0, 0})) == 2);
    CHECK(tree_leaves(tree({0})) == 1);  // root is not a leaf
}

TEST_CASE("increasing trees and the DFS bijection") {
    CHECK(is_increasing_tree(tree({0, 1, 2})));
    CHECK_FALSE(is_increasing_tree(tree({3, 0, 0})));

    CHECK(increasing_tree_to_permutation(tree({0, 1, 2})) == Permutation({1, 2, 3}));
    CHECK(increasing_tree_to_permutation(tree({0, 0, 0})) == Permutation({3, 2, 1}));
    CHECK_THROWS_AS(increasing_tree_to_permutation(tree({3, 0, 0})), NotIncreasingError);

    // Over Tree(4): exactly 3! increasing trees, mapping bijectively onto S_3,
    // with des(image) = lev(tree) - 1.
    std::set<std::vector<int>> images;
    int count = 0;
    for_each_tree(3, {}, [&](const Tree& t) {
        if (!is_increasing_tree(t)) return;
        ++count;
        const Permutation p = increasing_tree_to_permutation(t);
        CHECK(perm_descents(p) == tree_leaves(t) - 1);
        images.insert(p.word());
    });
    CHECK(count == 6);
    CHECK(images.size() == 6);
}

TEST_CASE("is_parking_function") {
    CHECK(is_parking_function({2, 2, 1, 3}));
    CHECK(is_parking_function({1, 1, 1}));
    CHECK_FALSE(is_parking_function({2, 3, 3}));
    CHECK_FALSE(is_parking_function({0, 1}));
    CHECK_FALSE(is_parking_function({1, 3}));
}

TEST_CASE("cosum") {
    CHECK(cosum(ParkingFunction({1, 2, 3})) == 0);
    CHECK(cosum(ParkingFunction({1, 1, 1})) == 3);
    CHECK(cosum(ParkingFunction({2, 2, 1, 3})) == 2);
}

TEST_CASE("excedances") {
    CHECK(excedances(ParkingFunction({4, 2, 1, 3})) == 1);
    CHECK(excedances(ParkingFunction({1, 1, 1, 1})) == 0);
    CHECK(excedances(ParkingFunction({2, 2, 1, 3})) == 1);
}

TEST_CASE("parking_outcome") {
    CHECK(parking_outcome(ParkingFunction({2, 2, 1, 3})) == Permutation({2, 3, 1, 4}));
    CHECK(perm_inverse(parking_outcome(ParkingFunction({2, 2, 1, 3}))) ==
          Permutation({3, 1, 2, 4}));
    CHECK(parking_outcome(ParkingFunction({4, 2, 1, 3})) == Permutation({4, 2, 1, 3}));
    CHECK(parking_outcome(ParkingFunction({1, 1, 1, 1})) == Permutation({1, 2, 3, 4}));
}

TEST_CASE("perm_inverse") {
    CHECK(perm_inverse(Permutation({2, 3, 1, 4})) == Permutation({3, 1, 2, 4}));
    CHECK(perm_inverse(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
    for_each_permutation(4, [](const Permutation& p) {
        CHECK(perm_inverse(perm_inverse(p)) == p);
    });
}

TEST_CASE("perm_descents and perm_inversions") {
    CHECK(perm_descents(Permutation({4, 2, 1, 3})) == 2);
    CHECK(perm_descents(Permutation({1, 2, 3, 4})) == 0);
    CHECK(perm_descents(Permutation({4, 3, 2, 1})) == 3);
    CHECK(perm_inversions(Permutation({1, 2, 3})) == 0);
    CHECK(perm_inversions(Permutation({3, 2, 1})) == 3);

    // Sum of q^inv over S_3 is [3]_q! = q^3 + 2q^2 + 2q + 1.
    std::map<int, int> dist;
    for_each_permutation(3, [&](const Permutation& p) { ++dist[perm_inversions(p)]; });
    CHECK(dist == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
}

TEST_CASE("is_alternating") {
    CHECK(is_alternating(Permutation({1, 3, 2})));
    CHECK_FALSE(is_alternating(Permutation({1, 2, 3})));
    const int expected[] = {1, 1, 2, 5, 16, 61, 272};
    for (int n = 1; n <= 7; ++n) {
        int count = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            if (is_alternating(p)) ++count;
        });
        CHECK(count == expected[n - 1]);
    }
}

TEST_CASE("is_simsun") {
    CHECK_FALSE(is_simsun(Permutation({3, 2, 1})));
    CHECK(is_simsun(Permutation({1, 2, 3, 4})));
    // Double descent only visible in a restriction: 4, then 3>2>1 at k=3.
    CHECK_FALSE(is_simsun(Permutation({3, 4, 2, 1})));

    std::map<int, int> by_descents;
    for_each_permutation(3, [&](const Permutation& p) {
        if (is_simsun(p)) ++by_descents[perm_descents(p)];
    });
    CHECK(by_descents == std::map<int, int>{{0, 1}, {1, 4}});
}

TEST_CASE("excedance-free parking functions are Lehmer codes") {
    for (int n = 1; n <= 6; ++n) {
        long count = 0;
        for_each_parking_function(n, {}, [&](const ParkingFunction& pf) {
            if (excedances(pf) != 0) return;
            ++count;
            for (int i = 1; i <= n; ++i) CHECK(pf.pref(i) <= i);
        });
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        CHECK(count == factorial);
    }
}

TEST_CASE("cosum-zero parking functions are permutations") {
    for (int n = 1; n <= 6; ++n) {
        long count = 0;
        for_each_parking_function(n, {}, [&](const ParkingFunction& pf) {
            if (cosum(pf) != 0) return;
            ++count;
            std::vector<int> sorted = pf.prefs();
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < n; ++i) CHECK(sorted[i] == i + 1);
        });
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        CHECK(count == factorial);
    }
}
