#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include <gmpxx.h>

#include "treepark/combinat.hpp"

// Exhaustive, deterministic, shardable iteration over Tree(n+1), PF(n) and S_n.
//
// Trees are indexed by the rank of their Prufer code (codes ordered
// lexicographically as base-(n+1) numerals); parking functions by their lex
// rank among parking functions; shard s of c receives exactly the objects
// whose rank is congruent to s mod c, in increasing rank order.
namespace treepark {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexShard {
    std::uint64_t shard_index = 0;
    std::uint64_t shard_count = 1;
};

struct Budget {
    std::uint64_t limit = 1'000'000'000ULL;
    bool unlimited = false;
};

// (n+1)^(n-1), the size of both Tree(n+1) and PF(n).
mpz_class cayley_count(int n);

// Throws ResourceError when the object count exceeds the budget.
void check_budget(const mpz_class& count, const Budget& budget);

void for_each_tree(int n, const IndexShard& shard,
                   const std::function<void(const Tree&)>& visit,
                   const Budget& budget = {});

void for_each_parking_function(int n, const IndexShard& shard,
                               const std::function<void(const ParkingFunction&)>& visit,
                               const Budget& budget = {});

// Lexicographic order; n = 0 yields the single empty permutation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const Budget& budget = {});

}  // namespace treepark
