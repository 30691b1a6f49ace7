#include "treepark/genspace.hpp"

#include <algorithm>
#include <numeric>

namespace treepark {

namespace {

void require_shard(const IndexShard& shard) {
    if (shard.shard_count == 0 || shard.shard_index >= shard.shard_count)
        throw DomainError("shard_index must be < shard_count");
}

}  // namespace

mpz_class cayley_count(int n) {
    if (n < 1) throw DomainError("n must be positive");
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(n + 1),
                  static_cast<unsigned long>(n - 1));
    return count;
}

void check_budget(const mpz_class& count, const Budget& budget) {
    if (budget.unlimited) return;
    if (count > mpz_class(static_cast<unsigned long>(budget.limit)))
        throw ResourceError("object space has " + count.get_str() +
                            " elements, above the budget of " + std::to_string(budget.limit) +
                            "; pass the budget override to proceed");
}

void for_each_tree(int n, const IndexShard& shard,
                   const std::function<void(const Tree&)>& visit, const Budget& budget) {
    require_shard(shard);
    const mpz_class total_z = cayley_count(n);
    check_budget(total_z, budget);
    const std::uint64_t total = mpz_get_ui(total_z.get_mpz_t());

    PruferCode code{n, std::vector<int>(n - 1, 0)};
    for (std::uint64_t rank = shard.shard_index; rank < total; rank += shard.shard_count) {
        std::uint64_t r = rank;
        for (int i = n - 2; i >= 0; --i) {
            code.code[i] = static_cast<int>(r % (n + 1));
            r /= n + 1;
        }
        visit(prufer_decode(code));
    }
}

void for_each_parking_function(int n, const IndexShard& shard,
                               const std::function<void(const ParkingFunction&)>& visit,
                               const Budget& budget) {
    require_shard(shard);
    check_budget(cayley_count(n), budget);

    // Backtracking in lex order over preference vectors. gt[j] counts prefix
    // entries > j; a prefix extends to a parking function iff gt[j] <= n-j
    // for all j (the remaining positions can always be filled with 1s).
    std::vector<int> prefix(n);
    std::vector<int> gt(n + 1, 0);
    std::uint64_t rank = 0;
    ParkingFunction out;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (rank % shard.shard_count == shard.shard_index)
                visit(out = ParkingFunction(prefix));
            ++rank;
            return;
        }
        for (int p = 1; p <= n; ++p) {
            bool feasible = true;
            for (int j = 1; j < p; ++j) {
                if (gt[j] + 1 > n - j) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) break;  // larger p is only more constrained
            for (int j = 1; j < p; ++j) ++gt[j];
            prefix[k] = p;
            self(self, k + 1);
            for (int j = 1; j < p; ++j) --gt[j];
        }
    };
    rec(rec, 0);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const Budget& budget) {
    if (n < 0) throw DomainError("n must be nonnegative");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    check_budget(fact, budget);

    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        visit(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace treepark
