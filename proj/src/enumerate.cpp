#include "treepark/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace treepark {

namespace {

void require_compatible(const DistributionSpec& spec) {
    const bool tree_q = spec.qstat == QStat::tree_inv;
    const bool tree_t = spec.tstat == TStat::leaves_minus_one;
    if (spec.kind == ObjectKind::tree && (!tree_q || !tree_t))
        throw std::invalid_argument("tree tallies use tree_inv and leaves_minus_one");
    if (spec.kind == ObjectKind::parking_function && (tree_q || tree_t))
        throw std::invalid_argument("parking tallies use cosum with a parking t-statistic");
    if (spec.n < 1) throw std::invalid_argument("n must be positive");
}

int parking_t_stat(TStat stat, const ParkingFunction& pf) {
    switch (stat) {
        case TStat::exced:
            return excedances(pf);
        case TStat::des_outcome:
            return perm_descents(parking_outcome(pf));
        case TStat::des_outcome_inverse:
            return perm_descents(perm_inverse(parking_outcome(pf)));
        default:
            throw std::invalid_argument("not a parking t-statistic");
    }
}

// Per-worker accumulation grid. Counts are bounded by (n+1)^(n-1), which the
// budget keeps below 2^64, so plain unsigned arithmetic is exact here.
struct CountGrid {
    int qmax, tmax;
    std::vector<std::uint64_t> cells;

    CountGrid(int q, int t) : qmax(q), tmax(t), cells((q + 1) * (t + 1), 0) {}
    void bump(int a, int b) { ++cells[a * (tmax + 1) + b]; }
    void merge(const CountGrid& o) {
        for (size_t i = 0; i < cells.size(); ++i) cells[i] += o.cells[i];
    }
};

void tally_shard(const DistributionSpec& spec, const IndexShard& shard, const Budget& budget,
                 CountGrid& grid) {
    if (spec.kind == ObjectKind::tree) {
        for_each_tree(
            spec.n, shard,
            [&](const Tree& t) { grid.bump(tree_inversions(t), tree_leaves(t) - 1); },
            budget);
    } else {
        for_each_parking_function(
            spec.n, shard,
            [&](const ParkingFunction& pf) {
                grid.bump(cosum(pf), parking_t_stat(spec.tstat, pf));
            },
            budget);
    }
}

}  // namespace

BivariatePolynomial tally(const DistributionSpec& spec, unsigned shards, unsigned threads,
                          const Budget& budget) {
    require_compatible(spec);
    if (shards == 0 || threads == 0)
        throw std::invalid_argument("shards and threads must be positive");
    check_budget(cayley_count(spec.n), budget);

    const int n = spec.n;
    const int qmax = n * (n - 1) / 2;
    const int tmax = n - 1;
    const unsigned workers = std::min(threads, shards);

    std::vector<CountGrid> grids(workers, CountGrid(qmax, tmax));
    std::exception_ptr failure;
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t s = w; s < shards; s += workers)
                tally_shard(spec, IndexShard{s, shards}, budget, grids[w]);
        } catch (...) {
            failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (unsigned w = 1; w < workers; ++w) grids[0].merge(grids[w]);
    std::vector<std::vector<mpz_class>> grid(qmax + 1, std::vector<mpz_class>(tmax + 1));
    for (int a = 0; a <= qmax; ++a)
        for (int b = 0; b <= tmax; ++b)
            grid[a][b] = mpz_class(static_cast<unsigned long>(grids[0].cells[a * (tmax + 1) + b]));
    return BivariatePolynomial(std::move(grid));
}

namespace {

// Exact binomials by Pascal's rule, rows 0..n.
std::vector<std::vector<mpz_class>> pascal(int n) {
    std::vector<std::vector<mpz_class>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

}  // namespace

BivariatePolynomial kreweras_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const auto binom = pascal(std::max(n - 1, 0));
    std::vector<BivariatePolynomial> memo;
    memo.push_back(BivariatePolynomial::constant(1));
    for (int m = 1; m <= n; ++m) {
        BivariatePolynomial acc;
        for (int i = 0; i <= m - 1; ++i) {
            acc = acc +
                  (q_number(i + 1) * memo[i] * memo[m - 1 - i]).scaled(binom[m - 1][i]);
        }
        memo.push_back(acc);
    }
    return memo[n];
}

BivariatePolynomial stanley_yin_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const auto binom = pascal(std::max(n - 1, 0));
    const BivariatePolynomial t_mono = BivariatePolynomial::from_terms({{0, 1, 1}});
    std::vector<BivariatePolynomial> memo;
    memo.push_back(BivariatePolynomial::constant(1));
    for (int m = 1; m <= n; ++m) {
        BivariatePolynomial acc = q_number(m) * memo[m - 1];
        BivariatePolynomial inner;
        for (int i = 0; i <= m - 2; ++i) {
            inner = inner +
                    (q_number(i + 1) * memo[i] * memo[m - 1 - i]).scaled(binom[m - 1][i]);
        }
        memo.push_back(acc + t_mono * inner);
    }
    return memo[n];
}

std::vector<mpz_class> zigzag_numbers(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    std::vector<mpz_class> zigzag{1};
    std::vector<mpz_class> row{1};
    for (int m = 1; m <= max_n; ++m) {
        std::vector<mpz_class> next{0};
        for (int k = 0; k < m; ++k) next.push_back(next.back() + row[m - 1 - k]);
        row = std::move(next);
        zigzag.push_back(row.back());
    }
    return zigzag;
}

std::vector<std::vector<mpz_class>> simsun_descent_triangle(int max_n, const Budget& budget) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    std::vector<std::vector<mpz_class>> rows;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<mpz_class> row((n - 1) / 2 + 1);
        for_each_permutation(
            n - 1,
            [&](const Permutation& p) {
                if (!is_simsun(p)) return;
                const int d = perm_descents(p);
                if (d >= static_cast<int>(row.size())) row.resize(d + 1);
                row[d] += 1;
            },
            budget);
        while (row.size() > 1 && row.back() == 0) row.pop_back();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace treepark
