#pragma once

#include <vector>

#include "treepark/bipoly.hpp"
#include "treepark/combinat.hpp"
#include "treepark/genspace.hpp"

// Brute-force distribution accumulators over Tree(n+1) and PF(n), the two
// recurrences as independent fast paths, and the reference triangles.
namespace treepark {

enum class ObjectKind { tree, parking_function };
enum class QStat { tree_inv, cosum };
enum class TStat { leaves_minus_one, exced, des_outcome, des_outcome_inverse };

struct DistributionSpec {
    ObjectKind kind;
    QStat qstat;
    TStat tstat;
    int n;
};

// Exact generating polynomial sum of q^qstat t^tstat over the full object
// space. The result is independent of shard and thread counts: per-shard
// grids are merged by coefficientwise addition.
BivariatePolynomial tally(const DistributionSpec& spec, unsigned shards = 1,
                          unsigned threads = 1, const Budget& budget = {});

// I_n(q) by the convolution recurrence
//   I_0 = 1,  I_n = sum_{i=0}^{n-1} binom(n-1,i) [i+1]_q I_i I_{n-1-i}.
BivariatePolynomial kreweras_recurrence(int n);

// I_n(q,t) by the t-deformed recurrence
//   I_n = [n]_q I_{n-1} + t * sum_{i=0}^{n-2} binom(n-1,i) [i+1]_q I_i I_{n-1-i}.
BivariatePolynomial stanley_yin_recurrence(int n);

// (E_0,...,E_max_n) via the boustrophedon (Seidel-Entringer) construction.
std::vector<mpz_class> zigzag_numbers(int max_n);

// Row n (1-based, rows 1..max_n): counts of simsun permutations in S_{n-1}
// by descent number.
std::vector<std::vector<mpz_class>> simsun_descent_triangle(int max_n,
                                                            const Budget& budget = {});

}  // namespace treepark
