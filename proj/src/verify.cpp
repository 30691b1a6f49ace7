#include "treepark/verify.hpp"

#include <array>
#include <chrono>
#include <stdexcept>

namespace treepark {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t space_size(int n) {
    return mpz_get_ui(cayley_count(n).get_mpz_t());
}

DistributionSpec tree_spec(int n) {
    return {ObjectKind::tree, QStat::tree_inv, TStat::leaves_minus_one, n};
}

DistributionSpec pf_spec(int n, TStat tstat) {
    return {ObjectKind::parking_function, QStat::cosum, tstat, n};
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::partial: return "partial";
    }
    return "?";
}

CheckReport compare_polynomials(const std::string& claim_id, int n,
                                const BivariatePolynomial& lhs,
                                const BivariatePolynomial& rhs) {
    CheckReport report{claim_id, n};
    const int qd = std::max(lhs.qdeg(), rhs.qdeg());
    const int td = std::max(lhs.tdeg(), rhs.tdeg());
    for (int a = 0; a <= qd; ++a)
        for (int b = 0; b <= td; ++b)
            if (lhs.coeff(a, b) != rhs.coeff(a, b)) {
                report.verdict = Verdict::fails;
                report.witness = Witness{a, b, lhs.coeff(a, b), rhs.coeff(a, b)};
                return report;
            }
    report.verdict = Verdict::holds;
    return report;
}

std::vector<CheckReport> check_theorem1(int n, const CheckOptions& opt) {
    const auto start = Clock::now();
    const BivariatePolynomial tree = tally(tree_spec(n), opt.shards, opt.threads, opt.budget);
    const BivariatePolynomial pf =
        tally(pf_spec(n, TStat::exced), opt.shards, opt.threads, opt.budget);
    const BivariatePolynomial mahonian = q_factorial(n);
    const BivariatePolynomial eulerian = eulerian_polynomial(n, opt.budget).to_bivariate();

    std::vector<CheckReport> reports;
    reports.push_back(compare_polynomials(
        "thm1-tree-t0-mahonian", n, specialize_t(tree, 0).to_bivariate(), mahonian));
    reports.push_back(compare_polynomials(
        "thm1-pf-t0-mahonian", n, specialize_t(pf, 0).to_bivariate(), mahonian));
    reports.push_back(compare_polynomials(
        "thm1-tree-q0-eulerian", n, specialize_q(tree, 0).to_bivariate(), eulerian));
    reports.push_back(compare_polynomials(
        "thm1-pf-q0-eulerian", n, specialize_q(pf, 0).to_bivariate(), eulerian));
    for (auto& r : reports) {
        r.elapsed_seconds = seconds_since(start);
        r.object_count = 2 * space_size(n);
    }
    return reports;
}

CheckReport check_stanley_yin(int n, const CheckOptions& opt) {
    const auto start = Clock::now();
    const BivariatePolynomial tree = tally(tree_spec(n), opt.shards, opt.threads, opt.budget);
    const BivariatePolynomial pf =
        tally(pf_spec(n, TStat::des_outcome_inverse), opt.shards, opt.threads, opt.budget);
    CheckReport report = compare_polynomials("stanley-yin", n, tree, pf);
    report.elapsed_seconds = seconds_since(start);
    report.object_count = 2 * space_size(n);
    return report;
}

CheckReport check_conjecture_des(int n, const CheckOptions& opt) {
    const auto start = Clock::now();
    const BivariatePolynomial exced =
        tally(pf_spec(n, TStat::exced), opt.shards, opt.threads, opt.budget);
    const BivariatePolynomial des =
        tally(pf_spec(n, TStat::des_outcome), opt.shards, opt.threads, opt.budget);
    CheckReport report = compare_polynomials("conj-des", n, exced, des);
    report.elapsed_seconds = seconds_since(start);
    report.object_count = 2 * space_size(n);
    return report;
}

std::vector<CheckReport> check_conjecture_minus_one(int n, const CheckOptions& opt) {
    const auto start = Clock::now();
    std::vector<CheckReport> reports;

    // Part 1: coefficients B(n,k) of t^(n-1-k) in I_n(-1,t) against the
    // simsun descent counts of S_{n-1}.
    {
        const BivariatePolynomial tree =
            tally(tree_spec(n), opt.shards, opt.threads, opt.budget);
        const UnivariatePolynomial spec_q = specialize_q(tree, -1);
        const auto triangle = simsun_descent_triangle(n, opt.budget);
        const auto& row = triangle.back();
        std::vector<std::tuple<int, int, mpz_class>> terms;
        for (size_t k = 0; k < row.size(); ++k)
            terms.emplace_back(0, n - 1 - static_cast<int>(k), row[k]);
        CheckReport part1 =
            compare_polynomials("conj-minus-one-part1", n, spec_q.to_bivariate(),
                                BivariatePolynomial::from_terms(terms));
        part1.note = "B(n,k) vs simsun permutations of S_{n-1} by descents";
        reports.push_back(std::move(part1));
    }

    // Part 2: Itilde_n(-1,t), table-bound for n <= 7 plus structural checks.
    const BivariatePolynomial pf =
        tally(pf_spec(n, TStat::exced), opt.shards, opt.threads, opt.budget);
    const UnivariatePolynomial spec_q = specialize_q(pf, -1);

    if (n <= 7) {
        CheckReport table = compare_polynomials("conj-minus-one-part2-table", n,
                                                spec_q.to_bivariate(),
                                                table2_pf(n).to_bivariate());
        table.note = "C(n,k) vs transcribed reference row";
        reports.push_back(std::move(table));
    } else {
        CheckReport table{"conj-minus-one-part2-table", n, Verdict::partial};
        table.note = "no reference row beyond n=7; structural checks only";
        reports.push_back(std::move(table));
    }

    {
        CheckReport rowsum{"conj-minus-one-part2-rowsum", n};
        const mpz_class sum = spec_q.eval(1);
        const mpz_class expected = zigzag_numbers(n).back();
        if (sum != expected) {
            rowsum.verdict = Verdict::fails;
            rowsum.witness = Witness{0, 0, sum, expected};
        }
        rowsum.note = "coefficient sum vs zigzag number E_n (empirical)";
        reports.push_back(std::move(rowsum));
    }

    {
        // C(n,k) = C(n,n-2-k): coefficients of t^1..t^(n-1) palindromic, and
        // for n >= 2 no constant term.
        CheckReport sym{"conj-minus-one-part2-symmetry", n};
        if (n >= 2 && spec_q.coeff(0) != 0) {
            sym.verdict = Verdict::fails;
            sym.witness = Witness{0, 0, spec_q.coeff(0), 0};
        } else {
            for (int k = 1; k <= n - 1; ++k) {
                if (spec_q.coeff(k) != spec_q.coeff(n - k)) {
                    sym.verdict = Verdict::fails;
                    sym.witness = Witness{0, k, spec_q.coeff(k), spec_q.coeff(n - k)};
                    break;
                }
            }
        }
        sym.note = "row palindromy (empirical, observed in every reference row)";
        reports.push_back(std::move(sym));
    }

    for (auto& r : reports) {
        r.elapsed_seconds = seconds_since(start);
        r.object_count = 2 * space_size(n);
    }
    return reports;
}

CheckReport check_counts(int n, const CheckOptions& opt) {
    const auto start = Clock::now();
    const mpz_class expected = cayley_count(n);
    check_budget(expected, opt.budget);

    std::uint64_t trees = 0, pfs = 0;
    for_each_tree(n, {}, [&](const Tree&) { ++trees; }, opt.budget);
    for_each_parking_function(n, {}, [&](const ParkingFunction&) { ++pfs; }, opt.budget);

    CheckReport report{"counts", n};
    report.object_count = trees + pfs;
    const mpz_class tz(static_cast<unsigned long>(trees));
    const mpz_class pz(static_cast<unsigned long>(pfs));
    if (tz != expected) {
        report.verdict = Verdict::fails;
        report.witness = Witness{0, 0, tz, expected};
        report.note = "tree stream count mismatch";
    } else if (pz != expected) {
        report.verdict = Verdict::fails;
        report.witness = Witness{0, 0, pz, expected};
        report.note = "parking function stream count mismatch";
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

namespace {

BivariatePolynomial from_table(std::vector<std::tuple<int, int, mpz_class>> terms) {
    return BivariatePolynomial::from_terms(terms);
}

// Transcribed reference data; coefficients of q^a t^b as (a, b, c).
const std::array<BivariatePolynomial, 4> kTable1Tree = {
    from_table({{0, 0, 1}}),
    from_table({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}),
    from_table({{3, 0, 1}, {2, 1, 1}, {2, 0, 2}, {1, 1, 4}, {0, 2, 1}, {1, 0, 2},
                {0, 1, 4}, {0, 0, 1}}),
    from_table({{6, 0, 1}, {5, 1, 1}, {5, 0, 3}, {4, 1, 5}, {3, 2, 1}, {4, 0, 5},
                {3, 1, 13}, {2, 2, 5}, {3, 0, 6}, {2, 1, 20}, {1, 2, 11}, {0, 3, 1},
                {2, 0, 5}, {1, 1, 22}, {0, 2, 11}, {1, 0, 3}, {0, 1, 11}, {0, 0, 1}}),
};

const std::array<BivariatePolynomial, 4> kTable1Pf = {
    kTable1Tree[0],
    kTable1Tree[1],
    kTable1Tree[2],
    from_table({{6, 0, 1}, {5, 1, 1}, {5, 0, 3}, {4, 1, 5}, {3, 2, 1}, {4, 0, 5},
                {3, 1, 13}, {2, 2, 5}, {3, 0, 6}, {2, 1, 20}, {1, 2, 12}, {0, 3, 1},
                {2, 0, 5}, {1, 1, 21}, {0, 2, 11}, {1, 0, 3}, {0, 1, 11}, {0, 0, 1}}),
};

UnivariatePolynomial tpoly(std::vector<mpz_class> ascending) {
    return UnivariatePolynomial(Var::t, std::move(ascending));
}

// I_n(-1,t), rows n = 1..7; coefficients listed from t^0 upward.
const std::array<UnivariatePolynomial, 7> kTable2Tree = {
    tpoly({1}),
    tpoly({0, 1}),
    tpoly({0, 1, 1}),
    tpoly({0, 0, 4, 1}),
    tpoly({0, 0, 4, 11, 1}),
    tpoly({0, 0, 0, 34, 26, 1}),
    tpoly({0, 0, 0, 34, 180, 57, 1}),
};

// Itilde_n(-1,t), rows n = 1..7.
const std::array<UnivariatePolynomial, 7> kTable2Pf = {
    tpoly({1}),
    tpoly({0, 1}),
    tpoly({0, 1, 1}),
    tpoly({0, 1, 3, 1}),
    tpoly({0, 1, 7, 7, 1}),
    tpoly({0, 1, 14, 31, 14, 1}),
    tpoly({0, 1, 26, 109, 109, 26, 1}),
};

}  // namespace

const BivariatePolynomial& table1_tree(int n) {
    if (n < 1 || n > 4) throw std::out_of_range("table1 rows exist for n=1..4");
    return kTable1Tree[n - 1];
}

const BivariatePolynomial& table1_pf(int n) {
    if (n < 1 || n > 4) throw std::out_of_range("table1 rows exist for n=1..4");
    return kTable1Pf[n - 1];
}

const UnivariatePolynomial& table2_tree(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("table2 rows exist for n=1..7");
    return kTable2Tree[n - 1];
}

const UnivariatePolynomial& table2_pf(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("table2 rows exist for n=1..7");
    return kTable2Pf[n - 1];
}

}  // namespace treepark
