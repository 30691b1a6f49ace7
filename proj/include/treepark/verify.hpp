#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepark/bipoly.hpp"
#include "treepark/enumerate.hpp"

// Machine-checkable verdicts for the theorems and conjectures, plus the
// reference polynomial tables embedded as golden data.
//
// Claim ids: "thm1-*", "stanley-yin", "conj-des", "conj-minus-one-*",
// "counts". The two conjectures carry no numbers in the source material, so
// these ids are the stable names used everywhere (reports, CLI, tests).
namespace treepark {

enum class Verdict { holds, fails, partial };

std::string to_string(Verdict v);

// First differing monomial, lexicographically smallest (q-exponent,
// t-exponent) pair with unequal coefficients.
struct Witness {
    int qexp = 0;
    int texp = 0;
    mpz_class lhs;
    mpz_class rhs;

    bool operator==(const Witness&) const = default;
};

struct CheckReport {
    std::string claim_id;
    int n = 0;
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::string note;  // free-form context (e.g. which structural check ran)
    double elapsed_seconds = 0.0;
    std::uint64_t object_count = 0;
};

// Coefficientwise comparison; fills verdict and, on mismatch, the witness.
CheckReport compare_polynomials(const std::string& claim_id, int n,
                                const BivariatePolynomial& lhs,
                                const BivariatePolynomial& rhs);

struct CheckOptions {
    unsigned shards = 1;
    unsigned threads = 1;
    Budget budget;
};

// I_n(q,0) = Itilde_n(q,0) = [n]_q! and I_n(0,t) = Itilde_n(0,t) = A_n(t).
std::vector<CheckReport> check_theorem1(int n, const CheckOptions& opt = {});

// Tree tally versus the parking tally with t marking des(oc^-1).
CheckReport check_stanley_yin(int n, const CheckOptions& opt = {});

// Open conjecture: parking tally with t marking exced versus des(oc).
CheckReport check_conjecture_des(int n, const CheckOptions& opt = {});

// Part 1: I_n(-1,t) versus the simsun descent triangle.
// Part 2: Itilde_n(-1,t) versus the embedded table (n <= 7; partial beyond),
// plus row-sum (= E_n) and palindromy sub-checks.
std::vector<CheckReport> check_conjecture_minus_one(int n, const CheckOptions& opt = {});

// Both object streams yield exactly (n+1)^(n-1) objects.
CheckReport check_counts(int n, const CheckOptions& opt = {});

// Reference data transcribed from the source tables.
// Bivariate t-analogues, defined for n = 1..4.
const BivariatePolynomial& table1_tree(int n);
const BivariatePolynomial& table1_pf(int n);
// q = -1 specializations, defined for n = 1..7.
const UnivariatePolynomial& table2_tree(int n);
const UnivariatePolynomial& table2_pf(int n);

}  // namespace treepark
