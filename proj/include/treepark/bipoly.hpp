#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "treepark/genspace.hpp"

// Exact polynomials in q and t with arbitrary-precision integer coefficients,
// stored on a dense degree grid. Construction trims all-zero trailing rows
// and columns, so equality is structural.
namespace treepark {

class BivariatePolynomial {
  public:
    BivariatePolynomial() = default;  // zero polynomial

    // Grid indexed coeff[a][b] = coefficient of q^a t^b.
    explicit BivariatePolynomial(std::vector<std::vector<mpz_class>> grid);

    static BivariatePolynomial constant(long c);
    static BivariatePolynomial from_terms(
        const std::vector<std::tuple<int, int, mpz_class>>& terms);

    bool is_zero() const { return grid_.empty(); }
    // Degree bounds of the trimmed grid; -1 for the zero polynomial.
    int qdeg() const { return static_cast<int>(grid_.size()) - 1; }
    int tdeg() const { return grid_.empty() ? -1 : static_cast<int>(grid_[0].size()) - 1; }
    const mpz_class& coeff(int a, int b) const;

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial scaled(const mpz_class& c) const;

    bool operator==(const BivariatePolynomial&) const = default;

  private:
    void trim();

    std::vector<std::vector<mpz_class>> grid_;
};

enum class Var : char { q = 'q', t = 't' };

class UnivariatePolynomial {
  public:
    explicit UnivariatePolynomial(Var var = Var::t) : var_(var) {}
    UnivariatePolynomial(Var var, std::vector<mpz_class> coeffs);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& x) const;
    BivariatePolynomial to_bivariate() const;

    bool operator==(const UnivariatePolynomial&) const = default;

  private:
    Var var_;
    std::vector<mpz_class> coeffs_;  // coeffs_[k] = coefficient of var^k, no trailing zeros
};

// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
BivariatePolynomial q_number(int k);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; empty product for n = 0.
BivariatePolynomial q_factorial(int n);

// A_n(t) = sum over S_n of t^des, tallied exhaustively.
UnivariatePolynomial eulerian_polynomial(int n, const Budget& budget = {});

UnivariatePolynomial specialize_q(const BivariatePolynomial& p, long v);
UnivariatePolynomial specialize_t(const BivariatePolynomial& p, long v);

}  // namespace treepark
