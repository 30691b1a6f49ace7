#include "treepark/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace treepark {

namespace {
const mpz_class kZero = 0;
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<mpz_class>> grid)
    : grid_(std::move(grid)) {
    const size_t width = grid_.empty() ? 0 : grid_[0].size();
    for (const auto& row : grid_)
        if (row.size() != width)
            throw std::invalid_argument("coefficient grid must be rectangular");
    trim();
}

void BivariatePolynomial::trim() {
    auto row_zero = [](const std::vector<mpz_class>& row) {
        return std::all_of(row.begin(), row.end(), [](const mpz_class& c) { return c == 0; });
    };
    while (!grid_.empty() && row_zero(grid_.back())) grid_.pop_back();
    size_t width = 0;
    for (const auto& row : grid_)
        for (size_t b = row.size(); b > width; --b)
            if (row[b - 1] != 0) { width = b; break; }
    if (width == 0) {
        grid_.clear();
        return;
    }
    for (auto& row : grid_) row.resize(width);
}

BivariatePolynomial BivariatePolynomial::constant(long c) {
    return from_terms({{0, 0, mpz_class(c)}});
}

BivariatePolynomial BivariatePolynomial::from_terms(
    const std::vector<std::tuple<int, int, mpz_class>>& terms) {
    int qd = -1, td = -1;
    for (const auto& [a, b, c] : terms) {
        if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
        qd = std::max(qd, a);
        td = std::max(td, b);
    }
    std::vector<std::vector<mpz_class>> grid(qd + 1, std::vector<mpz_class>(td + 1));
    for (const auto& [a, b, c] : terms) grid[a][b] += c;
    return BivariatePolynomial(std::move(grid));
}

const mpz_class& BivariatePolynomial::coeff(int a, int b) const {
    if (a < 0 || b < 0 || a > qdeg() || b > tdeg()) return kZero;
    return grid_[a][b];
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    const int qd = std::max(qdeg(), o.qdeg());
    const int td = std::max(tdeg(), o.tdeg());
    if (qd < 0) return {};
    std::vector<std::vector<mpz_class>> grid(qd + 1, std::vector<mpz_class>(td + 1));
    for (int a = 0; a <= qd; ++a)
        for (int b = 0; b <= td; ++b) grid[a][b] = coeff(a, b) + o.coeff(a, b);
    return BivariatePolynomial(std::move(grid));
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    const int qd = qdeg() + o.qdeg();
    const int td = tdeg() + o.tdeg();
    std::vector<std::vector<mpz_class>> grid(qd + 1, std::vector<mpz_class>(td + 1));
    for (int a1 = 0; a1 <= qdeg(); ++a1)
        for (int b1 = 0; b1 <= tdeg(); ++b1) {
            const mpz_class& c1 = grid_[a1][b1];
            if (c1 == 0) continue;
            for (int a2 = 0; a2 <= o.qdeg(); ++a2)
                for (int b2 = 0; b2 <= o.tdeg(); ++b2)
                    grid[a1 + a2][b1 + b2] += c1 * o.grid_[a2][b2];
        }
    return BivariatePolynomial(std::move(grid));
}

BivariatePolynomial BivariatePolynomial::scaled(const mpz_class& c) const {
    std::vector<std::vector<mpz_class>> grid = grid_;
    for (auto& row : grid)
        for (auto& x : row) x *= c;
    return BivariatePolynomial(std::move(grid));
}

UnivariatePolynomial::UnivariatePolynomial(Var var, std::vector<mpz_class> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& UnivariatePolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return coeffs_[k];
}

mpz_class UnivariatePolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BivariatePolynomial UnivariatePolynomial::to_bivariate() const {
    std::vector<std::tuple<int, int, mpz_class>> terms;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (var_ == Var::q)
            terms.emplace_back(k, 0, coeffs_[k]);
        else
            terms.emplace_back(0, k, coeffs_[k]);
    }
    return BivariatePolynomial::from_terms(terms);
}

BivariatePolynomial q_number(int k) {
    if (k < 0) throw std::invalid_argument("q_number needs k >= 0");
    std::vector<std::tuple<int, int, mpz_class>> terms;
    for (int a = 0; a < k; ++a) terms.emplace_back(a, 0, 1);
    return BivariatePolynomial::from_terms(terms);
}

BivariatePolynomial q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial needs n >= 0");
    BivariatePolynomial acc = BivariatePolynomial::constant(1);
    for (int k = 1; k <= n; ++k) acc = acc * q_number(k);
    return acc;
}

UnivariatePolynomial eulerian_polynomial(int n, const Budget& budget) {
    if (n < 1) throw std::invalid_argument("eulerian_polynomial needs n >= 1");
    std::vector<mpz_class> coeffs(n);
    for_each_permutation(
        n, [&](const Permutation& p) { coeffs[perm_descents(p)] += 1; }, budget);
    return UnivariatePolynomial(Var::t, std::move(coeffs));
}

UnivariatePolynomial specialize_q(const BivariatePolynomial& p, long v) {
    std::vector<mpz_class> coeffs(p.tdeg() + 1);
    for (int b = 0; b <= p.tdeg(); ++b) {
        mpz_class acc = 0;
        for (int a = p.qdeg(); a >= 0; --a) acc = acc * v + p.coeff(a, b);
        coeffs[b] = acc;
    }
    return UnivariatePolynomial(Var::t, std::move(coeffs));
}

UnivariatePolynomial specialize_t(const BivariatePolynomial& p, long v) {
    std::vector<mpz_class> coeffs(p.qdeg() + 1);
    for (int a = 0; a <= p.qdeg(); ++a) {
        mpz_class acc = 0;
        for (int b = p.tdeg(); b >= 0; --b) acc = acc * v + p.coeff(a, b);
        coeffs[a] = acc;
    }
    return UnivariatePolynomial(Var::q, std::move(coeffs));
}

}  // namespace treepark
