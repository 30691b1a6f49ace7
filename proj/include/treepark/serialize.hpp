#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "treepark/bipoly.hpp"
#include "treepark/verify.hpp"

// Output formats. Coefficients are decimal strings in JSON so consumers with
// 53-bit numbers cannot truncate them. Term order is fully specified, which
// makes identical runs byte-identical:
//   * json/csv: (q exponent desc, t exponent desc)
//   * text: (total degree desc, q exponent desc), the order the reference
//     tables are printed in.
namespace treepark {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

std::string format_polynomial(const BivariatePolynomial& p, Format fmt);
std::string format_polynomial(const UnivariatePolynomial& p, Format fmt);

// Inverse of the JSON form: {"vars":["q","t"],"terms":[{"q":a,"t":b,"coeff":"c"},...]}.
BivariatePolynomial parse_polynomial_json(const std::string& text);

std::string format_reports(const std::vector<CheckReport>& reports, Format fmt);

// Rows indexed from n = 1.
std::string format_triangle(const std::vector<std::vector<mpz_class>>& rows, Format fmt);

// Rows (n, I_n(-1,t), Itilde_n(-1,t)).
using MinusOneRow = std::tuple<int, UnivariatePolynomial, UnivariatePolynomial>;
std::string format_minus_one_table(const std::vector<MinusOneRow>& rows, Format fmt);

}  // namespace treepark
