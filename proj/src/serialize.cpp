#include "treepark/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace treepark {

namespace {

struct Term {
    int qexp;
    int texp;
    mpz_class coeff;
};

std::vector<Term> collect_terms(const BivariatePolynomial& p) {
    std::vector<Term> terms;
    for (int a = p.qdeg(); a >= 0; --a)
        for (int b = p.tdeg(); b >= 0; --b)
            if (p.coeff(a, b) != 0) terms.push_back({a, b, p.coeff(a, b)});
    return terms;  // already (q desc, t desc)
}

std::string monomial(const Term& t) {
    std::string s;
    const mpz_class mag = abs(t.coeff);
    if (mag != 1 || (t.qexp == 0 && t.texp == 0)) s += mag.get_str();
    if (t.qexp == 1) s += "q";
    else if (t.qexp > 1) s += "q^" + std::to_string(t.qexp);
    if (t.texp == 1) s += "t";
    else if (t.texp > 1) s += "t^" + std::to_string(t.texp);
    return s;
}

std::string text_form(const BivariatePolynomial& p) {
    std::vector<Term> terms = collect_terms(p);
    if (terms.empty()) return "0";
    // Total degree desc, q exponent desc: the print order of the tables.
    std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        const int dx = x.qexp + x.texp, dy = y.qexp + y.texp;
        if (dx != dy) return dx > dy;
        return x.qexp > y.qexp;
    });
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].coeff < 0) out += "-";
        } else {
            out += terms[i].coeff < 0 ? " - " : " + ";
        }
        out += monomial(terms[i]);
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::json witness_json(const Witness& w) {
    return {{"q", w.qexp}, {"t", w.texp}, {"lhs", w.lhs.get_str()}, {"rhs", w.rhs.get_str()}};
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_polynomial(const BivariatePolynomial& p, Format fmt) {
    const std::vector<Term> terms = collect_terms(p);
    switch (fmt) {
        case Format::json: {
            nlohmann::json j;
            j["vars"] = {"q", "t"};
            j["terms"] = nlohmann::json::array();
            for (const Term& t : terms)
                j["terms"].push_back(
                    {{"q", t.qexp}, {"t", t.texp}, {"coeff", t.coeff.get_str()}});
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::string out = "q_exp,t_exp,coeff\n";
            for (const Term& t : terms)
                out += std::to_string(t.qexp) + "," + std::to_string(t.texp) + "," +
                       t.coeff.get_str() + "\n";
            return out;
        }
        case Format::text:
            return text_form(p) + "\n";
    }
    throw std::logic_error("unreachable");
}

std::string format_polynomial(const UnivariatePolynomial& p, Format fmt) {
    return format_polynomial(p.to_bivariate(), fmt);
}

BivariatePolynomial parse_polynomial_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::tuple<int, int, mpz_class>> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at("q").get<int>(), t.at("t").get<int>(),
                           mpz_class(t.at("coeff").get<std::string>()));
    return BivariatePolynomial::from_terms(terms);
}

std::string format_reports(const std::vector<CheckReport>& reports, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const CheckReport& r : reports) {
                nlohmann::json j{{"claim", r.claim_id},
                                 {"n", r.n},
                                 {"verdict", to_string(r.verdict)},
                                 {"object_count", r.object_count},
                                 {"elapsed_seconds", r.elapsed_seconds}};
                if (!r.note.empty()) j["note"] = r.note;
                if (r.witness) j["witness"] = witness_json(*r.witness);
                arr.push_back(std::move(j));
            }
            return arr.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out =
                "claim,n,verdict,witness_q_exp,witness_t_exp,lhs,rhs,object_count,note\n";
            for (const CheckReport& r : reports) {
                out += csv_escape(r.claim_id) + "," + std::to_string(r.n) + "," +
                       to_string(r.verdict) + ",";
                if (r.witness)
                    out += std::to_string(r.witness->qexp) + "," +
                           std::to_string(r.witness->texp) + "," + r.witness->lhs.get_str() +
                           "," + r.witness->rhs.get_str();
                else
                    out += ",,,";
                out += "," + std::to_string(r.object_count) + "," + csv_escape(r.note) + "\n";
            }
            return out;
        }
        case Format::text: {
            std::string out;
            for (const CheckReport& r : reports) {
                out += r.claim_id + " n=" + std::to_string(r.n) + " " + to_string(r.verdict);
                if (r.witness) {
                    const Witness& w = *r.witness;
                    out += " first difference at q^" + std::to_string(w.qexp) + " t^" +
                           std::to_string(w.texp) + ": " + w.lhs.get_str() + " vs " +
                           w.rhs.get_str();
                }
                if (!r.note.empty()) out += " (" + r.note + ")";
                out += " [objects=" + std::to_string(r.object_count) + "]\n";
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string format_triangle(const std::vector<std::vector<mpz_class>>& rows, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (size_t i = 0; i < rows.size(); ++i) {
                nlohmann::json vals = nlohmann::json::array();
                for (const mpz_class& v : rows[i]) vals.push_back(v.get_str());
                arr.push_back({{"n", i + 1}, {"values", std::move(vals)}});
            }
            return arr.dump() + "\n";
        }
        case Format::csv: {
            std::string out = "n,k,value\n";
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t k = 0; k < rows[i].size(); ++k)
                    out += std::to_string(i + 1) + "," + std::to_string(k) + "," +
                           rows[i][k].get_str() + "\n";
            return out;
        }
        case Format::text: {
            std::string out;
            for (size_t i = 0; i < rows.size(); ++i) {
                out += std::to_string(i + 1) + ":";
                for (const mpz_class& v : rows[i]) out += " " + v.get_str();
                out += "\n";
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string format_minus_one_table(const std::vector<MinusOneRow>& rows, Format fmt) {
    switch (fmt) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [n, tree, pf] : rows) {
                std::string ts = format_polynomial(tree, Format::text);
                std::string ps = format_polynomial(pf, Format::text);
                ts.pop_back();
                ps.pop_back();
                arr.push_back({{"n", n}, {"tree", ts}, {"pf", ps}});
            }
            return arr.dump(2) + "\n";
        }
        case Format::csv:
        case Format::text: {
            std::string out = fmt == Format::csv ? "n,tree,pf\n" : "";
            for (const auto& [n, tree, pf] : rows) {
                std::string ts = format_polynomial(tree, Format::text);
                std::string ps = format_polynomial(pf, Format::text);
                ts.pop_back();
                ps.pop_back();
                if (fmt == Format::csv)
                    out += std::to_string(n) + "," + csv_escape(ts) + "," + csv_escape(ps) +
                           "\n";
                else
                    out += std::to_string(n) + " | " + ts + " | " + ps + "\n";
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace treepark
