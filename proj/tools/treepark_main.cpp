#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treepark/enumerate.hpp"
#include "treepark/serialize.hpp"
#include "treepark/verify.hpp"

namespace {

using namespace treepark;

// Exit codes: 0 success, 1 a check failed (counterexample found), 2 usage
// error, 3 budget refusal.
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    int n = 0;
    int max_n = 0;
    unsigned threads = 1;
    unsigned shards = 0;  // 0 = follow threads
    std::string format = "text";
    std::string out;
    bool budget_override = false;
};

Budget make_budget(const Options& opt) {
    Budget b;
    b.unlimited = opt.budget_override;
    if (const char* env = std::getenv("TREEPARK_BUDGET")) {
        try {
            b.limit = std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("TREEPARK_BUDGET must be an unsigned integer");
        }
    }
    return b;
}

unsigned effective_shards(const Options& opt) {
    const unsigned shards = opt.shards == 0 ? opt.threads : opt.shards;
    if (shards < opt.threads)
        std::cerr << "warning: shard_count " << shards << " below thread count "
                  << opt.threads << "; extra threads will idle\n";
    return shards;
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << payload;
}

void add_common(CLI::App* cmd, Options& opt, bool wants_n, bool wants_max_n) {
    if (wants_n) cmd->add_option("--n", opt.n, "object size n")->required();
    if (wants_max_n) cmd->add_option("--max-n", opt.max_n, "largest n")->required();
    cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--shards", opt.shards, "shard count (default: one per thread)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    cmd->add_flag("--budget-override", opt.budget_override,
                  "run even when the object space exceeds the safety budget");
}

int emit_reports(const Options& opt, const std::vector<CheckReport>& reports) {
    emit(opt, format_reports(reports, parse_format(opt.format)));
    for (const CheckReport& r : reports) {
        if (r.verdict == Verdict::fails) {
            std::cerr << "COUNTEREXAMPLE: " << r.claim_id << " fails at n=" << r.n << "\n";
            return kExitCounterexample;
        }
    }
    return kExitOk;
}

DistributionSpec tree_spec(int n) {
    return {ObjectKind::tree, QStat::tree_inv, TStat::leaves_minus_one, n};
}

DistributionSpec pf_spec(int n) {
    return {ObjectKind::parking_function, QStat::cosum, TStat::exced, n};
}

std::string format_sequence(const std::vector<mpz_class>& seq, Format fmt) {
    switch (fmt) {
        case Format::csv: {
            std::string out = "n,value\n";
            for (size_t i = 0; i < seq.size(); ++i)
                out += std::to_string(i) + "," + seq[i].get_str() + "\n";
            return out;
        }
        case Format::json: {
            std::string out = "[";
            for (size_t i = 0; i < seq.size(); ++i) {
                if (i) out += ",";
                out += "\"" + seq[i].get_str() + "\"";
            }
            return out + "]\n";
        }
        case Format::text: {
            std::string out;
            for (size_t i = 0; i < seq.size(); ++i)
                out += std::to_string(i) + ": " + seq[i].get_str() + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact enumeration of tree-inversion and parking-function polynomials"};
    app.require_subcommand(1);

    Options opt;
    std::string which;        // leaf selector for check/triangle
    std::string spec_in;      // input file for specialize
    long spec_q = 0, spec_t = 0;

    // poly tree|pf|recurrence
    CLI::App* poly = app.add_subcommand("poly", "compute a generating polynomial");
    poly->require_subcommand(1);
    CLI::App* poly_tree = poly->add_subcommand("tree", "tree tally: q^inv t^(lev-1)");
    add_common(poly_tree, opt, true, false);
    CLI::App* poly_pf = poly->add_subcommand("pf", "parking tally: q^cosum t^exced");
    add_common(poly_pf, opt, true, false);
    CLI::App* poly_rec = poly->add_subcommand("recurrence", "recurrence fast paths");
    poly_rec->require_subcommand(1);
    CLI::App* rec_krew = poly_rec->add_subcommand("kreweras", "I_n(q) by convolution");
    add_common(rec_krew, opt, true, false);
    CLI::App* rec_sy =
        poly_rec->add_subcommand("stanley-yin", "I_n(q,t) by the t-deformed recurrence");
    add_common(rec_sy, opt, true, false);

    // specialize
    CLI::App* spec = app.add_subcommand("specialize", "substitute a value for q or t");
    CLI::Option* oq = spec->add_option("--q", spec_q, "value for q");
    CLI::Option* ot = spec->add_option("--t", spec_t, "value for t");
    oq->excludes(ot);
    spec->add_option("--in", spec_in, "polynomial JSON file (default: stdin)");
    add_common(spec, opt, false, false);

    // check <claim> --n N
    CLI::App* check = app.add_subcommand("check", "verify a theorem or conjecture at size n");
    check->require_subcommand(1);
    for (const char* name :
         {"theorem1", "stanley-yin", "conjecture-des", "conjecture-minus-one", "counts"}) {
        CLI::App* c = check->add_subcommand(name, "");
        add_common(c, opt, true, false);
        c->callback([&which, name] { which = name; });
    }

    // table minus-one --max-n N
    CLI::App* table = app.add_subcommand("table", "reference tables");
    table->require_subcommand(1);
    CLI::App* table_m1 =
        table->add_subcommand("minus-one", "both q=-1 specializations, n=1..max-n");
    add_common(table_m1, opt, false, true);

    // triangle simsun|zigzag --max-n N
    CLI::App* tri = app.add_subcommand("triangle", "reference triangles and sequences");
    tri->require_subcommand(1);
    CLI::App* tri_sim = tri->add_subcommand("simsun", "simsun permutations by descents");
    add_common(tri_sim, opt, false, true);
    CLI::App* tri_zig = tri->add_subcommand("zigzag", "zigzag numbers E_0..E_max-n");
    add_common(tri_zig, opt, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format fmt = parse_format(opt.format);
        const Budget budget = make_budget(opt);

        if (poly_tree->parsed() || poly_pf->parsed()) {
            const DistributionSpec ds = poly_tree->parsed() ? tree_spec(opt.n) : pf_spec(opt.n);
            const BivariatePolynomial p = tally(ds, effective_shards(opt), opt.threads, budget);
            emit(opt, format_polynomial(p, fmt));
            return kExitOk;
        }
        if (rec_krew->parsed()) {
            emit(opt, format_polynomial(kreweras_recurrence(opt.n), fmt));
            return kExitOk;
        }
        if (rec_sy->parsed()) {
            emit(opt, format_polynomial(stanley_yin_recurrence(opt.n), fmt));
            return kExitOk;
        }
        if (spec->parsed()) {
            if (!*oq && !*ot) throw CLI::ValidationError("specialize needs --q or --t");
            std::string text;
            if (spec_in.empty()) {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else {
                std::ifstream f(spec_in);
                if (!f) throw std::runtime_error("cannot open input file: " + spec_in);
                std::ostringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            }
            const BivariatePolynomial p = parse_polynomial_json(text);
            const UnivariatePolynomial r = *oq ? specialize_q(p, spec_q) : specialize_t(p, spec_t);
            emit(opt, format_polynomial(r, fmt));
            return kExitOk;
        }
        if (check->parsed()) {
            const CheckOptions copts{effective_shards(opt), opt.threads, budget};
            std::vector<CheckReport> reports;
            if (which == "theorem1") reports = check_theorem1(opt.n, copts);
            else if (which == "stanley-yin") reports = {check_stanley_yin(opt.n, copts)};
            else if (which == "conjecture-des") reports = {check_conjecture_des(opt.n, copts)};
            else if (which == "conjecture-minus-one")
                reports = check_conjecture_minus_one(opt.n, copts);
            else reports = {check_counts(opt.n, copts)};
            return emit_reports(opt, reports);
        }
        if (table_m1->parsed()) {
            const CheckOptions copts{effective_shards(opt), opt.threads, budget};
            std::vector<MinusOneRow> rows;
            for (int n = 1; n <= opt.max_n; ++n) {
                rows.emplace_back(
                    n,
                    specialize_q(tally(tree_spec(n), copts.shards, copts.threads, budget), -1),
                    specialize_q(tally(pf_spec(n), copts.shards, copts.threads, budget), -1));
            }
            emit(opt, format_minus_one_table(rows, fmt));
            return kExitOk;
        }
        if (tri_sim->parsed()) {
            emit(opt, format_triangle(simsun_descent_triangle(opt.max_n, budget), fmt));
            return kExitOk;
        }
        if (tri_zig->parsed()) {
            emit(opt, format_sequence(zigzag_numbers(opt.max_n), fmt));
            return kExitOk;
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
