#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jacobsthal/classic_sequences.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/identity_suite.hpp"
#include "jacobsthal/kvalue.hpp"
#include "jacobsthal/matrix_sequences.hpp"
#include "jacobsthal/report_json.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace jacobsthal::cli {

namespace {

const std::vector<std::string> kTermFamilies{"J", "j", "T", "t", "Jc", "Kc", "Z", "Y"};
const std::vector<std::string> kMatrixFamilies{"M", "N", "Jn", "jn"};

struct Options {
    std::string family;
    std::string k;
    long n = 0;
    long from = 0;
    long to = 0;
    std::string format = "pretty";
    std::string out_path;
    std::string identity;
    std::string k_list = "1/2,1,2,3,7/3,sym";
    std::string n_range = "1..10";
    std::string m_range = "1..10";
};

bool is_classic(const std::string& family) {
    return family == "Jc" || family == "Kc" || family == "Z" || family == "Y";
}

KValue require_k(const Options& opt, const std::string& family) {
    if (opt.k.empty()) throw UsageError("family " + family + " requires --k");
    return KValue::parse(opt.k);
}

std::string term_value(const Options& opt, const std::string& family, long n) {
    if (family == "Z") return std::to_string(residue_z(n));
    if (family == "Y") return std::to_string(residue_y(n));
    if (family == "Jc") return jac3_classic(n).get_str();
    if (family == "Kc") return modified_lucas_classic(n).get_str();
    static const std::map<std::string, SequenceFamily> kFamilies{
        {"J", SequenceFamily::J}, {"j", SequenceFamily::j},
        {"T", SequenceFamily::T}, {"t", SequenceFamily::t}};
    return render(evaluate_term(kFamilies.at(family), require_k(opt, family), n).value);
}

void emit_matrix(const RenderedMatrix& m, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << matrix_to_json(m).dump() << '\n';
        return;
    }
    if (format == "csv") {
        for (const auto& row : m) out << row[0] << ',' << row[1] << ',' << row[2] << '\n';
        return;
    }
    std::array<std::size_t, 3> width{};
    for (const auto& row : m) {
        for (std::size_t c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : m) {
        out << "[ ";
        for (std::size_t c = 0; c < 3; ++c) {
            out << std::string(width[c] - row[c].size(), ' ') << row[c]
                << (c + 1 < 3 ? "  " : " ]\n");
        }
    }
}

int run_term(const Options& opt, std::ostream& out) {
    out << term_value(opt, opt.family, opt.n) << '\n';
    return kSuccess;
}

int run_matrix(const Options& opt, std::ostream& out) {
    static const std::map<std::string, MatrixFamily> kFamilies{
        {"M", MatrixFamily::M}, {"N", MatrixFamily::N},
        {"Jn", MatrixFamily::Jmat}, {"jn", MatrixFamily::jmat}};
    const KValue k = require_k(opt, opt.family);
    emit_matrix(render(evaluate_matrix(kFamilies.at(opt.family), k, opt.n).matrix), opt.format,
                out);
    return kSuccess;
}

int run_table(const Options& opt, std::ostream& out) {
    if (opt.from > opt.to) {
        throw UsageError("empty range " + std::to_string(opt.from) + ".." + std::to_string(opt.to));
    }
    if (!is_classic(opt.family)) require_k(opt, opt.family);
    std::vector<std::pair<long, std::string>> rows;
    for (long n = opt.from; n <= opt.to; ++n) rows.emplace_back(n, term_value(opt, opt.family, n));

    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [n, v] : rows) arr.push_back(nlohmann::json::array({n, v}));
        out << arr.dump() << '\n';
    } else if (opt.format == "csv") {
        out << "n,value\n";
        for (const auto& [n, v] : rows) out << n << ',' << v << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& row : rows) width = std::max(width, std::to_string(row.first).size());
        for (const auto& [n, v] : rows) {
            const std::string index = std::to_string(n);
            out << std::string(width - index.size(), ' ') << index << "  " << v << '\n';
        }
    }
    return kSuccess;
}

std::vector<KValue> parse_k_list(const std::string& text) {
    std::vector<KValue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(KValue::parse(item));
    if (out.empty()) throw UsageError("empty k list");
    return out;
}

void emit_pretty_report(const VerificationReport& r, std::ostream& out) {
    out << (r.passed ? "PASS " : "FAIL ") << r.identity << " checks=" << r.checks_performed;
    if (r.extension) out << " (extension)";
    out << '\n';
    if (!r.counterexample) return;
    const Counterexample& c = *r.counterexample;
    out << "  counterexample: k=" << c.k;
    if (c.m) out << " m=" << *c.m;
    out << " n=" << c.n << '\n';
    const auto side = [&](const char* label, const Rendered& v) {
        out << "  " << label << ":\n";
        if (const auto* s = std::get_if<std::string>(&v)) {
            out << "    " << *s << '\n';
        } else {
            std::ostringstream grid;
            emit_matrix(std::get<RenderedMatrix>(v), "pretty", grid);
            std::string line;
            std::istringstream lines(grid.str());
            while (std::getline(lines, line)) out << "    " << line << '\n';
        }
    };
    side("lhs", c.lhs);
    side("rhs", c.rhs);
}

int run_verify(const Options& opt, std::ostream& out) {
    const std::vector<KValue> ks = parse_k_list(opt.k_list);
    const IndexRange n = IndexRange::parse(opt.n_range);
    const IndexRange m = IndexRange::parse(opt.m_range);

    std::vector<VerificationReport> reports;
    if (opt.identity == "all") {
        reports = verify_all(ks, n, m);
    } else {
        reports.push_back(verify_identity(opt.identity, ks, n, m));
    }

    if (opt.format == "json") {
        out << reports_to_json(reports).dump() << '\n';
    } else {
        const auto passed = std::count_if(reports.begin(), reports.end(),
                                          [](const auto& r) { return r.passed; });
        for (const auto& r : reports) emit_pretty_report(r, out);
        out << passed << '/' << reports.size() << " identities passed\n";
    }
    return all_passed(reports) ? kSuccess : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Third-order k-Jacobsthal sequences, matrices and identity checks", "jacobsthal"};
    app.require_subcommand(1);
    Options opt;

    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "Write the payload to this file instead of stdout");
    };

    CLI::App* term = app.add_subcommand("term", "Evaluate one sequence term");
    term->add_option("--family", opt.family, "J, j, T, t, Jc, Kc, Z or Y")
        ->required()
        ->check(CLI::IsMember(kTermFamilies));
    term->add_option("--k", opt.k, "Positive rational p/q, or sym");
    term->add_option("--n", opt.n, "Index")->required();
    add_out(term);

    CLI::App* matrix = app.add_subcommand("matrix", "Emit a 3x3 matrix sequence term");
    matrix->add_option("--family", opt.family, "M, N, Jn or jn")
        ->required()
        ->check(CLI::IsMember(kMatrixFamilies));
    matrix->add_option("--k", opt.k, "Positive rational p/q, or sym")->required();
    matrix->add_option("--n", opt.n, "Index")->required();
    matrix->add_option("--format", opt.format)->check(CLI::IsMember({"pretty", "json", "csv"}));
    add_out(matrix);

    CLI::App* table = app.add_subcommand("table", "Tabulate a sequence over an index range");
    table->add_option("--family", opt.family, "J, j, T, t, Jc, Kc, Z or Y")
        ->required()
        ->check(CLI::IsMember(kTermFamilies));
    table->add_option("--k", opt.k, "Positive rational p/q, or sym");
    table->add_option("--from", opt.from, "First index")->required();
    table->add_option("--to", opt.to, "Last index (inclusive)")->required();
    table->add_option("--format", opt.format)->check(CLI::IsMember({"pretty", "json", "csv"}));
    add_out(table);

    CLI::App* verify = app.add_subcommand("verify", "Check identities over an index grid");
    verify->add_option("--identity", opt.identity, "Identity name, or all")->required();
    verify->add_option("--k", opt.k_list, "Comma-separated k values (p/q or sym)");
    verify->add_option("--n", opt.n_range, "Index range a..b");
    verify->add_option("--m", opt.m_range, "Second index range a..b");
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"pretty", "json"}));
    add_out(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    std::ostringstream payload;
    int code = kSuccess;
    try {
        if (term->parsed()) {
            code = run_term(opt, payload);
        } else if (matrix->parsed()) {
            code = run_matrix(opt, payload);
        } else if (table->parsed()) {
            code = run_table(opt, payload);
        } else {
            code = run_verify(opt, payload);
        }
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kIdentityFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (opt.out_path.empty()) {
        out << payload.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        file << payload.str();
        if (!file) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return kUsageError;
        }
    }
    return code;
}

}  // namespace jacobsthal::cli
