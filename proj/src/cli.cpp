#include "sandpile/cli.hpp"

#include "sandpile/critgroup.hpp"
#include "sandpile/exactla.hpp"
#include "sandpile/reduction.hpp"
#include "sandpile/seq.hpp"
#include "sandpile/textio.hpp"
#include "sandpile/treecount.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace sandpile::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_family_size(std::size_t n, const char* what = "n")
{
    if (n < 3)
        throw UsageError(std::string(what) + " must be at least 3, got " + std::to_string(n));
}

Json decimal_list(const std::vector<Integer>& values)
{
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(to_string(v));
    return arr;
}

std::string join(const std::vector<Integer>& values)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? " " : "") << values[i];
    return os.str();
}

Json check_json(const std::string& name, bool pass, const std::string& detail)
{
    return Json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

void emit_group(std::ostream& out, bool json, const std::string& command, std::optional<std::size_t> n,
                const AbelianGroup& group, Json extra = Json::object())
{
    if (json) {
        Json doc{{"command", command}};
        if (n)
            doc["n"] = std::to_string(*n);
        doc["invariant_factors"] = decimal_list(group.invariant_factors());
        doc["order"] = to_string(group.order());
        for (auto& [k, v] : extra.items())
            doc[k] = v;
        out << doc.dump() << '\n';
        return;
    }
    out << "group: " << group.to_string() << '\n';
    out << "invariant factors: " << join(group.invariant_factors()) << '\n';
    out << "order: " << group.order() << '\n';
}

} // namespace

NRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like A..B, got '" + text + "'");
    auto number = [&](const std::string& part) -> std::size_t {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad range bound '" + part + "' in '" + text + "'");
        return std::stoul(part);
    };
    NRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    require_family_size(r.first, "range start");
    if (r.last < r.first)
        throw UsageError("empty range '" + text + "'");
    return r;
}

namespace {

VerifyEntry verify_one(std::size_t n, bool pipeline)
{
    VerifyEntry entry{n, false, {}};
    try {
        const auto closed = closed_form_group(n);
        const auto relations = group_via_relations(n);
        const auto full = group_of_graph(c4xcn(n));
        const auto trees = tree_count_closed(n);
        std::ostringstream detail;
        bool ok = true;
        if (closed != relations || closed != full) {
            ok = false;
            detail << "closed=" << closed.to_string() << " relations=" << relations.to_string()
                   << " laplacian=" << full.to_string();
        } else {
            detail << closed.to_string();
        }
        if (closed.order() != trees) {
            ok = false;
            detail << "; order " << closed.order() << " != tree count " << trees;
        }
        if (pipeline) {
            const auto report = reduction::verify_reduction_pipeline(n);
            if (!report.all_passed) {
                ok = false;
                for (const auto& c : report.stage_checks)
                    if (!c.passed)
                        detail << "; stage " << c.name << ": " << c.detail;
            } else {
                detail << "; pipeline ok (" << report.stage_checks.size() << " stages)";
            }
        }
        entry.passed = ok;
        entry.detail = detail.str();
    } catch (const std::exception& ex) {
        entry.detail = std::string("error: ") + ex.what();
    }
    return entry;
}

} // namespace

VerifySummary run_verify(NRange range, bool pipeline, unsigned jobs)
{
    const auto start = std::chrono::steady_clock::now();
    VerifySummary summary;
    summary.range = range;
    const std::size_t count = range.last - range.first + 1;
    summary.entries.resize(count);

    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;)
            summary.entries[i] = verify_one(range.first + i, pipeline);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }

    for (const auto& e : summary.entries)
        if (!e.passed) {
            summary.first_failure = e.n;
            break;
        }
    summary.elapsed = std::chrono::steady_clock::now() - start;
    return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Critical groups and spanning-tree counts of C4 x Cn and other multigraphs", "sandpile"};
    app.require_subcommand(1);
    bool json = false;

    // group
    auto* group_cmd = app.add_subcommand("group", "Critical group of C4 x Cn");
    std::size_t group_n = 0;
    std::string method = "closed";
    group_cmd->add_option("n", group_n, "cycle length n >= 3")->required();
    group_cmd->add_option("--method", method, "closed | relations | snf")
        ->check(CLI::IsMember({"closed", "relations", "snf"}));
    group_cmd->add_flag("--json", json, "machine-readable output");

    // treecount
    auto* tree_cmd = app.add_subcommand("treecount", "Spanning-tree count of C4 x Cn");
    std::size_t tree_n = 0;
    std::string tree_check = "none";
    double tolerance = 1e-9;
    tree_cmd->add_option("n", tree_n, "cycle length n >= 3")->required();
    tree_cmd->add_option("--check", tree_check, "none | matrix | trig | all")
        ->check(CLI::IsMember({"none", "matrix", "trig", "all"}));
    tree_cmd->add_option("--tolerance", tolerance, "relative tolerance of the cosine-product check");
    tree_cmd->add_flag("--json", json, "machine-readable output");

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "Terms 0..N of e, f, h, g, u(m) or v(m)");
    std::string seq_kind;
    std::size_t upto = 0;
    std::optional<std::uint64_t> seq_m;
    seq_cmd->add_option("kind", seq_kind, "e | f | h | g | u | v")
        ->required()
        ->check(CLI::IsMember({"e", "f", "h", "g", "u", "v"}));
    seq_cmd->add_option("--upto", upto, "last index")->required();
    seq_cmd->add_option("--m", seq_m, "recurrence parameter for u and v (default 2)");
    seq_cmd->add_flag("--json", json, "machine-readable output");

    // valuations
    auto* val_cmd = app.add_subcommand("valuations", "Predicted vs observed 2- and 3-adic valuations of e_n, f_n");
    std::size_t val_upto = 0;
    val_cmd->add_option("--upto", val_upto, "last n (>= 2)")->required();
    val_cmd->add_flag("--json", json, "machine-readable output");

    // subgroup
    auto* sub_cmd = app.add_subcommand("subgroup", "Factor-wise divisibility of K(C4 x C_n1) into K(C4 x C_n2)");
    std::size_t sub_n1 = 0, sub_n2 = 0;
    sub_cmd->add_option("n1", sub_n1)->required();
    sub_cmd->add_option("n2", sub_n2)->required();
    sub_cmd->add_flag("--json", json, "machine-readable output");

    // snf
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix file");
    std::string matrix_path;
    bool transforms = false;
    snf_cmd->add_option("--matrix", matrix_path, "file: 'rows cols' then entries")->required();
    snf_cmd->add_flag("--transforms", transforms, "also print unimodular P, Q with P*A*Q = D");
    snf_cmd->add_flag("--json", json, "machine-readable output");

    // graph-group
    auto* gg_cmd = app.add_subcommand("graph-group", "Critical group of a multigraph edge list");
    std::string edges_path;
    gg_cmd->add_option("--edges", edges_path, "edge-list file")->required();
    gg_cmd->add_flag("--json", json, "machine-readable output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed form, relations SNF and Laplacian SNF");
    std::string range_text;
    bool pipeline = false;
    unsigned jobs = 0;
    verify_cmd->add_option("--range", range_text, "A..B")->required();
    verify_cmd->add_flag("--pipeline", pipeline, "also run the staged reduction checks");
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");
    verify_cmd->add_flag("--json", json, "machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "sandpile: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (group_cmd->parsed()) {
            require_family_size(group_n);
            AbelianGroup g;
            if (method == "closed")
                g = closed_form_group(group_n);
            else if (method == "relations")
                g = group_via_relations(group_n);
            else
                g = group_of_graph(c4xcn(group_n));
            emit_group(out, json, "group", group_n, g, Json{{"method", method}});
            return kExitOk;
        }

        if (tree_cmd->parsed()) {
            require_family_size(tree_n);
            if (!(tolerance > 0))
                throw UsageError("--tolerance must be positive");
            const bool matrix = tree_check == "matrix" || tree_check == "all";
            const bool trig = tree_check == "trig" || tree_check == "all";
            const auto report = tree_count_report(tree_n, matrix, trig ? std::optional<double>(tolerance) : std::nullopt);
            Json checks = Json::array();
            if (report.matrix_tree)
                checks.push_back(check_json("matrix-tree", *report.matrix_tree == report.closed_form,
                                            "cofactor=" + to_string(*report.matrix_tree)));
            if (report.trig_log_residual) {
                std::ostringstream d;
                d << "relative residual " << std::setprecision(3) << *report.trig_log_residual << " (tolerance "
                  << tolerance << ")";
                checks.push_back(check_json("cosine-product", std::fabs(*report.trig_log_residual) <= tolerance, d.str()));
            }
            if (json) {
                Json doc{{"command", "treecount"}, {"n", std::to_string(tree_n)},
                         {"tree_count", to_string(report.closed_form)}};
                if (!checks.empty())
                    doc["checks"] = checks;
                out << doc.dump() << '\n';
            } else {
                out << "spanning trees of C4 x C" << tree_n << ": " << report.closed_form << '\n';
                for (const auto& c : checks)
                    out << c["name"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL") << " ("
                        << c["detail"].get<std::string>() << ")\n";
            }
            return report.passed ? kExitOk : kExitVerificationFailed;
        }

        if (seq_cmd->parsed()) {
            std::vector<Integer> terms;
            const bool parametric = seq_kind == "u" || seq_kind == "v";
            if (seq_m && !parametric)
                throw UsageError("--m applies only to u and v");
            const std::uint64_t m = seq_m.value_or(2);
            if (m == 0)
                throw UsageError("--m must be positive");
            if (seq_kind == "u")
                terms = seq::u_terms(m, upto + 1);
            else if (seq_kind == "v")
                terms = seq::v_terms(m, upto + 1);
            else {
                const seq::SeqKind kind = seq_kind == "e"   ? seq::SeqKind::E
                                          : seq_kind == "f" ? seq::SeqKind::F
                                          : seq_kind == "h" ? seq::SeqKind::H
                                                            : seq::SeqKind::G;
                terms = seq::derived_terms(kind, upto + 1);
            }
            if (json) {
                Json doc{{"command", "seq"}, {"sequence", seq_kind}};
                if (parametric)
                    doc["m"] = std::to_string(m);
                doc["terms"] = decimal_list(terms);
                out << doc.dump() << '\n';
            } else {
                for (std::size_t i = 0; i < terms.size(); ++i)
                    out << i << ' ' << terms[i] << '\n';
            }
            return kExitOk;
        }

        if (val_cmd->parsed()) {
            if (val_upto < 2)
                throw UsageError("--upto must be at least 2");
            const auto e = seq::derived_terms(seq::SeqKind::E, val_upto + 1);
            const auto f = seq::derived_terms(seq::SeqKind::F, val_upto + 1);
            Json checks = Json::array();
            std::size_t failures = 0;
            for (std::size_t n = 2; n <= val_upto; ++n) {
                std::ostringstream detail;
                bool ok = true;
                for (auto kind : {seq::ValuationKind::E, seq::ValuationKind::F})
                    for (unsigned prime : {2u, 3u}) {
                        const auto predicted = seq::predicted_valuation(kind, prime, n).predicted_exponent;
                        const auto observed = seq::observed_valuation(
                            kind == seq::ValuationKind::E ? e[n] : f[n], Integer(prime));
                        ok = ok && predicted == observed;
                        detail << (kind == seq::ValuationKind::E ? 'e' : 'f') << ":T" << prime << '=' << observed
                               << (predicted == observed ? "" : "(predicted " + std::to_string(predicted) + ")") << ' ';
                    }
                if (!ok)
                    ++failures;
                std::string d = detail.str();
                d.pop_back();
                if (json)
                    checks.push_back(check_json("n=" + std::to_string(n), ok, d));
                else if (!ok)
                    out << "n=" << n << " MISMATCH " << d << '\n';
            }
            if (json)
                out << Json{{"command", "valuations"}, {"checks", checks}}.dump() << '\n';
            else
                out << "valuations 2.." << val_upto << ": " << (val_upto - 1 - failures) << " of " << (val_upto - 1)
                    << " agree\n";
            return failures == 0 ? kExitOk : kExitVerificationFailed;
        }

        if (sub_cmd->parsed()) {
            require_family_size(sub_n1, "n1");
            require_family_size(sub_n2, "n2");
            const bool holds = subgroup_check(sub_n1, sub_n2);
            const std::string detail = closed_form_group(sub_n1).to_string() + " into " + closed_form_group(sub_n2).to_string();
            if (json) {
                Json doc{{"command", "subgroup"}, {"n1", std::to_string(sub_n1)}, {"n2", std::to_string(sub_n2)},
                         {"checks", Json::array({check_json("factorwise-divisibility", holds, detail)})}};
                out << doc.dump() << '\n';
            } else {
                out << (holds ? "true" : "false") << ": " << detail << '\n';
            }
            return holds ? kExitOk : kExitVerificationFailed;
        }

        if (snf_cmd->parsed()) {
            IntegerMatrix a;
            try {
                a = read_matrix_file(matrix_path);
            } catch (const std::exception& ex) {
                throw UsageError(ex.what());
            }
            const auto result = snf(a, transforms);
            if (json) {
                Json doc{{"command", "snf"}, {"diagonal", decimal_list(result.diagonal)}};
                if (result.transforms) {
                    auto dump = [](const IntegerMatrix& m) {
                        Json rows = Json::array();
                        for (std::size_t r = 0; r < m.rows(); ++r) {
                            std::vector<Integer> row;
                            for (std::size_t c = 0; c < m.cols(); ++c)
                                row.push_back(m(r, c));
                            rows.push_back(decimal_list(row));
                        }
                        return rows;
                    };
                    doc["left_transform"] = dump(result.transforms->left);
                    doc["right_transform"] = dump(result.transforms->right);
                }
                out << doc.dump() << '\n';
            } else {
                out << join(result.diagonal) << '\n';
                if (result.transforms)
                    out << "P =\n" << result.transforms->left << "Q =\n" << result.transforms->right;
            }
            return kExitOk;
        }

        if (gg_cmd->parsed()) {
            Multigraph g(1);
            try {
                g = read_edge_list_file(edges_path);
            } catch (const std::exception& ex) {
                throw UsageError(ex.what());
            }
            AbelianGroup group;
            try {
                group = group_of_graph(g);
            } catch (const std::domain_error& ex) {
                throw UsageError(ex.what());
            }
            emit_group(out, json, "graph-group", std::nullopt, group);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            const auto range = parse_range(range_text);
            const auto summary = run_verify(range, pipeline, jobs);
            const std::string range_str = std::to_string(range.first) + ".." + std::to_string(range.last);
            if (json) {
                Json checks = Json::array();
                for (const auto& e : summary.entries)
                    checks.push_back(check_json("n=" + std::to_string(e.n), e.passed, e.detail));
                Json doc{{"command", "verify"}, {"range", range_str}, {"checks", checks}};
                if (summary.first_failure)
                    doc["first_failure"] = std::to_string(*summary.first_failure);
                out << doc.dump() << '\n';
            } else {
                for (const auto& e : summary.entries)
                    out << "n=" << e.n << ' ' << (e.passed ? "ok" : "FAIL") << ' ' << e.detail << '\n';
                if (summary.first_failure)
                    out << "verify " << range_str << ": FAILED, first failure at n=" << *summary.first_failure << '\n';
                else
                    out << "verify " << range_str << ": all " << summary.entries.size() << " passed\n";
            }
            err << "elapsed " << std::fixed << std::setprecision(3) << summary.elapsed.count() << " s\n";
            return summary.first_failure ? kExitVerificationFailed : kExitOk;
        }
    } catch (const UsageError& ex) {
        err << "sandpile: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "sandpile: " << ex.what() << '\n';
        return kExitUsage;
    }
    err << "sandpile: no subcommand\n";
    return kExitUsage;
}

} // namespace sandpile::cli
