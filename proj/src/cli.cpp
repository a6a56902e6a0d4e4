#include "idealproj/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "idealproj/errors.hpp"
#include "idealproj/escalier.hpp"
#include "idealproj/finite_difference.hpp"
#include "idealproj/json_io.hpp"
#include "idealproj/lex_tree.hpp"
#include "idealproj/parser.hpp"
#include "idealproj/projector.hpp"

namespace idealproj {

namespace {

// The CLI always runs the concurrent kernels; they are value-identical to
// the serial reference, so output stays byte-stable.
constexpr Exec kExec = Exec::parallel;

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw ValidationError(flag + " \"" + text + "\": " + e.what());
    }
}

std::vector<Rational> parse_h_list(const std::string& text) {
    std::vector<Rational> steps;
    if (text.empty()) return steps;
    std::size_t start = 0;
    std::size_t index = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = comma == std::string::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        const std::string where = "--h-list entry " + std::to_string(index);
        try {
            steps.push_back(Rational::parse(item));
        } catch (const ParseError& e) {
            throw ValidationError(where + " \"" + item + "\": " + e.what());
        }
        if (steps.back().is_zero()) throw ValidationError(where + ": step must be nonzero");
        ++index;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return steps;
}

Polynomial parse_function(const std::string& text, std::size_t dimension) {
    try {
        return parse_polynomial(text, dimension);
    } catch (const ParseError& e) {
        throw ValidationError("--function: " + std::string(e.what()));
    }
}

std::string monomial_list(const std::vector<ExponentVector>& monomials) {
    std::string out;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        if (j > 0) out += ", ";
        out += Polynomial::monomial(monomials[j]).str();
    }
    return out;
}

std::string coefficient_list(const std::vector<Rational>& coefficients) {
    std::string out;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (j > 0) out += ", ";
        out += coefficients[j].str();
    }
    return out;
}

// Display-only decimal approximation; machine-readable output stays exact.
std::string decimal_preview(const Rational& value) {
    std::ostringstream s;
    s << "(~" << std::setprecision(8) << value.to_double() << ")";
    return s.str();
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int cmd_escalier(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    Escalier escalier =
        config.perturb.empty()
            ? range_lex(problem, kExec)
            : range_lex_perturbed(problem,
                                  parse_flag_rational("--perturb", config.perturb), kExec);
    if (config.json) {
        emit(out, envelope("escalier", escalier_to_json(escalier)));
    } else {
        for (const ExponentVector& beta : escalier.monomials) {
            out << Polynomial::monomial(beta).str() << "\n";
        }
    }
    return 0;
}

int cmd_eta(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    EtaBound eta = algorithm1_eta(problem);
    EtaBound eta0sq = eta0_squared(problem);
    if (config.json) {
        emit(out, envelope("eta", nlohmann::json{{"eta", eta.str()},
                                                 {"eta0_squared", eta0sq.str()}}));
    } else {
        out << "eta = " << eta.str() << "\n";
        out << "eta0^2 = " << eta0sq.str() << "\n";
    }
    return 0;
}

int cmd_interpolate(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    Polynomial f = parse_function(config.function_text, problem.dimension);
    Interpolant interpolant =
        config.perturb.empty()
            ? hermite_interpolant(problem, f, kExec)
            : lagrange_interpolant(problem,
                                   parse_flag_rational("--perturb", config.perturb), f,
                                   kExec);
    if (config.json) {
        emit(out, envelope("interpolate", interpolant_to_json(interpolant)));
        return 0;
    }
    if (interpolant.h) out << "h = " << interpolant.h->str() << "\n";
    out << "basis: " << monomial_list(interpolant.basis.monomials) << "\n";
    out << "coefficients: " << coefficient_list(interpolant.coefficients) << "\n";
    out << (interpolant.h ? "P_h f = " : "P f = ") << interpolant.polynomial.str() << "\n";
    return 0;
}

int cmd_converge(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    Polynomial f = parse_function(config.function_text, problem.dimension);
    ConvergenceTable table = convergence_table(problem, f, parse_h_list(config.h_list), kExec);
    if (config.json) {
        emit(out, envelope("converge", table_to_json(table)));
        return 0;
    }
    out << "basis: " << monomial_list(table.basis.monomials) << "\n";
    for (const ConvergenceRow& row : table.rows) {
        if (row.interpolant) {
            out << "h = " << row.h.str() << ": distance = " << row.distance.str() << " "
                << decimal_preview(row.distance)
                << ", P_h f = " << row.interpolant->polynomial.str() << "\n";
        } else {
            out << "h = " << row.h.str() << ": error: " << row.error << "\n";
        }
    }
    out << "P f = " << table.limit.polynomial.str() << "\n";
    return 0;
}

int cmd_border(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    BorderBasis bb =
        config.perturb.empty()
            ? border_basis(problem, kExec)
            : border_basis(problem, parse_flag_rational("--perturb", config.perturb),
                           kExec);
    if (config.json) {
        emit(out, envelope("border", border_to_json(bb)));
        return 0;
    }
    if (bb.h) out << "h = " << bb.h->str() << "\n";
    out << "basis: " << monomial_list(bb.basis.monomials) << "\n";
    for (std::size_t j = 0; j < bb.border.size(); ++j) {
        out << "g[" << Polynomial::monomial(bb.border[j]).str()
            << "] = " << bb.elements[j].str() << "\n";
    }
    return 0;
}

int cmd_tree(const RunConfig& config, std::ostream& out) {
    Problem problem = load_problem(config.problem_path);
    LexTree tree =
        config.perturb.empty()
            ? LexTree::build_tree(algebraic_multiset(problem))
            : LexTree::build_tree(distinct_perturbed_sites(
                  problem, parse_flag_rational("--perturb", config.perturb)));
    const std::string dump = tree.dump_tree(config.tree_format);
    if (config.json) {
        emit(out, envelope("tree", nlohmann::json{{"format", config.tree_format},
                                                  {"nodes", tree.node_count()},
                                                  {"leaves", tree.leaf_count()},
                                                  {"shape", tree.shape().canonical},
                                                  {"dump", dump}}));
        return 0;
    }
    out << dump;
    return 0;
}

Rational factorial(long n) {
    Rational f(1);
    for (long k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    bool identity_ok = true;
    for (long i = 1; i <= 12; ++i) {
        for (long m = 1; m <= i; ++m) {
            const Rational expected = m == i ? factorial(i) : Rational(0);
            if (binomial_sum(i, m) != expected) identity_ok = false;
        }
    }

    std::vector<DifferenceCase> cases = sample_difference_cases(config.seed, config.trials);
    std::size_t passed = 0;
    nlohmann::json failures = nlohmann::json::array();
    std::ostringstream lines;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const DifferenceCase& c = cases[k];
        DifferenceReport report = verify_difference_lemmas(c.p, c.xi, c.order);
        const bool remainder_ok = report.exact_no_remainder || report.support_exceeds_order;
        lines << "case " << std::setw(3) << std::setfill('0') << k << std::setfill(' ')
              << ": low-orders=" << (report.low_orders_vanish ? "ok" : "FAIL")
              << " derivative=" << (report.matched_derivative ? "ok" : "FAIL")
              << " remainder=" << (remainder_ok ? "ok" : "FAIL")
              << " routes=" << (report.routes_match ? "ok" : "FAIL") << "\n";
        if (report.ok) {
            ++passed;
            continue;
        }
        lines << "  p = " << c.p.str() << "\n";
        lines << "  xi = " << c.xi.str() << "\n";
        lines << "  i = " << c.order.str() << "\n";
        lines << "  expansion = " << report.expansion.str("h") << "\n";
        lines << "  derivative = " << report.derivative_value.str() << "\n";
        failures.push_back(nlohmann::json{{"case", k},
                                          {"p", c.p.str()},
                                          {"xi", c.xi.str()},
                                          {"report", report_to_json(report)}});
    }

    const bool all_ok = identity_ok && passed == cases.size();
    if (config.json) {
        emit(out, envelope("verify", nlohmann::json{{"identity_ok", identity_ok},
                                                    {"trials", cases.size()},
                                                    {"seed", config.seed},
                                                    {"passed", passed},
                                                    {"failures", std::move(failures)}}));
        return all_ok ? 0 : 1;
    }
    out << "binomial identity (1 <= m <= i <= 12): " << (identity_ok ? "ok" : "FAIL")
        << "\n";
    out << lines.str();
    out << "verified " << passed << "/" << cases.size() << " cases\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "escalier") return cmd_escalier(config, out);
        if (config.subcommand == "eta") return cmd_eta(config, out);
        if (config.subcommand == "interpolate") return cmd_interpolate(config, out);
        if (config.subcommand == "converge") return cmd_converge(config, out);
        if (config.subcommand == "border") return cmd_border(config, out);
        if (config.subcommand == "tree") return cmd_tree(config, out);
        if (config.subcommand == "verify") return cmd_verify(config, out);
        err << "error: unknown subcommand \"" << config.subcommand << "\"\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"exact projectors of type partial derivative", "idealproj"};
    app.require_subcommand(1);

    auto add_problem = [&config](CLI::App* cmd) {
        cmd->add_option("problem", config.problem_path, "problem JSON file")->required();
    };
    auto add_json = [&config](CLI::App* cmd) {
        cmd->add_flag("--json", config.json, "emit a {\"command\", \"result\"} envelope");
    };
    auto add_perturb = [&config](CLI::App* cmd) {
        cmd->add_option("--perturb", config.perturb,
                        "step h: use point evaluations at the moved sites");
    };

    CLI::App* escalier = app.add_subcommand("escalier", "lex escalier of the conditions");
    add_problem(escalier);
    add_perturb(escalier);
    add_json(escalier);

    CLI::App* eta = app.add_subcommand("eta", "perturbation bounds eta and eta0^2");
    add_problem(eta);
    add_json(eta);

    CLI::App* interpolate =
        app.add_subcommand("interpolate", "project --function onto the escalier span");
    add_problem(interpolate);
    interpolate->add_option("--function", config.function_text, "polynomial expression")
        ->required();
    add_perturb(interpolate);
    add_json(interpolate);

    CLI::App* converge =
        app.add_subcommand("converge", "perturbed interpolants against the exact limit");
    add_problem(converge);
    converge->add_option("--function", config.function_text, "polynomial expression")
        ->required();
    converge->add_option("--h-list", config.h_list,
                         "comma-separated steps, e.g. 1/10,1/100,1/1000");
    add_json(converge);

    CLI::App* border = app.add_subcommand("border", "border basis of the kernel ideal");
    add_problem(border);
    add_perturb(border);
    add_json(border);

    CLI::App* tree = app.add_subcommand("tree", "coordinate-suffix tree of the conditions");
    add_problem(tree);
    tree->add_option("--format", config.tree_format, "ascii or dot")
        ->check(CLI::IsMember({"ascii", "dot"}));
    add_perturb(tree);
    add_json(tree);

    CLI::App* verify =
        app.add_subcommand("verify", "difference-expansion structure checks");
    verify->add_option("--trials", config.trials, "number of randomized cases");
    verify->add_option("--seed", config.seed, "generator seed");
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    return run(config, out, err);
}

}  // namespace idealproj
