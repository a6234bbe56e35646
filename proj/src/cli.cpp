#include "sgp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgp/errors.hpp"
#include "sgp/generators.hpp"
#include "sgp/io.hpp"

namespace sgp {

namespace {

using io::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int verdict_exit(const Verdict& v) {
    return v.in_sgp() ? kExitInSgp : kExitNotSgp;
}

struct CheckArgs {
    std::string input;
    std::string mode = "reduced";
    std::size_t max_naive = kDefaultOracleBound;
    unsigned workers = 1;
};

int run_check(const CheckArgs& args, std::ostream& out) {
    PointSet points = io::parse_point_set_text(read_input(args.input));
    NaiveOptions naive_opts;
    naive_opts.max_points = args.max_naive;
    ReducedOptions reduced_opts;
    reduced_opts.workers = args.workers;
    if (args.mode == "reduced") {
        Verdict v = check_sgp_reduced(points, reduced_opts);
        out << io::to_json(v).dump() << '\n';
        return verdict_exit(v);
    }
    if (args.mode == "naive") {
        Verdict v = check_sgp_naive(points, naive_opts);
        out << io::to_json(v).dump() << '\n';
        return verdict_exit(v);
    }
    Verdict naive = check_sgp_naive(points, naive_opts);
    Verdict reduced = check_sgp_reduced(points, reduced_opts);
    json doc = {{"reduced", io::to_json(reduced)},
                {"naive", io::to_json(naive)},
                {"agree", naive.status == reduced.status}};
    out << doc.dump() << '\n';
    return verdict_exit(reduced);
}

int run_gp(const std::string& input, std::ostream& out) {
    PointSet points = io::parse_point_set_text(read_input(input));
    GeneralPositionResult gp = is_general_position(points);
    json doc = {{"general_position", gp.in_general_position}, {"gp_polynomial", to_string(gp_polynomial(points))}};
    if (!gp) {
        std::vector<std::size_t> labels;
        for (auto i : gp.witness) {
            labels.push_back(i + 1);
        }
        doc["witness"] = labels;
    }
    out << doc.dump() << '\n';
    return gp ? kExitInSgp : kExitNotSgp;
}

int run_count(std::size_t n, std::size_t d, bool naive, std::size_t max_naive, std::ostream& out) {
    ConditionCounts counts = count_conditions(n, d, naive, max_naive);
    json doc = {{"n", n}, {"d", d}, {"reduced", io::to_json(counts)}};
    if (counts.naive) {
        if (counts.reduced_total() > 0) {
            doc["ratio"] = static_cast<double>(*counts.naive) / static_cast<double>(counts.reduced_total());
        }
    }
    out << doc.dump() << '\n';
    return 0;
}

int run_certify(const std::string& input, const std::string& family_text, std::ostream& out) {
    PointSet points = io::parse_point_set_text(read_input(input));
    json family_doc;
    try {
        family_doc = json::parse(family_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed family JSON: ") + e.what());
    }
    SubsetFamily family = io::parse_family(family_doc, points.size());
    const long d = static_cast<long>(points.dim());
    const long eps = family.deficiency_sum(points.dim());
    json doc = {{"family", io::to_json(family)},
                {"deficiency_sum", eps},
                {"intersection_dim", intersection_dim(points, family)}};
    if (eps == d) {
        Case1Certificate cert = case1_certificate(points, family);
        doc["case"] = "I";
        doc["det_A"] = to_string(cert.value);
        doc["point"] = cert.point ? io::to_json(*cert.point) : json(nullptr);
    } else if (eps > d) {
        Case2Certificate cert = case2_certificate(points, family);
        doc["case"] = "II";
        doc["P"] = cert.value ? json(to_string(*cert.value)) : json(nullptr);
        doc["rank_A_minus"] = cert.rank_a_minus;
        doc["q"] = cert.q;
        doc["empty_certified"] = cert.full_column_rank();
    } else {
        throw DomainError("certificates need deficiencies summing to at least d");
    }
    out << doc.dump() << '\n';
    return 0;
}

std::vector<Rational> parse_params(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const auto& s : raw) {
        out.push_back(parse_rational(s));
    }
    return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact strong-general-position checks for finite point sets"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Decide strong general position");
    check_cmd->add_option("--input", check.input, "Point set JSON file ('-' for stdin)")->required();
    check_cmd->add_option("--mode", check.mode, "reduced, naive or both")
        ->check(CLI::IsMember({"reduced", "naive", "both"}));
    check_cmd->add_option("--max-naive", check.max_naive, "Largest point count the exhaustive checker accepts");
    check_cmd->add_option("--workers", check.workers, "Threads for the reduced checker")->check(CLI::PositiveNumber);

    std::string gp_input;
    auto* gp_cmd = app.add_subcommand("gp", "Ordinary general position and its certificate polynomial");
    gp_cmd->add_option("--input", gp_input, "Point set JSON file ('-' for stdin)")->required();

    std::size_t count_n = 0;
    std::size_t count_d = 0;
    bool count_naive = false;
    std::size_t count_max_naive = kDefaultOracleBound;
    auto* count_cmd = app.add_subcommand("count", "Count reduced (and optionally exhaustive) conditions");
    count_cmd->add_option("--n", count_n, "Number of points")->required();
    count_cmd->add_option("--d", count_d, "Ambient dimension")->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--naive", count_naive, "Also count the exhaustive stream");
    count_cmd->add_option("--max-naive", count_max_naive, "Largest n for the exhaustive count");

    std::string cert_input;
    std::string cert_family;
    auto* cert_cmd = app.add_subcommand("certify", "Evaluate the determinant certificate of one family");
    cert_cmd->add_option("--input", cert_input, "Point set JSON file ('-' for stdin)")->required();
    cert_cmd->add_option("--family", cert_family, "Family as JSON, e.g. [[1,4],[2,5],[3,6]]")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Write a generated point set as JSON");
    gen_cmd->require_subcommand(1);
    std::size_t moment_d = 2;
    std::vector<std::string> moment_t;
    auto* moment_cmd = gen_cmd->add_subcommand("moment", "Points on the moment curve");
    moment_cmd->add_option("--d", moment_d, "Dimension")->check(CLI::PositiveNumber);
    moment_cmd->add_option("--t", moment_t, "Curve parameters (integers or p/q)")->required()->delimiter(',');
    auto* hexagon_cmd = gen_cmd->add_subcommand("hexagon", "Centrally symmetric hexagon: in general position, not SGP");
    std::size_t rand_d = 2;
    std::size_t rand_n = 5;
    std::uint64_t rand_seed = 0;
    std::uint64_t rand_bound = 10;
    auto* random_cmd = gen_cmd->add_subcommand("random", "Seeded random rational points");
    random_cmd->add_option("--d", rand_d, "Dimension")->check(CLI::PositiveNumber);
    random_cmd->add_option("--n", rand_n, "Number of points")->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", rand_seed, "Seed");
    random_cmd->add_option("--denom-bound", rand_bound, "Largest denominator")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*check_cmd) {
            return run_check(check, out);
        }
        if (*gp_cmd) {
            return run_gp(gp_input, out);
        }
        if (*count_cmd) {
            return run_count(count_n, count_d, count_naive, count_max_naive, out);
        }
        if (*cert_cmd) {
            return run_certify(cert_input, cert_family, out);
        }
        if (*moment_cmd) {
            out << io::to_json(gen_moment_curve(moment_d, parse_params(moment_t))).dump() << '\n';
        } else if (*hexagon_cmd) {
            out << io::to_json(gen_hexagon_counterexample()).dump() << '\n';
        } else if (*random_cmd) {
            out << io::to_json(gen_random_rational(rand_d, rand_n, rand_seed, rand_bound)).dump() << '\n';
        }
        return 0;
    } catch (const OracleBoundError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOracleBound;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace sgp
