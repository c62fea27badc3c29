// niep - construct and verify nonnegative matrices with prescribed spectra.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "niep/cli.hpp"
#include "niep/errors.hpp"

namespace {

std::vector<double> parse_comma_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("expected a comma-separated list of numbers, got '" +
                                       text + "'");
        }
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructions for the nonnegative inverse eigenvalue problem,\n"
                 "verified with an independent eigenvalue solver."};
    app.require_subcommand(1);

    niep::JobSpec job;
    std::string sign_flag = "+";
    std::string branch_flag = "+";
    std::string variant_flag = "general";
    std::string pairing_flag = "sorted";
    std::string format_flag = "json";
    std::string phi1_flag, phi2_flag;
    double tol_flag = 0.0;
    bool tol_given = false;
    std::string out_flag;
    std::string batch_input;

    const auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option_function<double>(
               "--tol",
               [&](double v) {
                   tol_flag = v;
                   tol_given = true;
               },
               "tolerance override (default: scale-aware 1e-9)");
        cmd->add_option("--out", out_flag, "output path (default: stdout)");
        if (with_format)
            cmd->add_option("--format", format_flag, "output format")
                ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };
    const auto add_gamma_sign = [&](CLI::App* cmd) {
        cmd->add_option("--gamma", job.gamma, "scale for the second spectrum, in [0,1]");
        cmd->add_option("--sign", sign_flag, "interleaving sign")
            ->check(CLI::IsMember({"+", "-"}));
    };

    auto* check = app.add_subcommand("check", "necessary-condition diagnostics for a list");
    check->add_option("spectrum", job.inputs, "spectrum JSON (path or inline)")
        ->required()
        ->expected(1);
    check->add_option("-K,--power-sums", job.power_sum_count, "power sums s_1..s_K to test");
    check->add_option("-M,--jll-depth", job.jll_depth, "JLL exponents m = 1..M to test");
    add_common(check, false);

    auto* realize =
        app.add_subcommand("realize-suleimanova", "realize a Suleimanova list");
    realize->add_option("spectrum", job.inputs, "spectrum JSON (path or inline)")
        ->required()
        ->expected(1);
    add_common(realize, true);

    auto* pair = app.add_subcommand(
        "realize-pair", "realize two lists jointly as one permutative matrix");
    pair->add_option("spectra", job.inputs, "sigma_s and sigma_c JSON (paths or inline)")
        ->required()
        ->expected(2);
    add_gamma_sign(pair);
    pair->add_option("--pairing", pairing_flag, "how sigma_c entries face sigma_s entries")
        ->check(CLI::IsMember({"sorted", "search", "given"}));
    add_common(pair, true);

    auto* even = app.add_subcommand("compose-even", "interleave two matrices of equal order");
    even->add_option("matrices", job.inputs, "S and C matrix JSON (paths or inline)")
        ->required()
        ->expected(2);
    add_gamma_sign(even);
    add_common(even, true);

    auto* odd = app.add_subcommand("compose-odd",
                                   "interleave S of order n+1 with C of order n");
    odd->add_option("matrices", job.inputs, "S and C matrix JSON (paths or inline)")
        ->required()
        ->expected(2);
    add_gamma_sign(odd);
    odd->add_option("--phi1", phi1_flag, "bottom-row split, first parts (comma-separated)");
    odd->add_option("--phi2", phi2_flag, "bottom-row split, second parts (comma-separated)");
    add_common(odd, true);

    auto* circ = app.add_subcommand(
        "circulant", "circulant from a first row, or first row from a spectrum");
    circ->add_option("input", job.inputs, "row or spectrum JSON (path or inline)")
        ->required()
        ->expected(1);
    add_common(circ, true);

    auto* guo = app.add_subcommand("guo", "Perron-increasing perturbation of a circulant list");
    guo->add_option("spectrum", job.inputs, "spectrum JSON in DFT-index order")
        ->required()
        ->expected(1);
    guo->add_option("--t", job.t, "perturbation size (>= 0)");
    guo->add_option("--theta", job.theta, "phase in radians (general variant)");
    guo->add_option("--branch", branch_flag, "sign branch")->check(CLI::IsMember({"+", "-"}));
    guo->add_option("--variant", variant_flag, "perturbation variant")
        ->check(CLI::IsMember({"general", "even-middle"}));
    add_common(guo, true);

    auto* gpair = app.add_subcommand(
        "guo-pair", "paired even-middle perturbation composed into one permutative matrix");
    gpair->add_option("spectra", job.inputs, "sigma1 and sigma2 JSON in DFT-index order")
        ->required()
        ->expected(2);
    gpair->add_option("--t1", job.t1, "perturbation of the first list (t1 >= |t2|)");
    gpair->add_option("--t2", job.t2, "perturbation of the second list");
    gpair->add_option("--branch", branch_flag, "sign branch applied to both lists")
        ->check(CLI::IsMember({"+", "-"}));
    add_gamma_sign(gpair);
    add_common(gpair, true);

    auto* verify = app.add_subcommand("verify", "match a matrix against an expected spectrum");
    verify->add_option("inputs", job.inputs, "matrix and spectrum JSON (paths or inline)")
        ->required()
        ->expected(2);
    add_common(verify, false);

    auto* extract =
        app.add_subcommand("extract", "recover the two summand matrices from a composition");
    extract->add_option("matrix", job.inputs, "matrix JSON (path or inline)")
        ->required()
        ->expected(1);
    add_common(extract, false);

    auto* batch = app.add_subcommand("batch", "run a JSON array of jobs, one result line each");
    batch->add_option("jobs", batch_input, "jobs JSON (path or inline)")->required();
    batch->add_option("--out", out_flag, "report path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (tol_given) {
        job.tol = tol_flag;
    } else if (const char* env = std::getenv("NIEP_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0') job.tol = v;
    }
    job.sign = sign_flag == "-" ? -1 : +1;
    job.branch = branch_flag == "-" ? -1 : +1;
    job.variant =
        variant_flag == "even-middle" ? niep::GuoVariant::EvenMiddle : niep::GuoVariant::General;
    job.pairing = pairing_flag == "search"  ? niep::PairingPolicy::Search
                  : pairing_flag == "given" ? niep::PairingPolicy::Given
                                            : niep::PairingPolicy::Sorted;
    job.format = format_flag == "csv"      ? niep::OutputFormat::Csv
                 : format_flag == "pretty" ? niep::OutputFormat::Pretty
                                           : niep::OutputFormat::Json;
    if (!out_flag.empty()) job.out = out_flag;
    try {
        if (!phi1_flag.empty()) job.phi1 = parse_comma_list(phi1_flag);
        if (!phi2_flag.empty()) job.phi2 = parse_comma_list(phi2_flag);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return niep::kExitIoError;
    }

    if (batch->parsed()) {
        std::string text;
        try {
            const auto pos = batch_input.find_first_not_of(" \t\r\n");
            if (pos != std::string::npos &&
                (batch_input[pos] == '[' || batch_input[pos] == '{')) {
                text = batch_input;
            } else {
                std::ifstream in(batch_input, std::ios::binary);
                if (!in) {
                    std::cerr << "input error: cannot read jobs file: " << batch_input << "\n";
                    return niep::kExitIoError;
                }
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return niep::kExitIoError;
        }
        if (job.out) {
            std::ofstream f(*job.out, std::ios::binary);
            if (!f) {
                std::cerr << "input error: cannot write report file: " << *job.out << "\n";
                return niep::kExitIoError;
            }
            return niep::run_batch(text, f, std::cerr);
        }
        return niep::run_batch(text, std::cout, std::cerr);
    }

    job.command = app.get_subcommands().front()->get_name();
    return niep::run(job, std::cout, std::cerr);
}
