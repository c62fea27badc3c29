#include "niep/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "json_detail.hpp"
#include "niep/eig.hpp"
#include "niep/errors.hpp"
#include "niep/json_io.hpp"
#include "niep/permutative.hpp"

namespace niep {

namespace {

using detail::json;

std::string load_input(const std::string& spec) {
    const auto pos = spec.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && spec[pos] == '{') return spec;  // inline JSON
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw ParseError("cannot read input file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string& input_at(const JobSpec& job, std::size_t i, const char* name) {
    if (i >= job.inputs.size())
        throw ParseError("command " + job.command + " is missing input <" + name + ">");
    return job.inputs[i];
}

Spectrum load_spectrum(const JobSpec& job, std::size_t i, const char* name) {
    return parse_spectrum(load_input(input_at(job, i, name)));
}

DenseMatrix load_matrix(const JobSpec& job, std::size_t i, const char* name) {
    return parse_matrix(load_input(input_at(job, i, name)));
}

Spectrum scaled_union(const Spectrum& a, const Spectrum& b, double factor) {
    Spectrum u = a;
    u.values.reserve(a.size() + b.size());
    for (Complex z : b.values) u.values.push_back(factor * z);
    return u;
}

std::string format_distance(double d) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << d;
    return s.str();
}

struct Outcome {
    json doc;
    std::optional<DenseMatrix> matrix;  // artifact rendered by csv/pretty formats
    int exit_code = kExitOk;
    std::string err_note;               // one diagnostic line, when relevant
    std::string verification_summary;   // one-line report for non-JSON formats
};

// Verifies a constructed matrix against its expected spectrum and embeds
// both the matrix and the report in the outcome. Every construction command
// funnels through here; nothing is emitted unverified.
void attach_verification(Outcome& oc, const JobSpec& job, const Spectrum& expected,
                         const DenseMatrix& m) {
    const double tol = job.tol ? *job.tol : default_tol(m);
    const VerificationReport report = spectra_match(expected, eigenvalues(m), tol);
    oc.doc["matrix"] = detail::matrix_to_json(m);
    oc.doc["verification"] = detail::report_to_json(report);
    oc.matrix = m;
    oc.verification_summary = std::string("verification: ") +
                              (report.passed ? "passed" : "FAILED") +
                              " (max matched distance " + format_distance(report.max_distance) +
                              ", tol " + format_distance(tol) + ")";
    if (!report.passed) {
        oc.exit_code = kExitVerifyFailed;
        oc.err_note = "verification failed: max matched distance " +
                      format_distance(report.max_distance) + " exceeds tol " +
                      format_distance(tol);
    }
}

Outcome cmd_check(const JobSpec& job) {
    const Spectrum sigma = load_spectrum(job, 0, "spectrum");
    const double tol = job.tol ? *job.tol : default_tol(sigma);
    const NecessaryReport report =
        check_necessary(sigma, job.power_sum_count, job.jll_depth, tol);
    Outcome oc;
    oc.doc = json{{"command", "check"},
                  {"report", detail::necessary_to_json(report)},
                  {"suleimanova", is_suleimanova(sigma, tol)}};
    if (!report.passed()) {
        oc.exit_code = kExitGateFailed;
        oc.err_note = "necessary condition failed: " + report.first_failure();
    }
    return oc;
}

Outcome cmd_realize_suleimanova(const JobSpec& job) {
    const Spectrum sigma = load_spectrum(job, 0, "spectrum");
    const DenseMatrix m = realize_suleimanova(sigma, job.tol ? *job.tol : -1.0);
    Outcome oc;
    oc.doc = json{{"command", "realize-suleimanova"}};
    attach_verification(oc, job, sigma, m);
    return oc;
}

Outcome cmd_realize_pair(const JobSpec& job) {
    const Spectrum sigma_s = load_spectrum(job, 0, "sigma_s");
    const Spectrum sigma_c = load_spectrum(job, 1, "sigma_c");
    const CompositionParams p{job.gamma, job.sign};
    const DenseMatrix m =
        realize_pair_suleimanova(sigma_s, sigma_c, p, job.pairing, job.tol ? *job.tol : -1.0);
    Outcome oc;
    oc.doc = json{{"command", "realize-pair"}, {"gamma", job.gamma}, {"sign", job.sign}};
    attach_verification(oc, job, scaled_union(sigma_s, sigma_c, job.gamma * job.sign), m);
    return oc;
}

Outcome cmd_compose_even(const JobSpec& job) {
    const DenseMatrix S = load_matrix(job, 0, "S");
    const DenseMatrix C = load_matrix(job, 1, "C");
    const CompositionParams p{job.gamma, job.sign};
    const DenseMatrix m = compose_even(S, C, p);
    const Spectrum sigma_s = eigenvalues(S);
    const Spectrum sigma_c = eigenvalues(C);
    Outcome oc;
    oc.doc = json{{"command", "compose-even"},
                  {"gamma", job.gamma},
                  {"sign", job.sign},
                  {"sigma_s", detail::spectrum_to_json(sigma_s)},
                  {"sigma_c", detail::spectrum_to_json(sigma_c)}};
    attach_verification(oc, job, scaled_union(sigma_s, sigma_c, job.gamma * job.sign), m);
    return oc;
}

OddTail tail_for(const JobSpec& job, const DenseMatrix& S) {
    if (job.phi1.has_value() != job.phi2.has_value())
        throw ParseError("--phi1 and --phi2 must be given together");
    if (!job.phi1) return OddTail::equal_split(S);
    return OddTail{*job.phi1, *job.phi2};
}

Outcome cmd_compose_odd(const JobSpec& job) {
    const DenseMatrix S = load_matrix(job, 0, "S");
    const DenseMatrix C = load_matrix(job, 1, "C");
    const CompositionParams p{job.gamma, job.sign};
    const DenseMatrix m = compose_odd(S, C, p, tail_for(job, S));
    const Spectrum sigma_s = eigenvalues(S);
    const Spectrum sigma_c = eigenvalues(C);
    Outcome oc;
    oc.doc = json{{"command", "compose-odd"},
                  {"gamma", job.gamma},
                  {"sign", job.sign},
                  {"sigma_s", detail::spectrum_to_json(sigma_s)},
                  {"sigma_c", detail::spectrum_to_json(sigma_c)}};
    attach_verification(oc, job, scaled_union(sigma_s, sigma_c, job.gamma * job.sign), m);
    return oc;
}

// Shared by `circulant` (spectrum direction) and `guo`: invert the DFT,
// flag realness/nonnegativity, clamp roundoff negatives, and realize the
// circulant when the row is real.
Outcome row_outcome(const JobSpec& job, const char* command, const Spectrum& target) {
    const CirculantRow raw = circulant_from_spectrum(target);
    const double tol = job.tol ? *job.tol : default_tol(target);
    Outcome oc;
    oc.doc = json{{"command", command}, {"row", detail::row_to_json(raw)}};

    if (!raw.is_real(tol)) {
        oc.doc["row_is_real"] = false;
        // no real circulant exists; verify the construction by DFT round trip
        const VerificationReport report = spectra_match(target, circulant_spectrum(raw),
                                                        job.tol ? *job.tol : default_tol(target));
        oc.doc["verification"] = detail::report_to_json(report);
        oc.verification_summary = std::string("verification: ") +
                                  (report.passed ? "passed" : "FAILED") +
                                  " (DFT round trip, max distance " +
                                  format_distance(report.max_distance) + ")";
        if (!report.passed) {
            oc.exit_code = kExitVerifyFailed;
            oc.err_note = "verification failed: DFT round trip distance " +
                          format_distance(report.max_distance);
        }
        return oc;
    }

    constexpr double kFloor = -1e-12;
    double max_clamped = 0.0;
    bool nonneg = true;
    std::vector<double> entries(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        entries[i] = raw.row[i].real();
        if (entries[i] < 0.0 && entries[i] >= kFloor) {
            max_clamped = std::max(max_clamped, -entries[i]);
            entries[i] = 0.0;
        }
        if (entries[i] < 0.0) nonneg = false;
    }
    const CirculantRow row = CirculantRow::from_reals(entries);
    oc.doc["row"] = detail::row_to_json(row);
    oc.doc["row_is_real"] = true;
    oc.doc["row_is_nonnegative"] = nonneg;
    if (max_clamped > 0.0) oc.doc["max_clamped"] = max_clamped;
    attach_verification(oc, job, target, circulant_matrix(row));
    return oc;
}

Outcome cmd_circulant(const JobSpec& job) {
    const json input = detail::parse_text(load_input(input_at(job, 0, "row-or-spectrum")));
    if (input.is_object() && input.contains("row")) {
        const CirculantRow r = detail::row_from_json(input);
        const Spectrum sigma = circulant_spectrum(r);
        Outcome oc;
        oc.doc = json{{"command", "circulant"},
                      {"row", detail::row_to_json(r)},
                      {"spectrum", detail::spectrum_to_json(sigma)}};
        attach_verification(oc, job, sigma, circulant_matrix(r));
        return oc;
    }
    if (input.is_object() && input.contains("values")) {
        const Spectrum sigma = detail::spectrum_from_json(input);
        Outcome oc = row_outcome(job, "circulant", sigma);
        oc.doc["spectrum"] = detail::spectrum_to_json(sigma);
        return oc;
    }
    throw ParseError("circulant: input must contain either \"row\" or \"values\"");
}

Outcome cmd_guo(const JobSpec& job) {
    const Spectrum sigma = load_spectrum(job, 0, "spectrum");
    const GuoParams params{job.t, job.theta, job.branch, job.variant};
    const Spectrum perturbed = guo_perturb(sigma, params);
    Outcome oc = row_outcome(job, "guo", perturbed);
    oc.doc["perturbed_spectrum"] = detail::spectrum_to_json(perturbed);
    oc.doc["t"] = job.t;
    oc.doc["theta"] = job.theta;
    oc.doc["branch"] = job.branch;
    oc.doc["variant"] = job.variant == GuoVariant::General ? "general" : "even-middle";
    return oc;
}

Outcome cmd_guo_pair(const JobSpec& job) {
    const Spectrum sigma1 = load_spectrum(job, 0, "sigma1");
    const Spectrum sigma2 = load_spectrum(job, 1, "sigma2");
    const CompositionParams p{job.gamma, job.sign};
    const GuoPairResult res = guo_pair_compose(sigma1, sigma2, job.t1, job.t2, job.branch, p);
    Outcome oc;
    oc.doc = json{{"command", "guo-pair"},
                  {"t1", job.t1},
                  {"t2", job.t2},
                  {"branch", job.branch},
                  {"gamma", job.gamma},
                  {"sign", job.sign},
                  {"row_s", detail::row_to_json(res.row_s)},
                  {"row_c", detail::row_to_json(res.row_c)},
                  {"sigma_s", detail::spectrum_to_json(res.sigma_s)},
                  {"sigma_c", detail::spectrum_to_json(res.sigma_c)},
                  {"max_clamped", res.max_clamped}};
    const double dtol = job.tol ? *job.tol : default_tol(res.matrix);
    oc.doc["permutative"] = detect_permutative(res.matrix, dtol).has_value();
    attach_verification(oc, job,
                        scaled_union(res.sigma_s, res.sigma_c, job.gamma * job.sign), res.matrix);
    return oc;
}

Outcome cmd_verify(const JobSpec& job) {
    const DenseMatrix a = load_matrix(job, 0, "matrix");
    const Spectrum sigma = load_spectrum(job, 1, "spectrum");
    const double tol = job.tol ? *job.tol : default_tol(a);
    const VerificationReport report = spectra_match(sigma, eigenvalues(a), tol);
    Outcome oc;
    oc.doc = json{{"command", "verify"}, {"verification", detail::report_to_json(report)}};
    if (!report.passed) {
        oc.exit_code = kExitVerifyFailed;
        oc.err_note = "verification failed: max matched distance " +
                      format_distance(report.max_distance) + " exceeds tol " +
                      format_distance(tol);
    }
    return oc;
}

Outcome cmd_extract(const JobSpec& job) {
    const DenseMatrix a = load_matrix(job, 0, "matrix");
    const double tol = job.tol ? *job.tol : default_tol(a);
    const bool odd = a.rows() % 2 != 0;
    const auto [S, C] = odd ? extract_odd(a, tol) : extract_even(a, tol);
    Spectrum expected = eigenvalues(S);
    if (!C.empty()) expected = scaled_union(expected, eigenvalues(C), 1.0);
    const VerificationReport report =
        spectra_match(expected, eigenvalues(a), job.tol ? *job.tol : default_tol(a));
    Outcome oc;
    oc.doc = json{{"command", "extract"},
                  {"odd", odd},
                  {"S", detail::matrix_to_json(S)},
                  {"C", detail::matrix_to_json(C)},
                  {"verification", detail::report_to_json(report)}};
    if (!report.passed) {
        oc.exit_code = kExitVerifyFailed;
        oc.err_note = "verification failed: extracted spectra do not recombine";
    }
    return oc;
}

Outcome dispatch(const JobSpec& job) {
    if (job.command == "check") return cmd_check(job);
    if (job.command == "realize-suleimanova") return cmd_realize_suleimanova(job);
    if (job.command == "realize-pair") return cmd_realize_pair(job);
    if (job.command == "compose-even") return cmd_compose_even(job);
    if (job.command == "compose-odd") return cmd_compose_odd(job);
    if (job.command == "circulant") return cmd_circulant(job);
    if (job.command == "guo") return cmd_guo(job);
    if (job.command == "guo-pair") return cmd_guo_pair(job);
    if (job.command == "verify") return cmd_verify(job);
    if (job.command == "extract") return cmd_extract(job);
    throw ParseError("unknown command: " + job.command);
}

void write_text(const JobSpec& job, const std::string& text, std::ostream& out) {
    if (job.out) {
        std::ofstream f(*job.out, std::ios::binary);
        if (!f) throw ParseError("cannot write output file: " + *job.out);
        f << text;
    } else {
        out << text;
    }
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        Outcome oc = dispatch(job);
        std::string text;
        if (oc.matrix && job.format != OutputFormat::Json) {
            text = emit(*oc.matrix, job.format) + "\n";
            if (!oc.verification_summary.empty()) err << oc.verification_summary << "\n";
        } else {
            text = oc.doc.dump(2) + "\n";
        }
        write_text(job, text, out);
        if (!oc.err_note.empty()) err << oc.err_note << "\n";
        return oc.exit_code;
    } catch (const GateError& e) {
        err << "gate failed [" << e.condition() << "] " << e.what() << "\n";
        return kExitGateFailed;
    } catch (const DimensionError& e) {
        err << "gate failed [dimensions] " << e.what() << "\n";
        return kExitGateFailed;
    } catch (const ConvergenceError& e) {
        err << "verification incomplete: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    }
}

namespace {

int parse_sign_field(const json& j, const char* name) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "+" || s == "+1") return 1;
        if (s == "-" || s == "-1") return -1;
    } else if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v == 1 || v == -1) return v;
    }
    throw ParseError(std::string(name) + " must be \"+\" or \"-\"");
}

std::vector<double> parse_real_vector(const json& j, const char* name) {
    if (!j.is_array()) throw ParseError(std::string(name) + " must be an array of numbers");
    std::vector<double> v;
    v.reserve(j.size());
    for (const json& x : j) {
        if (!x.is_number()) throw ParseError(std::string(name) + " must contain numbers only");
        v.push_back(x.get<double>());
    }
    return v;
}

JobSpec job_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("each batch entry must be an object");
    JobSpec job;
    if (!j.contains("command") || !j["command"].is_string())
        throw ParseError("batch entry needs a string \"command\"");
    job.command = j["command"].get<std::string>();
    if (j.contains("inputs")) {
        if (!j["inputs"].is_array()) throw ParseError("\"inputs\" must be an array");
        for (const json& in : j["inputs"]) {
            if (in.is_string())
                job.inputs.push_back(in.get<std::string>());
            else if (in.is_object())
                job.inputs.push_back(in.dump());  // inline document
            else
                throw ParseError("each input must be a path string or an inline object");
        }
    }
    if (j.contains("gamma")) job.gamma = j["gamma"].get<double>();
    if (j.contains("sign")) job.sign = parse_sign_field(j["sign"], "sign");
    if (j.contains("t")) job.t = j["t"].get<double>();
    if (j.contains("t1")) job.t1 = j["t1"].get<double>();
    if (j.contains("t2")) job.t2 = j["t2"].get<double>();
    if (j.contains("theta")) job.theta = j["theta"].get<double>();
    if (j.contains("branch")) job.branch = parse_sign_field(j["branch"], "branch");
    if (j.contains("variant")) {
        const auto v = j["variant"].get<std::string>();
        if (v == "general")
            job.variant = GuoVariant::General;
        else if (v == "even-middle")
            job.variant = GuoVariant::EvenMiddle;
        else
            throw ParseError("variant must be \"general\" or \"even-middle\"");
    }
    if (j.contains("phi1")) job.phi1 = parse_real_vector(j["phi1"], "phi1");
    if (j.contains("phi2")) job.phi2 = parse_real_vector(j["phi2"], "phi2");
    if (j.contains("tol")) job.tol = j["tol"].get<double>();
    if (j.contains("pairing")) {
        const auto v = j["pairing"].get<std::string>();
        if (v == "sorted")
            job.pairing = PairingPolicy::Sorted;
        else if (v == "search")
            job.pairing = PairingPolicy::Search;
        else if (v == "given")
            job.pairing = PairingPolicy::Given;
        else
            throw ParseError("pairing must be \"sorted\", \"search\" or \"given\"");
    }
    if (j.contains("format")) {
        const auto v = j["format"].get<std::string>();
        if (v == "json")
            job.format = OutputFormat::Json;
        else if (v == "csv")
            job.format = OutputFormat::Csv;
        else if (v == "pretty")
            job.format = OutputFormat::Pretty;
        else
            throw ParseError("format must be \"json\", \"csv\" or \"pretty\"");
    }
    if (j.contains("out")) job.out = j["out"].get<std::string>();
    if (j.contains("K")) job.power_sum_count = j["K"].get<int>();
    if (j.contains("M")) job.jll_depth = j["M"].get<int>();
    return job;
}

}  // namespace

int run_batch(const std::string& jobs_json, std::ostream& report, std::ostream& err) {
    json arr;
    try {
        arr = detail::parse_text(jobs_json);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitIoError;
    }
    if (!arr.is_array()) {
        err << "input error: batch input must be a JSON array of jobs\n";
        return kExitIoError;
    }

    int first_failure = kExitOk;
    std::size_t index = 0;
    for (const json& entry : arr) {
        json line{{"index", index}};
        std::ostringstream job_out, job_err;
        int code = kExitOk;
        try {
            const JobSpec job = job_from_json(entry);
            line["command"] = job.command;
            code = run(job, job_out, job_err);
        } catch (const ParseError& e) {
            job_err << e.what();
            code = kExitIoError;
        }
        line["exit_code"] = code;
        if (!job_out.str().empty()) {
            json parsed = json::parse(job_out.str(), nullptr, false);
            line["result"] = parsed.is_discarded() ? json(job_out.str()) : parsed;
        }
        if (!job_err.str().empty()) line["stderr"] = job_err.str();
        report << line.dump() << "\n";
        if (code != kExitOk && first_failure == kExitOk) first_failure = code;
        ++index;
    }
    return first_failure;
}

namespace {

std::string shortest(double v) {
    if (std::abs(v) < 9e15 && v == std::round(v))
        return std::to_string(static_cast<long long>(v));
    return json(v).dump();
}

std::string csv_scalar(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    std::string s = shortest(z.real());
    if (!std::signbit(z.imag())) s += "+";
    return s + shortest(z.imag()) + "j";
}

std::string pretty_real(double v) {
    for (int den : {1, 2, 4}) {
        const double scaled = v * den;
        if (std::abs(scaled) < 9e15 && scaled == std::round(scaled)) {
            const auto num = static_cast<long long>(scaled);
            if (den == 1) return std::to_string(num);
            return std::to_string(num) + "/" + std::to_string(den);
        }
    }
    return shortest(v);
}

std::string pretty_scalar(Complex z) {
    if (z.imag() == 0.0) return pretty_real(z.real());
    const std::string im = pretty_real(std::abs(z.imag())) + "i";
    return pretty_real(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + im;
}

}  // namespace

std::string emit(const DenseMatrix& m, OutputFormat format) {
    if (format == OutputFormat::Json) return to_json(m, 2);

    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j != 0) out << ",";
                out << csv_scalar(m(i, j));
            }
            if (i + 1 < m.rows()) out << "\n";
        }
        return out.str();
    }

    // pretty: right-aligned columns, dyadic fractions where they apply
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = pretty_scalar(m(i, j));
            width[j] = std::max(width[j], cells[i * m.cols() + j].size());
        }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& cell = cells[i * m.cols() + j];
            if (j != 0) out << "  ";
            out << std::string(width[j] - cell.size(), ' ') << cell;
        }
        if (i + 1 < m.rows()) out << "\n";
    }
    return out.str();
}

}  // namespace niep
