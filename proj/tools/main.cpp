#include "wenum/wenum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace wn = wenum;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // a requested check ran and failed
constexpr int kExitInputError = 2;   // bad arguments or malformed input

// "--out PATH" sink; stdout when empty or "-".
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw wn::Error(wn::ErrorKind::Io, "cannot write '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct CodeSource {
    std::string name;      // bundled code name
    std::string generator; // or a generator matrix file

    wn::LinearCode resolve() const {
        if (name.empty() == generator.empty())
            throw wn::Error(wn::ErrorKind::MalformedInput,
                            "exactly one of --code/--generator is required");
        if (!name.empty()) return wn::builtin_code(name);
        return wn::load_code_file(generator);
    }
    std::string label() const { return !name.empty() ? name : generator; }
};

json quadrat_json(const wn::QuadRat& q) {
    auto [c, d] = q.to_rho_basis();
    return json{{"const", wn::to_string(c)}, {"rho", wn::to_string(d)}};
}

json manifest_json(const std::string& command, const json& inputs, const json& parameters,
                   const std::string& out_path) {
    return json{{"command", command},
                {"inputs", inputs},
                {"parameters", parameters},
                {"output", out_path.empty() ? "-" : out_path},
                {"exact", true}};
}

json derivative_json(const wn::Derivative& d) {
    json entries = json::array();
    for (size_t v = 0; v < d.entries.size(); ++v) {
        json e = quadrat_json(d.entries[v]);
        e["index"] = v;
        e["text"] = wn::to_rho_string(d.entries[v]);
        entries.push_back(std::move(e));
    }
    return json{{"n", d.n}, {"t", d.order}, {"entries", std::move(entries)}};
}

std::string self_dual_text(wn::SelfDualStatus status) {
    switch (status) {
        case wn::SelfDualStatus::SelfDual: return "yes";
        case wn::SelfDualStatus::DependentRows: return "no (dependent generator rows)";
        case wn::SelfDualStatus::NotOrthogonal: return "no (rows not orthogonal)";
    }
    return "?";
}

std::string distribution_pairs_text(const wn::WeightDistribution& dist) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, count] : dist.pairs()) {
        if (!first) os << " ";
        first = false;
        os << "<" << k << "," << count << ">";
    }
    return os.str();
}

int cmd_info(const CodeSource& source, const std::string& format, const std::string& out_path) {
    wn::LinearCode code = source.resolve();
    Output out(out_path);
    bool enumerable = code.self_dual_status() != wn::SelfDualStatus::DependentRows;
    std::optional<wn::WeightDistribution> dist;
    int mw = 0;
    if (enumerable) {
        dist = wn::weight_distribution(code);
        for (int k = 1; k <= dist->n; ++k)
            if (dist->counts[static_cast<size_t>(k)]) {
                mw = k;
                break;
            }
    }
    if (format == "structured") {
        json j;
        j["manifest"] = manifest_json("info", json{{"code", source.label()}}, json::object(),
                                      out_path);
        j["length"] = code.length();
        j["dimension"] = code.dimension();
        j["self_dual"] = code.is_self_dual();
        j["self_dual_status"] = self_dual_text(code.self_dual_status());
        if (dist) {
            j["min_weight"] = mw;
            json pairs = json::array();
            for (const auto& [k, count] : dist->pairs()) pairs.push_back(json::array({k, count}));
            j["distribution"] = std::move(pairs);
        }
        out.os() << j.dump(2) << "\n";
        return kExitOk;
    }
    out.os() << "code: " << source.label() << "\n"
             << "length: " << code.length() << "\n"
             << "dimension: " << code.dimension() << "\n"
             << "self-dual: " << self_dual_text(code.self_dual_status()) << "\n";
    if (dist) {
        out.os() << "min-weight: " << mw << "\n"
                 << "distribution: " << distribution_pairs_text(*dist) << "\n";
    }
    return kExitOk;
}

int cmd_derive(const CodeSource& source, int t, const std::string& method,
               const std::string& format, const std::string& out_path) {
    wn::LinearCode code = source.resolve();
    int n = code.length();
    wn::Derivative d;
    if (method == "direct") {
        d = wn::derivative(code, t);
    } else if (method == "step") {
        int base = std::max(0, n - 18);
        if (t < base) {
            std::ostringstream os;
            os << "--method step reaches only t >= " << base << " for length " << n
               << "; use --method direct";
            throw wn::Error(wn::ErrorKind::OutOfRange, os.str());
        }
        d = wn::derivative(code, base);
        while (d.order < t) d = wn::derivative_step(d);
    } else if (method == "design") {
        if (t != n - 5)
            throw wn::Error(wn::ErrorKind::OutOfRange,
                            "--method design computes exactly t = n-5 = " + std::to_string(n - 5));
        d = wn::derivative_from_designs(wn::profile_from_code(code));
    } else {
        throw wn::Error(wn::ErrorKind::MalformedInput, "unknown method '" + method + "'");
    }
    Output out(out_path);
    if (format == "structured") {
        json j;
        j["manifest"] = manifest_json(
            "derive", json{{"code", source.label()}},
            json{{"t", t}, {"method", method}}, out_path);
        j.update(derivative_json(d));
        out.os() << j.dump(2) << "\n";
    } else {
        wn::write_derivative(out.os(), d);
    }
    return kExitOk;
}

int cmd_design_derive(const std::string& profile_path, const std::string& format,
                      const std::string& out_path) {
    std::ifstream in(profile_path);
    if (!in) throw wn::Error(wn::ErrorKind::Io, "cannot open '" + profile_path + "'");
    wn::DesignProfile profile = wn::load_profile(in);
    wn::Derivative d = wn::derivative_from_designs(profile);
    Output out(out_path);
    if (format == "structured") {
        json j;
        j["manifest"] = manifest_json("design-derive", json{{"profile", profile_path}},
                                      json::object(), out_path);
        j.update(derivative_json(d));
        out.os() << j.dump(2) << "\n";
    } else {
        wn::write_derivative(out.os(), d);
    }
    return kExitOk;
}

int cmd_eigencheck(const std::string& in_path, const std::string& format,
                   const std::string& out_path) {
    wn::Derivative d;
    if (in_path.empty()) {
        d = wn::read_derivative(std::cin);
    } else {
        std::ifstream in(in_path);
        if (!in) throw wn::Error(wn::ErrorKind::Io, "cannot open '" + in_path + "'");
        d = wn::read_derivative(in);
    }
    int m = d.n - d.order;
    bool ok = wn::is_eigenvector_one(d.to_spectral());
    Output out(out_path);
    if (format == "structured") {
        json j;
        j["manifest"] = manifest_json("eigencheck",
                                      json{{"file", in_path.empty() ? "-" : in_path}},
                                      json{{"n", d.n}, {"t", d.order}, {"m", m}}, out_path);
        j["pass"] = ok;
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << (ok ? "PASS" : "FAIL") << " eigenvector of 1 of K^[" << m << "] (n=" << d.n
                 << " t=" << d.order << ")\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_balance(const CodeSource& source, std::optional<int> coordinate, bool all_coordinates,
                const std::string& format, const std::string& out_path) {
    wn::LinearCode code = source.resolve();
    if (coordinate.has_value() == all_coordinates)
        throw wn::Error(wn::ErrorKind::MalformedInput,
                        "exactly one of --coordinate/--all-coordinates is required");
    std::vector<wn::BalanceReport> reports;
    if (all_coordinates)
        reports = wn::balance_check_all(code);
    else
        reports.push_back(wn::balance_check(code, *coordinate));
    bool all_pass = true;
    Output out(out_path);
    if (format == "structured") {
        json arr = json::array();
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            arr.push_back(json{{"coordinate", r.coordinate},
                               {"lhs", quadrat_json(r.lhs)},
                               {"rhs", quadrat_json(r.rhs)},
                               {"target", quadrat_json(r.target)},
                               {"lhs_eq_rhs", r.lhs_eq_rhs},
                               {"rhs_eq_target", r.rhs_eq_target},
                               {"pass", r.pass()}});
        }
        json j;
        j["manifest"] = manifest_json(
            "balance", json{{"code", source.label()}},
            json{{"coordinate", all_coordinates ? json("all") : json(*coordinate)}}, out_path);
        j["reports"] = std::move(arr);
        j["pass"] = all_pass;
        out.os() << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass();
            out.os() << "t=" << r.coordinate << " lhs=[" << wn::to_rho_string(r.lhs) << "] rhs=["
                     << wn::to_rho_string(r.rhs) << "] target=[" << wn::to_rho_string(r.target)
                     << "] verdict=" << (r.pass() ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_candidates(int n, const std::string& format, const std::string& out_path) {
    std::vector<wn::WeightDistribution> candidates = wn::enumerate_candidates(n);
    Output out(out_path);
    if (format == "structured") {
        json arr = json::array();
        for (const auto& c : candidates) arr.push_back(c.to_csv());
        json j;
        j["manifest"] =
            manifest_json("candidates", json::object(), json{{"n", n}}, out_path);
        j["candidates"] = std::move(arr);
        out.os() << j.dump(2) << "\n";
    } else {
        for (const auto& c : candidates) out.os() << c.to_csv() << "\n";
    }
    return kExitOk;
}

int cmd_eliminate(const std::string& in_path, const std::string& format,
                  const std::string& out_path) {
    std::ifstream file;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw wn::Error(wn::ErrorKind::Io, "cannot open '" + in_path + "'");
    }
    std::istream& in = in_path.empty() ? std::cin : file;
    Output out(out_path);
    bool any_rejected = false;
    json arr = json::array();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::string text;
        bool rejected = false;
        json record;
        try {
            wn::EliminationVerdict v = wn::eliminate_length8(wn::WeightDistribution::from_csv(line));
            text = v.describe();
            record = json{{"candidate", v.candidate.to_csv()},
                          {"y", v.y ? json(wn::to_string(*v.y)) : json()},
                          {"survives", v.survives}};
        } catch (const wn::Error& e) {
            rejected = true;
            any_rejected = true;
            text = line + " REJECTED: " + e.what();
            record = json{{"candidate", line}, {"rejected", e.what()}};
        }
        (void)rejected;
        if (format == "structured")
            arr.push_back(std::move(record));
        else
            out.os() << text << "\n";
    }
    if (format == "structured") {
        json j;
        j["manifest"] = manifest_json(
            "eliminate", json{{"file", in_path.empty() ? "-" : in_path}}, json::object(),
            out_path);
        j["verdicts"] = std::move(arr);
        out.os() << j.dump(2) << "\n";
    }
    return any_rejected ? kExitInputError : kExitOk;
}

int cmd_verify_paper(const std::string& format, const std::string& out_path) {
    std::vector<wn::CheckResult> results = wn::run_verification_suite();
    Output out(out_path);
    bool all_pass = true;
    if (format == "structured") {
        json arr = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            arr.push_back(json{{"label", r.label},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
        }
        json j;
        j["manifest"] =
            manifest_json("verify-paper", json::object(), json::object(), out_path);
        j["checks"] = std::move(arr);
        j["pass"] = all_pass;
        out.os() << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            std::ostringstream secs;
            secs.setf(std::ios::fixed);
            secs.precision(2);
            secs << r.seconds;
            out.os() << (r.pass ? "[PASS] " : "[FAIL] ") << r.label << " (" << secs.str()
                     << " s)";
            if (!r.detail.empty()) out.os() << " — " << r.detail;
            out.os() << "\n";
        }
        out.os() << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wenum — exact weight-enumerator derivatives of binary self-dual codes.\n"
        "All arithmetic is exact in Q(sqrt 2); set WENUM_THREADS to parallelize\n"
        "codeword enumeration (results are identical)."};
    app.require_subcommand(1);

    CodeSource source;
    int t = 0;
    std::string method = "direct";
    std::string format = "paper";
    std::string out_path;
    std::string in_path;
    std::string profile_path;
    std::optional<int> coordinate;
    bool all_coordinates = false;
    int n = 8;

    auto add_code_options = [&](CLI::App* cmd) {
        cmd->add_option("--code", source.name, "bundled code: e8, c2x4, golay24, qr48");
        cmd->add_option("--generator", source.generator, "generator matrix file ('0'/'1' rows)");
    };
    auto add_io_options = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: paper|structured")
            ->check(CLI::IsMember({"paper", "structured"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* info = app.add_subcommand(
        "info", "length, dimension, self-duality, minimum weight, weight distribution");
    add_code_options(info);
    add_io_options(info);

    CLI::App* derive =
        app.add_subcommand("derive", "compute the order-t derivative of a code's enumerator");
    add_code_options(derive);
    derive->add_option("--t", t, "derivative order")->required();
    derive->add_option("--method", method, "direct|step|design")
        ->check(CLI::IsMember({"direct", "step", "design"}));
    add_io_options(derive);

    CLI::App* design_derive = app.add_subcommand(
        "design-derive", "compute the order-(n-5) derivative from a 5-design profile file");
    design_derive->add_option("--profile", profile_path, "profile file: 'n=<n>' then '<w> <b_w>' lines")
        ->required();
    add_io_options(design_derive);

    CLI::App* eigencheck = app.add_subcommand(
        "eigencheck", "test a derivative file for eigenvalue-1 membership under K^[m]");
    eigencheck->add_option("--in", in_path, "derivative file (stdin when omitted)");
    add_io_options(eigencheck);

    CLI::App* balance = app.add_subcommand(
        "balance", "check the balance identity at one coordinate or all of them");
    add_code_options(balance);
    balance->add_option("--coordinate", [&coordinate](const CLI::results_t& res) {
        coordinate = std::stoi(res[0]);
        return true;
    }, "1-based coordinate");
    balance->add_flag("--all-coordinates", all_coordinates, "check every coordinate");
    add_io_options(balance);

    CLI::App* candidates = app.add_subcommand(
        "candidates", "enumerate nonnegative-integer fixed points of the Krawtchouk transpose");
    candidates->add_option("--n", n, "code length (even, <= 12; default 8)");
    add_io_options(candidates);

    CLI::App* eliminate = app.add_subcommand(
        "eliminate", "solve the balance identity for each length-8 candidate distribution");
    eliminate->add_option("--in", in_path, "candidate file, one CSV per line (stdin when omitted)");
    add_io_options(eliminate);

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the complete bundled verification workflow");
    add_io_options(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(source, format, out_path);
        if (derive->parsed()) return cmd_derive(source, t, method, format, out_path);
        if (design_derive->parsed()) return cmd_design_derive(profile_path, format, out_path);
        if (eigencheck->parsed()) return cmd_eigencheck(in_path, format, out_path);
        if (balance->parsed())
            return cmd_balance(source, coordinate, all_coordinates, format, out_path);
        if (candidates->parsed()) return cmd_candidates(n, format, out_path);
        if (eliminate->parsed()) return cmd_eliminate(in_path, format, out_path);
        if (verify->parsed()) return cmd_verify_paper(format, out_path);
    } catch (const wn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
