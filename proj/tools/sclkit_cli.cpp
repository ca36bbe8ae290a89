// sclkit: exact scl, rotation numbers and the immersion criterion from the
// command line. Run `sclkit --help` for the subcommands.

#include "sclkit/chain_parser.h"
#include "sclkit/errors.h"
#include "sclkit/immersion.h"
#include "sclkit/rotation.h"
#include "sclkit/sclenc.h"
#include "sclkit/surfcert.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace sclkit;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, parse_failure = 2, not_boundary = 3, resource = 4, invariant = 5 };

struct Settings {
    bool json = false;
    std::size_t max_letters = 24;
    std::size_t max_pivots = 1'000'000;
    double time_limit = 60.0;
    std::optional<int> rank;
};

EncodingOptions encoding_options(const Settings& s) {
    EncodingOptions o;
    o.max_letters = s.max_letters;
    o.solve.max_pivots = s.max_pivots;
    o.solve.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(s.time_limit));
    return o;
}

std::string str(const Rational& r) { return to_string(r); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

// Collects the structured record while the human text goes straight out.
class Output {
public:
    Output(const Settings& s, std::string command) : settings_(s) {
        stable_["command"] = std::move(command);
    }
    json& stable() { return stable_; }
    void line(const std::string& text) {
        if (!settings_.json) std::cout << text << "\n";
    }
    void finish(double seconds) {
        if (!settings_.json) return;
        json doc;
        doc["stable"] = stable_;
        doc["timing"] = {{"seconds", seconds}};
        std::cout << doc.dump(2) << "\n";
    }

private:
    const Settings& settings_;
    json stable_;
};

json criterion_json(const CriterionReport& r) {
    return {{"chain", r.chain.to_string()},
            {"scl", str(r.scl)},
            {"rot", str(r.rot)},
            {"rot_half", str(r.half_rot())},
            {"bounds_immersed", r.bounds_immersed},
            {"on_face", r.on_face}};
}

std::string criterion_line(const CriterionReport& r) {
    return "scl = " + str(r.scl) + ", rot/2 = " + str(r.half_rot()) +
           ", bounds_immersed = " + yes_no(r.bounds_immersed);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    for (const std::string sep : {"..", ":"}) {
        const auto at = text.find(sep);
        if (at == std::string::npos) continue;
        try {
            return {std::stoll(text.substr(0, at)), std::stoll(text.substr(at + sep.size()))};
        } catch (const std::exception&) {
            break;
        }
    }
    throw InvalidArgument("range '" + text + "' is not of the form a..b");
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stable commutator length in free groups, rotation numbers on the "
                 "once-punctured torus, and the immersion criterion scl = rot/2."};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    app.add_flag("--json", settings.json, "Print one JSON document instead of text");
    app.add_option("--max-letters", settings.max_letters, "Letter cap per prepared chain")
        ->capture_default_str();
    app.add_option("--max-pivots", settings.max_pivots, "Simplex pivot cap")->capture_default_str();
    app.add_option("--time-limit", settings.time_limit, "Soft time budget in seconds")
        ->capture_default_str();
    app.add_option("--rank", settings.rank, "Ambient rank (default: largest generator used)");

    std::string chain_text;
    auto* scl_cmd = app.add_subcommand("scl", "scl of a rational chain");
    scl_cmd->add_option("chain", chain_text, "Chain, e.g. \"2*[a,b] + ab - a - b\"")->required();

    std::string method = "both";
    auto* rot_cmd = app.add_subcommand("rot", "rotation number on the once-punctured torus");
    rot_cmd->add_option("chain", chain_text)->required();
    rot_cmd->add_option("--method", method, "turning, dynamical or both")
        ->check(CLI::IsMember({"turning", "dynamical", "both"}))
        ->capture_default_str();

    auto* immersed_cmd = app.add_subcommand("immersed", "test scl = rot/2");
    immersed_cmd->add_option("chain", chain_text)->required();

    std::int64_t max_R = 4;
    auto* stabilize_cmd = app.add_subcommand("stabilize", "criterion for C + R*abAB, R = 0..max-R");
    stabilize_cmd->add_option("chain", chain_text)->required();
    stabilize_cmd->add_option("--max-R", max_R)->capture_default_str();

    std::string w_text;
    std::string n_range = "1..4";
    auto* scan_cmd = app.add_subcommand("scan", "criterion for w (abAB)^n over a range of n");
    scan_cmd->add_option("--w", w_text, "Word in [F2, F2]")->required();
    scan_cmd->add_option("--n-range", n_range, "Range a..b")->capture_default_str();

    std::int64_t n_value = 1;
    auto* corollary_cmd = app.add_subcommand("corollary", "compare scl((abAB)^n c w C) with (|n + rot w| + 1)/2");
    corollary_cmd->add_option("--w", w_text, "Word in [F2, F2]")->required();
    corollary_cmd->add_option("--n", n_value)->capture_default_str();

    std::string file_path, out_path, certify_chain;
    auto* certify_cmd = app.add_subcommand(
        "certify", "check a band-surface certificate; searches for a pairing when it has none");
    certify_cmd->add_option("--file", file_path, "Certificate file")->required();
    certify_cmd->add_option("--chain", certify_chain, "Chain the surface should bound");
    certify_cmd->add_option("--out", out_path, "Write the (completed) certificate here");

    std::int64_t degree = 1;
    auto* matchbound_cmd = app.add_subcommand("matchbound", "upper bound for scl from the best arc pairing");
    matchbound_cmd->add_option("chain", chain_text)->required();
    matchbound_cmd->add_option("--degree", degree)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::parse_failure;
    }

    const auto start = std::chrono::steady_clock::now();
    CLI::App* cmd = app.get_subcommands().front();
    Output out(settings, cmd->get_name());
    try {
        const EncodingOptions opts = encoding_options(settings);
        auto echo_chain = [&](const Chain& c) {
            out.stable()["input"] = chain_text;
            out.stable()["chain"] = c.to_string();
        };

        if (cmd == scl_cmd) {
            const Chain c = parse_chain(chain_text, settings.rank);
            echo_chain(c);
            const SclComputation r = compute_scl(c, opts);
            out.stable()["result"] = {{"scl", str(r.scl)},
                                      {"lp_value", str(r.lp.value)},
                                      {"duality_verified", true}};
            out.stable()["limits"] = {{"letters", r.encoding.layout.size()},
                                      {"columns", r.encoding.lp.cols()},
                                      {"rows", r.encoding.lp.rows()},
                                      {"pivots", r.lp.pivots}};
            out.line("scl = " + str(r.scl));
        } else if (cmd == rot_cmd) {
            const Chain c = parse_chain(chain_text, settings.rank.value_or(2));
            echo_chain(c);
            const RotationMethod m = method == "turning"     ? RotationMethod::turning
                                     : method == "dynamical" ? RotationMethod::dynamical
                                                             : RotationMethod::both;
            const RotationResult r = rotation(pt_holonomy(), c, m);
            json result = {{"method", method}, {"rot", str(r.value)}};
            if (r.turning) result["turning"] = str(*r.turning);
            if (r.dynamical) result["dynamical"] = str(*r.dynamical);
            if (r.agreement) result["agreement"] = *r.agreement;
            out.stable()["result"] = result;
            out.line("rot = " + str(r.value));
            if (r.agreement) {
                out.line("turning = " + str(*r.turning) + ", dynamical = " + str(*r.dynamical) +
                         ", agreement = " + yes_no(*r.agreement));
            }
        } else if (cmd == immersed_cmd) {
            const Chain c = parse_chain(chain_text, settings.rank);
            echo_chain(c);
            const OrientationPair pair = bounds_immersed_both(c, opts);
            out.stable()["result"] = criterion_json(pair.forward);
            out.stable()["reversed"] = criterion_json(pair.reversed);
            out.line(criterion_line(pair.forward));
            out.line("reversed orientation: " + criterion_line(pair.reversed));
        } else if (cmd == stabilize_cmd) {
            const Chain c = parse_chain(chain_text, settings.rank);
            echo_chain(c);
            const StabilizationReport rep = minimal_stabilization(c, max_R, opts);
            json rows = json::array();
            out.line(pad("R", 4) + pad("scl", 10) + pad("rot/2", 10) + "bounds_immersed");
            for (const auto& row : rep.rows) {
                json j = criterion_json(row.report);
                j["R"] = row.R;
                rows.push_back(j);
                out.line(pad(std::to_string(row.R), 4) + pad(str(row.report.scl), 10) +
                         pad(str(row.report.half_rot()), 10) + yes_no(row.report.bounds_immersed));
            }
            out.stable()["result"] = {{"boundary", rep.boundary.to_string()},
                                      {"rows", rows},
                                      {"minimal_R", rep.minimal_R ? json(*rep.minimal_R) : json(nullptr)}};
            out.line(rep.minimal_R ? "minimal R = " + std::to_string(*rep.minimal_R)
                                   : "no R in 0.." + std::to_string(max_R) + " satisfies the criterion");
        } else if (cmd == scan_cmd) {
            const Word w = parse_word(w_text, settings.rank.value_or(2));
            const auto [lo, hi] = parse_range(n_range);
            out.stable()["w"] = w.to_string();
            const ScanReport rep = scan_conjecture(w, lo, hi, opts);
            json rows = json::array();
            out.line(pad("n", 4) + pad("scl", 10) + pad("rot/2", 10) + "equal");
            for (const auto& row : rep.rows) {
                json j = criterion_json(row.report);
                j["n"] = row.n;
                rows.push_back(j);
                out.line(pad(std::to_string(row.n), 4) + pad(str(row.report.scl), 10) +
                         pad(str(row.report.half_rot()), 10) + yes_no(row.report.bounds_immersed));
            }
            out.stable()["result"] = {{"rows", rows},
                                      {"first_equal", rep.first_equal ? json(*rep.first_equal) : json(nullptr)},
                                      {"persists", rep.persists}};
            out.line(rep.first_equal ? "first n with equality = " + std::to_string(*rep.first_equal) +
                                           ", persists = " + yes_no(rep.persists)
                                     : "no equality in range");
        } else if (cmd == corollary_cmd) {
            const Word w = parse_word(w_text, settings.rank.value_or(2));
            const CorollaryResult r = corollary_check(w, n_value, opts);
            out.stable()["w"] = w.to_string();
            out.stable()["result"] = {{"word", r.word.to_string()},
                                      {"n", n_value},
                                      {"rot_w", r.rot_w},
                                      {"lhs", str(r.lhs)},
                                      {"rhs", str(r.rhs)},
                                      {"equal", r.equal}};
            out.line("word = " + r.word.to_string());
            out.line("lhs = " + str(r.lhs) + ", rhs = " + str(r.rhs) + ", equal = " + yes_no(r.equal));
        } else if (cmd == certify_cmd) {
            CertificateFile file = read_certificate_file(file_path);
            bool searched = false;
            if (!file.matching) {
                MatchingSearchResult found = search_matching(file.arcs);
                file.matching = found.matching;
                searched = true;
                out.stable()["search"] = {{"nodes", found.nodes}, {"exhaustive", found.exhaustive}};
            }
            const std::int64_t chi_cells = euler_characteristic_cells(file.arcs, *file.matching);
            SurfaceCertificate cert = make_certificate(file.arcs, *file.matching);
            if (chi_cells != cert.chi) {
                throw InvariantViolation("band surface chi " + std::to_string(cert.chi) +
                                         " differs from the cell count " + std::to_string(chi_cells));
            }
            json result = {{"chi", cert.chi},
                           {"boundary", cert.boundary.to_string()},
                           {"searched", searched}};
            out.line("chi = " + std::to_string(cert.chi) + ", boundary = " + cert.boundary.to_string());
            std::optional<std::string> target = certify_chain.empty() ? file.chain : certify_chain;
            if (target) {
                const Chain c = parse_chain(*target, settings.rank);
                const ExtremalityReport rep = extremality_ratio(cert, c);
                result["chain"] = c.to_string();
                result["degree"] = str(rep.degree);
                result["ratio"] = str(rep.ratio);
                result["scl"] = str(rep.scl);
                result["extremal"] = rep.extremal;
                out.line("degree = " + str(rep.degree) + ", ratio = " + str(rep.ratio) +
                         ", scl = " + str(rep.scl) + ", extremal = " + yes_no(rep.extremal));
            }
            out.stable()["result"] = result;
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw InvalidArgument("cannot write " + out_path);
                write_certificate(f, file);
            }
        } else if (cmd == matchbound_cmd) {
            const Chain c = parse_chain(chain_text, settings.rank);
            echo_chain(c);
            const MatchingBound b = search_matching(c, degree);
            out.stable()["result"] = {{"bound", str(b.bound)},
                                      {"chi", b.best.chi},
                                      {"degree", b.degree},
                                      {"exhaustive", b.best.exhaustive}};
            out.line("bound = " + str(b.bound) + ", chi = " + std::to_string(b.best.chi) +
                     ", degree = " + std::to_string(b.degree) +
                     ", exhaustive = " + yes_no(b.best.exhaustive));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse_failure;
    } catch (const NotBoundaryError& e) {
        std::cerr << "not a boundary: " << e.what() << "\n";
        return Exit::not_boundary;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return Exit::resource;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return Exit::invariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::parse_failure;
    }
    out.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return Exit::ok;
}
