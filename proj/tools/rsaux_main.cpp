// Command-line front end: evaluate R(s) by contour quadrature or by the
// saddle expansion, dump expansion breakdowns and bound certificates,
// classify points against the zero-free regions, re-derive the proof
// constants, and scan rectangles for zeros.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsaux/audit.hpp"
#include "rsaux/contour.hpp"
#include "rsaux/errors.hpp"
#include "rsaux/regions.hpp"
#include "rsaux/saddle.hpp"
#include "rsaux/special_functions.hpp"
#include "rsaux/zeros.hpp"

using json = nlohmann::ordered_json;
using namespace rsaux;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_compute = 1;
constexpr int exit_usage = 2;

std::string fmt17(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << x;
    return os.str();
}

// "a", "a+bi" or "a-bi"; no spaces, 'i' suffixed to the imaginary part.
cplx parse_complex(const std::string& text) {
    const std::string err = "expected complex literal like 1.5-2e3i, got '" + text + "'";
    if (text.empty()) throw CLI::ValidationError(err);
    if (text.back() != 'i') {
        try {
            std::size_t used = 0;
            const double re = std::stod(text, &used);
            if (used != text.size()) throw CLI::ValidationError(err);
            return {re, 0.0};
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError(err);
        } catch (const std::out_of_range&) {
            throw CLI::ValidationError(err);
        }
    }
    const std::string body = text.substr(0, text.size() - 1);
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) throw CLI::ValidationError(err);
    try {
        std::size_t used = 0;
        const double re = std::stod(body.substr(0, split), &used);
        if (used != split) throw CLI::ValidationError(err);
        std::string imag_part = body.substr(split);
        if (imag_part == "+") imag_part = "1";
        else if (imag_part == "-") imag_part = "-1";
        const double im = std::stod(imag_part, &used);
        if (used != imag_part.size()) throw CLI::ValidationError(err);
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(err);
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError(err);
    }
}

struct GridAxis {
    double lo = 0.0, hi = 0.0, step = 1.0;
};

GridAxis parse_axis(const std::string& text) {
    GridAxis a;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw CLI::ValidationError("expected axis range lo:hi:step, got '" + text + "'");
    }
    try {
        a.lo = std::stod(text.substr(0, c1));
        a.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        a.step = std::stod(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad number in axis range '" + text + "'");
    }
    if (a.step <= 0.0 || a.hi < a.lo) {
        throw CLI::ValidationError("axis range must have lo <= hi and step > 0");
    }
    return a;
}

json ext_to_json(const ExtComplex& v) {
    json j;
    j["log_modulus"] = v.is_zero() ? json(nullptr) : json(v.log_modulus);
    j["phase"] = v.phase;
    const cplx c = v.to_complex();
    if (std::isfinite(c.real()) && std::isfinite(c.imag())) {
        j["re"] = c.real();
        j["im"] = c.imag();
    }
    return j;
}

json cplx_to_json(const cplx& v) {
    return json{{"re", v.real()}, {"im", v.imag()}};
}

struct Output {
    bool as_json = false;
    std::string out_path;

    int emit(const json& payload, const std::string& human, int code) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot open " << out_path << "\n";
                return exit_compute;
            }
            os = &file;
        }
        if (as_json) {
            *os << payload.dump(2) << "\n";
        } else {
            *os << human;
        }
        return code;
    }
};

std::string labels_joined(const std::set<Region>& labels) {
    std::string out;
    for (Region r : labels) {
        if (!out.empty()) out += '|';
        out += to_string(r);
    }
    return out;
}

int cmd_eval(const cplx& s, const std::string& method, double tol, const Output& output) {
    std::string used = method;
    if (method == "auto") {
        used = to_string(pick_evaluator(s));
    }
    json payload;
    std::ostringstream human;
    if (used == "oracle") {
        const QuadratureResult q = r_defining(s, tol);
        const ExtComplex ext = ExtComplex::from_complex(q.value);
        payload = {{"re", q.value.real()}, {"im", q.value.imag()},
                   {"log_modulus", ext.is_zero() ? json(nullptr) : json(ext.log_modulus)},
                   {"phase", ext.phase}, {"method_used", "oracle"},
                   {"est_error", q.est_error}};
        human << "R(s) = " << fmt17(q.value.real()) << " + " << fmt17(q.value.imag())
              << "i   (oracle, est_error " << q.est_error << ", nodes " << q.nodes_used << ")\n";
    } else {
        const ExpansionBreakdown b = assemble(s, tol);
        const cplx v = b.r_value.to_complex();
        payload = ext_to_json(b.r_value);
        payload["method_used"] = "expansion";
        payload["est_error"] = b.est_rel_error;
        human << "R(s): log|R| = " << fmt17(b.r_value.log_modulus)
              << ", arg R = " << fmt17(b.r_value.phase);
        if (std::isfinite(v.real())) {
            human << ", R = " << fmt17(v.real()) << " + " << fmt17(v.imag()) << "i";
        }
        human << "   (expansion, rel est " << b.est_rel_error << ")\n";
    }
    return output.emit(payload, human.str(), exit_ok);
}

int cmd_expand(const cplx& s, long k_flag, double tol, const Output& output) {
    const EtaFrame frame = eta_frame(s);
    const long k = k_flag < 0 ? frame.m : k_flag;
    const ExpansionBreakdown b = assemble(s, k, tol);
    json payload;
    payload["s"] = cplx_to_json(s);
    payload["k"] = b.k;
    payload["eta"] = {{"re", frame.eta.real()}, {"im", frame.eta.imag()},
                      {"eta1", frame.eta1}, {"eta2", frame.eta2},
                      {"m", frame.m}, {"arg_eta", frame.arg_eta}};
    payload["chi_factor"] = ext_to_json(b.chi_factor);
    payload["power_factor"] = ext_to_json(b.power_factor);
    payload["trig_term"] = cplx_to_json(b.trig_term);
    payload["correction_sum"] = cplx_to_json(b.correction_sum);
    payload["remainder"] = {{"re", b.remainder.value.real()}, {"im", b.remainder.value.imag()},
                            {"est_error", b.remainder.est_error},
                            {"nodes_used", b.remainder.nodes_used}};
    payload["dirichlet_tail"] = cplx_to_json(b.dirichlet_tail);
    payload["u_value"] = cplx_to_json(b.u_value);
    payload["r_value"] = ext_to_json(b.r_value);
    payload["est_rel_error"] = b.est_rel_error;

    std::ostringstream human;
    human << "expansion at s = " << fmt17(s.real()) << " + " << fmt17(s.imag()) << "i, k = " << b.k << "\n"
          << "  eta = " << fmt17(frame.eta.real()) << " + " << fmt17(frame.eta.imag())
          << "i, m = " << frame.m << "\n"
          << "  log|chi| = " << fmt17(b.chi_factor.log_modulus)
          << ", log|power| = " << fmt17(b.power_factor.log_modulus) << "\n"
          << "  trig = " << fmt17(b.trig_term.real()) << " + " << fmt17(b.trig_term.imag()) << "i\n"
          << "  correction_sum = " << fmt17(b.correction_sum.real()) << " + "
          << fmt17(b.correction_sum.imag()) << "i\n"
          << "  remainder = " << fmt17(b.remainder.value.real()) << " + "
          << fmt17(b.remainder.value.imag()) << "i (est " << b.remainder.est_error << ")\n"
          << "  dirichlet_tail = " << fmt17(b.dirichlet_tail.real()) << " + "
          << fmt17(b.dirichlet_tail.imag()) << "i\n"
          << "  U = " << fmt17(b.u_value.real()) << " + " << fmt17(b.u_value.imag())
          << "i  (|U| = " << std::abs(b.u_value) << ")\n"
          << "  log|R| = " << fmt17(b.r_value.log_modulus) << ", arg R = "
          << fmt17(b.r_value.phase) << "\n";
    return output.emit(payload, human.str(), exit_ok);
}

int cmd_bound(const cplx& s, const Output& output) {
    const EtaFrame frame = eta_frame(s);
    const BoundCertificate cert = bound_U(frame);
    const double rb = bound_remainder(frame);
    json comps;
    for (const auto& [name, logv] : cert.log_components) {
        comps[name] = {{"log", logv}, {"log10", logv / std::log(10.0)},
                       {"value", std::exp(logv)}};
    }
    json payload = {{"r_bound", rb},
                    {"u_bound", cert.u_bound},
                    {"log10_u_bound", cert.log_u_bound / std::log(10.0)},
                    {"log_space", cert.log_space},
                    {"components", comps}};
    std::ostringstream human;
    human << "bounds at s = " << fmt17(s.real()) << " + " << fmt17(s.imag()) << "i"
          << " (eta1 = " << frame.eta1 << ", eta2 = " << frame.eta2 << ")\n"
          << "  |R_remainder| <= " << rb << "\n"
          << "  |U| <= " << cert.u_bound << "  (log10 " << cert.log_u_bound / std::log(10.0) << ")\n";
    for (const auto& [name, logv] : cert.log_components) {
        human << "    " << name << ": log10 = " << logv / std::log(10.0) << "\n";
    }
    return output.emit(payload, human.str(), exit_ok);
}

int cmd_region_point(const cplx& s, const RegionParams& params, const Output& output) {
    const auto labels = classify(s, params);
    const VerdictResult v = zero_free_verdict(s, params);
    json jl = json::array();
    for (Region r : labels) jl.push_back(to_string(r));
    json payload = {{"sigma", s.real()}, {"t", s.imag()}, {"labels", jl},
                    {"verdict", to_string(v.verdict)}, {"conditional", v.conditional}};
    if (v.trivial_zero_n >= 0) payload["trivial_zero_n"] = v.trivial_zero_n;
    std::ostringstream human;
    human << "s = " << fmt17(s.real()) << " + " << fmt17(s.imag()) << "i: labels = {"
          << labels_joined(labels) << "}, verdict = " << to_string(v.verdict)
          << (v.conditional ? " (conditional on A, t0)" : "") << "\n";
    return output.emit(payload, human.str(), exit_ok);
}

int cmd_region_grid(const GridAxis& sig, const GridAxis& tax, const RegionParams& params,
                    const Output& output) {
    std::ostringstream csv;
    csv.imbue(std::locale::classic());
    csv << "sigma,t,labels,verdict\n";
    long rows = 0;
    for (double sigma = sig.lo; sigma <= sig.hi + 1e-12 * sig.step; sigma += sig.step) {
        for (double t = tax.lo; t <= tax.hi + 1e-12 * tax.step; t += tax.step) {
            const cplx s(sigma, t);
            const auto labels = classify(s, params);
            const VerdictResult v = zero_free_verdict(s, params);
            csv << fmt17(sigma) << ',' << fmt17(t) << ',' << labels_joined(labels)
                << ',' << to_string(v.verdict) << "\n";
            ++rows;
        }
    }
    if (!output.out_path.empty()) {
        std::ofstream file(output.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << output.out_path << "\n";
            return exit_compute;
        }
        file << csv.str();
        json payload = {{"rows", rows}, {"path", output.out_path}};
        if (output.as_json) std::cout << payload.dump(2) << "\n";
        else std::cout << "wrote " << rows << " rows to " << output.out_path << "\n";
        return exit_ok;
    }
    std::cout << csv.str();
    return exit_ok;
}

int cmd_audit(const std::string& filter, const Output& output) {
    const auto all = run_all_audits();
    std::vector<AuditItem> picked;
    for (const auto& item : all) {
        if (filter.empty() || item.name.find(filter) != std::string::npos) {
            picked.push_back(item);
        }
    }
    json arr = json::array();
    bool any_fail = false;
    for (const auto& item : picked) {
        any_fail = any_fail || !item.pass;
        arr.push_back({{"name", item.name},
                       {"paper_value", item.paper_value},
                       {"computed_value", item.computed_value},
                       {"relation", to_string(item.relation)},
                       {"tolerance", item.tolerance},
                       {"margin", item.margin},
                       {"pass", item.pass}});
    }
    std::ostringstream human;
    if (picked.empty()) {
        human << "no audit items matched filter '" << filter << "'\n";
        std::cerr << "audit: no items matched '" << filter << "'\n";
    } else {
        human << audit_table(picked);
        human << (any_fail ? "AUDIT FAILED\n" : "all items pass\n");
    }
    return output.emit(arr, human.str(), any_fail ? exit_compute : exit_ok);
}

int cmd_scan(const std::vector<double>& rect_vals, double step, double tol,
             const Output& output) {
    const Rectangle rect{rect_vals[0], rect_vals[1], rect_vals[2], rect_vals[3]};
    if (!rect.valid()) {
        throw CLI::ValidationError("scan: rectangle must satisfy sigma_min < sigma_max, t_min < t_max");
    }
    const auto records = scan_region(rect, step, tol);

    const std::string base = output.out_path.empty() ? std::string("scan_output") : output.out_path;
    std::ofstream jsonl(base + ".jsonl");
    std::ofstream csv(base + ".csv");
    if (!jsonl || !csv) {
        std::cerr << "error: cannot write " << base << ".{jsonl,csv}\n";
        return exit_compute;
    }
    csv.imbue(std::locale::classic());
    csv << "re,im,kind,residual,evaluator,newton_iters\n";
    long trivial = 0, nontrivial = 0;
    for (const auto& z : records) {
        const bool is_trivial = z.kind == ZeroRecord::Kind::trivial;
        (is_trivial ? trivial : nontrivial)++;
        json row = {{"re", z.location.real()}, {"im", z.location.imag()},
                    {"kind", is_trivial ? "trivial" : "nontrivial"},
                    {"residual", z.residual}, {"abs_value", z.abs_value},
                    {"evaluator", to_string(z.evaluator)},
                    {"newton_iters", z.newton_iters}};
        if (!is_trivial) row["note"] = "artifact-derived location; not asserted by theory";
        jsonl << row.dump() << "\n";
        csv << fmt17(z.location.real()) << ',' << fmt17(z.location.imag()) << ','
            << (is_trivial ? "trivial" : "nontrivial") << ',' << fmt17(z.residual) << ','
            << to_string(z.evaluator) << ',' << z.newton_iters << "\n";
    }
    json payload = {{"trivial", trivial}, {"nontrivial", nontrivial},
                    {"jsonl", base + ".jsonl"}, {"csv", base + ".csv"}};
    std::ostringstream human;
    human << "found " << trivial << " trivial and " << nontrivial
          << " nontrivial zeros; records in " << base << ".jsonl / " << base << ".csv\n";
    if (output.as_json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << human.str();
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann auxiliary-function toolkit: contour oracle, saddle expansion, "
                 "explicit bounds, zero-free regions, constant audits, zero scans"};
    app.require_subcommand(1);

    double tol = 1e-10;
    std::string config_path;
    bool as_json = false;
    std::string out_path;
    app.add_option("--tol", tol, "evaluation tolerance")->capture_default_str();
    app.add_option("--config", config_path, "region parameter file (key=value)");
    app.add_flag("--json", as_json, "emit JSON payloads");
    app.add_option("--out", out_path, "write the primary output to this path");

    std::string s_text, method = "auto", grid_sigma, grid_t, filter;
    long k_flag = -1;
    std::vector<double> rect_vals;
    double step = 0.5;

    auto* eval = app.add_subcommand("eval", "evaluate R(s)");
    eval->add_option("--s", s_text, "point, e.g. -2+0i")->required();
    eval->add_option("--method", method, "oracle|expansion|auto")
        ->check(CLI::IsMember({"oracle", "expansion", "auto"}))
        ->capture_default_str();

    auto* expand = app.add_subcommand("expand", "dump the full expansion breakdown");
    expand->add_option("--s", s_text, "point")->required();
    expand->add_option("--k", k_flag, "truncation index (default m)");

    auto* bound = app.add_subcommand("bound", "dump the bound certificate at s");
    bound->add_option("--s", s_text, "point")->required();

    auto* region = app.add_subcommand("region", "classify point or grid against regions");
    region->add_option("--s", s_text, "single point");
    region->add_option("--grid", grid_sigma, "sigma axis lo:hi:step (requires t axis)");
    region->add_option("t", grid_t, "t axis lo:hi:step (grid mode)");

    auto* audit = app.add_subcommand("audit", "re-derive the proof constants");
    audit->add_option("--filter", filter, "substring filter on item names");

    auto* scan = app.add_subcommand("scan", "scan a rectangle for zeros");
    scan->add_option("--rect", rect_vals, "sigma_min,sigma_max,t_min,t_max")
        ->delimiter(',')->expected(4);
    scan->add_option("--step", step, "tile size")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return exit_usage;
    }

    Output output{as_json, out_path};
    RegionParams params;
    if (!config_path.empty()) {
        try {
            params = RegionParams::from_file(config_path);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return exit_usage;
        }
    }
    try {
        if (eval->parsed()) {
            return cmd_eval(parse_complex(s_text), method, tol, output);
        }
        if (expand->parsed()) {
            return cmd_expand(parse_complex(s_text), k_flag, tol, output);
        }
        if (bound->parsed()) {
            return cmd_bound(parse_complex(s_text), output);
        }
        if (region->parsed()) {
            if (!grid_sigma.empty()) {
                if (grid_t.empty()) {
                    throw CLI::ValidationError("region --grid needs both axes: "
                                               "--grid sigma=lo:hi:step t=lo:hi:step");
                }
                auto strip = [](const std::string& v) {
                    const auto eq = v.find('=');
                    return eq == std::string::npos ? v : v.substr(eq + 1);
                };
                return cmd_region_grid(parse_axis(strip(grid_sigma)),
                                       parse_axis(strip(grid_t)), params, output);
            }
            if (s_text.empty()) {
                throw CLI::ValidationError("region needs --s or --grid");
            }
            return cmd_region_point(parse_complex(s_text), params, output);
        }
        if (audit->parsed()) {
            return cmd_audit(filter, output);
        }
        if (scan->parsed()) {
            if (rect_vals.size() != 4) {
                throw CLI::ValidationError("scan needs --rect=sigma_min,sigma_max,t_min,t_max");
            }
            return cmd_scan(rect_vals, step, tol, output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const rsaux::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_compute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_compute;
    }
    return exit_usage;
}
