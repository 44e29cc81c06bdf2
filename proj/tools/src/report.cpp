#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "xbound/errors.hpp"
#include "xbound/packing.hpp"
#include "xbound/theta.hpp"

namespace xbound::cli {

using nlohmann::json;

std::string fmt7(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7f", value);
    return buf;
}

namespace {

constexpr double kChainTol = 1e-5;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json certificate_to_json(const EpCertificate& cert) {
    json c;
    c["theta"] = cert.theta;
    c["uncertainty"] = cert.uncertainty;
    c["achiever"] = cert.achiever.probabilities;
    c["achiever_sum"] = cert.achiever_sum;
    c["witness"] = cert.upper_witness.probabilities;
    c["all_passed"] = cert.all_passed();
    c["checks"] = json::array();
    for (const auto& check : cert.checks) {
        json item;
        item["name"] = check.name;
        item["passed"] = check.passed;
        item["observed"] = check.observed;
        item["bound"] = check.bound;
        c["checks"].push_back(item);
    }
    return c;
}

json graph_to_json(int n, long edge_count, const std::string& fingerprint) {
    json g;
    g["n"] = n;
    g["edge_count"] = edge_count;
    g["fingerprint"] = fingerprint;
    return g;
}

}  // namespace

BoundReport compute_bound_report(const Graph& g, std::uint64_t seed) {
    BoundReport report;
    report.n = g.vertex_count();
    report.edge_count = g.edge_count();
    report.fingerprint = g.fingerprint_hex();
    report.seed = seed;

    auto timed = [&report](const char* stage, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        report.timings.push_back({stage, seconds_since(start)});
    };

    timed("alpha", [&] { report.alpha = independence_number(g); });
    timed("theta", [&] {
        SdpSolution sol = lovasz_theta(g);
        if (!sol.converged)
            throw ConvergenceError("bounds: theta solve did not converge after " +
                                   std::to_string(sol.iterations) + " iterations");
        report.theta_value = sol.theta();
        report.theta_uncertainty = sol.uncertainty();
        report.theta_iterations = sol.iterations;
        report.theta_converged = sol.converged;
    });
    timed("alpha_star", [&] { report.alpha_star = fractional_packing_number(g).objective; });
    timed("certificate", [&] { report.certificate = compute_ep_certificate(g); });

    report.chain_consistent = report.alpha.number <= report.theta_value + kChainTol &&
                              report.theta_value <= report.alpha_star + kChainTol;
    return report;
}

std::string serialize_report_text(const BoundReport& r) {
    std::ostringstream out;
    out << "graph: n=" << r.n << ", " << r.edge_count << " edges, fingerprint " << r.fingerprint
        << "\n";
    out << "alpha " << r.alpha.number << " ≤ theta " << fmt7(r.theta_value) << " ≤ alpha* "
        << fmt7(r.alpha_star) << "\n";
    out << "alpha witness:";
    for (int v : r.alpha.witness) out << ' ' << v;
    out << "\n";
    out << "theta: " << fmt7(r.theta_value) << " ± " << fmt7(r.theta_uncertainty) << " ("
        << r.theta_iterations << " iterations, " << (r.theta_converged ? "converged" : "NOT converged")
        << ")\n";
    out << "ep certificate: theta " << fmt7(r.certificate.theta) << ", "
        << (r.certificate.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    out << "chain_consistent: " << (r.chain_consistent ? "true" : "false") << "\n";
    return out.str();
}

std::string serialize_report_json(const BoundReport& r) {
    json j;
    j["graph"] = graph_to_json(r.n, r.edge_count, r.fingerprint);
    j["alpha"]["value"] = r.alpha.number;
    j["alpha"]["witness"] = r.alpha.witness;
    j["theta"]["value"] = r.theta_value;
    j["theta"]["uncertainty"] = r.theta_uncertainty;
    j["theta"]["iterations"] = r.theta_iterations;
    j["theta"]["converged"] = r.theta_converged;
    j["alpha_star"]["value"] = r.alpha_star;
    j["ep_certificate"] = certificate_to_json(r.certificate);
    j["chain_consistent"] = r.chain_consistent;
    j["seed"] = r.seed;
    return j.dump(2) + "\n";
}

std::string timings_diagnostic(const BoundReport& r) {
    std::ostringstream out;
    for (const auto& t : r.timings)
        out << "timing " << t.stage << ": " << fmt7(t.seconds) << " s\n";
    return out.str();
}

std::string serialize_certificate_text(const Graph& g, const EpCertificate& cert) {
    std::ostringstream out;
    out << "graph: n=" << g.vertex_count() << ", " << g.edge_count() << " edges, fingerprint "
        << g.fingerprint_hex() << "\n";
    out << "theta " << fmt7(cert.theta) << " ± " << fmt7(cert.uncertainty) << "\n";
    out << "achiever sum " << fmt7(cert.achiever_sum) << "\n";

    double q0 = cert.upper_witness.probabilities.empty() ? 0.0
                                                         : cert.upper_witness.probabilities.front();
    out << "witness q uniform " << fmt7(q0) << "\n";
    for (const auto& check : cert.checks)
        out << "check " << check.name << (check.passed ? " PASS" : " FAIL") << " (observed "
            << fmt7(check.observed) << ", bound " << fmt7(check.bound) << ")\n";
    std::size_t passed = 0;
    for (const auto& check : cert.checks) passed += check.passed ? 1 : 0;
    out << "result: " << (cert.all_passed() ? "PASS" : "FAIL") << " (" << passed << "/"
        << cert.checks.size() << " checks)\n";
    return out.str();
}

std::string serialize_certificate_json(const Graph& g, const EpCertificate& cert,
                                       std::uint64_t seed) {
    json j;
    j["graph"] = graph_to_json(g.vertex_count(), g.edge_count(), g.fingerprint_hex());
    j["ep_certificate"] = certificate_to_json(cert);
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

}  // namespace xbound::cli
