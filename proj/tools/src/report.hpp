#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xbound/exclusivity.hpp"
#include "xbound/graph.hpp"
#include "xbound/independence.hpp"

namespace xbound::cli {

/// The full alpha <= theta <= alpha* chain plus the certificate summary for
/// one graph. Stage timings are diagnostics only and stay out of the
/// serialized documents so identical runs serialize to identical bytes.
struct BoundReport {
    int n = 0;
    long edge_count = 0;
    std::string fingerprint;

    IndependenceResult alpha;
    double theta_value = 0.0;
    double theta_uncertainty = 0.0;
    long theta_iterations = 0;
    bool theta_converged = false;
    double alpha_star = 0.0;
    EpCertificate certificate;
    bool chain_consistent = false;
    std::uint64_t seed = 0;

    struct Timing {
        std::string stage;
        double seconds = 0.0;
    };
    std::vector<Timing> timings;
};

BoundReport compute_bound_report(const Graph& g, std::uint64_t seed);

/// Human-readable table; the chain line is
/// "alpha A ≤ theta T.TTTTTTT ≤ alpha* S.SSSSSSS".
std::string serialize_report_text(const BoundReport& report);

/// Stable key-sorted JSON document (newline-terminated). Identical inputs
/// and seeds yield identical bytes.
std::string serialize_report_json(const BoundReport& report);

std::string timings_diagnostic(const BoundReport& report);

/// Certificate-only documents for the certify subcommand.
std::string serialize_certificate_text(const Graph& g, const EpCertificate& cert);
std::string serialize_certificate_json(const Graph& g, const EpCertificate& cert,
                                       std::uint64_t seed);

/// Fixed 7-decimal rendering used for every numeric value on stdout.
std::string fmt7(double value);

}  // namespace xbound::cli
