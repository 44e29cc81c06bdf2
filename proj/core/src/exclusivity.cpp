#include "xbound/exclusivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xbound/cliques.hpp"
#include "xbound/errors.hpp"
#include "xbound/packing.hpp"
#include "xbound/rng.hpp"
#include "xbound/theta.hpp"

namespace xbound {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

bool EpCertificate::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const EpCheck& c) { return c.passed; });
}

const EpCheck* EpCertificate::find_check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

JointEpResult joint_ep_sum(const Graph& g, const ProbabilityAssignment& p, const Graph& h,
                           const ProbabilityAssignment& q,
                           const std::optional<VertexMap>& mapping) {
    if (!p.matches(g)) throw std::invalid_argument("joint_ep_sum: p does not belong to g");
    if (!q.matches(h)) throw std::invalid_argument("joint_ep_sum: q does not belong to h");
    const int n = g.vertex_count();
    if (h.vertex_count() != n)
        throw std::invalid_argument("joint_ep_sum: vertex counts differ");

    const Graph gbar = complement(g);
    std::vector<int> map(static_cast<std::size_t>(n));
    if (mapping) {
        if (mapping->size() != n || !VertexMap::is_permutation(mapping->permutation))
            throw std::invalid_argument("joint_ep_sum: mapping is not a permutation of 0..n-1");
        map = mapping->permutation;
    } else {
        for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
    }
    // The joint events u_i v_{map(i)} are pairwise exclusive only when h,
    // pulled back through the map, is exactly the complement of g.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) !=
                gbar.adjacent(i, j))
                throw std::invalid_argument(
                    "joint_ep_sum: h is not the complement of g under the given correspondence");

    JointEpResult result;
    for (int i = 0; i < n; ++i)
        result.value += p.probabilities[static_cast<std::size_t>(i)] *
                        q.probabilities[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])];
    result.pass = result.value <= 1.0 + kEpPassSlack;
    return result;
}

JointEpResult qm_cross_check(const Graph& g, const OrthogonalRepresentation& rep_g,
                             const OrthogonalRepresentation& rep_complement) {
    rep_g.validate(g);
    rep_complement.validate(complement(g));

    auto pg = rep_g.vertex_probabilities();
    auto ph = rep_complement.vertex_probabilities();
    JointEpResult result;
    for (std::size_t i = 0; i < pg.size(); ++i) result.value += pg[i] * ph[i];
    result.pass = result.value <= 1.0 + kEpPassSlack;
    return result;
}

OrthogonalRepresentation random_orthogonal_representation(const Graph& g, int dimension,
                                                          std::uint64_t seed) {
    const int n = g.vertex_count();
    if (dimension < n)
        throw std::invalid_argument("random_orthogonal_representation: dimension " +
                                    std::to_string(dimension) + " < vertex count " +
                                    std::to_string(n));
    RandomStream rng(seed);

    auto random_unit = [&](std::size_t d) {
        std::vector<double> v(d);
        while (true) {
            for (auto& x : v) x = rng.next_gaussian();
            double norm = std::sqrt(dot(v, v));
            if (norm > 1e-8) {
                for (auto& x : v) x /= norm;
                return v;
            }
        }
    };

    OrthogonalRepresentation rep;
    rep.graph_fingerprint = g.fingerprint();
    rep.dimension = dimension;
    rep.vectors.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        // Orthonormal basis of the span of already assigned neighbors.
        std::vector<std::vector<double>> basis;
        for (int j = 0; j < i; ++j) {
            if (!g.adjacent(i, j)) continue;
            std::vector<double> b = rep.vectors[static_cast<std::size_t>(j)];
            for (const auto& q : basis) {
                double overlap = dot(q, b);
                for (std::size_t k = 0; k < b.size(); ++k) b[k] -= overlap * q[k];
            }
            double norm = std::sqrt(dot(b, b));
            if (norm > 1e-10) {
                for (auto& x : b) x /= norm;
                basis.push_back(std::move(b));
            }
        }
        // dimension >= n guarantees the complement of the span is nonempty.
        std::vector<double> v;
        while (true) {
            v = random_unit(static_cast<std::size_t>(dimension));
            for (const auto& q : basis) {
                double overlap = dot(q, v);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= overlap * q[k];
            }
            double norm = std::sqrt(dot(v, v));
            if (norm > 1e-8) {
                for (auto& x : v) x /= norm;
                break;
            }
        }
        rep.vectors.push_back(std::move(v));
    }

    rep.handle = random_unit(static_cast<std::size_t>(dimension));
    rep.value = 0.0;
    for (const auto& v : rep.vectors) {
        double overlap = dot(rep.handle, v);
        rep.value += overlap * overlap;
    }
    return rep;
}

double ep_constraint_max(const Graph& g, const ProbabilityAssignment& p) {
    if (!p.matches(g)) throw std::invalid_argument("ep_constraint_max: p does not belong to g");
    SdpSolution sol = lovasz_theta(complement(g), p.probabilities);
    if (!sol.converged)
        throw ConvergenceError("ep_constraint_max: weighted theta solve did not converge (gap " +
                               std::to_string(sol.gap) + ")");
    return sol.theta();
}

EpCertificate compute_ep_certificate(const Graph& g) {
    SdpSolution sol = lovasz_theta(g);
    if (!sol.converged)
        throw ConvergenceError("ep_bound: theta solve did not converge after " +
                               std::to_string(sol.iterations) + " iterations");

    const Graph gbar = complement(g);
    OrthogonalRepresentation dual = dual_representation(g, sol);
    OrthogonalRepresentation primal = primal_representation(g, sol);

    // Overlaps of near-unit vectors can exceed 1 by the solver noise; shave
    // that off before they become probability assignments.
    auto clamp_unit = [](std::vector<double> values) {
        for (double& v : values) v = std::clamp(v, 0.0, 1.0);
        return values;
    };

    EpCertificate cert;
    cert.theta = sol.theta();
    cert.uncertainty = sol.uncertainty();
    cert.upper_witness =
        ProbabilityAssignment::for_graph(gbar, clamp_unit(dual.vertex_probabilities()));
    cert.achiever = ProbabilityAssignment::for_graph(g, clamp_unit(primal.vertex_probabilities()));
    cert.achiever_sum = primal.value;

    auto add_check = [&cert](std::string name, double observed, double bound, bool passed) {
        cert.checks.push_back({std::move(name), passed, observed, bound});
    };

    {
        double dev = std::abs(cert.achiever_sum - cert.theta);
        add_check("achiever_sum_matches_theta", dev, 1e-5, dev <= 1e-5);
    }
    {
        double joint = 0.0;
        for (int i = 0; i < g.vertex_count(); ++i)
            joint += cert.achiever.probabilities[static_cast<std::size_t>(i)] *
                     cert.upper_witness.probabilities[static_cast<std::size_t>(i)];
        add_check("joint_product_bounded", joint, 1.0 + 1e-6, joint <= 1.0 + 1e-6);
    }
    {
        auto report = check_clique_constraints(gbar, cert.upper_witness);
        double worst = 0.0;
        for (const auto& v : report.violations) worst = std::max(worst, v.sum);
        add_check("witness_clique_admissible", worst, 1.0 + kEpPassSlack, report.admissible());
    }
    {
        double max_inverse = 0.0;
        for (double q : cert.upper_witness.probabilities)
            max_inverse = std::max(max_inverse, 1.0 / q);
        double dev = std::abs(max_inverse - cert.theta);
        add_check("max_inverse_witness_is_theta", dev, 1e-5, dev <= 1e-5);
    }
    {
        double worst = 0.0;
        for (double q : cert.upper_witness.probabilities)
            worst = std::max(worst, std::abs(q - 1.0 / cert.theta));
        add_check("witness_uniform_inverse_theta", worst, 1e-6, worst <= 1e-6);
    }
    return cert;
}

EpCertificate ep_bound(const Graph& g) {
    EpCertificate cert = compute_ep_certificate(g);
    for (const auto& check : cert.checks)
        if (!check.passed)
            throw VerificationError("ep_bound: check '" + check.name + "' failed (observed " +
                                        std::to_string(check.observed) + ", bound " +
                                        std::to_string(check.bound) + ")",
                                    std::abs(check.observed - check.bound));
    return cert;
}

double uniform_symmetric_bound(const Graph& g) {
    if (!is_vertex_transitive(g))
        throw std::invalid_argument(
            "uniform_symmetric_bound: graph is not vertex-transitive; the uniform reduction is unjustified");
    SdpSolution sol = lovasz_theta(complement(g));
    if (!sol.converged)
        throw ConvergenceError("uniform_symmetric_bound: theta solve did not converge");
    return g.vertex_count() / sol.theta();
}

SelfComplementaryBound self_complementary_bound(const Graph& g) {
    auto iso = find_isomorphism(g, complement(g));
    if (!iso)
        throw std::invalid_argument("self_complementary_bound: graph is not self-complementary");
    return {std::sqrt(static_cast<double>(g.vertex_count())), is_vertex_transitive(g)};
}

TwoCopyBound two_copy_ep_bound(const Graph& g) {
    LpSolution lp = fractional_packing_number(or_product(g, g));
    return {std::sqrt(lp.objective), lp.objective};
}

}  // namespace xbound
