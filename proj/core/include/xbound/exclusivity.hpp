#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xbound/graph.hpp"
#include "xbound/probability.hpp"
#include "xbound/representation.hpp"

namespace xbound {

/// Threshold for every pairwise-exclusivity pass/fail decision: above the
/// solver noise floor, far below any physically meaningful violation.
inline constexpr double kEpPassSlack = 1e-7;

struct EpCheck {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;
};

/// Two-sided certificate for the exclusivity bound on sum(P_i): theta with
/// its half-gap uncertainty, the dual witness distribution q on the
/// complement (every q_i = 1/theta), the achieving distribution p on the
/// graph itself, and the recorded verification outcomes.
struct EpCertificate {
    double theta = 0.0;
    double uncertainty = 0.0;
    ProbabilityAssignment upper_witness;  // on complement(g)
    ProbabilityAssignment achiever;       // on g
    double achiever_sum = 0.0;
    std::vector<EpCheck> checks;

    bool all_passed() const;
    const EpCheck* find_check(const std::string& name) const;
};

struct JointEpResult {
    double value = 0.0;
    bool pass = false;
};

/// sum_i p_i * q_{map(i)} for independent behaviors on g and on h, where h
/// must equal complement(g) or be isomorphic to it via the given map (the
/// joint events form a complete graph only in that case). pass iff the sum
/// is at most 1 + 1e-7.
JointEpResult joint_ep_sum(const Graph& g, const ProbabilityAssignment& p, const Graph& h,
                           const ProbabilityAssignment& q,
                           const std::optional<VertexMap>& mapping = std::nullopt);

/// sum_i <psi|u_i>^2 <phi|v_i>^2 for representations on g and complement(g);
/// the tensor vectors u_i (x) v_i are pairwise orthogonal, so the sum cannot
/// exceed 1. Both representations are re-validated first.
JointEpResult qm_cross_check(const Graph& g, const OrthogonalRepresentation& rep_g,
                             const OrthogonalRepresentation& rep_complement);

/// Random orthogonal representation: vertices in index order, each vector
/// uniform on the unit sphere of the orthogonal complement of its already
/// assigned neighbors (Box-Muller Gaussians + Gram-Schmidt); the handle is
/// a uniform random unit vector. Bit-for-bit deterministic for a fixed seed.
OrthogonalRepresentation random_orthogonal_representation(const Graph& g, int dimension,
                                                          std::uint64_t seed);

/// Largest weighted handle-overlap sum consistent with p: the weighted
/// Lovasz number theta(complement(g), p). p satisfies every representation
/// constraint iff the result is at most 1 (within solver uncertainty).
double ep_constraint_max(const Graph& g, const ProbabilityAssignment& p);

/// Certificate pipeline: solve theta(g), extract the dual witness and the
/// primal achiever, run every verification. Never throws on a failed check;
/// inspect all_passed().
EpCertificate compute_ep_certificate(const Graph& g);

/// compute_ep_certificate, then throw VerificationError naming the first
/// failed check (if any).
EpCertificate ep_bound(const Graph& g);

/// n / theta(complement(g)): the uniform-probability bound. Only justified
/// for vertex-transitive graphs; anything else is rejected.
double uniform_symmetric_bound(const Graph& g);

struct SelfComplementaryBound {
    double bound = 0.0;
    bool certified_tight = false;
};

/// sqrt(n) for self-complementary g: the uniform assignment saturates the
/// self-constraint sum p_i p_{pi(i)} <= 1. certified_tight iff g is also
/// vertex-transitive. Throws if g is not self-complementary.
SelfComplementaryBound self_complementary_bound(const Graph& g);

struct TwoCopyBound {
    double per_copy_bound = 0.0;
    double product_alpha_star = 0.0;
};

/// Pairwise-exclusivity bound from two independent copies: alpha* of the
/// OR product g (x) g, reported with its square root (the per-copy bound).
TwoCopyBound two_copy_ep_bound(const Graph& g);

}  // namespace xbound
