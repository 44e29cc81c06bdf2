// Acceptance suite: every release-gating numerical identity, one pass/fail
// line per criterion. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "test_util.hpp"
#include "xbound/cliques.hpp"
#include "xbound/exclusivity.hpp"
#include "xbound/graph.hpp"
#include "xbound/independence.hpp"
#include "xbound/linalg.hpp"
#include "xbound/packing.hpp"
#include "xbound/theta.hpp"

using namespace xbound;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
    void require_close(double value, double target, double tol, const std::string& what) {
        std::ostringstream msg;
        msg << what << " = " << value << " (target " << target << " ± " << tol << ")";
        require(std::abs(value - target) <= tol, msg.str());
        if (ok && detail.empty()) detail = msg.str();
    }
};

int failures = 0;

void criterion(int id, const std::string& label, double time_limit_s,
               const std::function<void(Checker&)>& body) {
    Checker check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0)
        check.require(elapsed <= time_limit_s,
                      "exceeded time limit " + std::to_string(time_limit_s) + " s");

    if (!check.ok) ++failures;
    std::printf("[%s] criterion %2d: %s [%.2f s]%s%s\n", check.ok ? "PASS" : "FAIL", id,
                label.c_str(), elapsed, check.detail.empty() ? "" : " -- ",
                check.detail.c_str());
    std::fflush(stdout);
}

double theta_of(const Graph& g, Checker& check) {
    SdpSolution sol = lovasz_theta(g);
    check.require(sol.converged, "theta solve did not converge");
    return sol.theta();
}

}  // namespace

int main() {
    const double root2 = std::sqrt(2.0);
    const double root5 = std::sqrt(5.0);
    const Graph ci8 = circulant(8, {1, 2});
    const Graph chsh_graph = complement(ci8);
    const Graph c5 = cycle_graph(5);

    auto suite_start = std::chrono::steady_clock::now();

    criterion(1, "theta(Ci8(1,2)) = 8 - 4*sqrt(2) within 1e-6", 5.0, [&](Checker& c) {
        c.require_close(theta_of(ci8, c), 8.0 - 4.0 * root2, 1e-6, "theta(Ci8(1,2))");
    });

    criterion(2, "theta(CHSH) and uniform symmetric bound = 2 + sqrt(2)", 5.0, [&](Checker& c) {
        c.require_close(theta_of(chsh_graph, c), 2.0 + root2, 1e-6, "theta(CHSH)");
        c.require_close(uniform_symmetric_bound(chsh_graph), 2.0 + root2, 1e-5,
                        "uniform_symmetric_bound(CHSH)");
    });

    criterion(3, "CHSH chain: alpha = 3 exactly, alpha* = 4 within 1e-9", 1.0, [&](Checker& c) {
        c.require(independence_number(chsh_graph).number == 3, "alpha(CHSH) != 3");
        c.require_close(fractional_packing_number(chsh_graph).objective, 4.0, 1e-9,
                        "alpha*(CHSH)");
    });

    criterion(4, "pentagon: theta = sqrt(5), self-complementary bound, boundary saturation", 5.0,
              [&](Checker& c) {
                  c.require_close(theta_of(c5, c), root5, 1e-6, "theta(C5)");
                  auto sc = self_complementary_bound(c5);
                  c.require_close(sc.bound, root5, 1e-12, "self_complementary_bound(C5)");
                  c.require(sc.certified_tight, "C5 bound not certified tight");
                  double boundary =
                      ep_constraint_max(c5, ProbabilityAssignment::uniform(c5, 1.0 / root5));
                  c.require_close(boundary, 1.0, 1e-5, "ep_constraint_max(C5, uniform)");
              });

    criterion(5, "two-copy pentagon: alpha*(C5 (x) C5) = 5, per-copy sqrt(5)", 10.0,
              [&](Checker& c) {
                  auto tc = two_copy_ep_bound(c5);
                  c.require_close(tc.product_alpha_star, 5.0, 1e-6, "alpha*(C5 (x) C5)");
                  c.require_close(tc.per_copy_bound, root5, 1e-6, "per-copy bound");
              });

    criterion(6, "two-copy CHSH: per-copy bound = 8/sqrt(5) within 1e-3", 60.0, [&](Checker& c) {
        auto tc = two_copy_ep_bound(chsh_graph);
        c.require_close(tc.per_copy_bound, 8.0 / root5, 1e-3, "per-copy bound");
    });

    criterion(7, "theta(K_n) = 1 within 1e-8 for n in 2..8", 5.0, [&](Checker& c) {
        for (int n = 2; n <= 8; ++n)
            c.require_close(theta_of(complete_graph(n), c), 1.0, 1e-8,
                            "theta(K_" + std::to_string(n) + ")");
    });

    criterion(8, "certificate pipeline on CHSH and C5 (witness, achiever, products)", 30.0,
              [&](Checker& c) {
                  for (const Graph* g : {&chsh_graph, &c5}) {
                      auto cert = ep_bound(*g);
                      c.require(cert.all_passed(), "certificate checks failed");
                      for (double q : cert.upper_witness.probabilities)
                          c.require_close(q, 1.0 / cert.theta, 1e-6, "witness entry");
                      c.require_close(cert.achiever_sum, cert.theta, 1e-5, "achiever sum");
                      double joint = 0.0;
                      double max_inverse = 0.0;
                      for (std::size_t i = 0; i < cert.achiever.probabilities.size(); ++i) {
                          joint += cert.achiever.probabilities[i] *
                                   cert.upper_witness.probabilities[i];
                          max_inverse =
                              std::max(max_inverse, 1.0 / cert.upper_witness.probabilities[i]);
                      }
                      c.require(joint <= 1.0 + 1e-6, "sum p_i q_i exceeds 1 + 1e-6");
                      c.require_close(max_inverse, cert.theta, 1e-5, "max 1/q_i");
                  }
              });

    criterion(9, "PR-box rejection through the CLI: value 4 - 2*sqrt(2), exit code 1", 30.0,
              [&](Checker& c) {
                  namespace fs = std::filesystem;
                  fs::path dir = fs::temp_directory_path() / "xbound_acceptance";
                  fs::create_directories(dir);

                  std::ostringstream sink, errs;
                  auto graph_path = (dir / "chsh.dimacs").string();
                  int gen = cli::run_command({"gen", "--family", "circulant", "--n", "8", "--conn",
                                              "1,2", "-o", (dir / "ci8.dimacs").string()},
                                             sink, errs);
                  int comp = cli::run_command(
                      {"complement", (dir / "ci8.dimacs").string(), "-o", graph_path}, sink, errs);
                  c.require(gen == 0 && comp == 0, "graph generation failed");

                  nlohmann::json pr, witness;
                  pr["p"] = std::vector<double>(8, 0.5);
                  auto cert = compute_ep_certificate(chsh_graph);
                  witness["p"] = cert.upper_witness.probabilities;
                  std::ofstream(dir / "pr.json") << pr.dump();
                  std::ofstream(dir / "witness.json") << witness.dump();

                  std::ostringstream out;
                  int code = cli::run_command({"check-ep", graph_path, "--p",
                                               (dir / "pr.json").string(), "--q",
                                               (dir / "witness.json").string()},
                                              out, errs);
                  c.require(code == 1, "expected exit code 1, got " + std::to_string(code));

                  double value = 0.0;
                  std::istringstream parse(out.str());
                  std::string word;
                  parse >> word >> value;
                  c.require(word == "value", "unexpected output: " + out.str());
                  c.require_close(value, 4.0 - 2.0 * root2, 1e-6, "reported value");
                  fs::remove_all(dir);
              });

    criterion(10, "property suites (sandwich, complement product, cross-check, oracles)", 600.0,
              [&](Checker& c) {
                  // Sandwich and complement product on 100 seeded random graphs, n <= 10.
                  RandomStream rng(90210);
                  for (int trial = 0; trial < 100; ++trial) {
                      int n = 2 + static_cast<int>(rng.next_u64() % 9);
                      Graph g = testutil::random_graph(n, 0.15 + 0.7 * rng.next_open_unit(), rng);
                      double theta = theta_of(g, c);
                      c.require(independence_number(g).number - 1e-5 <= theta,
                                "alpha exceeds theta");
                      c.require(theta <= fractional_packing_number(g).objective + 1e-5,
                                "theta exceeds alpha*");
                      c.require(theta * theta_of(complement(g), c) >= n - 1e-4,
                                "theta(G) * theta(complement) below n");
                  }

                  // Tensor cross-check on 1000 seeded random representation pairs.
                  RandomStream rep_rng(31337);
                  for (int trial = 0; trial < 1000; ++trial) {
                      int n = 2 + static_cast<int>(rep_rng.next_u64() % 7);
                      Graph g = testutil::random_graph(n, 0.5, rep_rng);
                      auto rep_g = random_orthogonal_representation(g, n, rep_rng.next_u64());
                      auto rep_h = random_orthogonal_representation(complement(g), n,
                                                                    rep_rng.next_u64());
                      c.require(qm_cross_check(g, rep_g, rep_h).pass,
                                "tensor cross-check exceeded 1 + 1e-7");
                  }

                  // Independence number against the exhaustive oracle, 200 graphs n <= 16.
                  RandomStream mis_rng(1453);
                  for (int trial = 0; trial < 200; ++trial) {
                      int n = 1 + static_cast<int>(mis_rng.next_u64() % 16);
                      Graph g =
                          testutil::random_graph(n, 0.15 + 0.7 * mis_rng.next_open_unit(), mis_rng);
                      c.require(independence_number(g).number ==
                                    testutil::brute_force_independence(g),
                                "branch-and-bound disagrees with the exhaustive oracle");
                  }

                  // Eigendecomposition reconstruction on 100 random symmetric matrices.
                  RandomStream eig_rng(577215);
                  for (int trial = 0; trial < 100; ++trial) {
                      int order = 1 + static_cast<int>(eig_rng.next_u64() % 24);
                      auto m = testutil::random_symmetric(order, 5.0, eig_rng);
                      auto e = symmetric_eigendecomposition(m);
                      double worst = 0.0;
                      for (int i = 0; i < order; ++i)
                          for (int j = 0; j < order; ++j) {
                              double sum = 0.0;
                              for (int k = 0; k < order; ++k)
                                  sum += e.values[static_cast<std::size_t>(k)] *
                                         e.vector_component(k, i) * e.vector_component(k, j);
                              worst = std::max(worst, std::abs(sum - m.at(i, j)));
                          }
                      c.require(worst <= 1e-8, "reconstruction error above 1e-8");
                  }
              });

    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("%d/%d criteria passed [%.2f s total]\n", 10 - failures, 10, total);
    return failures;
}
