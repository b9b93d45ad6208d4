#ifndef NETSIR_NETWORK_HPP
#define NETSIR_NETWORK_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace netsir {

/// How the per-contact infectivity scales with the degree of the neighbor
/// being pointed to: proportional to its degree, or one constant per strain.
enum class Infectivity { DegreeProportional, Constant };

/*! Degree statistics of a truncated scale-free network.
 *
 *  The degree distribution is P(k) ~ 2 m^2 k^-3 on the support [m, k_max],
 *  renormalized to unit mass. mean_degree is recomputed from the truncated
 *  distribution; the untruncated ideal is 2m and stays available through
 *  ideal_mean_degree().
 */
struct NetworkModel {
    int m = 1;
    int k_min = 1;
    int k_max = 1;
    double gamma = 1.0;           ///< exponent parameter: P(k) ~ k^-(2+gamma)
    double mean_degree = 0.0;     ///< sum of k P(k) over the truncated support
    std::vector<double> pk_mass;  ///< P(k) for k = k_min .. k_max

    bool in_support(int k) const { return k >= k_min && k <= k_max; }
    /// Probability mass of degree k; throws std::domain_error outside support.
    double pk(int k) const;
    /// Untruncated mean degree 2m of the generating model.
    double ideal_mean_degree() const { return 2.0 * m; }
};

/// Builds the truncated power-law model on [m, k_max].
/// Throws std::invalid_argument when k_max < m or m < 1.
NetworkModel build_power_law_model(int m, int k_max);

/// Probability that an edge end points to a node of degree k_prime,
/// k' P(k') / <k> (uncorrelated network). Domain error outside support.
double conditional_degree_prob(const NetworkModel& model, int k_prime);

/// Weight of one degree class inside the theta sum: the edge-end probability
/// combined with the infectivity convention, so that
/// theta_i = delta_i * sum_k weight(k) * I_i(k).
double theta_class_weight(const NetworkModel& model, int k, Infectivity infectivity);

/// State-dependent infection field: sum over the support of
/// delta_ik' * P(k'|k) * I_k' / k'. Missing degrees count as uninfected.
/// Throws std::domain_error for fractions outside [0,1] or degrees outside
/// the support.
double theta_summation(const NetworkModel& model,
                       const std::map<int, double>& infected,
                       double delta_coeff,
                       Infectivity infectivity = Infectivity::DegreeProportional);

/// Closed-form infection field exp(-1/(m*lambda)) / (m*lambda) in the
/// effective spreading rate lambda = delta/sigma. Domain error for
/// lambda_eff <= 0 or m < 1.
double theta_closed_form(double lambda_eff, int m);

/// Final degrees of a grown preferential-attachment graph.
struct DegreeSequence {
    std::vector<int> degrees;

    int n_nodes() const { return static_cast<int>(degrees.size()); }
    long long degree_sum() const;
};

/*! Barabasi-Albert growth: m0 disconnected seed nodes, then one node per
 *  step attaching m edges preferentially by current degree. Targets within
 *  one step are distinct (duplicates are resampled). While no edge exists
 *  yet the target is drawn uniformly from the existing nodes.
 *
 *  Deterministic for a fixed seed; n_nodes == m0 yields the untouched
 *  seed nodes. Throws std::invalid_argument unless 1 <= m <= m0 <= n_nodes.
 */
DegreeSequence generate_ba_degree_sequence(int n_nodes, int m0, int m, std::uint64_t seed);

/// Writes one degree per line; throws IoError when the file cannot be opened.
void write_degree_sequence(const DegreeSequence& seq, const std::string& path);

} // namespace netsir

#endif
