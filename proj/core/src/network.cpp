#include "netsir/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "netsir/errors.hpp"

namespace netsir {

double NetworkModel::pk(int k) const {
    if (!in_support(k))
        throw std::domain_error("degree " + std::to_string(k) + " outside support [" +
                                std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
    return pk_mass[static_cast<std::size_t>(k - k_min)];
}

NetworkModel build_power_law_model(int m, int k_max) {
    if (m < 1)
        throw std::invalid_argument("power-law model needs m >= 1");
    if (k_max < m)
        throw std::invalid_argument("invalid support: k_max " + std::to_string(k_max) +
                                    " < k_min " + std::to_string(m));

    NetworkModel model;
    model.m = m;
    model.k_min = m;
    model.k_max = k_max;
    model.gamma = 1.0;

    model.pk_mass.resize(static_cast<std::size_t>(k_max - m + 1));
    double norm = 0.0;
    for (int k = m; k <= k_max; ++k) {
        const double w = 2.0 * m * m / (static_cast<double>(k) * k * k);
        model.pk_mass[static_cast<std::size_t>(k - m)] = w;
        norm += w;
    }
    double mean = 0.0;
    for (int k = m; k <= k_max; ++k) {
        double& mass = model.pk_mass[static_cast<std::size_t>(k - m)];
        mass /= norm;
        mean += k * mass;
    }
    model.mean_degree = mean;
    return model;
}

double conditional_degree_prob(const NetworkModel& model, int k_prime) {
    return k_prime * model.pk(k_prime) / model.mean_degree;
}

double theta_class_weight(const NetworkModel& model, int k, Infectivity infectivity) {
    // delta_ik' * P(k'|k) / k' with P(k'|k) = k' P(k') / <k>: the k' of the
    // degree-proportional infectivity survives, the constant variant drops it.
    const double edge_end = model.pk(k) / model.mean_degree;
    return infectivity == Infectivity::DegreeProportional ? k * edge_end : edge_end;
}

double theta_summation(const NetworkModel& model,
                       const std::map<int, double>& infected,
                       double delta_coeff,
                       Infectivity infectivity) {
    double acc = 0.0;
    for (const auto& [k, frac] : infected) {
        if (!model.in_support(k))
            throw std::domain_error("infected map degree " + std::to_string(k) +
                                    " outside model support");
        if (!(frac >= 0.0 && frac <= 1.0))
            throw std::domain_error("infected fraction " + std::to_string(frac) +
                                    " outside [0,1] at degree " + std::to_string(k));
        acc += theta_class_weight(model, k, infectivity) * frac;
    }
    return delta_coeff * acc;
}

double theta_closed_form(double lambda_eff, int m) {
    if (m < 1)
        throw std::domain_error("theta_closed_form needs m >= 1");
    if (!(lambda_eff > 0.0))
        throw std::domain_error("effective spreading rate must be positive");
    const double ml = m * lambda_eff;
    return std::exp(-1.0 / ml) / ml;
}

long long DegreeSequence::degree_sum() const {
    long long sum = 0;
    for (int d : degrees)
        sum += d;
    return sum;
}

DegreeSequence generate_ba_degree_sequence(int n_nodes, int m0, int m, std::uint64_t seed) {
    if (m < 1 || m > m0)
        throw std::invalid_argument("BA growth needs 1 <= m <= m0");
    if (m0 > n_nodes)
        throw std::invalid_argument("BA growth needs m0 <= n_nodes");

    std::mt19937_64 rng(seed);
    DegreeSequence seq;
    seq.degrees.assign(static_cast<std::size_t>(n_nodes), 0);

    // One entry per edge end; uniform sampling from it is preferential by degree.
    std::vector<int> edge_ends;
    edge_ends.reserve(2u * static_cast<std::size_t>(m) * static_cast<std::size_t>(n_nodes - m0));
    std::vector<int> targets;
    targets.reserve(static_cast<std::size_t>(m));

    for (int v = m0; v < n_nodes; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            int candidate;
            if (edge_ends.empty()) {
                candidate = static_cast<int>(
                    std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(v) - 1)(rng));
            } else {
                candidate = edge_ends[std::uniform_int_distribution<std::size_t>(
                    0, edge_ends.size() - 1)(rng)];
            }
            if (std::find(targets.begin(), targets.end(), candidate) != targets.end())
                continue; // already linked in this step, resample
            targets.push_back(candidate);
        }
        for (int t : targets) {
            seq.degrees[static_cast<std::size_t>(t)] += 1;
            seq.degrees[static_cast<std::size_t>(v)] += 1;
            edge_ends.push_back(t);
            edge_ends.push_back(v);
        }
    }
    return seq;
}

void write_degree_sequence(const DegreeSequence& seq, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    for (int d : seq.degrees)
        std::fprintf(f, "%d\n", d);
    std::fclose(f);
}

} // namespace netsir
