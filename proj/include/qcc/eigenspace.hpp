#pragma once

#include "qcc/johnson.hpp"
#include "qcc/matrix.hpp"
#include "qcc/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcc {

/// Numerical simultaneous diagonalization of {J_{n,k,s}}: the verification
/// oracle for the Hahn formula. Independent of hahn_eigenvalue — blocks come
/// from the spectrum of a random combination, eigenvalues from Rayleigh
/// quotients.
struct EigenspaceDecomposition {
    std::vector<std::int64_t> multiplicities;           // dims of E_0..E_k
    MatD basis;                                         // orthogonal, columns grouped by block
    std::vector<std::vector<double>> block_eigenvalues;  // [s][t], unnormalized J eigenvalues
};

struct OracleExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline EigenspaceDecomposition eigenspace_oracle(int n, int k, std::uint64_t seed = 1,
                                                 std::uint64_t budget = 1024) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("eigenspace_oracle: requires 0 <= k <= n/2");
    InstanceFamily fam(n, k);
    const std::uint64_t n_inst = fam.size();
    if (n_inst > budget) throw SizeBudgetError("eigenspace_oracle: size budget exceeded");
    const std::size_t nn = static_cast<std::size_t>(n_inst);

    using EMat = Eigen::MatrixXd;
    std::vector<EMat> j_mats(k + 1);
    for (int s = 0; s <= k; ++s) {
        MatD j = intersection_matrix(n, k, s, budget);
        j_mats[s] = Eigen::Map<const EMat>(j.data().data(), nn, nn);  // symmetric, layout moot
    }

    Rng rng(seed);
    const int max_attempts = 16;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<double> w(k + 1);
        for (double& x : w) x = rng.uniform(-1.0, 1.0);
        EMat combo = EMat::Zero(nn, nn);
        for (int s = 0; s <= k; ++s) combo += w[s] * j_mats[s];

        Eigen::SelfAdjointEigenSolver<EMat> es(combo);
        if (es.info() != Eigen::Success) continue;
        const EMat& u = es.eigenvectors();
        const Eigen::VectorXd& ev = es.eigenvalues();

        // cluster eigenvalues of the combination by gap
        double scale = std::max(std::abs(ev(0)), std::abs(ev(nn - 1)));
        double gap_tol = 1e-6 * std::max(1.0, scale);
        std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= nn; ++i) {
            if (i == nn || ev(i) - ev(i - 1) > gap_tol) {
                blocks.emplace_back(begin, i);
                begin = i;
            }
        }
        if (blocks.size() != static_cast<std::size_t>(k + 1)) continue;  // collision, resample

        // Rayleigh eigenvalue per (s, block) + diagonality residual check
        const double diag_tol = 1e-8;
        std::vector<std::vector<double>> lam(k + 1, std::vector<double>(k + 1));
        bool ok = true;
        for (int s = 0; s <= k && ok; ++s) {
            EMat g = j_mats[s] * u;
            for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
                auto [lo, hi] = blocks[b];
                std::size_t dim = hi - lo;
                double rayleigh = 0;
                for (std::size_t c = lo; c < hi; ++c) rayleigh += u.col(c).dot(g.col(c));
                rayleigh /= static_cast<double>(dim);
                lam[s][b] = rayleigh;
                double resid = (g.middleCols(lo, dim) - rayleigh * u.middleCols(lo, dim))
                                   .cwiseAbs()
                                   .maxCoeff();
                if (resid > diag_tol * std::max(1.0, std::abs(rayleigh))) ok = false;
            }
        }
        if (!ok) continue;

        // order blocks as E_0..E_k: the s = k-1 matrix (Johnson graph) has
        // strictly decreasing eigenvalues in t for k <= n/2
        std::vector<std::size_t> order(blocks.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (k >= 1) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return lam[k - 1][a] > lam[k - 1][b];
            });
        }

        EigenspaceDecomposition out;
        out.multiplicities.resize(blocks.size());
        out.block_eigenvalues.assign(k + 1, std::vector<double>(k + 1));
        out.basis = MatD(nn, nn);
        std::size_t col = 0;
        for (std::size_t t = 0; t < order.size(); ++t) {
            auto [lo, hi] = blocks[order[t]];
            out.multiplicities[t] = static_cast<std::int64_t>(hi - lo);
            for (int s = 0; s <= k; ++s) out.block_eigenvalues[s][t] = lam[s][order[t]];
            for (std::size_t c = lo; c < hi; ++c, ++col)
                for (std::size_t i = 0; i < nn; ++i) out.basis(i, col) = u(i, c);
        }
        return out;
    }
    throw OracleExhausted("eigenspace_oracle: eigenvalue-collision resampling exhausted");
}

}  // namespace qcc
