#pragma once

// Random admissible row-stochastic matrices and an argmin check on fixed points.

#include "edslrs/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Rows have support avoiding the diagonal, or of size >= 3 when it contains it.
// Every third instance is block-diagonal so larger eigenspaces show up.
inline edslrs::RatMatrix random_admissible(std::mt19937_64& rng, std::size_t n, bool blocks) {
    using edslrs::Rat;
    edslrs::RatMatrix a(n, n);
    std::vector<std::size_t> block(n, 0);
    if (blocks && n >= 6)
        for (std::size_t i = n / 2; i < n; ++i) block[i] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> pool;
        for (std::size_t j = 0; j < n; ++j)
            if (block[j] == block[i]) pool.push_back(j);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t size = 1 + rng() % pool.size();
        std::vector<std::size_t> support(pool.begin(), pool.begin() + size);
        bool diag = std::find(support.begin(), support.end(), i) != support.end();
        if (diag && size < 3) {
            if (pool.size() >= 3) {
                support.assign(pool.begin(), pool.begin() + 3);
                if (std::find(support.begin(), support.end(), i) == support.end()) support[0] = i;
            } else {
                support.erase(std::find(support.begin(), support.end(), i));
                if (support.empty())
                    for (auto j : pool)
                        if (j != i) {
                            support.push_back(j);
                            break;
                        }
            }
        }
        std::vector<long> w;
        for (std::size_t s = 0; s < support.size(); ++s) w.push_back(1 + static_cast<long>(rng() % 7));
        const long total = std::accumulate(w.begin(), w.end(), 0L);
        for (std::size_t s = 0; s < support.size(); ++s) {
            Rat x(w[s], total);
            x.canonicalize();
            a(i, support[s]) = x;
        }
    }
    return a;
}

// At a minimal coordinate of a fixed point every supported neighbour attains the
// minimum too, so some off-diagonal neighbour in that row must tie with it.
inline bool argmin_collides(const edslrs::RatMatrix& a, const std::vector<edslrs::Rat>& x) {
    std::size_t i = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
    for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i && a(i, j) != 0 && x[j] == x[i]) return true;
    return false;
}

}  // namespace oracle
