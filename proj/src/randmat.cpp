#include "primsplit/randmat.hpp"

namespace primsplit {

Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    Matrix g = Matrix::identity(n);
    if (n < 2) return g;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    const std::size_t steps = 2 * n + 2;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            for (std::size_t c = 0; c < n; ++c) std::swap(g.at(i, c), g.at((i + 1) % n, c));
            continue;
        }
        int f = coeff(rng);
        if (f == 0) f = 1;
        for (std::size_t c = 0; c < n; ++c) g.at(i, c) += Rational(f) * g.at(j, c);
    }
    return g;
}

} // namespace primsplit
