#include "fracwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace {
bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }
}

TorusGrid::TorusGrid(int dim_, int n_, double box_length_)
    : dim(dim_), n(n_), box_length(box_length_) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("TorusGrid: dim must be 1, 2 or 3");
    if (!is_pow2(n))
        throw std::invalid_argument("TorusGrid: n must be a power of two >= 2");
    if (!(box_length > 0.0))
        throw std::invalid_argument("TorusGrid: box_length must be positive");
}

std::size_t TorusGrid::size() const {
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
    return total;
}

double TorusGrid::nyquist_radius() const {
    return M_PI * n / box_length;
}

double TorusGrid::frequency(int k) const {
    return 2.0 * M_PI * signed_index(k) / box_length;
}

std::array<int, 3> TorusGrid::unflatten(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % n);
        flat /= n;
    }
    return idx;
}

std::size_t TorusGrid::flatten(const std::array<int, 3>& idx) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim; ++a)
        flat = flat * n + static_cast<std::size_t>(idx[a]);
    return flat;
}

double TorusGrid::freq_norm2(std::size_t flat) const {
    auto idx = unflatten(flat);
    double acc = 0.0;
    for (int a = 0; a < dim; ++a) {
        double xi = frequency(idx[a]);
        acc += xi * xi;
    }
    return acc;
}

} // namespace fracwave
