#pragma once

#include <array>
#include <cstddef>

namespace fracwave {

/// Uniform periodic grid on a torus [0, L)^d standing in for R^d,
/// d in {1,2,3}, n points per axis (a power of two). Frequencies are
/// xi_k = 2 pi k / L with k in {-n/2, ..., n/2 - 1} per axis; the zero
/// frequency appears exactly once, the Nyquist mode -n/2 is unpaired.
struct TorusGrid {
    int dim = 1;
    int n = 8;
    double box_length = 1.0;

    TorusGrid(int dim_, int n_, double box_length_);

    std::size_t size() const;
    double spacing() const { return box_length / n; }
    double nyquist_radius() const;  // pi * n / L = pi / h

    /// Signed lattice index for axis position k in [0, n).
    int signed_index(int k) const { return k < n / 2 ? k : k - n; }
    /// Frequency component for axis position k.
    double frequency(int k) const;
    /// Physical coordinate of axis position k.
    double coordinate(int k) const { return spacing() * k; }

    std::array<int, 3> unflatten(std::size_t flat) const;
    std::size_t flatten(const std::array<int, 3>& idx) const;

    /// |xi|^2 of the lattice point with flat index `flat`.
    double freq_norm2(std::size_t flat) const;

    bool operator==(const TorusGrid&) const = default;
};

} // namespace fracwave
