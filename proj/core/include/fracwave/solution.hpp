#pragma once

#include "fracwave/field.hpp"

namespace fracwave {

enum class Backend { bessel, subordination, kernel };

const char* backend_name(Backend b);

/// Solution field at time t with provenance.
struct SolutionSnapshot {
    double t;
    Field field;
    Backend backend;
    double sigma;
    double mass;
};

} // namespace fracwave
