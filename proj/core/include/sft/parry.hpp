#pragma once

#include "sft/perron.hpp"
#include "sft/shift_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sft {

/// lambda^{-lambda_power} * u_l(left_vertex) * u_r(right_vertex).
struct ExactMassForm {
    std::int64_t lambda_power = 0;
    VertexIndex left_vertex = -1;
    VertexIndex right_vertex = -1;
};

struct MeasureValue {
    double value = 0.0;
    std::optional<ExactMassForm> exact;
};

/// Parry mass of a centered cylinder: lambda^{-2l} u_l(i') u_r(j').
MeasureValue centered_cylinder_mass(const Graph& g, const PerronData& pd,
                                    const CenteredCylinder& e);

/// Ray masses: lambda^{-n} u_r(anchor) for unstable rays, lambda^{-m}
/// u_l(anchor) for stable rays. These are densities of infinite measures and
/// may exceed 1.
MeasureValue ray_cylinder_mass(const Graph& g, const PerronData& pd, const RayCylinder& r);

struct ProductMassReport {
    bool empty = false;
    double lhs = 0.0; // sum of centered masses over the decomposition of [B, C]
    double rhs = 0.0; // ray mass of B times ray mass of C
    double abs_err = 0.0;
    std::string config;
};

ProductMassReport product_mass_check(const Graph& g, const PerronData& pd, const ProductSet& p);

struct ConformalityRow {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
};

/// Shift conformality of the ray masses (mass(sigma R) vs lambda^{+/-1}
/// mass(R)) and, when `transport_to` is given, invariance of the mass under
/// bracket transport to that base point.
std::vector<ConformalityRow> conformality_report(const Graph& g, const PerronData& pd,
                                                 const RayCylinder& r,
                                                 const std::optional<ShiftPoint>& transport_to);

} // namespace sft
