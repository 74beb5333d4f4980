#include "sft/parry.hpp"

#include <cmath>

namespace sft {

namespace {

double lambda_power(const PerronData& pd, std::int64_t p) {
    return std::pow(pd.lambda, -static_cast<double>(p));
}

} // namespace

MeasureValue centered_cylinder_mass(const Graph& g, const PerronData& pd,
                                    const CenteredCylinder& e) {
    (void)g;
    MeasureValue m;
    const ExactMassForm form{2 * static_cast<std::int64_t>(e.halfwidth), e.src_anchor,
                             e.dst_anchor};
    m.exact = form;
    m.value = lambda_power(pd, form.lambda_power) * pd.u_l[form.left_vertex] *
              pd.u_r[form.right_vertex];
    return m;
}

MeasureValue ray_cylinder_mass(const Graph& g, const PerronData& pd, const RayCylinder& r) {
    (void)g;
    MeasureValue m;
    if (r.side == RaySide::unstable) {
        const ExactMassForm form{r.parameter, -1, r.anchor};
        m.exact = form;
        m.value = lambda_power(pd, r.parameter) * pd.u_r[r.anchor];
    } else {
        const ExactMassForm form{r.parameter, r.anchor, -1};
        m.exact = form;
        m.value = lambda_power(pd, r.parameter) * pd.u_l[r.anchor];
    }
    return m;
}

ProductMassReport product_mass_check(const Graph& g, const PerronData& pd,
                                     const ProductSet& p) {
    ProductMassReport rep;
    rep.rhs = ray_cylinder_mass(g, pd, p.unstable).value *
              ray_cylinder_mass(g, pd, p.stable).value;
    rep.config = "n=" + std::to_string(p.unstable.parameter) +
                 ",m=" + std::to_string(p.stable.parameter);
    if (p.empty) {
        rep.empty = true;
        rep.lhs = 0.0;
        rep.abs_err = rep.rhs;
        return rep;
    }
    rep.config += ",junction=" + g.vertex_id(p.junction);
    for (const auto& cyl : p.cylinders) rep.lhs += centered_cylinder_mass(g, pd, cyl).value;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    return rep;
}

std::vector<ConformalityRow> conformality_report(const Graph& g, const PerronData& pd,
                                                 const RayCylinder& r,
                                                 const std::optional<ShiftPoint>& transport_to) {
    std::vector<ConformalityRow> rows;
    const double mass = ray_cylinder_mass(g, pd, r).value;
    const RayCylinder shifted = shift_ray(g, r);
    const double shifted_mass = ray_cylinder_mass(g, pd, shifted).value;
    if (r.side == RaySide::unstable) {
        rows.push_back({"unstable_shift: mass(sigma R) = lambda mass(R)", shifted_mass,
                        pd.lambda * mass, std::abs(shifted_mass - pd.lambda * mass)});
    } else {
        rows.push_back({"stable_shift: mass(sigma R) = mass(R)/lambda", shifted_mass,
                        mass / pd.lambda, std::abs(shifted_mass - mass / pd.lambda)});
    }
    if (transport_to) {
        const auto moved = transport_ray(g, r, *transport_to);
        if (!moved)
            throw validation_error("conformality_report: bracket transport undefined "
                                   "(junction vertices differ)");
        const double moved_mass = ray_cylinder_mass(g, pd, *moved).value;
        rows.push_back({"bracket_transport: mass([R, x']) = mass(R)", moved_mass, mass,
                        std::abs(moved_mass - mass)});
    }
    return rows;
}

} // namespace sft
