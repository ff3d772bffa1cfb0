#pragma once

#include <string>
#include <vector>

#include "rcperiod/multipoly.hpp"

namespace rcp {

// X = {F = 0} in P^{m+1}. F is homogeneous of degree d in m+2 variables.
class Hypersurface {
public:
    Hypersurface(MultiPoly F, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    const MultiPoly& F() const noexcept { return F_; }
    const MultiPoly& partial(int i) const { return partials_.at(static_cast<std::size_t>(i)); }
    const std::vector<MultiPoly>& partials() const noexcept { return partials_; }

    int nvars() const noexcept { return F_.nvars(); }
    int ambient_dim() const noexcept { return F_.nvars() - 1; }
    // dimension of X; the cocycle index m
    int m() const noexcept { return F_.nvars() - 2; }
    int degree() const noexcept { return degree_; }

    // max coefficient of sum x_i F_i - d F, relative to scale(F)
    double euler_defect() const;

private:
    MultiPoly F_;
    std::vector<MultiPoly> partials_;
    int degree_;
    std::string name_;
};

} // namespace rcp
