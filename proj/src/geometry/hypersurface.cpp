#include "rcperiod/hypersurface.hpp"

#include "rcperiod/error.hpp"

namespace rcp {

Hypersurface::Hypersurface(MultiPoly F, std::string name) : F_(std::move(F)), degree_(0), name_(std::move(name))
{
    if (F_.nvars() < 3)
        throw Error(Errc::DimensionMismatch, "a hypersurface needs at least 3 homogeneous coordinates");
    if (F_.is_zero() || !F_.is_homogeneous())
        throw Error(Errc::InputError, "hypersurface polynomial must be nonzero and homogeneous");
    degree_ = F_.total_degree();
    if (degree_ < 1)
        throw Error(Errc::DegreeError, "hypersurface degree must be positive");
    for (int i = 0; i < F_.nvars(); ++i)
        partials_.push_back(F_.partial(i));
    if (euler_defect() > 1e-12)
        throw Error(Errc::InputError, "Euler identity fails for the hypersurface polynomial");
}

double Hypersurface::euler_defect() const
{
    MultiPoly euler(F_.nvars());
    for (int i = 0; i < F_.nvars(); ++i)
        euler += MultiPoly::variable(F_.nvars(), i) * partials_[static_cast<std::size_t>(i)];
    euler -= F_ * Complex(static_cast<double>(degree_));
    return euler.scale() / F_.scale();
}

} // namespace rcp
