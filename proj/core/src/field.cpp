#include "kp2/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kp2/fft_engine.hpp"

namespace kp2 {

Field2D::Field2D(FrequencyGrid grid, std::vector<cplx> coeffs, bool real_flag)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)), real_flag_(real_flag) {
    if (coeffs_.size() != grid_.size())
        throw std::invalid_argument("Field2D: coefficient array does not match grid size");
}

Field2D Field2D::zero(const FrequencyGrid& grid, bool real_flag) {
    return Field2D(grid, std::vector<cplx>(grid.size(), cplx{0.0, 0.0}), real_flag);
}

Field2D Field2D::single_mode(const FrequencyGrid& grid, long jx, long jy, cplx amplitude) {
    Field2D f = zero(grid, false);
    f.coeffs_[grid.index_of(jx, jy)] = amplitude;
    return f;
}

Field2D Field2D::cosine_mode(const FrequencyGrid& grid, long jx, long jy, double amplitude) {
    Field2D f = zero(grid, true);
    // cos = (e^{i..} + e^{-i..})/2; unitary coefficients carry sqrt(Lx*Ly).
    const double half = 0.5 * amplitude * std::sqrt(grid.Lx() * grid.Ly());
    f.coeffs_[grid.index_of(jx, jy)] += cplx{half, 0.0};
    f.coeffs_[grid.index_of(-jx, -jy)] += cplx{half, 0.0};
    return f;
}

Field2D Field2D::from_physical(const FrequencyGrid& grid, const std::vector<cplx>& values,
                               bool real_flag) {
    if (values.size() != grid.size())
        throw std::invalid_argument("Field2D::from_physical: value array does not match grid");
    std::vector<cplx> c(grid.size());
    fft::forward_2d(grid.nx(), grid.ny(), values.data(), c.data());
    const double scale = std::sqrt(grid.Lx() * grid.Ly()) / static_cast<double>(grid.size());
    for (auto& z : c) z *= scale;
    return Field2D(grid, std::move(c), real_flag);
}

double Field2D::l2_norm() const {
    double s = 0.0;
    for (const auto& z : coeffs_) s += std::norm(z);
    return std::sqrt(s);
}

double Field2D::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& z : coeffs_) m = std::max(m, std::abs(z));
    return m;
}

std::vector<cplx> Field2D::to_physical() const {
    std::vector<cplx> out(grid_.size());
    fft::backward_2d(grid_.nx(), grid_.ny(), coeffs_.data(), out.data());
    const double scale = 1.0 / std::sqrt(grid_.Lx() * grid_.Ly());
    for (auto& z : out) z *= scale;
    return out;
}

bool Field2D::is_hermitian(double rel_tol) const {
    const double scale = std::max(max_abs_coeff(), 1e-300);
    const std::size_t ny = grid_.ny();
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const std::size_t mirror =
                grid_.index_of(-grid_.mode_x(ix), -grid_.mode_y(iy));
            const cplx diff = coeffs_[mirror] - std::conj(coeffs_[ix * ny + iy]);
            if (std::abs(diff) > rel_tol * scale) return false;
        }
    }
    return true;
}

void Field2D::validate() const {
    const double scale = std::max(max_abs_coeff(), 1e-300);
    for (std::size_t iy = 0; iy < grid_.ny(); ++iy) {
        if (std::abs(coeffs_[iy]) > 1e-12 * scale)
            throw std::invalid_argument("Field2D: xi=0 column is not zero");
    }
    if (real_flag_ && !is_hermitian())
        throw std::invalid_argument("Field2D: real field is not Hermitian-symmetric");
}

void Field2D::zero_x_mean() {
    for (std::size_t iy = 0; iy < grid_.ny(); ++iy) coeffs_[iy] = cplx{0.0, 0.0};
}

void Field2D::apply_dealias() {
    const long jx_max = static_cast<long>(grid_.nx()) / 3;
    const long jy_max = static_cast<long>(grid_.ny()) / 3;
    const std::size_t ny = grid_.ny();
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
        const bool kill_x = std::labs(grid_.mode_x(ix)) > jx_max;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            if (kill_x || std::labs(grid_.mode_y(iy)) > jy_max)
                coeffs_[ix * ny + iy] = cplx{0.0, 0.0};
        }
    }
}

void Field2D::hermitian_symmetrize() {
    const std::size_t ny = grid_.ny();
    std::vector<cplx> out(coeffs_.size());
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const std::size_t mirror = grid_.index_of(-grid_.mode_x(ix), -grid_.mode_y(iy));
            out[ix * ny + iy] = 0.5 * (coeffs_[ix * ny + iy] + std::conj(coeffs_[mirror]));
        }
    }
    coeffs_ = std::move(out);
}

void Field2D::apply_multiplier(const std::function<cplx(double, double)>& m) {
    const std::size_t ny = grid_.ny();
    for (std::size_t ix = 0; ix < grid_.nx(); ++ix) {
        const double xi = grid_.xi(ix);
        for (std::size_t iy = 0; iy < ny; ++iy)
            coeffs_[ix * ny + iy] *= m(xi, grid_.eta(iy));
    }
}

void Field2D::require_compatible(const Field2D& other) const {
    if (!grid_.compatible(other.grid_))
        throw std::invalid_argument("Field2D: incompatible grids");
}

Field2D& Field2D::operator+=(const Field2D& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    real_flag_ = real_flag_ && other.real_flag_;
    return *this;
}

Field2D& Field2D::operator-=(const Field2D& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    real_flag_ = real_flag_ && other.real_flag_;
    return *this;
}

Field2D& Field2D::operator*=(cplx scalar) {
    for (auto& z : coeffs_) z *= scalar;
    if (scalar.imag() != 0.0) real_flag_ = false;
    return *this;
}

cplx inner_product(const Field2D& u, const Field2D& v) {
    if (!u.grid().compatible(v.grid()))
        throw std::invalid_argument("inner_product: incompatible grids");
    cplx s{0.0, 0.0};
    const auto& a = u.coeffs();
    const auto& b = v.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Field2D dealiased_product(const Field2D& u, const Field2D& v) {
    if (!u.grid().compatible(v.grid()))
        throw std::invalid_argument("dealiased_product: incompatible grids");
    Field2D a = u;
    Field2D b = v;
    a.apply_dealias();
    b.apply_dealias();
    const auto pa = a.to_physical();
    const auto pb = b.to_physical();
    std::vector<cplx> prod(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) prod[i] = pa[i] * pb[i];
    Field2D out = Field2D::from_physical(u.grid(), prod, u.real_flag() && v.real_flag());
    out.apply_dealias();
    return out;
}

Field2D d_dx(const Field2D& u) {
    Field2D out = u;
    const auto& g = u.grid();
    const std::size_t ny = g.ny();
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const cplx factor{0.0, g.xi(ix)};
        for (std::size_t iy = 0; iy < ny; ++iy) out.coeffs()[ix * ny + iy] *= factor;
    }
    return out;
}

}  // namespace kp2
