#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "kp2/frequency_grid.hpp"

namespace kp2 {

using cplx = std::complex<double>;

// A function on the periodic box held by its spectral coefficients.
// Normalization is unitary: the L2 norm of the function equals the
// plain l2 norm of the coefficient array.
//
// Fields used by the lab obey two invariants that construction-site
// validation (validate()) checks but intermediate arithmetic does not
// re-impose: the xi=0 column vanishes (zero mean in x, so 1/dx is the
// multiplier 1/(i xi)), and real fields are Hermitian-symmetric.
class Field2D {
public:
    Field2D(FrequencyGrid grid, std::vector<cplx> coeffs, bool real_flag);

    static Field2D zero(const FrequencyGrid& grid, bool real_flag = true);
    // exp(i(xi_jx x + eta_jy y)) with the given spectral amplitude.
    static Field2D single_mode(const FrequencyGrid& grid, long jx, long jy, cplx amplitude);
    // amplitude * cos(xi_jx x + eta_jy y), a real field.
    static Field2D cosine_mode(const FrequencyGrid& grid, long jx, long jy, double amplitude);
    static Field2D from_physical(const FrequencyGrid& grid, const std::vector<cplx>& values,
                                 bool real_flag);

    const FrequencyGrid& grid() const { return grid_; }
    bool real_flag() const { return real_flag_; }
    void set_real_flag(bool v) { real_flag_ = v; }

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::vector<cplx>& coeffs() { return coeffs_; }
    cplx at(std::size_t ix, std::size_t iy) const { return coeffs_[ix * grid_.ny() + iy]; }
    cplx& at(std::size_t ix, std::size_t iy) { return coeffs_[ix * grid_.ny() + iy]; }

    double l2_norm() const;
    double max_abs_coeff() const;

    std::vector<cplx> to_physical() const;

    // Checks Hermitian symmetry (when real) and the zero xi=0 column to
    // 1e-12 relative; throws std::invalid_argument on violation.
    void validate() const;
    bool is_hermitian(double rel_tol = 1e-12) const;

    void zero_x_mean();                       // hard-zero the xi=0 column
    void apply_dealias();                     // 2/3-rule truncation
    void hermitian_symmetrize();              // average with reflected conjugate

    // Multiply every coefficient by m(xi, eta).
    void apply_multiplier(const std::function<cplx(double, double)>& m);

    Field2D& operator+=(const Field2D& other);
    Field2D& operator-=(const Field2D& other);
    Field2D& operator*=(cplx scalar);
    friend Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
    friend Field2D operator-(Field2D a, const Field2D& b) { return a -= b; }
    friend Field2D operator*(cplx s, Field2D a) { return a *= s; }
    friend Field2D operator*(Field2D a, cplx s) { return a *= s; }

private:
    void require_compatible(const Field2D& other) const;

    FrequencyGrid grid_;
    std::vector<cplx> coeffs_;
    bool real_flag_;
};

// Hermitian L2 inner product <u,v> = sum conj(u_k) v_k (linear in v).
cplx inner_product(const Field2D& u, const Field2D& v);

// Physical-space product with 2/3 dealiasing on inputs and output.
// The result may carry a nonzero x-mean; callers that need a lab-valid
// field apply zero_x_mean() (the solver always follows with d/dx).
Field2D dealiased_product(const Field2D& u, const Field2D& v);

// Spectral d/dx, i.e. multiplication by (i xi).
Field2D d_dx(const Field2D& u);

}  // namespace kp2
