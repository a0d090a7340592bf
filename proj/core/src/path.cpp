#include "kp2/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kp2/propagator.hpp"

namespace kp2 {

Partition::Partition(std::vector<double> interior, bool neg_inf, bool pos_inf)
    : interior_(std::move(interior)), neg_inf_(neg_inf), pos_inf_(pos_inf) {
    for (std::size_t i = 1; i < interior_.size(); ++i)
        if (!(interior_[i - 1] < interior_[i]))
            throw std::invalid_argument("Partition: times must be strictly increasing");
    if (point_count() < 2)
        throw std::invalid_argument("Partition: needs at least two points");
}

Partition Partition::refined_dyadic() const {
    std::vector<double> out;
    out.reserve(interior_.size() * 2);
    for (std::size_t i = 0; i < interior_.size(); ++i) {
        out.push_back(interior_[i]);
        if (i + 1 < interior_.size())
            out.push_back(0.5 * (interior_[i] + interior_[i + 1]));
    }
    return Partition(std::move(out), neg_inf_, pos_inf_);
}

Partition Partition::merge(const Partition& a, const Partition& b) {
    std::vector<double> out;
    out.reserve(a.interior_.size() + b.interior_.size());
    std::merge(a.interior_.begin(), a.interior_.end(), b.interior_.begin(), b.interior_.end(),
               std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Partition(std::move(out), a.neg_inf_ || b.neg_inf_, a.pos_inf_ || b.pos_inf_);
}

SampledPath::SampledPath(std::vector<double> times, std::vector<Field2D> values,
                         bool constant_before_first)
    : times_(std::move(times)), values_(std::move(values)),
      constant_before_first_(constant_before_first) {
    if (times_.empty()) throw std::invalid_argument("SampledPath: empty path");
    if (times_.size() != values_.size())
        throw std::invalid_argument("SampledPath: times/values size mismatch");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i - 1] < times_[i]))
            throw std::invalid_argument("SampledPath: times must be strictly increasing");
    for (const auto& v : values_)
        if (!v.grid().compatible(values_.front().grid()))
            throw std::invalid_argument("SampledPath: all fields must share one grid");
}

Field2D SampledPath::eval(double t) const {
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return value_at_neg_inf();
    return values_[static_cast<std::size_t>(std::distance(times_.begin(), it)) - 1];
}

Field2D SampledPath::value_at_neg_inf() const {
    if (constant_before_first_) return values_.front();
    return Field2D::zero(grid(), values_.front().real_flag());
}

Field2D SampledPath::value_at_pos_inf() const {
    return Field2D::zero(grid(), values_.front().real_flag());
}

bool SampledPath::uniform_times(double* dt_out, double rel_tol) const {
    if (times_.size() < 2) return false;
    const double dt = times_[1] - times_[0];
    for (std::size_t i = 2; i < times_.size(); ++i)
        if (std::fabs(times_[i] - times_[i - 1] - dt) > rel_tol * std::fabs(dt)) return false;
    if (dt_out) *dt_out = dt;
    return true;
}

double SampledPath::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, v.l2_norm());
    return m;
}

namespace {
void require_same_times(const SampledPath& a, const SampledPath& b) {
    if (a.times() != b.times())
        throw std::invalid_argument("SampledPath: operation requires identical time grids");
}
}  // namespace

SampledPath& SampledPath::operator-=(const SampledPath& other) {
    require_same_times(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

SampledPath& SampledPath::operator+=(const SampledPath& other) {
    require_same_times(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

SampledPath& SampledPath::operator*=(cplx scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

double StepAtom::lp_cost(double p) const {
    double s = 0.0;
    for (const auto& v : values) s += std::pow(v.l2_norm(), p);
    return std::pow(s, 1.0 / p);
}

bool StepAtom::is_normalized_atom(double p, double tol) const {
    return std::fabs(lp_cost(p) - 1.0) <= tol;
}

SampledPath StepAtom::to_sampled_path() const {
    return SampledPath(jump_times, values);
}

SampledPath StepAtom::sample_onto(const std::vector<double>& node_times) const {
    if (jump_times.empty()) throw std::invalid_argument("StepAtom: no jumps");
    std::vector<Field2D> out;
    out.reserve(node_times.size());
    const auto& g = values.front().grid();
    for (double t : node_times) {
        auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
        if (it == jump_times.begin()) {
            out.push_back(Field2D::zero(g, values.front().real_flag()));
        } else {
            const auto& plateau =
                values[static_cast<std::size_t>(std::distance(jump_times.begin(), it)) - 1];
            out.push_back(twisted ? free_propagate(plateau, t) : plateau);
        }
    }
    return SampledPath(node_times, std::move(out));
}

}  // namespace kp2
