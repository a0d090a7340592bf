#pragma once

#include <optional>
#include <vector>

#include "kp2/field.hpp"

namespace kp2 {

// A finite partition of the time axis, optionally carrying the -inf/+inf
// sentinels. Class Z carries both ("-inf = t_0 < ... < t_K = inf"); class
// Z_0 starts at a finite time and may end at +inf.
class Partition {
public:
    Partition(std::vector<double> interior, bool neg_inf, bool pos_inf);

    static Partition class_z(std::vector<double> interior) {
        return Partition(std::move(interior), true, true);
    }
    static Partition class_z0(std::vector<double> interior, bool pos_inf = true) {
        return Partition(std::move(interior), false, pos_inf);
    }

    const std::vector<double>& interior() const { return interior_; }
    bool has_neg_inf() const { return neg_inf_; }
    bool has_pos_inf() const { return pos_inf_; }

    // Total number of partition points, sentinels included.
    std::size_t point_count() const {
        return interior_.size() + (neg_inf_ ? 1 : 0) + (pos_inf_ ? 1 : 0);
    }

    // Insert midpoints of all finite intervals.
    Partition refined_dyadic() const;
    static Partition merge(const Partition& a, const Partition& b);

private:
    std::vector<double> interior_;
    bool neg_inf_, pos_inf_;
};

// A right-continuous step path in L2, recorded as (time, field) samples.
// Conventions: the value before the first sample is zero (or, when the
// path represents one with a nonzero limit at -inf, the first sample's
// value -- see constant_before_first), and the value at +inf is zero
// regardless of the last sample.
class SampledPath {
public:
    SampledPath(std::vector<double> times, std::vector<Field2D> values,
                bool constant_before_first = false);

    std::size_t size() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const Field2D& value(std::size_t i) const { return values_[i]; }
    Field2D& value(std::size_t i) { return values_[i]; }
    const std::vector<Field2D>& values() const { return values_; }
    const FrequencyGrid& grid() const { return values_.front().grid(); }
    bool constant_before_first() const { return constant_before_first_; }

    Field2D eval(double t) const;          // right-continuous step value
    Field2D value_at_neg_inf() const;      // lim_{t -> -inf}
    Field2D value_at_pos_inf() const;      // the normalizing convention: zero

    // True when sample times are equally spaced; fills dt when requested.
    bool uniform_times(double* dt_out = nullptr, double rel_tol = 1e-9) const;

    double sup_norm() const;               // max_i ||value_i||_{L2}

    SampledPath& operator-=(const SampledPath& other);  // same time grid
    SampledPath& operator+=(const SampledPath& other);
    SampledPath& operator*=(cplx scalar);

private:
    std::vector<double> times_;
    std::vector<Field2D> values_;
    bool constant_before_first_;
};

// A step function subordinate to a finite set of jump times, of the kind
// the atomic space is built from: zero before the first jump, value
// values[k] on [jump_times[k], jump_times[k+1]). With twisted set, the
// recorded values are understood through the free evolution, i.e. the
// path at time t is e^{tS} values[k(t)].
struct StepAtom {
    std::vector<double> jump_times;
    std::vector<Field2D> values;
    bool twisted = false;

    // l^p cost of the values; an atom is normalized when this equals 1.
    double lp_cost(double p) const;
    bool is_normalized_atom(double p, double tol = 1e-9) const;

    // The untwisted step path (samples at the jump times).
    SampledPath to_sampled_path() const;
    // Evaluate onto a node grid; twisted atoms propagate each plateau.
    SampledPath sample_onto(const std::vector<double>& node_times) const;
};

}  // namespace kp2
