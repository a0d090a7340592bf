#pragma once

#include "kp2/path.hpp"

namespace kp2 {

// B_t(u,v) = sum_k <u(t_{k-1}), v(t_k) - v(t_{k-1})> on a partition,
// evaluated on the given partition and two dyadic refinements. For step
// paths the value is exact once the partition refines the jump sets, so
// the reported Cauchy increments witness the Moore-Smith convergence.
struct BilinearReport {
    cplx value{0.0, 0.0};   // finest-partition value
    cplx value_base{0.0, 0.0};
    cplx value_refined{0.0, 0.0};
    cplx value_refined2{0.0, 0.0};
    double increment1 = 0.0;  // |refined - base|
    double increment2 = 0.0;  // |refined2 - refined|
};

cplx bilinear_on_partition(const SampledPath& u, const SampledPath& v, const Partition& t);

BilinearReport bilinear_form(const SampledPath& u, const SampledPath& v,
                             const Partition& refinement);
BilinearReport bilinear_form(const StepAtom& u, const SampledPath& v,
                             const Partition& refinement);

// B on the union of both sample sets plus sentinels (exact for step paths).
cplx bilinear_exact(const SampledPath& u, const SampledPath& v);

}  // namespace kp2
