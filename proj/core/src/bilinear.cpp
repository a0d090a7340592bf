#include "kp2/bilinear.hpp"

#include <stdexcept>

namespace kp2 {

namespace {

cplx pair_sum(const std::vector<cplx>& a, const std::vector<cplx>& b_hi,
              const std::vector<cplx>& b_lo) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * (b_hi[i] - b_lo[i]);
    return s;
}

}  // namespace

cplx bilinear_on_partition(const SampledPath& u, const SampledPath& v, const Partition& t) {
    if (!u.grid().compatible(v.grid()))
        throw std::invalid_argument("bilinear_form: mismatched grids");

    // Collect partition evaluation points; sentinels use the conventions.
    std::vector<std::vector<cplx>> uvals, vvals;
    const auto& pts = t.interior();
    if (t.has_neg_inf()) {
        uvals.push_back(u.value_at_neg_inf().coeffs());
        vvals.push_back(v.value_at_neg_inf().coeffs());
    }
    for (double s : pts) {
        uvals.push_back(u.eval(s).coeffs());
        vvals.push_back(v.eval(s).coeffs());
    }
    if (t.has_pos_inf()) {
        uvals.push_back(u.eval(u.times().back()).coeffs());  // u(inf) = last plateau
        vvals.push_back(v.value_at_pos_inf().coeffs());      // v(inf) = 0
    }

    cplx sum{0.0, 0.0};
    for (std::size_t k = 1; k < uvals.size(); ++k)
        sum += pair_sum(uvals[k - 1], vvals[k], vvals[k - 1]);
    return sum;
}

BilinearReport bilinear_form(const SampledPath& u, const SampledPath& v,
                             const Partition& refinement) {
    BilinearReport r;
    const Partition t1 = refinement.refined_dyadic();
    const Partition t2 = t1.refined_dyadic();
    r.value_base = bilinear_on_partition(u, v, refinement);
    r.value_refined = bilinear_on_partition(u, v, t1);
    r.value_refined2 = bilinear_on_partition(u, v, t2);
    r.increment1 = std::abs(r.value_refined - r.value_base);
    r.increment2 = std::abs(r.value_refined2 - r.value_refined);
    r.value = r.value_refined2;
    return r;
}

BilinearReport bilinear_form(const StepAtom& u, const SampledPath& v,
                             const Partition& refinement) {
    return bilinear_form(u.to_sampled_path(), v, refinement);
}

cplx bilinear_exact(const SampledPath& u, const SampledPath& v) {
    std::vector<double> pts;
    pts.reserve(u.size() + v.size());
    std::merge(u.times().begin(), u.times().end(), v.times().begin(), v.times().end(),
               std::back_inserter(pts));
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return bilinear_on_partition(u, v, Partition::class_z(std::move(pts)));
}

}  // namespace kp2
