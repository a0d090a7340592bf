#pragma once

#include "kp2/path.hpp"

namespace kp2 {

// One level of the greedy stopping-time decomposition of a V^p path into
// step functions: v_{n-1} = u_n + v_n with u_n subordinate to a nested
// partition. Thresholds carry the path's V^p norm, so on a normalized
// path the recorded bounds satisfy
//   #t_n <= 2^{1+np},  sup||u_n|| <= 2^{1-n},  sup||v_n|| <= 2^{-n}.
struct DecompositionLevel {
    int level = 0;
    Partition partition;        // class Z, nested across levels
    StepAtom step;              // u_n as jump times + plateau values
    SampledPath step_on_grid;   // u_n evaluated on the input sample grid
    SampledPath residual;       // v_n on the input sample grid
    std::size_t partition_count = 0;
    double sup_step = 0.0;
    double sup_residual = 0.0;
};

// Levels 0..n_max of the decomposition (u_0 = 0, v_0 = v). Throws on a
// zero path. With stop_when_exhausted, stops early once the residual
// vanishes at every sample time (always true eventually: each sample
// time eventually enters the partition).
std::vector<DecompositionLevel> greedy_decompose(const SampledPath& v, double p, int n_max,
                                                 bool stop_when_exhausted = false);

}  // namespace kp2
