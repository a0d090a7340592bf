#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kp2/field.hpp"

namespace kp2 {

// Bit-exact binary snapshot of a field at one time:
//   magic "KP2F" | u32 version | u32 nx | u32 ny | f64 Lx | f64 Ly |
//   f64 t | u8 real_flag | nx*ny interleaved complex f64 pairs,
//   row-major in xi-major order; every multi-byte value little-endian.
inline constexpr std::uint32_t kSnapshotVersion = 1;

std::vector<std::uint8_t> serialize_field(const Field2D& f, double t);

struct Snapshot {
    Field2D field;
    double t = 0.0;
};

// Validates magic, version, declared sizes against the payload, and the
// field invariants (Hermitian symmetry when real, zero xi=0 column).
Snapshot deserialize_field(const std::vector<std::uint8_t>& bytes);

void write_snapshot(const std::string& path, const Field2D& f, double t);
Snapshot read_snapshot(const std::string& path);

}  // namespace kp2
