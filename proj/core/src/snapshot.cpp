#include "kp2/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace kp2 {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
    const std::uint64_t v = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

class Reader {
public:
    explicit Reader(const std::vector<std::uint8_t>& b) : b_(b) {}
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b_[pos_++]) << (8 * i);
        return v;
    }
    double f64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b_[pos_++]) << (8 * i);
        return std::bit_cast<double>(v);
    }
    std::uint8_t u8() {
        need(1);
        return b_[pos_++];
    }
    std::size_t remaining() const { return b_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (pos_ + n > b_.size())
            throw std::invalid_argument("snapshot: truncated payload");
    }
    const std::vector<std::uint8_t>& b_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_field(const Field2D& f, double t) {
    const auto& g = f.grid();
    std::vector<std::uint8_t> out;
    out.reserve(33 + g.size() * 16);
    out.insert(out.end(), {'K', 'P', '2', 'F'});
    put_u32(out, kSnapshotVersion);
    put_u32(out, static_cast<std::uint32_t>(g.nx()));
    put_u32(out, static_cast<std::uint32_t>(g.ny()));
    put_f64(out, g.Lx());
    put_f64(out, g.Ly());
    put_f64(out, t);
    out.push_back(f.real_flag() ? 1 : 0);
    for (const auto& z : f.coeffs()) {
        put_f64(out, z.real());
        put_f64(out, z.imag());
    }
    return out;
}

Snapshot deserialize_field(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4 || bytes[0] != 'K' || bytes[1] != 'P' || bytes[2] != '2' ||
        bytes[3] != 'F')
        throw std::invalid_argument("snapshot: bad magic, expected \"KP2F\"");
    Reader rd(bytes);
    rd.u32();  // magic, already checked
    const std::uint32_t version = rd.u32();
    if (version != kSnapshotVersion)
        throw std::invalid_argument("snapshot: unsupported version " + std::to_string(version) +
                                    " (byte-swapped header from a big-endian writer?)");
    const std::uint32_t nx = rd.u32();
    const std::uint32_t ny = rd.u32();
    const double Lx = rd.f64();
    const double Ly = rd.f64();
    const double t = rd.f64();
    const std::uint8_t real_flag = rd.u8();
    if (real_flag > 1) throw std::invalid_argument("snapshot: bad real_flag byte");
    FrequencyGrid grid(nx, ny, Lx, Ly);
    if (rd.remaining() != static_cast<std::size_t>(nx) * ny * 16)
        throw std::invalid_argument("snapshot: header-declared size does not match payload");
    std::vector<cplx> coeffs(static_cast<std::size_t>(nx) * ny);
    for (auto& z : coeffs) {
        const double re = rd.f64();
        const double im = rd.f64();
        z = cplx{re, im};
    }
    Field2D f(std::move(grid), std::move(coeffs), real_flag == 1);
    f.validate();
    return Snapshot{std::move(f), t};
}

void write_snapshot(const std::string& path, const Field2D& f, double t) {
    const auto bytes = serialize_field(f, t);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("snapshot: cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("snapshot: write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return deserialize_field(bytes);
}

}  // namespace kp2
