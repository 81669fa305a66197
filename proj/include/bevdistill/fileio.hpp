#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bevdistill {

// Little-endian float32 codec, independent of host byte order.
inline void put_f32_le(std::string& out, float v) {
    auto bits = std::bit_cast<std::uint32_t>(v);
    out.push_back(static_cast<char>(bits & 0xFF));
    out.push_back(static_cast<char>((bits >> 8) & 0xFF));
    out.push_back(static_cast<char>((bits >> 16) & 0xFF));
    out.push_back(static_cast<char>((bits >> 24) & 0xFF));
}

inline float get_f32_le(const unsigned char* p) {
    std::uint32_t bits = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    return std::bit_cast<float>(bits);
}

inline void put_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

inline std::uint64_t get_u64_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

std::string read_file_bytes(const std::filesystem::path& path);

// All outputs are written via temp file + rename so a crash never leaves a
// half-written artifact behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

// 8-bit binary PGM (P5). `pixels` is row-major, `rows * cols` bytes.
void write_pgm(const std::filesystem::path& path, int rows, int cols, const std::vector<unsigned char>& pixels);

// Locale-independent shortest-round-trip double formatting for CSV output.
std::string format_double(double v);

}  // namespace bevdistill
