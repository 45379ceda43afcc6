#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace mvdet {

inline void put_u32le(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline void put_f32le(std::string& out, float f) {
    put_u32le(out, std::bit_cast<uint32_t>(f));
}

inline uint32_t get_u32le(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

inline float get_f32le(const unsigned char* p) {
    return std::bit_cast<float>(get_u32le(p));
}

/// Writes bytes to a temp file in the target directory, then renames over
/// the destination.
void atomic_write_file(const std::filesystem::path& path, const std::string& bytes);

std::string read_file_bytes(const std::filesystem::path& path);

} // namespace mvdet
