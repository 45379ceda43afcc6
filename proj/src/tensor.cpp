#include "mvdet/tensor.hpp"

#include <cmath>
#include <fstream>

#include "mvdet/io_util.hpp"

namespace mvdet {

namespace {
constexpr char kMagic[4] = {'F', 'T', 'E', 'N'};
constexpr uint32_t kMaxDim = 1u << 24;
} // namespace

void atomic_write_file(const std::filesystem::path& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open for writing: " + tmp.string());
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!f) throw IoError("short write: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return bytes;
}

void save_ften(const std::filesystem::path& path, const FeatureTensor& t) {
    std::string out;
    out.reserve(16 + t.size() * 4);
    out.append(kMagic, 4);
    put_u32le(out, static_cast<uint32_t>(t.channels));
    put_u32le(out, static_cast<uint32_t>(t.height));
    put_u32le(out, static_cast<uint32_t>(t.width));
    for (float v : t.data) put_f32le(out, v);
    atomic_write_file(path, out);
}

FeatureTensor load_ften(const std::filesystem::path& path) {
    const std::string bytes = read_file_bytes(path);
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw ParseError("not a FTEN file: " + path.string());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const uint32_t c = get_u32le(p + 4);
    const uint32_t h = get_u32le(p + 8);
    const uint32_t w = get_u32le(p + 12);
    if (c == 0 || h == 0 || w == 0 || c > kMaxDim || h > kMaxDim || w > kMaxDim)
        throw ParseError("bad FTEN dims in " + path.string());
    const size_t n = static_cast<size_t>(c) * h * w;
    if (bytes.size() != 16 + n * 4)
        throw ParseError("FTEN size mismatch in " + path.string());
    FeatureTensor t(static_cast<int>(c), static_cast<int>(h), static_cast<int>(w));
    for (size_t i = 0; i < n; ++i) {
        const float v = get_f32le(p + 16 + i * 4);
        if (!std::isfinite(v))
            throw ValidationError("non-finite value in " + path.string());
        t.data[i] = v;
    }
    return t;
}

void require_same_shape(const FeatureTensor& a, const FeatureTensor& b, const char* what) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
}

} // namespace mvdet
