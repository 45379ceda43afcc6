#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "mvdet/errors.hpp"

namespace mvdet {

/// Dense channel-major (C, H, W) tensor, contiguous storage.
template <class T>
struct TensorT {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<T> data;

    TensorT() = default;
    TensorT(int c, int h, int w)
        : channels(c), height(h), width(w),
          data(static_cast<size_t>(c) * static_cast<size_t>(h) * static_cast<size_t>(w), T(0)) {}

    size_t size() const { return data.size(); }
    size_t plane_size() const { return static_cast<size_t>(height) * width; }

    T* plane(int c) { return data.data() + static_cast<size_t>(c) * plane_size(); }
    const T* plane(int c) const { return data.data() + static_cast<size_t>(c) * plane_size(); }

    T& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    T at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }

    bool same_shape(const TensorT& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    std::string shape_str() const {
        return std::to_string(channels) + "x" + std::to_string(height) + "x" +
               std::to_string(width);
    }
};

using FeatureTensor = TensorT<float>;

/// Binary tensor file: magic "FTEN", little-endian u32 C, H, W, then
/// C*H*W little-endian f32 values.
void save_ften(const std::filesystem::path& path, const FeatureTensor& t);
FeatureTensor load_ften(const std::filesystem::path& path);

void require_same_shape(const FeatureTensor& a, const FeatureTensor& b, const char* what);

} // namespace mvdet
