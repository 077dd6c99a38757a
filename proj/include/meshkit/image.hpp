#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace meshkit {

// Dense row-major image, channel-interleaved, origin at the top-left pixel.
template <typename T>
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<T> data;

    Image() = default;
    Image(int w, int h, int c, T fill = T(0))
        : width(w), height(h), channels(c), data(size_t(w) * size_t(h) * size_t(c), fill) {}

    T* pixel(int x, int y) { return data.data() + (size_t(y) * width + x) * channels; }
    const T* pixel(int x, int y) const { return data.data() + (size_t(y) * width + x) * channels; }

    T& at(int x, int y, int c = 0) { return pixel(x, y)[c]; }
    const T& at(int x, int y, int c = 0) const { return pixel(x, y)[c]; }

    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    size_t count() const { return data.size(); }
};

using ImageU8 = Image<uint8_t>;
using ImageF32 = Image<float>;

// PNG, 8-bit, gray / RGB / RGBA, non-interlaced.
void write_png(const std::string& path, const ImageU8& image);
ImageU8 read_png(const std::string& path);
ImageU8 decode_png(const uint8_t* bytes, size_t size);
std::vector<uint8_t> encode_png(const ImageU8& image);

// .chan: float32 raster dump with a JSON header (width/height/channels/name).
void write_chan(const std::string& path, const ImageF32& image, const std::string& name);
ImageF32 read_chan(const std::string& path, std::string* name = nullptr);

}  // namespace meshkit
