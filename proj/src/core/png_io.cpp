#include <zlib.h>

#include <cstring>

#include "meshkit/blobfile.hpp"
#include "meshkit/errors.hpp"
#include "meshkit/image.hpp"

namespace meshkit {

namespace {

void put_u32_be(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(uint8_t(v >> 24));
    out.push_back(uint8_t(v >> 16));
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v));
}

uint32_t get_u32_be(const uint8_t* p) {
    return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) | uint32_t(p[3]);
}

void append_chunk(std::vector<uint8_t>& out, const char type[4], const uint8_t* data, size_t size) {
    put_u32_be(out, uint32_t(size));
    size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data, data + size);
    uint32_t crc = crc32(0, out.data() + start, uInt(out.size() - start));
    put_u32_be(out, crc);
}

int color_type_for_channels(int channels) {
    switch (channels) {
        case 1: return 0;
        case 3: return 2;
        case 4: return 6;
        default: throw IoError("png: unsupported channel count " + std::to_string(channels));
    }
}

int channels_for_color_type(int color_type) {
    switch (color_type) {
        case 0: return 1;
        case 2: return 3;
        case 6: return 4;
        default: return -1;
    }
}

uint8_t paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return uint8_t(a);
    if (pb <= pc) return uint8_t(b);
    return uint8_t(c);
}

}  // namespace

std::vector<uint8_t> encode_png(const ImageU8& image) {
    if (image.width <= 0 || image.height <= 0)
        throw IoError("png: empty image");
    int color_type = color_type_for_channels(image.channels);

    // filter 0 on every scanline; deterministic and fine for our payloads
    size_t stride = size_t(image.width) * image.channels;
    std::vector<uint8_t> raw((stride + 1) * image.height);
    for (int y = 0; y < image.height; ++y) {
        raw[y * (stride + 1)] = 0;
        std::memcpy(raw.data() + y * (stride + 1) + 1, image.pixel(0, y), stride);
    }

    uLongf bound = compressBound(uLong(raw.size()));
    std::vector<uint8_t> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(), uLong(raw.size()), 6) != Z_OK)
        throw IoError("png: deflate failed");
    compressed.resize(bound);

    std::vector<uint8_t> out;
    static const uint8_t signature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    out.insert(out.end(), signature, signature + 8);

    uint8_t ihdr[13];
    ihdr[0] = uint8_t(uint32_t(image.width) >> 24);
    ihdr[1] = uint8_t(uint32_t(image.width) >> 16);
    ihdr[2] = uint8_t(uint32_t(image.width) >> 8);
    ihdr[3] = uint8_t(image.width);
    ihdr[4] = uint8_t(uint32_t(image.height) >> 24);
    ihdr[5] = uint8_t(uint32_t(image.height) >> 16);
    ihdr[6] = uint8_t(uint32_t(image.height) >> 8);
    ihdr[7] = uint8_t(image.height);
    ihdr[8] = 8;  // bit depth
    ihdr[9] = uint8_t(color_type);
    ihdr[10] = 0;  // compression
    ihdr[11] = 0;  // filter
    ihdr[12] = 0;  // no interlace
    append_chunk(out, "IHDR", ihdr, sizeof(ihdr));
    append_chunk(out, "IDAT", compressed.data(), compressed.size());
    append_chunk(out, "IEND", nullptr, 0);
    return out;
}

void write_png(const std::string& path, const ImageU8& image) {
    auto bytes = encode_png(image);
    write_file_bytes(path, bytes.data(), bytes.size());
}

ImageU8 decode_png(const uint8_t* bytes, size_t size) {
    static const uint8_t signature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (size < 8 || std::memcmp(bytes, signature, 8) != 0)
        throw MalformedFile("png: bad signature", 0, false);

    int width = 0, height = 0, channels = 0;
    std::vector<uint8_t> idat;
    size_t pos = 8;
    bool saw_ihdr = false, saw_iend = false;
    while (pos + 8 <= size) {
        uint32_t len = get_u32_be(bytes + pos);
        if (pos + 12 + len > size) throw MalformedFile("png: truncated chunk", pos, false);
        const char* type = reinterpret_cast<const char*>(bytes + pos + 4);
        const uint8_t* data = bytes + pos + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw MalformedFile("png: bad IHDR", pos, false);
            width = int(get_u32_be(data));
            height = int(get_u32_be(data + 4));
            if (data[8] != 8) throw MalformedFile("png: only 8-bit supported", pos, false);
            channels = channels_for_color_type(data[9]);
            if (channels < 0) throw MalformedFile("png: unsupported color type", pos, false);
            if (data[12] != 0) throw MalformedFile("png: interlace unsupported", pos, false);
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            saw_iend = true;
            break;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr || !saw_iend || width <= 0 || height <= 0)
        throw MalformedFile("png: missing chunks", pos, false);

    size_t stride = size_t(width) * channels;
    std::vector<uint8_t> raw((stride + 1) * height);
    uLongf raw_size = uLongf(raw.size());
    int rc = uncompress(raw.data(), &raw_size, idat.data(), uLong(idat.size()));
    if (rc != Z_OK || raw_size != raw.size())
        throw MalformedFile("png: inflate failed", 0, false);

    ImageU8 image(width, height, channels);
    int bpp = channels;  // bytes per pixel at bit depth 8
    std::vector<uint8_t> prev(stride, 0);
    for (int y = 0; y < height; ++y) {
        const uint8_t* src = raw.data() + y * (stride + 1);
        uint8_t filter = src[0];
        uint8_t* dst = image.pixel(0, y);
        for (size_t i = 0; i < stride; ++i) {
            int x = src[1 + i];
            int a = i >= size_t(bpp) ? dst[i - bpp] : 0;
            int b = prev[i];
            int c = i >= size_t(bpp) ? prev[i - bpp] : 0;
            switch (filter) {
                case 0: break;
                case 1: x += a; break;
                case 2: x += b; break;
                case 3: x += (a + b) / 2; break;
                case 4: x += paeth(a, b, c); break;
                default: throw MalformedFile("png: bad filter", size_t(y), false);
            }
            dst[i] = uint8_t(x);
        }
        std::memcpy(prev.data(), dst, stride);
    }
    return image;
}

ImageU8 read_png(const std::string& path) {
    auto bytes = read_file_bytes(path);
    return decode_png(bytes.data(), bytes.size());
}

void write_chan(const std::string& path, const ImageF32& image, const std::string& name) {
    nlohmann::json header{{"width", image.width},
                          {"height", image.height},
                          {"channels", image.channels},
                          {"dtype", "f32"},
                          {"name", name}};
    write_json_blob(path, header, image.data.data(), image.data.size() * sizeof(float));
}

ImageF32 read_chan(const std::string& path, std::string* name) {
    JsonBlob blob = read_json_blob(path);
    ImageF32 image(blob.header.at("width").get<int>(), blob.header.at("height").get<int>(),
                   blob.header.at("channels").get<int>());
    if (blob.data.size() != image.data.size() * sizeof(float))
        throw MalformedFile("chan: payload size mismatch in " + path, blob.data.size(), false);
    std::memcpy(image.data.data(), blob.data.data(), blob.data.size());
    if (name) *name = blob.header.value("name", "");
    return image;
}

}  // namespace meshkit
