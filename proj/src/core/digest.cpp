#include "meshkit/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "meshkit/blobfile.hpp"
#include "meshkit/errors.hpp"

namespace meshkit {

static std::array<uint8_t, 32> sha256_raw(const void* data, size_t size) {
    std::array<uint8_t, 32> out{};
    unsigned int out_len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data, size) != 1 ||
        EVP_DigestFinal_ex(ctx, out.data(), &out_len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256 failed");
    }
    EVP_MD_CTX_free(ctx);
    return out;
}

std::string sha256_hex(const void* data, size_t size) {
    auto raw = sha256_raw(data, size);
    std::string hex(64, '0');
    static const char digits[] = "0123456789abcdef";
    for (size_t i = 0; i < raw.size(); ++i) {
        hex[2 * i] = digits[raw[i] >> 4];
        hex[2 * i + 1] = digits[raw[i] & 0xf];
    }
    return hex;
}

uint64_t hash64(const void* data, size_t size) {
    auto raw = sha256_raw(data, size);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | raw[size_t(i)];
    return v;
}

std::string sha256_file(const std::string& path) {
    auto bytes = read_file_bytes(path);
    return sha256_hex(bytes.data(), bytes.size());
}

}  // namespace meshkit
