#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace meshkit {

// SHA-256 hex digest (full content address) and its leading 8 bytes as a
// 64-bit short hash.
std::string sha256_hex(const void* data, size_t size);
uint64_t hash64(const void* data, size_t size);

std::string sha256_file(const std::string& path);

}  // namespace meshkit
