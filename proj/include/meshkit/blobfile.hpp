#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace meshkit {

// Shared container for the .sdfgrid / .tsdfsamples / .desc / .chan formats:
// a single-line JSON header, '\n', then a raw little-endian payload.
void write_json_blob(const std::string& path, const nlohmann::json& header,
                     const void* data, size_t bytes);

struct JsonBlob {
    nlohmann::json header;
    std::vector<uint8_t> data;
};

JsonBlob read_json_blob(const std::string& path);

// Whole-file helpers.
std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, size_t bytes);
std::string read_file_text(const std::string& path);
void write_file_text(const std::string& path, const std::string& text);

// Write-temp-then-rename; the destination is never observed half-written.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace meshkit
