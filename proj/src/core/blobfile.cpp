#include "meshkit/blobfile.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "meshkit/errors.hpp"

namespace meshkit {

void write_file_bytes(const std::string& path, const void* data, size_t bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(static_cast<const char*>(data), std::streamsize(bytes));
    if (!out) throw IoError("write failed: " + path);
}

void write_file_text(const std::string& path, const std::string& text) {
    write_file_bytes(path, text.data(), text.size());
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open: " + path);
    std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<uint8_t> bytes(size_t(size));
    if (size > 0) in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw IoError("read failed: " + path);
    return bytes;
}

std::string read_file_text(const std::string& path) {
    auto bytes = read_file_bytes(path);
    return std::string(bytes.begin(), bytes.end());
}

void write_file_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    write_file_text(tmp, text);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed: " + tmp + " -> " + path + ": " + ec.message());
}

void write_json_blob(const std::string& path, const nlohmann::json& header,
                     const void* data, size_t bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    std::string h = header.dump();
    out.write(h.data(), std::streamsize(h.size()));
    out.put('\n');
    if (bytes > 0) out.write(static_cast<const char*>(data), std::streamsize(bytes));
    if (!out) throw IoError("write failed: " + path);
}

JsonBlob read_json_blob(const std::string& path) {
    auto bytes = read_file_bytes(path);
    auto nl = std::find(bytes.begin(), bytes.end(), uint8_t('\n'));
    if (nl == bytes.end())
        throw MalformedFile("missing header line in " + path, bytes.size(), false);
    JsonBlob blob;
    try {
        blob.header = nlohmann::json::parse(bytes.begin(), nl);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedFile(std::string("bad header in ") + path + ": " + e.what(), 0, false);
    }
    blob.data.assign(nl + 1, bytes.end());
    return blob;
}

}  // namespace meshkit
