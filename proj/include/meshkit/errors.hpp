#pragma once

#include <stdexcept>
#include <string>

namespace meshkit {

// Base class for all library errors. Each concrete type corresponds to a
// distinct failure mode a caller may want to branch on.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

// Parse failure carrying the byte offset (binary inputs) or line number
// (text inputs) where the problem was detected.
class MalformedFile : public Error {
public:
    MalformedFile(const std::string& msg, size_t where, bool is_line)
        : Error(msg + (is_line ? " (line " : " (byte offset ") + std::to_string(where) + ")"),
          location(where),
          location_is_line(is_line) {}
    explicit MalformedFile(const std::string& msg) : Error(msg) {}

    size_t location = 0;
    bool location_is_line = false;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class InvalidMesh : public Error {
public:
    using Error::Error;
};

class DegenerateBounds : public Error {
public:
    using Error::Error;
};

class EmptyMesh : public Error {
public:
    using Error::Error;
};

class DomainTooSmall : public Error {
public:
    using Error::Error;
};

class ZeroArea : public Error {
public:
    using Error::Error;
};

class ResolutionTooLow : public Error {
public:
    using Error::Error;
};

class NoBoundary : public Error {
public:
    using Error::Error;
};

class EmptyIsoSurface : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class MissingUVs : public Error {
public:
    using Error::Error;
};

class ImageSizeMismatch : public Error {
public:
    using Error::Error;
};

class TooManyTriangles : public Error {
public:
    using Error::Error;
};

class EmptyIndex : public Error {
public:
    using Error::Error;
};

class CorruptManifest : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace meshkit
