#pragma once

#include <stdexcept>
#include <string>

namespace news {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct CorpusError : Error {
    using Error::Error;
};

struct ImportError : Error {
    using Error::Error;
};

struct MergeError : Error {
    using Error::Error;
};

struct SequencingError : Error {
    using Error::Error;
};

// Unparseable payload; keeps the raw body around for diagnostics.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::string body = {})
        : Error(what), raw_body(std::move(body)) {}
    std::string raw_body;
};

// Network failure after retries; carries the digest of the query that failed.
struct FetchError : Error {
    explicit FetchError(const std::string& what, std::string digest = {})
        : Error(what), query_digest(std::move(digest)) {}
    std::string query_digest;
};

// Redirect chain could not be resolved to a terminal 2xx URL.
struct ResolutionError : Error {
    explicit ResolutionError(const std::string& what, int status_code = 0)
        : Error(what), status(status_code) {}
    int status;
};

struct ExtractionError : Error {
    using Error::Error;
};

} // namespace news
