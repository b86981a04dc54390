#pragma once

#include <stdexcept>
#include <string>

namespace parlor {

// Error taxonomy used across the library. Every failure names its category
// so CLI callers can map exceptions to nonzero exit codes uniformly.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config error: " + what) {}
};

struct IllegalActionError : std::runtime_error {
    explicit IllegalActionError(const std::string& what)
        : std::runtime_error("illegal action: " + what) {}
};

struct TerminalStateError : std::runtime_error {
    explicit TerminalStateError(const std::string& what)
        : std::runtime_error("terminal state: " + what) {}
};

struct VocabularyError : std::runtime_error {
    explicit VocabularyError(const std::string& what)
        : std::runtime_error("vocabulary error: " + what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error("schema error: " + what) {}
};

struct StaleChangeError : std::runtime_error {
    explicit StaleChangeError(const std::string& what)
        : std::runtime_error("stale change: " + what) {}
};

struct EncoderError : std::runtime_error {
    explicit EncoderError(const std::string& what) : std::runtime_error("encoder error: " + what) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& what)
        : std::runtime_error("training error: " + what) {}
};

struct IngestionError : std::runtime_error {
    explicit IngestionError(const std::string& what)
        : std::runtime_error("ingestion error: " + what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error("io error: " + what) {}
};

} // namespace parlor
