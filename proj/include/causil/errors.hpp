#pragma once

#include <stdexcept>
#include <string>

namespace causil {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// usage/config -> 2, numeric/estimation -> 3, I/O -> 4.

struct EmptyInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientSupport : std::runtime_error {
    int block = -1;
    InsufficientSupport(const std::string& msg, int block_id)
        : std::runtime_error(msg), block(block_id) {}
};

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCut : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySelection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace causil
