#pragma once

#include <stdexcept>
#include <string>

namespace chd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CsvError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingleClass : Error {
    SingleClass() : Error("training data contains a single class") {}
};

struct NonFiniteLoss : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace chd
