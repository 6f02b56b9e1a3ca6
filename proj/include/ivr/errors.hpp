#pragma once

#include <stdexcept>
#include <string>

namespace ivr {

// Parameter-domain violation in a DgpSpec (|alpha| >= 1, |theta| >= 1, bad sigma2, ...).
class InvalidSpec : public std::invalid_argument {
public:
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

// Out-of-range argument that is not part of a DgpSpec (segment length, phase, grid size, ...).
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Not enough observations for the requested operation.
class InsufficientData : public std::length_error {
public:
    explicit InsufficientData(const std::string& what) : std::length_error(what) {}
};

// Data that makes a statistic undefined, e.g. a constant series in a variance ratio.
class DegenerateSeries : public std::domain_error {
public:
    explicit DegenerateSeries(const std::string& what) : std::domain_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ivr
