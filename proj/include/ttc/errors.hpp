// Error types shared across the library. Every domain failure carries a short
// machine-readable name (stable, snake_case) next to the human message so the
// CLI can emit structured error objects without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace ttc {

class Error : public std::runtime_error {
public:
    Error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}

    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& m) : Error("invalid_input", m) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& m) : Error("overflow", m) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& m) : Error("not_invertible", m) {}
};

class SumNotZero : public Error {
public:
    explicit SumNotZero(const std::string& m) : Error("sum_not_zero", m) {}
};

class NonPrimitiveClass : public Error {
public:
    explicit NonPrimitiveClass(const std::string& m) : Error("non_primitive_class", m) {}
};

class NotRealizable : public Error {
public:
    explicit NotRealizable(const std::string& m) : Error("not_realizable", m) {}
};

class NoSolution : public Error {
public:
    explicit NoSolution(const std::string& m) : Error("no_solution", m) {}
};

class MultipleSolutions : public Error {
public:
    explicit MultipleSolutions(const std::string& m) : Error("multiple_solutions", m) {}
};

class DegenerateGeometry : public Error {
public:
    explicit DegenerateGeometry(const std::string& m) : Error("degenerate_geometry", m) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& m) : Error("io_error", m) {}
};

} // namespace ttc
