#pragma once

#include <stdexcept>
#include <string>

namespace spfilt {

// Base of every domain validation failure. name() is the stable identifier
// commands print; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct DuplicateLabel final : Error {
    explicit DuplicateLabel(const std::string& m) : Error("DuplicateLabel", m) {}
};

struct UnknownLabel final : Error {
    explicit UnknownLabel(const std::string& m) : Error("UnknownLabel", m) {}
};

struct BadLabel final : Error {
    explicit BadLabel(const std::string& m) : Error("BadLabel", m) {}
};

struct CycleDetected final : Error {
    explicit CycleDetected(const std::string& m) : Error("CycleDetected", m) {}
};

struct InvalidSize final : Error {
    explicit InvalidSize(const std::string& m) : Error("InvalidSize", m) {}
};

struct TooLarge final : Error {
    explicit TooLarge(const std::string& m) : Error("TooLarge", m) {}
};

// Carries the filtration index (or -1 when the failure is not tied to one).
struct NotUpperSet final : Error {
    explicit NotUpperSet(const std::string& m, int index = -1)
        : Error("NotUpperSet", m), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

struct NotDecreasing final : Error {
    explicit NotDecreasing(const std::string& m, int index = -1)
        : Error("NotDecreasing", m), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

struct NotBounded final : Error {
    explicit NotBounded(const std::string& m) : Error("NotBounded", m) {}
};

struct DuplicateStep final : Error {
    explicit DuplicateStep(const std::string& m) : Error("DuplicateStep", m) {}
};

struct NotIncreasing final : Error {
    explicit NotIncreasing(const std::string& m) : Error("NotIncreasing", m) {}
};

struct NotTFunction final : Error {
    explicit NotTFunction(const std::string& m) : Error("NotTFunction", m) {}
};

// index() is the position of the offending step in a mutation sequence,
// or -1 for a single mutation.
struct NotMutable final : Error {
    explicit NotMutable(const std::string& m, int index = -1)
        : Error("NotMutable", m), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

struct NotInvertible final : Error {
    explicit NotInvertible(const std::string& m) : Error("NotInvertible", m) {}
};

struct EmptyPoset final : Error {
    explicit EmptyPoset(const std::string& m) : Error("EmptyPoset", m) {}
};

struct BadWindow final : Error {
    explicit BadWindow(const std::string& m) : Error("BadWindow", m) {}
};

struct UnknownNode final : Error {
    explicit UnknownNode(const std::string& m) : Error("UnknownNode", m) {}
};

struct NotPrime final : Error {
    explicit NotPrime(const std::string& m) : Error("NotPrime", m) {}
};

struct InvalidZFunction final : Error {
    explicit InvalidZFunction(const std::string& m) : Error("InvalidZFunction", m) {}
};

struct ParseError final : Error {
    explicit ParseError(const std::string& m, long line = -1)
        : Error("ParseError", m), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

}  // namespace spfilt
