#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammafuzz {

// Base for every error raised by the library. Callers that only care about
// "bad input" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A table dimension or entry is out of range.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Operands of a fuzzy operation live over different structures.
class AmbientMismatch : public Error {
public:
    AmbientMismatch() : Error("fuzzy subsets belong to different structures") {}
};

class EmptyFamily : public Error {
public:
    EmptyFamily() : Error("meet of an empty family is undefined") {}
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
        : Error("enumeration needs " + std::to_string(candidates) +
                " candidates, budget is " + std::to_string(budget)),
          candidates_(candidates), budget_(budget) {}

    std::uint64_t candidates() const noexcept { return candidates_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t candidates_;
    std::uint64_t budget_;
};

class UnknownLaw : public Error {
public:
    explicit UnknownLaw(const std::string& id) : Error("unknown law id: " + id) {}
};

} // namespace gammafuzz
