#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicrit
{
    // Root of every error raised by the library. Callers that only care about
    // "something about the input was wrong" catch this.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A precondition of an operation does not hold for the given arguments.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, const std::string & what) :
            Error("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    // An exhaustive search ran out of its node budget. This is "unknown", never "no".
    class BudgetExceeded : public Error
    {
    public:
        explicit BudgetExceeded(const std::string & where) :
            Error("budget exceeded in " + where)
        {
        }
    };

    // Search effort limit, counted in decision-tree nodes.
    struct Budget
    {
        std::uint64_t nodes = 50'000'000;

        static constexpr auto unlimited() -> Budget { return Budget{UINT64_MAX}; }
    };
}
