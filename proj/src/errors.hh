#ifndef TREEDEPTH_ERRORS_HH
#define TREEDEPTH_ERRORS_HH

#include <stdexcept>
#include <string>

namespace treedepth
{
    /// Malformed instance text. Carries the 1-based line number when known.
    class ParseError : public std::runtime_error
    {
    public:
        int line;

        ParseError(int line_, const std::string & message) :
            std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + message : message),
            line(line_)
        {
        }
    };

    /// Invalid argument to a generator or solver component.
    class ArgumentError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An operation refused to run because its input exceeds a hard budget.
    class BudgetError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
