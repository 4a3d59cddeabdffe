#ifndef WOODY_ERRORS_HPP
#define WOODY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace woody
{
    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & what, std::size_t offset) :
                std::runtime_error(what + " at byte " + std::to_string(offset)),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// A construction or solver was asked to run outside its documented domain.
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An exponential routine was called on an input above its size guard.
    class SizeGuardError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };
}

#endif
