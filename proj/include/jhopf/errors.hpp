#pragma once

#include <stdexcept>
#include <string>

namespace jhopf {

/* Raised by the text-format parsers (tensor expressions, group words) on
   malformed input.  Callers that accept untrusted text catch this and report
   a usage error; everything else lets it propagate. */
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jhopf
