#pragma once

#include <stdexcept>
#include <string>

namespace nckit {

// Input errors are malformed requests (exit 1); verdict errors are failed
// hypotheses or verifications on well-formed data (exit 2).
enum class ErrorKind { input, verdict };

class Error : public std::runtime_error {
public:
    Error(std::string code, std::string rule, std::string detail,
          ErrorKind kind = ErrorKind::verdict)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          rule_(std::move(rule)),
          detail_(std::move(detail)),
          kind_(kind) {}

    const std::string& code() const { return code_; }
    const std::string& rule() const { return rule_; }
    const std::string& detail() const { return detail_; }
    ErrorKind kind() const { return kind_; }

private:
    std::string code_;
    std::string rule_;
    std::string detail_;
    ErrorKind kind_;
};

inline Error input_error(std::string code, std::string detail) {
    return Error(std::move(code), "input", std::move(detail), ErrorKind::input);
}

}  // namespace nckit
