/*
 * Copyright 2026 The aglist authors
 * License: Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace aglist {

// Raised when input data (curve files, field specs, parameters read from the
// outside world) fails validation. Collects every issue found, not just the
// first one.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
    explicit ValidationError(const std::string& issue)
        : ValidationError(std::vector<std::string>{issue}) {}
    ValidationError(const std::string& context, std::vector<std::string> issues)
        : std::runtime_error(context + ": " + join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg;
        for (const auto& s : issues) {
            if (!msg.empty()) msg += "; ";
            msg += s;
        }
        return msg.empty() ? std::string("validation failed") : msg;
    }

    std::vector<std::string> issues_;
};

}  // namespace aglist
