#pragma once

#include <stdexcept>
#include <string>

namespace varedit {

// Config parsing / validation problems (CLI exit code 3).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File / stream problems (CLI exit code 2).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally broken data, e.g. token indices outside the codebook.
class corruption_error : public std::runtime_error {
public:
    explicit corruption_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace varedit
