#pragma once

#include <stdexcept>
#include <string>

namespace pthue {

// Raised when a verification step cannot decide either way at the working
// precision.  A proof pipeline must fail loudly, not guess; callers may
// retry at higher precision.
class inconclusive_error : public std::runtime_error {
public:
    inconclusive_error(std::string check, const std::string& what)
        : std::runtime_error(check + ": " + what), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

} // namespace pthue
