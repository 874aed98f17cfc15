#pragma once

#include <chrono>

#include "expmath/errors.hpp"

namespace expmath {

class Timeout : public NotFound {
public:
    explicit Timeout(const std::string& what) : NotFound("Timeout", what, "timeout") {}
};

// Cooperative time budget, polled inside long loops.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;  // never expires
    explicit Deadline(double seconds)
        : active_(seconds > 0), end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                         std::chrono::duration<double>(seconds))) {}

    bool expired() const { return active_ && Clock::now() > end_; }
    void check(const char* where = "operation") const {
        if (expired()) throw Timeout(std::string(where) + " exceeded its time budget");
    }

private:
    bool active_ = false;
    Clock::time_point end_{};
};

inline void check_deadline(const Deadline* d, const char* where = "operation") {
    if (d) d->check(where);
}

}  // namespace expmath
