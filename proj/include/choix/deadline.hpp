#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace choix {

class Timeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cooperative wall-clock budget. A default-constructed deadline never expires.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    template <typename Rep, typename Period>
    static Deadline after(std::chrono::duration<Rep, Period> budget) {
        Deadline d;
        d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
        return d;
    }

    static Deadline after_seconds(double seconds) {
        return after(std::chrono::duration<double>(seconds));
    }

    bool expired() const { return at_ && Clock::now() >= *at_; }

    void check() const {
        if (expired()) {
            throw Timeout("time budget exhausted");
        }
    }

private:
    std::optional<Clock::time_point> at_;
};

}  // namespace choix
