#pragma once

#include "news/util.hpp"

#include <chrono>
#include <thread>

namespace news {

// Time source used by the politeness scheduler and timestamping. The
// simulated variant makes seeded pipeline runs reproducible and lets the
// delay contract be tested without real sleeps.
class Clock {
  public:
    virtual ~Clock() = default;
    virtual double now() = 0;               // seconds, monotonic-ish
    virtual void sleep_for(double seconds) = 0;
    virtual Timestamp wall_time() = 0;      // Unix seconds for record stamps
};

class RealClock final : public Clock {
  public:
    double now() override {
        using namespace std::chrono;
        return duration<double>(steady_clock::now().time_since_epoch()).count();
    }
    void sleep_for(double seconds) override {
        if (seconds > 0)
            std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    }
    Timestamp wall_time() override {
        using namespace std::chrono;
        return duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
    }
};

class SimClock final : public Clock {
  public:
    explicit SimClock(Timestamp epoch = kDefaultEpoch) : epoch_(epoch) {}

    double now() override { return t_; }
    void sleep_for(double seconds) override {
        if (seconds > 0) t_ += seconds;
    }
    Timestamp wall_time() override { return epoch_ + Timestamp(t_); }

    // 2026-01-01T00:00:00Z
    static constexpr Timestamp kDefaultEpoch = 1767225600;

  private:
    double t_ = 0.0;
    Timestamp epoch_;
};

} // namespace news
