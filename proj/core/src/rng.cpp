#include "hcma/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hcma/error.hpp"

namespace hcma {

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // 1-u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    if (hi < lo) throw ShapeError("uniform_int: empty range");
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(engine_());  // full 64-bit range
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
}

std::string Rng::state() const {
    std::ostringstream os;
    os << engine_ << " " << (has_cached_ ? 1 : 0) << " ";
    os.precision(17);
    os << cached_;
    return os.str();
}

void Rng::restore(const std::string& s) {
    std::istringstream is(s);
    int flag = 0;
    is >> engine_ >> flag >> cached_;
    if (!is) throw IoError("Rng::restore: malformed state string");
    has_cached_ = flag != 0;
}

}  // namespace hcma
