#pragma once

#include <cstdint>
#include <vector>

namespace evt {

struct SensorGeometry {
    int width = 240;
    int height = 180;

    bool contains(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    std::size_t pixels() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
    bool operator==(const SensorGeometry&) const = default;
};

// Corner candidates must keep this margin to every border; it covers the 7x7
// matching window and the 5x5 tracking window everywhere downstream.
inline constexpr int kBorderMargin = 4;
inline constexpr int kMatchPatchRadius = 3;  // 7x7
inline constexpr int kTrackPatchRadius = 2;  // 5x5

// One asynchronous brightness-change sample. Timestamps are integer
// microseconds; polarity is +1 (brighter) or -1 (darker).
struct Event {
    std::int64_t t = 0;
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::int8_t pol = 1;
};

// Grayscale intensity image from the frame sensor, row-major 8-bit.
struct Keyframe {
    std::int64_t t = 0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    SensorGeometry geometry() const { return {width, height}; }
};

inline constexpr std::int64_t kMicrosPerSecond = 1'000'000;

inline double us_to_seconds(std::int64_t t_us) {
    return static_cast<double>(t_us) * 1e-6;
}

}  // namespace evt
