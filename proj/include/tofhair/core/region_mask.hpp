#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tofhair/core/image.hpp"

namespace tofhair {

/// Semantic region labels for head scenes. The numeric ids are the on-disk
/// encoding (PGM pixel values).
enum class RegionLabel : std::uint8_t {
    Background = 0,
    Face = 1,
    HairTop = 2,
    HairBack = 3,
    HairLeft = 4,
    HairRight = 5,
};

inline constexpr int kRegionLabelCount = 6;

inline bool is_hair(RegionLabel l) {
    return l == RegionLabel::HairTop || l == RegionLabel::HairBack ||
           l == RegionLabel::HairLeft || l == RegionLabel::HairRight;
}

inline const char* region_label_name(RegionLabel l) {
    switch (l) {
        case RegionLabel::Background: return "background";
        case RegionLabel::Face: return "face";
        case RegionLabel::HairTop: return "hair_top";
        case RegionLabel::HairBack: return "hair_back";
        case RegionLabel::HairLeft: return "hair_left";
        case RegionLabel::HairRight: return "hair_right";
    }
    return "unknown";
}

RegionLabel region_label_from_name(const std::string& name);

/// Per-pixel region labeling.
struct RegionMask {
    int width = 0;
    int height = 0;
    ImageU8 labels;

    RegionMask() = default;
    RegionMask(int w, int h, RegionLabel fill = RegionLabel::Background)
        : width(w), height(h), labels(w, h, static_cast<std::uint8_t>(fill)) {}

    RegionLabel at(int x, int y) const {
        return static_cast<RegionLabel>(labels.at(x, y));
    }

    void set(int x, int y, RegionLabel l) {
        labels.at(x, y) = static_cast<std::uint8_t>(l);
    }

    void check() const {
        for (auto v : labels.data())
            if (v >= kRegionLabelCount)
                throw std::invalid_argument("RegionMask: label id out of range");
    }
};

}  // namespace tofhair
