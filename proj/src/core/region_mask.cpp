#include "tofhair/core/region_mask.hpp"

#include "tofhair/core/error.hpp"

namespace tofhair {

RegionLabel region_label_from_name(const std::string& name) {
    for (int i = 0; i < kRegionLabelCount; ++i) {
        auto l = static_cast<RegionLabel>(i);
        if (name == region_label_name(l)) return l;
    }
    throw ConfigError("unknown region label: " + name);
}

}  // namespace tofhair
