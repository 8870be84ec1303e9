#include "tofhair/geomfeat/fill_holes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

#include "tofhair/core/error.hpp"

namespace tofhair::geomfeat {

namespace {

struct Hole {
    int x, y;
    int dist;  // chessboard distance to nearest valid pixel (ordering only)
};

}  // namespace

DepthFrame fill_holes(const DepthFrame& depth, const RegionMask& mask, double sigma) {
    if (depth.width != mask.width || depth.height != mask.height)
        throw std::invalid_argument("fill_holes: mask and depth dimensions differ");
    if (!(sigma > 0.0))
        throw std::invalid_argument("fill_holes: sigma must be positive");

    const int w = depth.width, h = depth.height;

    // a labeled region with holes but no valid seed pixel can never be filled
    std::vector<std::size_t> valid_per_label(kRegionLabelCount, 0);
    std::vector<std::size_t> holes_per_label(kRegionLabelCount, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            auto l = static_cast<std::size_t>(mask.at(x, y));
            if (depth.is_valid(x, y))
                ++valid_per_label[l];
            else
                ++holes_per_label[l];
        }
    for (int l = 1; l < kRegionLabelCount; ++l)
        if (holes_per_label[static_cast<std::size_t>(l)] > 0 &&
            valid_per_label[static_cast<std::size_t>(l)] == 0)
            throw UnfillableRegionError(
                std::string("fill_holes: region '") +
                region_label_name(static_cast<RegionLabel>(l)) +
                "' has no valid depth to fill from");

    // multi-source BFS (8-connected) from valid pixels, for fill ordering
    ImageI32 dist(w, h, -1);
    std::deque<std::pair<int, int>> queue;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (depth.is_valid(x, y)) {
                dist.at(x, y) = 0;
                queue.emplace_back(x, y);
            }
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int nx = x + dx, ny = y + dy;
                if ((dx == 0 && dy == 0) || !depth.depth.in_bounds(nx, ny)) continue;
                if (dist.at(nx, ny) != -1) continue;
                dist.at(nx, ny) = dist.at(x, y) + 1;
                queue.emplace_back(nx, ny);
            }
    }

    std::vector<Hole> holes;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (!depth.is_valid(x, y) && mask.at(x, y) != RegionLabel::Background)
                holes.push_back({x, y, dist.at(x, y) == -1 ? w + h : dist.at(x, y)});
    std::stable_sort(holes.begin(), holes.end(),
                     [](const Hole& a, const Hole& b) { return a.dist < b.dist; });

    DepthFrame out = depth;
    const int max_radius = std::max(w, h);
    for (const Hole& hole : holes) {
        RegionLabel label = mask.at(hole.x, hole.y);
        for (int r = 1; r <= max_radius; ++r) {
            int x0 = std::max(0, hole.x - r), x1 = std::min(w - 1, hole.x + r);
            int y0 = std::max(0, hole.y - r), y1 = std::min(h - 1, hole.y + r);
            std::vector<std::pair<double, double>> neighbors;  // (dist^2, depth)
            double min_d2 = 0.0;
            for (int y = y0; y <= y1; ++y)
                for (int x = x0; x <= x1; ++x) {
                    if (!out.is_valid(x, y) || mask.at(x, y) != label) continue;
                    double d2 = static_cast<double>((x - hole.x) * (x - hole.x) +
                                                    (y - hole.y) * (y - hole.y));
                    if (neighbors.empty() || d2 < min_d2) min_d2 = d2;
                    neighbors.emplace_back(d2, out.depth.at(x, y));
                }
            if (neighbors.empty()) continue;
            // weights shifted by the closest neighbor: same weighted mean,
            // no underflow for distant windows
            double wsum = 0.0, vsum = 0.0;
            for (auto [d2, value] : neighbors) {
                double wgt = std::exp(-(d2 - min_d2) / (2.0 * sigma * sigma));
                wsum += wgt;
                vsum += wgt * value;
            }
            out.set(hole.x, hole.y, vsum / wsum);
            break;
        }
    }
    return out;
}

}  // namespace tofhair::geomfeat
