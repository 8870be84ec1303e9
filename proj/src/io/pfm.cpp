#include "tofhair/io/pfm.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "tofhair/core/error.hpp"

namespace tofhair::io {

namespace {

bool host_is_little_endian() {
    std::uint16_t probe = 1;
    std::uint8_t first;
    std::memcpy(&first, &probe, 1);
    return first == 1;
}

void write_header(std::ofstream& out, const char* magic, int w, int h) {
    out << magic << "\n" << w << " " << h << "\n" << "-1.0" << "\n";
}

struct PfmHeader {
    bool color = false;
    int width = 0;
    int height = 0;
    double scale = -1.0;
};

PfmHeader read_header(std::ifstream& in, const std::string& path) {
    PfmHeader hdr;
    std::string magic;
    in >> magic;
    if (magic == "PF")
        hdr.color = true;
    else if (magic == "Pf")
        hdr.color = false;
    else
        throw DataError("not a PFM file: " + path);
    in >> hdr.width >> hdr.height >> hdr.scale;
    if (!in || hdr.width <= 0 || hdr.height <= 0 || hdr.scale == 0.0)
        throw DataError("bad PFM header: " + path);
    in.get();  // single whitespace byte before the raster
    return hdr;
}

void byteswap_floats(std::vector<float>& v) {
    for (float& f : v) {
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        u = (u >> 24) | ((u >> 8) & 0xff00u) | ((u << 8) & 0xff0000u) | (u << 24);
        std::memcpy(&f, &u, 4);
    }
}

std::vector<float> read_raster(std::ifstream& in, const PfmHeader& hdr,
                               const std::string& path) {
    std::size_t samples = static_cast<std::size_t>(hdr.width) * hdr.height *
                          (hdr.color ? 3 : 1);
    std::vector<float> raw(samples);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(samples * sizeof(float)));
    if (!in) throw DataError("truncated PFM raster: " + path);
    bool file_le = hdr.scale < 0.0;
    if (file_le != host_is_little_endian()) byteswap_floats(raw);
    return raw;
}

}  // namespace

void write_pfm(const std::string& path, const ImageF& img) {
    if (img.empty()) throw std::invalid_argument("write_pfm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_header(out, "Pf", img.width(), img.height());
    std::vector<float> row(static_cast<std::size_t>(img.width()));
    for (int y = img.height() - 1; y >= 0; --y) {
        for (int x = 0; x < img.width(); ++x)
            row[static_cast<std::size_t>(x)] = static_cast<float>(img.at(x, y));
        if (!host_is_little_endian()) byteswap_floats(row);
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * sizeof(float)));
    }
    if (!out) throw DataError("write failed: " + path);
}

ImageF read_pfm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    PfmHeader hdr = read_header(in, path);
    if (hdr.color) throw DataError("expected single-channel PFM: " + path);
    std::vector<float> raw = read_raster(in, hdr, path);
    ImageF img(hdr.width, hdr.height);
    for (int y = 0; y < hdr.height; ++y) {
        const float* src = raw.data() +
                           static_cast<std::size_t>(hdr.height - 1 - y) * hdr.width;
        for (int x = 0; x < hdr.width; ++x) img.at(x, y) = src[x];
    }
    return img;
}

void write_pfm3(const std::string& path, const std::array<ImageF, 3>& planes) {
    const ImageF& r = planes[0];
    if (r.empty() || !r.same_size(planes[1]) || !r.same_size(planes[2]))
        throw std::invalid_argument("write_pfm3: planes must share dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_header(out, "PF", r.width(), r.height());
    std::vector<float> row(static_cast<std::size_t>(r.width()) * 3);
    for (int y = r.height() - 1; y >= 0; --y) {
        for (int x = 0; x < r.width(); ++x)
            for (int c = 0; c < 3; ++c)
                row[static_cast<std::size_t>(x) * 3 + c] =
                    static_cast<float>(planes[static_cast<std::size_t>(c)].at(x, y));
        if (!host_is_little_endian()) byteswap_floats(row);
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size() * sizeof(float)));
    }
    if (!out) throw DataError("write failed: " + path);
}

std::array<ImageF, 3> read_pfm3(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    PfmHeader hdr = read_header(in, path);
    if (!hdr.color) throw DataError("expected three-channel PFM: " + path);
    std::vector<float> raw = read_raster(in, hdr, path);
    std::array<ImageF, 3> planes{ImageF(hdr.width, hdr.height),
                                 ImageF(hdr.width, hdr.height),
                                 ImageF(hdr.width, hdr.height)};
    for (int y = 0; y < hdr.height; ++y) {
        const float* src = raw.data() +
                           static_cast<std::size_t>(hdr.height - 1 - y) * hdr.width * 3;
        for (int x = 0; x < hdr.width; ++x)
            for (int c = 0; c < 3; ++c)
                planes[static_cast<std::size_t>(c)].at(x, y) = src[x * 3 + c];
    }
    return planes;
}

}  // namespace tofhair::io
