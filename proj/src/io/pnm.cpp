#include "tofhair/io/pnm.hpp"

#include <fstream>

#include "tofhair/core/error.hpp"

namespace tofhair::io {

namespace {

void read_pnm_header(std::ifstream& in, const std::string& path, const char* magic,
                     int& w, int& h) {
    std::string m;
    in >> m;
    if (m != magic) throw DataError("unexpected PNM magic in " + path);
    int maxval = 0;
    in >> w >> h >> maxval;
    if (!in || w <= 0 || h <= 0 || maxval != 255)
        throw DataError("bad PNM header: " + path);
    in.get();
}

}  // namespace

void write_pgm(const std::string& path, const ImageU8& img) {
    if (img.empty()) throw std::invalid_argument("write_pgm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data().data()),
              static_cast<std::streamsize>(img.size()));
    if (!out) throw DataError("write failed: " + path);
}

ImageU8 read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    int w = 0, h = 0;
    read_pnm_header(in, path, "P5", w, h);
    ImageU8 img(w, h);
    in.read(reinterpret_cast<char*>(img.data().data()),
            static_cast<std::streamsize>(img.size()));
    if (!in) throw DataError("truncated PGM raster: " + path);
    return img;
}

void write_ppm(const std::string& path, const RgbImage& img) {
    if (img.data.empty()) throw std::invalid_argument("write_ppm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) throw DataError("write failed: " + path);
}

RgbImage read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    int w = 0, h = 0;
    read_pnm_header(in, path, "P6", w, h);
    RgbImage img(w, h);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (!in) throw DataError("truncated PPM raster: " + path);
    return img;
}

}  // namespace tofhair::io
