#include "cirng/imagery/netpbm.hpp"

#include "cirng/errors.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace cirng {
namespace {

void skip_space_and_comments(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string ignored;
            std::getline(in, ignored);
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_header_int(std::istream& in, const char* what) {
    skip_space_and_comments(in);
    int v = 0;
    if (!(in >> v) || v <= 0) throw ParseError(std::string("netpbm: bad ") + what);
    return v;
}

void expect_magic(std::istream& in, const char* magic) {
    char m[2] = {0, 0};
    if (!in.read(m, 2) || m[0] != magic[0] || m[1] != magic[1]) {
        throw ParseError(std::string("netpbm: expected magic ") + magic);
    }
}

// Exactly one whitespace byte separates the header from the raster.
void end_of_header(std::istream& in) {
    const int c = in.get();
    if (c == EOF || !std::isspace(c)) throw ParseError("netpbm: header not terminated by whitespace");
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot create " + path.string());
    return out;
}

} // namespace

GrayImage read_pgm(std::istream& in) {
    expect_magic(in, "P5");
    const int w = read_header_int(in, "width");
    const int h = read_header_int(in, "height");
    const int maxval = read_header_int(in, "maxval");
    if (maxval != 255) throw ParseError("netpbm: only maxval 255 is supported, got " + std::to_string(maxval));
    end_of_header(in);
    GrayImage img(w, h);
    if (!in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.size()))) {
        throw ParseError("netpbm: truncated P5 raster");
    }
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.size()));
}

BitImage read_pbm(std::istream& in) {
    expect_magic(in, "P4");
    const int w = read_header_int(in, "width");
    const int h = read_header_int(in, "height");
    end_of_header(in);
    BitImage img(w, h);
    const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
    std::string row(row_bytes, '\0');
    for (int y = 0; y < h; ++y) {
        if (!in.read(row.data(), static_cast<std::streamsize>(row_bytes))) throw ParseError("netpbm: truncated P4 raster");
        for (int x = 0; x < w; ++x) {
            const auto byte = static_cast<unsigned char>(row[static_cast<std::size_t>(x) / 8]);
            img.bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] =
                static_cast<std::uint8_t>((byte >> (7 - x % 8)) & 1U);
        }
    }
    return img;
}

void write_pbm(std::ostream& out, const BitImage& image) {
    out << "P4\n" << image.width << ' ' << image.height << '\n';
    const std::size_t row_bytes = (static_cast<std::size_t>(image.width) + 7) / 8;
    std::string row(row_bytes, '\0');
    for (int y = 0; y < image.height; ++y) {
        std::fill(row.begin(), row.end(), '\0');
        for (int x = 0; x < image.width; ++x) {
            if (image.bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(image.width) + static_cast<std::size_t>(x)]) {
                row[static_cast<std::size_t>(x) / 8] = static_cast<char>(row[static_cast<std::size_t>(x) / 8] | (0x80 >> (x % 8)));
            }
        }
        out.write(row.data(), static_cast<std::streamsize>(row_bytes));
    }
}

GrayImage read_pgm(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_pgm(in);
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
    auto out = open_out(path);
    write_pgm(out, image);
}

BitImage read_pbm(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_pbm(in);
}

void write_pbm(const std::filesystem::path& path, const BitImage& image) {
    auto out = open_out(path);
    write_pbm(out, image);
}

} // namespace cirng
