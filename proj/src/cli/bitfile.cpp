#include "cirng/cli/bitfile.hpp"

#include "cirng/errors.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace cirng {

void write_bits(std::ostream& out, const BitSeq& bits, BitFormat format) {
    if (format == BitFormat::Ascii) {
        std::string text;
        text.reserve(bits.size() + bits.size() / 64 + 1);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            text.push_back(bits[i] ? '1' : '0');
            if (i % 64 == 63 || i + 1 == bits.size()) text.push_back('\n');
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    } else {
        std::string bytes((bits.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (0x80 >> (i % 8)));
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
}

void write_bits(const std::filesystem::path& path, const BitSeq& bits, BitFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_bits(out, bits, format);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

BitSeq read_bits(std::istream& in, BitFormat format) {
    const std::string data{std::istreambuf_iterator<char>(in), {}};
    BitSeq out;
    if (format == BitFormat::Ascii) {
        out.reserve(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            const char c = data[i];
            if (c == '0' || c == '1') {
                out.push_back(static_cast<std::uint8_t>(c - '0'));
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                throw ParseError("unexpected character at offset " + std::to_string(i) + " in bit file");
            }
        }
    } else {
        out.reserve(data.size() * 8);
        for (unsigned char byte : data) append_bits(out, byte, 8);
    }
    return out;
}

BitSeq read_bits(const std::filesystem::path& path, BitFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return read_bits(in, format);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

BitFormat parse_bit_format(const std::string& name) {
    if (name == "ascii") return BitFormat::Ascii;
    if (name == "binary") return BitFormat::Binary;
    throw std::invalid_argument("unknown bit format '" + name + "'");
}

} // namespace cirng
