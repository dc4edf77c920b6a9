#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "deskew/error.hpp"
#include "deskew/image.hpp"

namespace deskew {

enum class PnmFormat { P5, P2 };

namespace detail {

// Header token scanner: whitespace-separated, '#' comments run to end of line.
class PnmScanner {
public:
  explicit PnmScanner(const std::vector<std::uint8_t> &bytes) : bytes_(bytes) {}

  std::string next_token() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size())
      throw FormatError("PNM: truncated header");
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]))
      tok.push_back(static_cast<char>(bytes_[pos_++]));
    return tok;
  }

  int next_int() {
    const std::string tok = next_token();
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size())
        throw FormatError("PNM: bad integer '" + tok + "'");
      return v;
    } catch (const std::exception &) {
      throw FormatError("PNM: bad integer '" + tok + "'");
    }
  }

  // Consume exactly one whitespace byte (the separator before a P5 payload).
  void expect_single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
      throw FormatError("PNM: missing separator before payload");
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
          ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t> &bytes_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Decode a P5 (binary) or P2 (ASCII) PGM, maxval <= 255. PGM stores 0 as
/// black, so intensities are inverted into ink-space on load.
inline Grayscale load_pnm(const std::vector<std::uint8_t> &bytes) {
  detail::PnmScanner sc(bytes);
  const std::string magic = sc.next_token();
  if (magic != "P5" && magic != "P2")
    throw FormatError("PNM: unsupported magic '" + magic + "'");
  const int width = sc.next_int();
  const int height = sc.next_int();
  const int maxval = sc.next_int();
  if (width < 1 || height < 1)
    throw FormatError("PNM: bad dimensions");
  if (maxval < 1 || maxval > 255)
    throw FormatError("PNM: maxval must be in [1, 255]");

  Grayscale img(width, height);
  const std::size_t n = img.data.size();
  if (magic == "P5") {
    sc.expect_single_space();
    if (bytes.size() - sc.pos() < n)
      throw FormatError("PNM: truncated P5 payload");
    for (std::size_t i = 0; i < n; ++i) {
      const int sample = bytes[sc.pos() + i];
      if (sample > maxval)
        throw FormatError("PNM: sample exceeds maxval");
      img.data[i] = static_cast<double>(maxval - sample) / maxval;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int sample = sc.next_int();
      if (sample < 0 || sample > maxval)
        throw FormatError("PNM: sample out of range");
      img.data[i] = static_cast<double>(maxval - sample) / maxval;
    }
  }
  return img;
}

/// Encode as PGM with maxval 255 and the canonical header
/// "P5\n<w> <h>\n255\n" (or P2). Ink 1.0 maps back to sample 0.
inline std::vector<std::uint8_t> save_pnm(const Grayscale &img,
                                          PnmFormat format = PnmFormat::P5) {
  std::string header = (format == PnmFormat::P5 ? "P5\n" : "P2\n");
  header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (format == PnmFormat::P5) {
    out.reserve(out.size() + img.data.size());
    for (double v : img.data)
      out.push_back(static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - v))));
  } else {
    std::string body;
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        body += std::to_string(std::lround(255.0 * (1.0 - img.at(x, y))));
        body += (x + 1 == img.width) ? '\n' : ' ';
      }
    }
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

inline Grayscale load_pnm_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_pnm(bytes);
}

inline void save_pnm_file(const std::string &path, const Grayscale &img,
                          PnmFormat format = PnmFormat::P5) {
  const auto bytes = save_pnm(img, format);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

} // namespace deskew
