#pragma once

#include <stdexcept>
#include <string>

namespace deskew {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported PNM data.
class FormatError : public Error {
public:
  using Error::Error;
};

// Image is too short to split into 25% bands (height < 8).
class GlyphTooSmallError : public Error {
public:
  using Error::Error;
};

// Skew cannot be measured on this glyph.
class NotDetectableError : public Error {
public:
  using Error::Error;
};

// A 25% band contains no foreground pixels.
class EmptyBandError : public NotDetectableError {
public:
  using NotDetectableError::NotDetectableError;
};

// Centroid pair does not describe an upper/lower point ordering.
class InvalidCentroidsError : public Error {
public:
  using Error::Error;
};

class UnknownFixtureError : public Error {
public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
public:
  using Error::Error;
};

} // namespace deskew
