#pragma once

#include <zlib.h>

#include <array>
#include <istream>
#include <memory>
#include <streambuf>

namespace rolestat {

// Read-only streambuf that inflates gzip data pulled from another stream.
// Concatenated gzip members are decoded back to back, as gunzip does.
class GzipStreamBuf : public std::streambuf {
 public:
  explicit GzipStreamBuf(std::istream& compressed);
  ~GzipStreamBuf() override;

  GzipStreamBuf(const GzipStreamBuf&) = delete;
  GzipStreamBuf& operator=(const GzipStreamBuf&) = delete;

 protected:
  int_type underflow() override;

 private:
  bool refill_input();

  std::istream& source_;
  z_stream zs_{};
  bool finished_ = false;
  std::array<char, 1 << 16> in_{};
  std::array<char, 1 << 16> out_{};
};

// Presents `raw` as a text stream, decompressing transparently when it starts
// with the gzip magic bytes 0x1F 0x8B. Inflate failures surface as IoError
// from the underlying streambuf.
class DecodedInput {
 public:
  explicit DecodedInput(std::istream& raw);

  std::istream& stream() { return *active_; }
  bool compressed() const { return gzip_ != nullptr; }

 private:
  std::unique_ptr<GzipStreamBuf> gzip_;
  std::unique_ptr<std::istream> wrapped_;
  std::istream* active_;
};

}  // namespace rolestat
