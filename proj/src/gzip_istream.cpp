#include "rolestat/gzip_istream.hpp"

#include <string>

#include "rolestat/errors.hpp"

namespace rolestat {

GzipStreamBuf::GzipStreamBuf(std::istream& compressed) : source_(compressed) {
  // 15 window bits + 16: expect a gzip wrapper.
  if (inflateInit2(&zs_, 15 + 16) != Z_OK) {
    throw IoError("gzip: inflateInit2 failed");
  }
  setg(out_.data(), out_.data(), out_.data());
}

GzipStreamBuf::~GzipStreamBuf() { inflateEnd(&zs_); }

bool GzipStreamBuf::refill_input() {
  source_.read(in_.data(), static_cast<std::streamsize>(in_.size()));
  const auto got = source_.gcount();
  if (source_.bad()) throw IoError("gzip: read failure on compressed stream");
  zs_.next_in = reinterpret_cast<Bytef*>(in_.data());
  zs_.avail_in = static_cast<uInt>(got);
  return got > 0;
}

GzipStreamBuf::int_type GzipStreamBuf::underflow() {
  if (gptr() < egptr()) return traits_type::to_int_type(*gptr());

  while (!finished_) {
    if (zs_.avail_in == 0 && !refill_input()) {
      // Input exhausted. A member that ended cleanly is fine; anything else
      // is a truncated archive.
      finished_ = true;
      if (zs_.total_in != 0 || zs_.total_out != 0) {
        throw IoError("gzip: unexpected end of compressed stream");
      }
      break;
    }

    zs_.next_out = reinterpret_cast<Bytef*>(out_.data());
    zs_.avail_out = static_cast<uInt>(out_.size());
    const int rc = inflate(&zs_, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
      finished_ = true;
      throw IoError(std::string("gzip: corrupt data (") +
                    (zs_.msg != nullptr ? zs_.msg : "inflate error") + ")");
    }
    const auto produced = out_.size() - zs_.avail_out;

    if (rc == Z_STREAM_END) {
      // Another member may follow.
      if (zs_.avail_in == 0 && !refill_input()) {
        finished_ = true;
      } else {
        inflateReset(&zs_);
      }
    }

    if (produced > 0) {
      setg(out_.data(), out_.data(), out_.data() + produced);
      return traits_type::to_int_type(*gptr());
    }
  }
  return traits_type::eof();
}

DecodedInput::DecodedInput(std::istream& raw) : active_(&raw) {
  const int first = raw.peek();
  if (first != 0x1F) return;
  raw.get();
  const int second = raw.peek();
  raw.unget();
  if (!raw) throw IoError("cannot rewind input after magic-byte probe");
  if (second != 0x8B) return;

  gzip_ = std::make_unique<GzipStreamBuf>(raw);
  wrapped_ = std::make_unique<std::istream>(gzip_.get());
  wrapped_->exceptions(std::ios::badbit);
  active_ = wrapped_.get();
}

}  // namespace rolestat
