#pragma once

#include <memory>
#include <ostream>
#include <streambuf>
#include <string>
#include <string_view>

namespace minrank {

// std::ostream whose bytes are fed into a SHA-256 digest (and optionally
// forwarded to another stream).
class Sha256Stream : public std::ostream {
 public:
  explicit Sha256Stream(std::ostream* tee = nullptr);
  ~Sha256Stream() override;

  // Lowercase hex digest of everything written so far. Ends the stream.
  std::string hex_digest();

 private:
  class Buffer;
  std::unique_ptr<Buffer> buf_;
};

std::string sha256_hex(std::string_view data);

}  // namespace minrank
