#include "minrank/sha256.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include <openssl/evp.h>

namespace minrank {

class Sha256Stream::Buffer : public std::streambuf {
 public:
  explicit Buffer(std::ostream* tee) : tee_(tee), ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 initialisation failed");
    }
    setp(chunk_.data(), chunk_.data() + chunk_.size());
  }
  ~Buffer() override { EVP_MD_CTX_free(ctx_); }

  std::string finish() {
    flush_chunk();
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx_, md.data(), &len);
    std::string hex;
    char byte[3];
    for (unsigned i = 0; i < len; ++i) {
      std::snprintf(byte, sizeof byte, "%02x", md[i]);
      hex += byte;
    }
    return hex;
  }

 protected:
  int_type overflow(int_type ch) override {
    flush_chunk();
    if (!traits_type::eq_int_type(ch, traits_type::eof())) {
      *pptr() = traits_type::to_char_type(ch);
      pbump(1);
    }
    return traits_type::not_eof(ch);
  }
  int sync() override {
    flush_chunk();
    return 0;
  }

 private:
  void flush_chunk() {
    const auto n = static_cast<std::size_t>(pptr() - pbase());
    if (n != 0) {
      EVP_DigestUpdate(ctx_, pbase(), n);
      if (tee_) tee_->write(pbase(), static_cast<std::streamsize>(n));
    }
    setp(chunk_.data(), chunk_.data() + chunk_.size());
  }

  std::ostream* tee_;
  EVP_MD_CTX* ctx_;
  std::array<char, 1 << 16> chunk_{};
};

Sha256Stream::Sha256Stream(std::ostream* tee) : std::ostream(nullptr), buf_(std::make_unique<Buffer>(tee)) {
  rdbuf(buf_.get());
}

Sha256Stream::~Sha256Stream() = default;

std::string Sha256Stream::hex_digest() {
  flush();
  return buf_->finish();
}

std::string sha256_hex(std::string_view data) {
  Sha256Stream s;
  s.write(data.data(), static_cast<std::streamsize>(data.size()));
  return s.hex_digest();
}

}  // namespace minrank
