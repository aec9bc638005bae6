#pragma once

#include <cstdint>
#include <cstring>
#include <string>

namespace veil {

// 64-bit FNV-1a. Content integrity against accidental drift, not cryptographic.
class Fnv1a {
public:
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= 0x100000001b3ULL;
    }
  }
  void update(const std::string& s) { update(s.data(), s.size()); }
  void update(double v) { update(&v, sizeof(v)); }
  void update(std::int64_t v) { update(&v, sizeof(v)); }

  std::uint64_t digest() const { return state_; }
  std::string hex() const {
    static const char* k = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<size_t>(i)] = k[v & 0xf];
      v >>= 4;
    }
    return out;
  }

private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::string hash_hex(const std::string& s) {
  Fnv1a h;
  h.update(s);
  return h.hex();
}

}  // namespace veil
