#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orsti {

// Positions and ranks are 1-based 32-bit indexes throughout the library.
using index_t = std::int32_t;

// An indexable byte string. Symbol values live in [1, 255]; the zero byte is
// reserved as the internal sentinel and never appears in a Text.
class Text {
 public:
  explicit Text(std::string bytes) : bytes_(std::move(bytes)) {
    if (bytes_.empty()) throw std::invalid_argument("Text: empty input");
    if (bytes_.find('\0') != std::string::npos)
      throw std::invalid_argument("Text: NUL byte is reserved");
  }

  [[nodiscard]] index_t size() const { return static_cast<index_t>(bytes_.size()); }

  // 1-based symbol access.
  [[nodiscard]] unsigned char at(index_t pos) const {
    return static_cast<unsigned char>(bytes_[static_cast<std::size_t>(pos - 1)]);
  }

  [[nodiscard]] const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

// Patterns may be empty but must not contain the reserved zero byte.
inline void validate_pattern(std::string_view pattern) {
  if (pattern.find('\0') != std::string_view::npos)
    throw std::invalid_argument("pattern: NUL byte is reserved");
}

}  // namespace orsti
