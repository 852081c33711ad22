#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace sti::test {

/// Lowercase hex SHA-256 of `bytes` (OpenSSL).
std::string sha256_hex(std::span<const std::uint8_t> bytes);

}  // namespace sti::test
