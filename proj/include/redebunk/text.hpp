#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace redebunk::text {

// UTF-8 decoding; ill-formed sequences decode to U+FFFD, one replacement
// per bad byte run.
std::vector<char32_t> decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

bool is_valid_utf8(std::string_view s);

// Canonical composition (NFC) of a UTF-8 string.
std::string nfc(std::string_view s);

char32_t to_lower(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

// NFC + per-codepoint lowercase over a UTF-8 string.
std::string fold(std::string_view s);

std::string_view trim(std::string_view s);

}  // namespace redebunk::text
