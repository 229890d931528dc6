#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clozeforge::utf8 {

// All character indices in this project are Unicode scalar-value indices
// (code points), matching SQuAD answer_start semantics.

// Decodes UTF-8 into code points. Returns false on malformed input.
bool decode(std::string_view bytes, std::vector<char32_t>& out);

// Decodes or throws DataError mentioning `what`.
std::vector<char32_t> decode_or_throw(std::string_view bytes, std::string_view what);

std::string encode(const std::vector<char32_t>& cps);
std::string encode(char32_t cp);
void append(std::string& out, char32_t cp);

// Number of code points; throws DataError on malformed input.
std::size_t length(std::string_view bytes);

// Slice [cp_start, cp_end) by code-point index.
std::string substr(std::string_view bytes, std::size_t cp_start, std::size_t cp_end);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_ascii_digit(char32_t cp);

}  // namespace clozeforge::utf8
