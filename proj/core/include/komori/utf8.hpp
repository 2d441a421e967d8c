#pragma once

#include <string>
#include <string_view>

namespace komori::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Ill-formed sequences decode
/// to U+FFFD, one per maximal ill-formed subpart.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view scalars);

bool is_valid(std::string_view text);

/// Number of scalar values; ill-formed sequences count as decode() would.
std::size_t length(std::string_view text);

/// Drops a leading U+FEFF byte-order mark if present.
std::string_view strip_bom(std::string_view text) noexcept;

}  // namespace komori::utf8
