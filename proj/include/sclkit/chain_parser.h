#pragma once

#include "sclkit/freegroup.h"

#include <optional>
#include <string>
#include <string_view>

namespace sclkit {

// chain  := ['+'|'-'] term (('+'|'-') term)*
// term   := [coeff ['*']] factor+
// coeff  := int | int '/' int
// factor := letters | '[' factor+ ',' factor+ ']' | factor '^' ['-'] int
//
// A run of letters is one factor, so "ab^2" is abab. Whitespace is ignored
// and U+2212 is read as '-'. The rank is the largest generator used unless
// `rank` is given, in which case using a larger generator is an error.
// Throws ParseError with the byte offset of the problem.
Chain parse_chain_raw(std::string_view text, std::optional<int> rank = std::nullopt);

// parse_chain_raw followed by canonicalize.
Chain parse_chain(std::string_view text, std::optional<int> rank = std::nullopt);

Word parse_word(std::string_view text, std::optional<int> rank = std::nullopt);

// Text that parse_chain reads back to an equal canonical chain.
std::string format_chain(const Chain& chain);

}  // namespace sclkit
