#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "knotcert/group.hpp"

namespace knotcert {

/// Presentation file format:
///
///   gens: g1 g2 ...
///   rel: g1^2 g2^-1 ...      (one line per relator)
///
/// Tokens are `name` or `name^k` with k a nonzero integer. Blank lines and
/// lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

/// Whitespace-separated tokens in the relator syntax. When `alphabet` is
/// given, symbols outside it raise UnknownGenerator.
Word parse_word(std::string_view text, const Presentation* alphabet = nullptr);
/// Inverse of parse_word; the identity prints as the empty string.
std::string print_word(const Word& w);

}  // namespace knotcert
