#ifndef CORPUSCOPE_PORTER_HPP
#define CORPUSCOPE_PORTER_HPP

#include <string>
#include <string_view>

namespace corpuscope {

/// Porter stemmer (reference-implementation behaviour, English).
///
/// Tokens that are not purely lowercase a-z (digits, embedded punctuation,
/// non-ASCII) are returned unchanged, as are tokens of length <= 2.
std::string porter_stem(std::string_view token);

}  // namespace corpuscope

#endif
