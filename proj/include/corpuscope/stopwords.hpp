#ifndef CORPUSCOPE_STOPWORDS_HPP
#define CORPUSCOPE_STOPWORDS_HPP

#include <string>
#include <vector>

namespace corpuscope {

/// The built-in English stopword list (version corpuscope-en-v1).
/// Deliberately small: high-frequency function words plus the retweet
/// marker "rt". Content words such as "like", "got" or "new" are kept in
/// the token stream.
const std::vector<std::string>& default_stopwords();

/// Loads one stopword per line; blank lines and lines starting with '#'
/// are ignored. Words are lowercased.
std::vector<std::string> load_stopwords(const std::string& path);

}  // namespace corpuscope

#endif
