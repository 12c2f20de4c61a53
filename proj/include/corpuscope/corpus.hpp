#ifndef CORPUSCOPE_CORPUS_HPP
#define CORPUSCOPE_CORPUS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace corpuscope {

/// Lowercase, whitespace-free topic marker. The stored value never carries
/// the leading "#"; hashtag() prepends it for display.
class Tag {
public:
    /// Builds a tag from a phrase: lowercases, strips every whitespace
    /// character and any leading "#". Throws InputError if nothing remains.
    static Tag from_phrase(std::string_view phrase);

    const std::string& value() const noexcept { return value_; }
    std::string hashtag() const { return "#" + value_; }

    auto operator<=>(const Tag&) const = default;

private:
    explicit Tag(std::string value) : value_(std::move(value)) {}
    std::string value_;
};

/// to_hashtag("Stay woke").hashtag() == "#staywoke"
Tag to_hashtag(std::string_view phrase);

struct Document {
    std::string id;
    std::string raw_text;
    std::optional<std::int64_t> created_at;  // UTC epoch seconds
    std::set<Tag> tags;
    std::optional<std::string> author;

    bool has_tag(const Tag& tag) const { return tags.count(tag) > 0; }
};

struct Corpus {
    std::vector<Document> documents;
    std::string source;  // provenance: path + ingest options summary

    std::size_t size() const noexcept { return documents.size(); }
};

struct TokenizedDoc {
    std::string doc_id;
    std::vector<std::string> tokens;     // stemmed, stopword-filtered
    std::size_t raw_token_count = 0;     // token count before any drop
};

struct IngestOptions {
    bool lowercase_tags = true;  // always on; kept for provenance output
};

struct TokenizerOptions {
    std::size_t min_token_length = 2;
    /// Empty => use the built-in list (see stopwords.hpp).
    std::vector<std::string> stopwords;
    bool use_default_stopwords = true;
};

/// Lowercases, removes URL tokens (http://, https://, www.) and @mentions,
/// strips leading "#" from tokens, collapses whitespace and trims.
/// Idempotent: normalize(normalize(t)) == normalize(t).
std::string normalize(std::string_view raw_text);

/// Splits normalized text on non-alphanumeric boundaries, drops tokens
/// shorter than min_token_length, drops stopwords, Porter-stems the rest.
/// raw_token_count counts tokens before the drops.
TokenizedDoc tokenize(std::string_view normalized_text, const TokenizerOptions& opts = {},
                      std::string doc_id = {});

/// One JSON object per non-blank line:
/// {"id": str, "text": str, "created_at": RFC3339 str?, "tags": [str]?, "author": str?}
Corpus ingest_jsonl(const std::string& path, const IngestOptions& opts = {});

/// Keeps the first document of each duplicate class. Documents are
/// duplicates iff their texts normalize to the same string after a leading
/// retweet marker ("rt @handle:") is stripped. Idempotent, order-preserving.
Corpus dedup(const Corpus& corpus);

/// Returns exactly the documents for which keep() is true, order preserved.
Corpus apply_filter(const Corpus& corpus, const std::function<bool(const Document&)>& keep);

/// normalize + tokenize for every document, index-aligned with corpus.documents.
std::vector<TokenizedDoc> tokenize_corpus(const Corpus& corpus, const TokenizerOptions& opts = {});

/// Parses an RFC 3339 timestamp ("2019-04-18T12:30:00Z", fractional seconds
/// and numeric offsets accepted) to UTC epoch seconds.
std::int64_t parse_rfc3339(std::string_view text);

/// Formats UTC epoch seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(std::int64_t epoch_seconds);

}  // namespace corpuscope

#endif
