#ifndef CORPUSCOPE_LEXICON_HPP
#define CORPUSCOPE_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpuscope/corpus.hpp"

namespace corpuscope {

/// LIWC-style category dictionary: exact words and prefix patterns
/// ("abandon*") mapped to one or more categories.
class Lexicon {
public:
    struct Entry {
        std::string pattern;            // lowercase; trailing '*' marks a prefix
        std::vector<int> category_ids;  // nonempty, all declared
    };

    Lexicon(std::map<int, std::string> categories, std::vector<Entry> entries);

    const std::map<int, std::string>& categories() const noexcept { return categories_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::string& category_name(int id) const { return categories_.at(id); }

    /// Category names in declaration (id) order; the column order of CSV output.
    std::vector<std::string> category_names() const;

    /// Union of the category ids of every pattern matching the token.
    /// Exact patterns match the whole token, "p*" matches any prefix p.
    std::vector<int> match_token_ids(std::string_view token) const;

private:
    std::map<int, std::string> categories_;
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::vector<int>> exact_;
    std::unordered_map<std::string, std::vector<int>> prefix_;
    std::size_t max_prefix_len_ = 0;
};

/// Parses the LIWC ".dic" layout:
///   %
///   id <TAB> name
///   %
///   pattern <TAB> id [id ...]
Lexicon parse_dic(const std::string& path);

/// JSON equivalent: {"categories": {"1": "anger", ...},
///                   "entries": [["hate", [1]], ["abandon*", [2]], ...]}
Lexicon parse_lexicon_json(const std::string& path);

/// Category names matched by a (lowercase) token.
std::set<std::string> match_token(const Lexicon& lexicon, std::string_view token);

/// Per-category percentages over a document. token_count is the number of
/// raw tokens the percentages are relative to.
struct CategoryScores {
    std::map<std::string, double> scores;  // category name -> [0, 100]
    std::size_t token_count = 0;
};

/// score = 100 * (tokens matching the category) / raw_token_count.
/// A token may count toward several categories. Zero raw tokens => all zero.
CategoryScores score_doc(const TokenizedDoc& doc, const Lexicon& lexicon);

enum class SignatureAggregation {
    kMeanOfDocs,   // unweighted mean of per-document scores (default)
    kPooledCounts  // 100 * total matches / total raw tokens
};

/// Signature of a document group: all documents, or those bearing group_by.
/// token_count reports the total raw tokens of the selection.
CategoryScores signature(const Corpus& corpus, const std::vector<TokenizedDoc>& tokenized,
                         const Lexicon& lexicon, const std::optional<Tag>& group_by = std::nullopt,
                         SignatureAggregation aggregation = SignatureAggregation::kMeanOfDocs);

/// One row per tag present in the corpus plus the "ALL" row, used by the
/// score stage. Rows ordered: ALL first, then tags lexicographically.
std::vector<std::pair<std::string, CategoryScores>> signature_table(
    const Corpus& corpus, const std::vector<TokenizedDoc>& tokenized, const Lexicon& lexicon,
    SignatureAggregation aggregation = SignatureAggregation::kMeanOfDocs);

/// CSV with header "group,<categories...>" in category id order.
std::string scores_to_csv(const Lexicon& lexicon,
                          const std::vector<std::pair<std::string, CategoryScores>>& rows);

}  // namespace corpuscope

#endif
