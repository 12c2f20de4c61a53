#include "corpuscope/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "corpuscope/errors.hpp"

namespace corpuscope {

namespace {

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) fields.push_back(f);
    return fields;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string format_score(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

Lexicon::Lexicon(std::map<int, std::string> categories, std::vector<Entry> entries)
    : categories_(std::move(categories)), entries_(std::move(entries)) {
    for (auto& entry : entries_) {
        entry.pattern = ascii_lower(entry.pattern);
        if (entry.pattern.empty()) throw InputError("lexicon entry with empty pattern");
        if (entry.category_ids.empty())
            throw InputError("lexicon entry '" + entry.pattern + "' has no categories");
        auto star = entry.pattern.find('*');
        if (star != std::string::npos && star != entry.pattern.size() - 1)
            throw InputError("'*' is only allowed as the final character: '" + entry.pattern + "'");
        for (int id : entry.category_ids)
            if (categories_.find(id) == categories_.end())
                throw InputError("entry '" + entry.pattern + "' references undeclared category " +
                                 std::to_string(id));

        bool is_prefix = !entry.pattern.empty() && entry.pattern.back() == '*';
        std::string body = is_prefix ? entry.pattern.substr(0, entry.pattern.size() - 1)
                                     : entry.pattern;
        if (is_prefix && body.empty()) throw InputError("bare '*' is not a valid pattern");
        auto& index = is_prefix ? prefix_ : exact_;
        auto [it, inserted] = index.emplace(body, entry.category_ids);
        if (!inserted) {
            // Duplicate pattern text across exact/prefix space is fine;
            // the same pattern twice is not.
            throw InputError("duplicate pattern '" + entry.pattern + "'");
        }
        if (is_prefix) max_prefix_len_ = std::max(max_prefix_len_, body.size());
    }
}

std::vector<std::string> Lexicon::category_names() const {
    std::vector<std::string> names;
    names.reserve(categories_.size());
    for (const auto& [id, name] : categories_) names.push_back(name);
    return names;
}

std::vector<int> Lexicon::match_token_ids(std::string_view token) const {
    std::vector<int> ids;
    std::string key(token);
    if (auto it = exact_.find(key); it != exact_.end())
        ids.insert(ids.end(), it->second.begin(), it->second.end());
    std::size_t limit = std::min(max_prefix_len_, token.size());
    for (std::size_t len = 1; len <= limit; ++len) {
        if (auto it = prefix_.find(std::string(token.substr(0, len))); it != prefix_.end())
            ids.insert(ids.end(), it->second.begin(), it->second.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

Lexicon parse_dic(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path);

    std::map<int, std::string> categories;
    std::vector<Lexicon::Entry> entries;
    std::vector<std::size_t> entry_lines;

    enum class Section { kPreamble, kCategories, kEntries } section = Section::kPreamble;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() == 1 && fields[0] == "%") {
            if (section == Section::kPreamble) section = Section::kCategories;
            else if (section == Section::kCategories) section = Section::kEntries;
            else throw ParseError("unexpected '%' delimiter", line_no);
            continue;
        }
        switch (section) {
            case Section::kPreamble:
                throw ParseError("expected '%' before category section", line_no);
            case Section::kCategories: {
                if (fields.size() < 2) throw ParseError("category line needs 'id name'", line_no);
                int id = 0;
                try {
                    std::size_t used = 0;
                    id = std::stoi(fields[0], &used);
                    if (used != fields[0].size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw ParseError("category id must be an integer: '" + fields[0] + "'", line_no);
                }
                std::string name = fields[1];
                if (!categories.emplace(id, name).second)
                    throw ParseError("duplicate category id " + std::to_string(id), line_no);
                break;
            }
            case Section::kEntries: {
                if (fields.size() < 2)
                    throw ParseError("entry line needs 'pattern id [id ...]'", line_no);
                Lexicon::Entry entry;
                entry.pattern = fields[0];
                for (std::size_t i = 1; i < fields.size(); ++i) {
                    try {
                        std::size_t used = 0;
                        entry.category_ids.push_back(std::stoi(fields[i], &used));
                        if (used != fields[i].size()) throw std::invalid_argument("");
                    } catch (const std::exception&) {
                        throw ParseError("category id must be an integer: '" + fields[i] + "'",
                                         line_no);
                    }
                }
                entries.push_back(std::move(entry));
                entry_lines.push_back(line_no);
                break;
            }
        }
    }
    if (section != Section::kEntries)
        throw ParseError("missing '%' delimiters around the category section", line_no);

    try {
        return Lexicon(std::move(categories), std::move(entries));
    } catch (const InputError& e) {
        // Re-raise validation problems as parse errors with a best-effort line.
        throw ParseError(e.what(), entry_lines.empty() ? line_no : entry_lines.back());
    }
}

Lexicon parse_lexicon_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON lexicon: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("categories") || !doc.contains("entries"))
        throw ParseError("lexicon JSON must contain 'categories' and 'entries'");

    std::map<int, std::string> categories;
    for (const auto& [key, value] : doc["categories"].items()) {
        int id = 0;
        try {
            id = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("category key must be an integer string: '" + key + "'");
        }
        if (!value.is_string()) throw ParseError("category name must be a string");
        categories[id] = value.get<std::string>();
    }
    std::vector<Lexicon::Entry> entries;
    for (const auto& item : doc["entries"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_array())
            throw ParseError("each entry must be [pattern, [ids...]]");
        Lexicon::Entry entry;
        entry.pattern = item[0].get<std::string>();
        for (const auto& id : item[1]) {
            if (!id.is_number_integer()) throw ParseError("entry ids must be integers");
            entry.category_ids.push_back(id.get<int>());
        }
        entries.push_back(std::move(entry));
    }
    try {
        return Lexicon(std::move(categories), std::move(entries));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

std::set<std::string> match_token(const Lexicon& lexicon, std::string_view token) {
    std::set<std::string> names;
    for (int id : lexicon.match_token_ids(token)) names.insert(lexicon.category_name(id));
    return names;
}

CategoryScores score_doc(const TokenizedDoc& doc, const Lexicon& lexicon) {
    CategoryScores result;
    result.token_count = doc.raw_token_count;
    std::map<int, std::size_t> counts;
    for (const auto& token : doc.tokens)
        for (int id : lexicon.match_token_ids(token)) ++counts[id];
    for (const auto& [id, name] : lexicon.categories()) {
        double score = 0.0;
        if (doc.raw_token_count > 0) {
            auto it = counts.find(id);
            std::size_t c = it == counts.end() ? 0 : it->second;
            score = 100.0 * static_cast<double>(c) / static_cast<double>(doc.raw_token_count);
        }
        result.scores[name] = score;
    }
    return result;
}

CategoryScores signature(const Corpus& corpus, const std::vector<TokenizedDoc>& tokenized,
                         const Lexicon& lexicon, const std::optional<Tag>& group_by,
                         SignatureAggregation aggregation) {
    if (corpus.documents.size() != tokenized.size())
        throw InputError("corpus and tokenized corpus differ in size");

    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i)
        if (!group_by || corpus.documents[i].has_tag(*group_by)) selected.push_back(i);
    if (group_by && selected.empty())
        throw InputError("empty group: no document carries tag '" + group_by->value() + "'");

    CategoryScores result;
    for (const auto& [id, name] : lexicon.categories()) result.scores[name] = 0.0;
    for (std::size_t i : selected) result.token_count += tokenized[i].raw_token_count;

    if (selected.empty()) return result;

    if (aggregation == SignatureAggregation::kMeanOfDocs) {
        for (std::size_t i : selected) {
            CategoryScores doc_scores = score_doc(tokenized[i], lexicon);
            for (const auto& [name, value] : doc_scores.scores) result.scores[name] += value;
        }
        for (auto& [name, value] : result.scores) value /= static_cast<double>(selected.size());
    } else {
        std::map<int, std::size_t> counts;
        for (std::size_t i : selected)
            for (const auto& token : tokenized[i].tokens)
                for (int id : lexicon.match_token_ids(token)) ++counts[id];
        if (result.token_count > 0)
            for (const auto& [id, name] : lexicon.categories()) {
                auto it = counts.find(id);
                std::size_t c = it == counts.end() ? 0 : it->second;
                result.scores[name] =
                    100.0 * static_cast<double>(c) / static_cast<double>(result.token_count);
            }
    }
    return result;
}

std::vector<std::pair<std::string, CategoryScores>> signature_table(
    const Corpus& corpus, const std::vector<TokenizedDoc>& tokenized, const Lexicon& lexicon,
    SignatureAggregation aggregation) {
    std::vector<std::pair<std::string, CategoryScores>> rows;
    rows.emplace_back("ALL", signature(corpus, tokenized, lexicon, std::nullopt, aggregation));
    std::set<Tag> tags;
    for (const auto& doc : corpus.documents) tags.insert(doc.tags.begin(), doc.tags.end());
    for (const auto& tag : tags)
        rows.emplace_back(tag.value(), signature(corpus, tokenized, lexicon, tag, aggregation));
    return rows;
}

std::string scores_to_csv(const Lexicon& lexicon,
                          const std::vector<std::pair<std::string, CategoryScores>>& rows) {
    std::string out = "group";
    for (const auto& name : lexicon.category_names()) out += "," + csv_field(name);
    out += "\n";
    for (const auto& [label, scores] : rows) {
        out += csv_field(label);
        for (const auto& name : lexicon.category_names())
            out += "," + format_score(scores.scores.at(name));
        out += "\n";
    }
    return out;
}

}  // namespace corpuscope
