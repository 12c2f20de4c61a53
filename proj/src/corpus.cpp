#include "corpuscope/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "corpuscope/errors.hpp"
#include "corpuscope/porter.hpp"
#include "corpuscope/stopwords.hpp"

namespace corpuscope {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

// Word characters for tokenization: ASCII alphanumerics plus any non-ASCII
// byte, so multi-byte UTF-8 sequences stay inside one token.
bool is_word_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

// Strips a leading "rt @handle:" retweet marker (case-insensitive) so that
// app retweets and their sources land in the same duplicate class.
std::string_view strip_retweet_prefix(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && is_space(text[i])) ++i;
    };
    skip_ws();
    std::size_t start = i;
    if (i + 1 >= text.size()) return text;
    if (std::tolower(static_cast<unsigned char>(text[i])) != 'r' ||
        std::tolower(static_cast<unsigned char>(text[i + 1])) != 't')
        return text;
    i += 2;
    if (i >= text.size() || !is_space(text[i])) return text;
    skip_ws();
    if (i >= text.size() || text[i] != '@') return text;
    ++i;
    std::size_t handle_len = 0;
    while (i < text.size() && text[i] != ':' && !is_space(text[i])) {
        ++i;
        ++handle_len;
    }
    if (handle_len == 0 || i >= text.size() || text[i] != ':') return text;
    ++i;
    skip_ws();
    (void)start;
    return text.substr(i);
}

}  // namespace

Tag Tag::from_phrase(std::string_view phrase) {
    std::string value;
    value.reserve(phrase.size());
    for (char c : phrase) {
        if (is_space(c)) continue;
        value.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    std::size_t first = 0;
    while (first < value.size() && value[first] == '#') ++first;
    value.erase(0, first);
    if (value.empty()) throw InputError("invalid phrase: empty after removing whitespace and '#'");
    return Tag(std::move(value));
}

Tag to_hashtag(std::string_view phrase) {
    return Tag::from_phrase(phrase);
}

std::string normalize(std::string_view raw_text) {
    std::string lowered = ascii_lower(raw_text);
    std::string out;
    out.reserve(lowered.size());
    std::size_t i = 0;
    while (i < lowered.size()) {
        while (i < lowered.size() && is_space(lowered[i])) ++i;
        if (i >= lowered.size()) break;
        std::size_t begin = i;
        while (i < lowered.size() && !is_space(lowered[i])) ++i;
        std::string_view token(lowered.data() + begin, i - begin);
        while (!token.empty() && token.front() == '#') token.remove_prefix(1);
        if (token.empty()) continue;
        if (starts_with(token, "http://") || starts_with(token, "https://") ||
            starts_with(token, "www."))
            continue;
        if (token.front() == '@') continue;
        if (!out.empty()) out.push_back(' ');
        out.append(token);
    }
    return out;
}

TokenizedDoc tokenize(std::string_view normalized_text, const TokenizerOptions& opts,
                      std::string doc_id) {
    static const std::unordered_set<std::string> default_set(default_stopwords().begin(),
                                                             default_stopwords().end());
    const std::unordered_set<std::string>* stop = &default_set;
    std::unordered_set<std::string> custom;
    if (!opts.stopwords.empty()) {
        custom.insert(opts.stopwords.begin(), opts.stopwords.end());
        stop = &custom;
    } else if (!opts.use_default_stopwords) {
        static const std::unordered_set<std::string> empty_set;
        stop = &empty_set;
    }

    TokenizedDoc doc;
    doc.doc_id = std::move(doc_id);
    std::size_t i = 0;
    const std::size_t n = normalized_text.size();
    while (i < n) {
        while (i < n && !is_word_char(static_cast<unsigned char>(normalized_text[i]))) ++i;
        if (i >= n) break;
        std::size_t begin = i;
        while (i < n && is_word_char(static_cast<unsigned char>(normalized_text[i]))) ++i;
        std::string token(normalized_text.substr(begin, i - begin));
        ++doc.raw_token_count;
        if (token.size() < opts.min_token_length) continue;
        if (stop->count(token) > 0) continue;
        doc.tokens.push_back(porter_stem(token));
    }
    return doc;
}

Corpus ingest_jsonl(const std::string& path, const IngestOptions&) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.source = path;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::all_of(line.begin(), line.end(), is_space)) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
        }
        if (!obj.is_object()) throw ParseError("expected a JSON object", line_no);
        if (!obj.contains("id") || !obj["id"].is_string())
            throw ParseError("missing or non-string 'id'", line_no);
        if (!obj.contains("text") || !obj["text"].is_string())
            throw ParseError("missing or non-string 'text'", line_no);

        Document doc;
        doc.id = obj["id"].get<std::string>();
        if (doc.id.empty()) throw ParseError("empty 'id'", line_no);
        doc.raw_text = obj["text"].get<std::string>();
        if (obj.contains("created_at")) {
            if (!obj["created_at"].is_string())
                throw ParseError("'created_at' must be an RFC3339 string", line_no);
            try {
                doc.created_at = parse_rfc3339(obj["created_at"].get<std::string>());
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        }
        if (obj.contains("tags")) {
            if (!obj["tags"].is_array()) throw ParseError("'tags' must be an array", line_no);
            for (const auto& t : obj["tags"]) {
                if (!t.is_string()) throw ParseError("tags must be strings", line_no);
                try {
                    doc.tags.insert(Tag::from_phrase(t.get<std::string>()));
                } catch (const Error& e) {
                    throw ParseError(e.what(), line_no);
                }
            }
        }
        if (obj.contains("author")) {
            if (!obj["author"].is_string()) throw ParseError("'author' must be a string", line_no);
            doc.author = obj["author"].get<std::string>();
        }

        if (!seen_ids.insert(doc.id).second)
            throw InputError("duplicate document id '" + doc.id + "' at line " +
                             std::to_string(line_no));
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

Corpus dedup(const Corpus& corpus) {
    Corpus out;
    out.source = corpus.source;
    std::unordered_set<std::string> seen;
    for (const auto& doc : corpus.documents) {
        std::string key = normalize(strip_retweet_prefix(doc.raw_text));
        if (seen.insert(std::move(key)).second) out.documents.push_back(doc);
    }
    return out;
}

Corpus apply_filter(const Corpus& corpus, const std::function<bool(const Document&)>& keep) {
    Corpus out;
    out.source = corpus.source;
    std::copy_if(corpus.documents.begin(), corpus.documents.end(),
                 std::back_inserter(out.documents), keep);
    return out;
}

std::vector<TokenizedDoc> tokenize_corpus(const Corpus& corpus, const TokenizerOptions& opts) {
    std::vector<TokenizedDoc> out;
    out.reserve(corpus.size());
    for (const auto& doc : corpus.documents)
        out.push_back(tokenize(normalize(doc.raw_text), opts, doc.id));
    return out;
}

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// civil-days algorithm).
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const int yoe = static_cast<int>(y - era * 400);
    const int doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const int doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const int doe = static_cast<int>(z - era * 146097);
    const int yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const int doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const int mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

int days_in_month(std::int64_t y, int m) {
    static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return table[m - 1];
}

}  // namespace

std::int64_t parse_rfc3339(std::string_view text) {
    auto fail = [&] { throw InputError("invalid RFC3339 timestamp: '" + std::string(text) + "'"); };
    auto digits = [&](std::size_t pos, int count) -> int {
        int v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos + i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + i])))
                fail();
            v = v * 10 + (text[pos + i] - '0');
        }
        return v;
    };

    if (text.size() < 20) fail();
    int year = digits(0, 4);
    if (text[4] != '-') fail();
    int month = digits(5, 2);
    if (text[7] != '-') fail();
    int day = digits(8, 2);
    char sep = text[10];
    if (sep != 'T' && sep != 't' && sep != ' ') fail();
    int hour = digits(11, 2);
    if (text[13] != ':') fail();
    int minute = digits(14, 2);
    if (text[16] != ':') fail();
    int second = digits(17, 2);

    if (month < 1 || month > 12) fail();
    if (day < 1 || day > days_in_month(year, month)) fail();
    if (hour > 23 || minute > 59 || second > 60) fail();

    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t frac_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++frac_digits;
        }
        if (frac_digits == 0) fail();
    }
    if (pos >= text.size()) fail();

    std::int64_t offset = 0;
    char tz = text[pos];
    if (tz == 'Z' || tz == 'z') {
        if (pos + 1 != text.size()) fail();
    } else if (tz == '+' || tz == '-') {
        if (pos + 6 != text.size()) fail();
        int oh = digits(pos + 1, 2);
        if (text[pos + 3] != ':') fail();
        int om = digits(pos + 4, 2);
        if (oh > 23 || om > 59) fail();
        offset = (tz == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
    } else {
        fail();
    }

    std::int64_t days = days_from_civil(year, month, day);
    return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

std::string format_rfc3339(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    std::int64_t y;
    int m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02d-%02dT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), m, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60), static_cast<long long>(rem % 60));
    return buf;
}

}  // namespace corpuscope
