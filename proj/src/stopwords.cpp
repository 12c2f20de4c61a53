#include "corpuscope/stopwords.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "corpuscope/errors.hpp"

namespace corpuscope {

const std::vector<std::string>& default_stopwords() {
    // corpuscope-en-v1. Keep sorted; the tests pin the exact contents.
    static const std::vector<std::string> words = {
        "a",       "about",  "after",   "again",   "against", "all",   "also",  "am",
        "an",      "and",    "any",     "are",     "as",      "at",    "be",    "because",
        "been",    "being",  "but",     "by",      "can",     "could", "did",   "do",
        "does",    "for",    "from",    "had",     "has",     "have",  "he",    "her",
        "here",    "him",    "his",     "how",     "i",       "if",    "in",    "into",
        "is",      "it",     "its",     "just",    "me",      "more",  "most",  "my",
        "no",      "nor",    "not",     "of",      "on",      "only",  "or",    "other",
        "our",     "out",    "over",    "own",     "rt",      "she",   "so",    "some",
        "such",    "than",   "that",    "the",     "their",   "them",  "then",  "there",
        "these",   "they",   "this",    "those",   "through", "to",    "too",   "under",
        "until",   "up",     "us",      "very",    "was",     "we",    "were",  "what",
        "when",    "where",  "which",   "while",   "who",     "whom",  "why",   "will",
        "with",    "would",  "you",     "your"};
    return words;
}

std::vector<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword file: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.push_back(line);
    }
    return words;
}

}  // namespace corpuscope
