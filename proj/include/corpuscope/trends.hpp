#ifndef CORPUSCOPE_TRENDS_HPP
#define CORPUSCOPE_TRENDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corpuscope {

struct YearCount {
    int year = 0;
    std::int64_t match_count = 0;
    std::int64_t volume_count = 0;
};

/// Per-term yearly counts, years strictly increasing.
struct YearCounts {
    std::vector<YearCount> rows;

    bool empty() const noexcept { return rows.empty(); }
};

using NgramTable = std::map<std::string, YearCounts>;

/// TSV lines "ngram<TAB>year<TAB>match_count<TAB>volume_count", grouped by
/// ngram and year-sorted; duplicate (term, year) rows are summed.
NgramTable parse_ngram_tsv(const std::string& path);

/// Totals records "year,match_count,page_count,volume_count" separated by
/// whitespace; duplicate years are an error.
std::map<int, std::int64_t> parse_totals(const std::string& path);

struct TrendPoint {
    int year = 0;
    double frequency = 0.0;
};

struct TrendSeries {
    std::string term_label;
    std::vector<TrendPoint> points;  // years strictly increasing
    int smoothing = 0;               // total smoothing radius applied
};

struct YearRange {
    int start = 0;
    int end = 0;  // inclusive
};

/// frequency(y) = match_count(y) / total(y) over every year of the range;
/// years without term data are 0. Totals must cover the range and be
/// positive.
TrendSeries relative_series(const YearCounts& counts, const std::map<int, std::int64_t>& totals,
                            YearRange range, std::string term_label);

/// Pointwise sum; labels joined with "+". Inputs must share year range and
/// smoothing.
TrendSeries combine(const std::vector<TrendSeries>& series);

/// Centered moving average with window 2s+1, truncated at the boundaries.
TrendSeries smooth(const TrendSeries& series, int s);

/// First year with nonzero frequency; nullopt when all zero. Requires an
/// unsmoothed series.
std::optional<int> onset_year(const TrendSeries& series);

/// Sums the YearCounts of every case variant of `term` present in the
/// table (ASCII case folding); with case_insensitive == false, exact match
/// only. Missing terms give an empty YearCounts.
YearCounts counts_for_term(const NgramTable& table, std::string_view term,
                           bool case_insensitive = true);

/// Merges tables from several shard files, summing duplicate (term, year)
/// rows.
NgramTable merge_tables(const std::vector<NgramTable>& tables);

}  // namespace corpuscope

#endif
