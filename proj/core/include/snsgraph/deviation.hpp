#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snsgraph/ingest.hpp"
#include "snsgraph/textmine.hpp"
#include "snsgraph/time.hpp"

namespace snsgraph {

enum class DeviationMetric : std::uint8_t { Volume, MeanSentiment };

std::string_view to_string(DeviationMetric metric);
DeviationMetric parse_deviation_metric(std::string_view text);

struct DeviationConfig {
    DeviationMetric metric = DeviationMetric::Volume;
    std::size_t window = 20;
    double z_threshold = 3.0;
    /// Lower bound on the rolling standard deviation.
    double sigma_floor = 1e-6;
    std::chrono::milliseconds bucket_width{std::chrono::minutes{1}};

    void validate() const;
};

struct SeriesPoint {
    Timestamp bucket{};
    double value = 0.0;
};

struct AlertEvent {
    DeviationMetric metric = DeviationMetric::Volume;
    Timestamp bucket{};
    double observed = 0.0;
    double rolling_mean = 0.0;
    double rolling_std = 0.0; ///< before flooring
    double z_score = 0.0;

    friend bool operator==(const AlertEvent&, const AlertEvent&) = default;
};

std::string alert_to_json(const AlertEvent& alert);
AlertEvent alert_from_json(std::string_view line);

/**
 * Rolling z-score over the `window` values preceding each point (population
 * standard deviation, floored at sigma_floor). Emits an alert whenever
 * |value - mean| / sigma >= z_threshold; the first `window` points only
 * seed the baseline. Throws DataError when the series is not time-ordered.
 */
std::vector<AlertEvent> detect_deviation(std::span<const SeriesPoint> series, const DeviationConfig& config);

/// Streaming form of detect_deviation: feed points in time order.
class DeviationMonitor {
public:
    explicit DeviationMonitor(DeviationConfig config);

    std::optional<AlertEvent> push(const SeriesPoint& point);
    const DeviationConfig& config() const noexcept { return config_; }

private:
    DeviationConfig config_;
    std::deque<double> history_;
    std::optional<Timestamp> last_;
};

/**
 * Aggregates records into fixed-width time buckets keyed by record timestamp.
 * Volume buckets count records and include empty buckets as zeros, at most
 * `window` of them per gap since further zeros cannot raise an alert; mean
 * sentiment buckets average per-record sentiment scores and skip empty
 * buckets.
 */
class BucketAccumulator {
public:
    /// `lexicon` is required for the mean_sentiment metric and must outlive
    /// the accumulator. Throws ConfigError.
    BucketAccumulator(DeviationConfig config, const Lexicon* lexicon);

    void add(const InteractionRecord& record);
    /// Emits finished buckets in time order. With `flush_all` unset, the
    /// latest bucket stays open for further records.
    std::vector<SeriesPoint> drain(bool flush_all);
    /// Records that landed in a bucket that had already been drained.
    std::size_t late_records() const noexcept { return late_; }

private:
    struct Bucket {
        std::size_t count = 0;
        double sentiment_sum = 0.0;
    };

    Timestamp bucket_of(Timestamp t) const;

    DeviationConfig config_;
    const Lexicon* lexicon_;
    std::map<Timestamp, Bucket> open_;
    std::optional<Timestamp> last_drained_;
    std::size_t late_ = 0;
};

/// Batch bucketing of a whole corpus (every bucket closed).
std::vector<SeriesPoint> bucketize(const std::vector<InteractionRecord>& records, const DeviationConfig& config,
                                   const Lexicon* lexicon);

} // namespace snsgraph
