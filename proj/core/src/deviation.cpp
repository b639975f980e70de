#include "snsgraph/deviation.hpp"

#include <cmath>

#include <json.hpp>

#include "snsgraph/error.hpp"

namespace snsgraph {

using nlohmann::json;

std::string_view to_string(DeviationMetric metric) {
    return metric == DeviationMetric::Volume ? "volume" : "mean_sentiment";
}

DeviationMetric parse_deviation_metric(std::string_view text) {
    if (text == "volume") return DeviationMetric::Volume;
    if (text == "mean_sentiment") return DeviationMetric::MeanSentiment;
    throw ConfigError("deviation metric must be volume or mean_sentiment, got '" + std::string(text) + "'");
}

void DeviationConfig::validate() const {
    if (window < 2) throw ConfigError("deviation window must be at least 2");
    if (!(z_threshold > 0.0)) throw ConfigError("z threshold must be positive");
    if (!(sigma_floor > 0.0)) throw ConfigError("sigma floor must be positive");
    if (bucket_width.count() <= 0) throw ConfigError("bucket width must be positive");
}

std::string alert_to_json(const AlertEvent& a) {
    json obj = {{"metric", std::string(to_string(a.metric))},
                {"bucket", format_rfc3339(a.bucket)},
                {"observed", a.observed},
                {"rolling_mean", a.rolling_mean},
                {"rolling_std", a.rolling_std},
                {"z_score", a.z_score}};
    return obj.dump();
}

AlertEvent alert_from_json(std::string_view line) {
    try {
        auto obj = json::parse(line.begin(), line.end());
        AlertEvent a;
        a.metric = parse_deviation_metric(obj.at("metric").get<std::string>());
        a.bucket = parse_rfc3339(obj.at("bucket").get<std::string>());
        a.observed = obj.at("observed").get<double>();
        a.rolling_mean = obj.at("rolling_mean").get<double>();
        a.rolling_std = obj.at("rolling_std").get<double>();
        a.z_score = obj.at("z_score").get<double>();
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid alert: ") + e.what());
    } catch (const ConfigError& e) {
        throw ParseError(std::string("invalid alert: ") + e.what());
    }
}

DeviationMonitor::DeviationMonitor(DeviationConfig config) : config_(config) { config_.validate(); }

std::optional<AlertEvent> DeviationMonitor::push(const SeriesPoint& point) {
    if (last_ && point.bucket < *last_) throw DataError("deviation series is not time-ordered");
    last_ = point.bucket;

    std::optional<AlertEvent> alert;
    if (history_.size() == config_.window) {
        const double n = static_cast<double>(history_.size());
        double mean = 0.0;
        for (double v : history_) mean += v;
        mean /= n;
        double var = 0.0;
        for (double v : history_) var += (v - mean) * (v - mean);
        const double sigma = std::sqrt(var / n);
        const double z = (point.value - mean) / std::max(sigma, config_.sigma_floor);
        if (std::abs(z) >= config_.z_threshold)
            alert = AlertEvent{config_.metric, point.bucket, point.value, mean, sigma, z};
        history_.pop_front();
    }
    history_.push_back(point.value);
    return alert;
}

std::vector<AlertEvent> detect_deviation(std::span<const SeriesPoint> series, const DeviationConfig& config) {
    DeviationMonitor monitor(config);
    std::vector<AlertEvent> alerts;
    for (const auto& point : series)
        if (auto a = monitor.push(point)) alerts.push_back(*a);
    return alerts;
}

BucketAccumulator::BucketAccumulator(DeviationConfig config, const Lexicon* lexicon)
    : config_(config), lexicon_(lexicon) {
    config_.validate();
    if (config_.metric == DeviationMetric::MeanSentiment && lexicon_ == nullptr)
        throw ConfigError("the mean_sentiment metric needs an opinion lexicon");
}

Timestamp BucketAccumulator::bucket_of(Timestamp t) const {
    const auto width = config_.bucket_width;
    auto since = t.time_since_epoch();
    auto index = since / width;
    if (since % width < std::chrono::milliseconds{0}) --index;
    return Timestamp{index * width};
}

void BucketAccumulator::add(const InteractionRecord& record) {
    const auto b = bucket_of(record.timestamp);
    if (last_drained_ && b <= *last_drained_) {
        ++late_;
        return;
    }
    auto& bucket = open_[b];
    ++bucket.count;
    if (config_.metric == DeviationMetric::MeanSentiment) bucket.sentiment_sum += sentiment(record.text, *lexicon_).score;
}

std::vector<SeriesPoint> BucketAccumulator::drain(bool flush_all) {
    std::vector<SeriesPoint> out;
    while (!open_.empty() && (flush_all || open_.size() > 1)) {
        auto it = open_.begin();
        if (config_.metric == DeviationMetric::Volume) {
            // Past `window` zeros the baseline is all zeros and every further
            // empty bucket scores z = 0, so longer gaps are cut short.
            if (last_drained_) {
                auto gap = *last_drained_ + config_.bucket_width;
                for (std::size_t k = 0; k < config_.window && gap < it->first; ++k, gap += config_.bucket_width)
                    out.push_back({gap, 0.0});
            }
            out.push_back({it->first, static_cast<double>(it->second.count)});
        } else {
            out.push_back({it->first, it->second.sentiment_sum / static_cast<double>(it->second.count)});
        }
        last_drained_ = it->first;
        open_.erase(it);
    }
    return out;
}

std::vector<SeriesPoint> bucketize(const std::vector<InteractionRecord>& records, const DeviationConfig& config,
                                   const Lexicon* lexicon) {
    BucketAccumulator acc(config, lexicon);
    for (const auto& r : records) acc.add(r);
    return acc.drain(true);
}

} // namespace snsgraph
