#include "snsgraph/collector.hpp"

#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "snsgraph/error.hpp"

namespace snsgraph {

using nlohmann::json;
namespace fs = std::filesystem;

void CollectorConfig::validate() const {
    if (sources.empty()) throw ConfigError("collector needs at least one source");
    std::set<std::string> ids;
    for (const auto& s : sources) {
        s.validate();
        if (!ids.insert(s.id).second) throw ConfigError("duplicate source id '" + s.id + "'");
    }
    if (sink_path.empty()) throw ConfigError("collector needs a sink path");
    if (alerts_path.empty()) throw ConfigError("collector needs an alerts path");
    deviation.validate();
    if (lexicon_positive.has_value() != lexicon_negative.has_value())
        throw ConfigError("lexicon needs both a positive and a negative list");
    if (deviation.metric == DeviationMetric::MeanSentiment && !lexicon_positive)
        throw ConfigError("the mean_sentiment metric needs a lexicon");
}

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (path.starts_with("http://") || path.starts_with("https://")) return path;
    fs::path p(path);
    return p.is_absolute() ? p.string() : (fs::path(base_dir) / p).lexically_normal().string();
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? fallback : it->get<T>();
}

} // namespace

CollectorConfig parse_collector_config(std::string_view json_text, const std::string& base_dir) {
    CollectorConfig cfg;
    try {
        const auto root = json::parse(json_text.begin(), json_text.end());
        if (!root.is_object()) throw ConfigError("collector config must be a JSON object");
        for (const auto& src : root.at("sources")) {
            SourceSpec spec;
            spec.id = src.at("id").get<std::string>();
            spec.kind = parse_source_kind(src.at("kind").get<std::string>());
            spec.location = resolve(base_dir, src.at("location").get<std::string>());
            const double seconds = get_or(src, "poll_interval_seconds", 60.0);
            spec.poll_interval = std::chrono::milliseconds{static_cast<std::int64_t>(seconds * 1000.0)};
            cfg.sources.push_back(std::move(spec));
        }
        cfg.sink_path = resolve(base_dir, root.at("sink").get<std::string>());
        cfg.format = parse_record_format(get_or<std::string>(root, "format", "json"));
        cfg.alerts_path = resolve(base_dir, get_or<std::string>(root, "alerts", "alerts.jsonl"));
        if (auto it = root.find("deviation"); it != root.end()) {
            const auto& d = *it;
            cfg.deviation.metric = parse_deviation_metric(get_or<std::string>(d, "metric", "volume"));
            cfg.deviation.window = get_or<std::size_t>(d, "window", cfg.deviation.window);
            cfg.deviation.z_threshold = get_or(d, "z_threshold", cfg.deviation.z_threshold);
            cfg.deviation.sigma_floor = get_or(d, "sigma_floor", cfg.deviation.sigma_floor);
            const double bucket_seconds = get_or(d, "bucket_seconds", 60.0);
            cfg.deviation.bucket_width = std::chrono::milliseconds{static_cast<std::int64_t>(bucket_seconds * 1000.0)};
        }
        if (auto it = root.find("lexicon"); it != root.end()) {
            cfg.lexicon_positive = resolve(base_dir, it->at("positive").get<std::string>());
            cfg.lexicon_negative = resolve(base_dir, it->at("negative").get<std::string>());
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid collector config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

CollectorConfig load_collector_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open collector config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    auto base = fs::path(path).parent_path().string();
    return parse_collector_config(text.str(), base.empty() ? "." : base);
}

Collector::Collector(CollectorConfig config, Fetcher fetch, std::function<Timestamp()> clock)
    : config_(std::move(config)), fetch_(std::move(fetch)), clock_(std::move(clock)) {
    config_.validate();
}

namespace {

/// The single writer: sink, bucketing and alert output.
class Writer {
public:
    Writer(const CollectorConfig& cfg, CollectorSummary& summary)
        : sink_file_(open(cfg.sink_path)),
          alerts_file_(open(cfg.alerts_path)),
          sink_(sink_file_, cfg.format),
          summary_(summary) {
        if (cfg.lexicon_positive) lexicon_ = load_lexicon_files(*cfg.lexicon_positive, *cfg.lexicon_negative).lexicon;
        buckets_.emplace(cfg.deviation, lexicon_ ? &*lexicon_ : nullptr);
        monitor_.emplace(cfg.deviation);
    }

    void consume(PollResult&& batch) {
        ++summary_.polls;
        summary_.duplicates_dropped += batch.duplicates_dropped;
        if (batch.source_error) ++summary_.source_errors;
        for (auto& d : batch.diagnostics) summary_.diagnostics.push_back(std::move(d));
        for (const auto& r : batch.records) {
            sink_.write(r);
            buckets_->add(r.payload);
            ++summary_.records_written;
        }
        sink_file_.flush();
        evaluate(false);
    }

    void finish() {
        evaluate(true);
        sink_.close();
        alerts_file_.flush();
        if (!alerts_file_) throw IoError("alert stream is not writable");
    }

private:
    static std::ofstream open(const std::string& path) {
        if (auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        return out;
    }

    void evaluate(bool flush_all) {
        for (const auto& point : buckets_->drain(flush_all)) {
            if (auto alert = monitor_->push(point)) {
                alerts_file_ << alert_to_json(*alert) << '\n';
                ++summary_.alerts;
            }
        }
        alerts_file_.flush();
    }

    std::ofstream sink_file_;
    std::ofstream alerts_file_;
    RecordSink sink_;
    std::optional<Lexicon> lexicon_;
    std::optional<BucketAccumulator> buckets_;
    std::optional<DeviationMonitor> monitor_;
    CollectorSummary& summary_;
};

} // namespace

CollectorSummary Collector::run_once() {
    CollectorSummary summary;
    Writer writer(config_, summary);

    std::vector<std::future<PollResult>> polls;
    for (const auto& spec : config_.sources) {
        polls.push_back(std::async(std::launch::async, [this, spec] {
            SourcePoller poller(spec, fetch_, clock_);
            return poller.poll();
        }));
    }
    // Consumed in configuration order so output is deterministic.
    for (auto& p : polls) writer.consume(p.get());
    writer.finish();
    return summary;
}

CollectorSummary Collector::run(const std::atomic<bool>& stop) {
    CollectorSummary summary;
    Writer writer(config_, summary);

    std::mutex mutex;
    std::condition_variable ready;
    std::deque<PollResult> queue;
    std::size_t active = config_.sources.size();
    std::atomic<bool> failed{false};
    auto halted = [&] { return stop.load() || failed.load(); };

    std::vector<std::thread> producers;
    for (const auto& spec : config_.sources) {
        producers.emplace_back([&, spec] {
            SourcePoller poller(spec, fetch_, clock_);
            constexpr auto kTick = std::chrono::milliseconds{50};
            while (!halted()) {
                auto batch = poller.poll();
                {
                    std::lock_guard lock(mutex);
                    queue.push_back(std::move(batch));
                }
                ready.notify_one();
                if (spec.kind == SourceKind::File) break;
                const auto deadline = std::chrono::steady_clock::now() + spec.poll_interval;
                while (!halted() && std::chrono::steady_clock::now() < deadline) std::this_thread::sleep_for(kTick);
            }
            {
                std::lock_guard lock(mutex);
                --active;
            }
            ready.notify_one();
        });
    }

    std::exception_ptr error;
    while (true) {
        std::unique_lock lock(mutex);
        ready.wait_for(lock, std::chrono::milliseconds{100},
                       [&] { return !queue.empty() || active == 0 || halted(); });
        if (queue.empty()) {
            if (active == 0) break;
            continue;
        }
        auto batch = std::move(queue.front());
        queue.pop_front();
        lock.unlock();
        try {
            writer.consume(std::move(batch));
        } catch (...) {
            error = std::current_exception();
            failed = true;
            break;
        }
    }

    for (auto& t : producers) t.join();
    if (error) std::rethrow_exception(error);
    writer.finish();
    return summary;
}

} // namespace snsgraph
