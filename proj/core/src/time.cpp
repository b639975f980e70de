#include "snsgraph/time.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "snsgraph/error.hpp"

namespace snsgraph {

using namespace std::chrono;

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    int digits(std::size_t count) {
        if (pos_ + count > s_.size()) fail("truncated");
        int value = 0;
        for (std::size_t i = 0; i < count; ++i) {
            char c = s_[pos_ + i];
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected digit");
            value = value * 10 + (c - '0');
        }
        pos_ += count;
        return value;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("invalid timestamp '" + std::string(s_) + "': " + why);
    }

    std::size_t pos_ = 0;

private:
    std::string_view s_;
};

sys_days make_date(int y, int mo, int d, const Cursor& cur) {
    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) cur.fail("calendar date out of range");
    return sys_days{ymd};
}

} // namespace

Timestamp parse_rfc3339(std::string_view text) {
    Cursor cur(text);
    int y = cur.digits(4);
    cur.expect('-');
    int mo = cur.digits(2);
    cur.expect('-');
    int d = cur.digits(2);
    if (!cur.accept('T') && !cur.accept('t') && !cur.accept(' ')) cur.fail("expected 'T'");
    int h = cur.digits(2);
    cur.expect(':');
    int mi = cur.digits(2);
    cur.expect(':');
    int s = cur.digits(2);
    if (h > 23 || mi > 59 || s > 60) cur.fail("time of day out of range");

    milliseconds frac{0};
    if (cur.accept('.')) {
        int scale = 100;
        bool any = false;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            int digit = cur.digits(1);
            frac += milliseconds{digit * scale};
            scale /= 10;
            any = true;
        }
        if (!any) cur.fail("empty fraction");
    }

    minutes offset{0};
    if (cur.accept('Z') || cur.accept('z')) {
    } else if (cur.peek() == '+' || cur.peek() == '-') {
        int sign = cur.peek() == '-' ? -1 : 1;
        cur.pos_++;
        int oh = cur.digits(2);
        cur.expect(':');
        int om = cur.digits(2);
        offset = minutes{sign * (oh * 60 + om)};
    } else {
        cur.fail("missing zone designator");
    }
    if (!cur.done()) cur.fail("trailing characters");

    auto local = make_date(y, mo, d, cur) + hours{h} + minutes{mi} + seconds{s};
    return time_point_cast<milliseconds>(local) + frac - offset;
}

std::string format_rfc3339(Timestamp t) {
    auto day_point = floor<days>(t);
    year_month_day ymd{day_point};
    hh_mm_ss<milliseconds> tod{t - day_point};
    auto base = fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}", static_cast<int>(ymd.year()),
                            static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                            tod.hours().count(), tod.minutes().count(), tod.seconds().count());
    if (auto ms = tod.subseconds().count(); ms != 0) base += fmt::format(".{:03d}", ms);
    return base + "Z";
}

std::optional<Timestamp> parse_rfc822(std::string_view text) {
    static constexpr std::array<std::string_view, 12> kMonths = {
        "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};

    auto skip_space = [&] {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    };
    auto take_word = [&] {
        skip_space();
        std::size_t i = 0;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        auto word = text.substr(0, i);
        text.remove_prefix(i);
        return word;
    };
    auto to_int = [](std::string_view s, int& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size();
    };

    auto first = take_word();
    if (!first.empty() && first.back() == ',') first = take_word();
    int d = 0, y = 0, h = 0, mi = 0, s = 0;
    if (!to_int(first, d)) return std::nullopt;

    auto mon = take_word();
    if (mon.size() < 3) return std::nullopt;
    int mo = 0;
    for (std::size_t i = 0; i < kMonths.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < 3; ++k)
            if (std::tolower(static_cast<unsigned char>(mon[k])) != kMonths[i][k]) match = false;
        if (match) mo = static_cast<int>(i) + 1;
    }
    if (mo == 0) return std::nullopt;
    if (!to_int(take_word(), y)) return std::nullopt;
    if (y < 100) y += y < 50 ? 2000 : 1900;

    auto clock = take_word();
    if (clock.size() < 5) return std::nullopt;
    if (!to_int(clock.substr(0, 2), h) || clock[2] != ':' || !to_int(clock.substr(3, 2), mi)) return std::nullopt;
    if (clock.size() >= 8 && (clock[5] != ':' || !to_int(clock.substr(6, 2), s))) return std::nullopt;

    minutes offset{0};
    auto zone = take_word();
    if (zone.size() == 5 && (zone[0] == '+' || zone[0] == '-')) {
        int oh = 0, om = 0;
        if (!to_int(zone.substr(1, 2), oh) || !to_int(zone.substr(3, 2), om)) return std::nullopt;
        offset = minutes{(zone[0] == '-' ? -1 : 1) * (oh * 60 + om)};
    } else if (zone == "EST") {
        offset = hours{-5};
    } else if (zone == "EDT") {
        offset = hours{-4};
    } else if (zone == "CST") {
        offset = hours{-6};
    } else if (zone == "CDT") {
        offset = hours{-5};
    } else if (zone == "MST") {
        offset = hours{-7};
    } else if (zone == "MDT") {
        offset = hours{-6};
    } else if (zone == "PST") {
        offset = hours{-8};
    } else if (zone == "PDT") {
        offset = hours{-7};
    }

    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || s > 60) return std::nullopt;
    auto local = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s};
    return time_point_cast<milliseconds>(local) - offset;
}

Timestamp now_utc() { return time_point_cast<milliseconds>(system_clock::now()); }

} // namespace snsgraph
