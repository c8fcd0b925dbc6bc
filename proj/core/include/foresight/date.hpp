#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace foresight {

// Calendar date, day precision. Forecast horizons are measured in days, so
// nothing here carries a time-of-day component.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    static std::optional<Date> parse(std::string_view iso);  // "YYYY-MM-DD"
    static Date from_days(std::int64_t days_since_epoch);

    std::string to_string() const;
    std::int64_t to_days() const;  // days since 1970-01-01 (civil calendar)
    Date plus_days(std::int64_t n) const { return from_days(to_days() + n); }
    bool valid() const;

    friend auto operator<=>(const Date&, const Date&) = default;
};

}  // namespace foresight
