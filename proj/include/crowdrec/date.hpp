#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace crowdrec {

// Calendar date at day resolution, stored as days since 1970-01-01.
struct Date {
    std::int32_t serial = 0;
    auto operator<=>(const Date&) const = default;
};

struct CivilDate {
    int year = 1970;
    unsigned month = 1;
    unsigned day = 1;
};

inline Date make_date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    const sys_days sd{year_month_day{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}}};
    return Date{static_cast<std::int32_t>(sd.time_since_epoch().count())};
}

inline CivilDate civil_of(Date d) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{d.serial}}};
    return CivilDate{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

// ISO-8601 YYYY-MM-DD.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(Date d);

inline Date operator+(Date d, int days) { return Date{d.serial + days}; }
inline int operator-(Date a, Date b) { return a.serial - b.serial; }

// Identifies the calendar month a date falls in.
inline int month_key(Date d) {
    const CivilDate c = civil_of(d);
    return c.year * 12 + static_cast<int>(c.month) - 1;
}

}  // namespace crowdrec
