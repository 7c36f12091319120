#include "report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace cli {

std::string exact(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_value(double v, Kind kind) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    switch (kind) {
        case Kind::probability: std::snprintf(buf, sizeof buf, "%.4g", v); break;
        case Kind::count: std::snprintf(buf, sizeof buf, "%.0f", v); break;
        case Kind::text: return "";
        default: std::snprintf(buf, sizeof buf, "%.6g", v); break;
    }
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void Report::add(std::string quantity, double value, Kind kind, std::string note) {
    rows_.push_back(Row{std::move(quantity), value, kind, {}, std::move(note)});
}

void Report::text(std::string quantity, std::string note) {
    rows_.push_back(Row{std::move(quantity), std::nan(""), Kind::text, {}, std::move(note)});
}

void Report::lr(std::string quantity, double value, island_lr_convention convention) {
    rows_.push_back(Row{std::move(quantity), value, Kind::ratio, island_convention_name(convention),
                        island_convention_note(convention)});
}

void Report::lr_unavailable(std::string quantity, const std::string& convention, std::string reason) {
    rows_.push_back(Row{std::move(quantity), std::nan(""), Kind::ratio, convention, "unavailable: " + reason});
}

void Report::odds_result(const std::string& prefix, const island_odds_result& r) {
    add(prefix + "probability", r.probability, Kind::probability);
    add(prefix + "posterior_odds", r.odds, Kind::odds);
    add(prefix + "prior_odds", r.prior_odds, Kind::odds);
    lr(prefix + "likelihood_ratio", r.lr, r.convention);
    if (r.correction != 1.0) add(prefix + "correction", r.correction, Kind::number);
    if (r.degenerate) text(prefix + "degenerate", "posterior odds are 0 or infinite");
}

void Report::write(std::ostream& os, const std::string& format) const {
    if (format == "csv") {
        os << "quantity,value,convention,note\n";
        for (const auto& r : rows_)
            os << csv_escape(r.quantity) << ',' << (r.kind == Kind::text ? "" : exact(r.value)) << ','
               << csv_escape(r.convention) << ',' << csv_escape(r.note) << '\n';
        return;
    }
    if (!title_.empty()) os << title_ << '\n';
    std::size_t w = 8;
    for (const auto& r : rows_) w = std::max(w, r.quantity.size());
    for (const auto& r : rows_) {
        os << "  " << std::left << std::setw(static_cast<int>(w)) << r.quantity << "  ";
        if (r.kind == Kind::text) {
            os << r.note << '\n';
            continue;
        }
        os << std::setw(12) << format_value(r.value, r.kind);
        if (!r.convention.empty()) os << "  [" << r.convention << "]";
        if (!r.note.empty()) os << "  " << r.note;
        os << '\n';
    }
}

}  // namespace cli
