#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "island/island.h"

namespace cli {

enum class Kind { probability, odds, ratio, number, count, text };

struct Row {
    std::string quantity;
    double value = 0.0;
    Kind kind = Kind::number;
    std::string convention;  // set for likelihood ratios
    std::string note;
};

class Report {
public:
    void title(std::string t) { title_ = std::move(t); }
    void add(std::string quantity, double value, Kind kind, std::string note = {});
    void text(std::string quantity, std::string note);
    void lr(std::string quantity, double value, island_lr_convention convention);
    /// A convention that could not be evaluated for this model.
    void lr_unavailable(std::string quantity, const std::string& convention, std::string reason);
    void odds_result(const std::string& prefix, const island_odds_result& r);

    void write(std::ostream& os, const std::string& format) const;

private:
    std::string title_;
    std::vector<Row> rows_;
};

std::string format_value(double v, Kind kind);
std::string csv_escape(const std::string& s);
std::string exact(double v);  // round-trip decimal, locale independent

}  // namespace cli
