#include "island/database.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <string>

#include "island/classical.hpp"

namespace island::database {

namespace {

constexpr double kNormalizationTolerance = 1e-10;

void check_frequency(double p) {
    if (std::isnan(p)) fail(ErrorCode::invalid_value, "trait frequency is NaN");
    if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::domain, "trait frequency must lie in (0,1)");
}

void check_probability(double v, const std::string& what) {
    if (std::isnan(v)) fail(ErrorCode::invalid_value, what + " is NaN");
    if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::domain, what + " must lie in [0,1]");
}

double ratio_or_inf(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : kInfinity;
    return num / den;
}

}  // namespace

double survival_power(double p, double n) { return std::exp(n * std::log1p(-p)); }

void DatabaseSpec::validate() const {
    check_frequency(p);
    if (n < 1) fail(ErrorCode::validation, "database size n must be >= 1");
    if (k > n) fail(ErrorCode::validation, "match count k exceeds database size n");
    check_probability(outside_total, "outside_total");
    if (member_alphas.empty() == !uniform_total.has_value())
        fail(ErrorCode::validation, "give either member_alphas or uniform_total, not both");
    if (!member_alphas.empty()) {
        if (member_alphas.size() != n)
            fail(ErrorCode::validation, "member_alphas has " + std::to_string(member_alphas.size()) +
                                            " entries, expected n = " + std::to_string(n));
        for (std::size_t i = 0; i < member_alphas.size(); ++i)
            check_probability(member_alphas[i], "member_alphas[" + std::to_string(i) + "]");
    } else {
        check_probability(*uniform_total, "uniform_total");
    }
    const double total = database_total() + outside_total;
    if (std::abs(total - 1.0) > kNormalizationTolerance)
        fail(ErrorCode::domain, "database and outside priors sum to " + std::to_string(total) + ", expected 1");
}

double DatabaseSpec::alpha(std::uint64_t i) const {
    if (i >= n) fail(ErrorCode::index, "member index " + std::to_string(i) + " out of range");
    return member_alphas.empty() ? *uniform_total / static_cast<double>(n) : member_alphas[i];
}

double DatabaseSpec::matched_total() const {
    if (member_alphas.empty()) return *uniform_total * static_cast<double>(k) / static_cast<double>(n);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < k; ++i) acc += member_alphas[i];
    return acc;
}

double DatabaseSpec::database_total() const {
    if (member_alphas.empty()) return *uniform_total;
    double acc = 0.0;
    for (double a : member_alphas) acc += a;
    return acc;
}

Canonicalized canonicalize(const std::vector<double>& alphas, const std::vector<bool>& matched,
                           double outside_total, double p) {
    if (alphas.size() != matched.size())
        fail(ErrorCode::validation, "match flags and member priors differ in length");
    Canonicalized out;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < alphas.size(); ++i)
            if (matched[i] == (pass == 0)) out.order.push_back(i);
    out.spec.n = alphas.size();
    out.spec.outside_total = outside_total;
    out.spec.p = p;
    for (std::size_t j : out.order) {
        out.spec.member_alphas.push_back(alphas[j]);
        if (matched[j]) ++out.spec.k;
    }
    out.spec.validate();
    return out;
}

OddsResult database_focused(const DatabaseSpec& spec) {
    spec.validate();
    const double matched = spec.matched_total();
    const double in_db = spec.database_total();
    const double lr = ratio_or_inf(matched, spec.p * in_db);
    const double odds = ratio_or_inf(matched, spec.p * spec.outside_total);
    auto r = make_result(odds, ratio_or_inf(in_db, spec.outside_total),
                         LikelihoodRatio(lr, LrConvention::conditional_on_I));
    if (spec.k == 0) r.degenerate = true;
    return r;
}

OddsResult individual_focused(const DatabaseSpec& spec, std::uint64_t target) {
    spec.validate();
    if (target >= spec.k)
        fail(ErrorCode::index, "member " + std::to_string(target) + " is not among the " + std::to_string(spec.k) +
                                   " matches");
    const double a = spec.alpha(target);
    const double others = spec.matched_total() - a;
    const double odds = ratio_or_inf(a, others + spec.p * spec.outside_total);
    const double prior = ratio_or_inf(a, others + spec.outside_total);
    const double lr = ratio_or_inf(others + spec.outside_total, others + spec.p * spec.outside_total);
    return make_result(odds, prior, LikelihoodRatio(lr, LrConvention::conditional_on_I));
}

Effectiveness database_effectiveness(std::uint64_t n, double p, double q) {
    check_frequency(p);
    check_probability(q, "P(C in D | I)");
    if (n < 1) fail(ErrorCode::validation, "database size n must be >= 1");
    const double dn = static_cast<double>(n);
    const double lr = 1.0 / (dn * p);
    const double prior = ratio_or_inf(q, 1.0 - q);
    const double odds = ratio_or_inf(q, (1.0 - q) * dn * p);
    Effectiveness e{make_result(odds, prior, LikelihoodRatio(lr, LrConvention::conditional_on_I)), Probability(),
                    Probability()};
    const double s_n1 = survival_power(p, dn - 1.0);
    e.p_unique = Probability(q * survival_power(p, dn) + (1.0 - q) * dn * p * s_n1);
    e.p_unique_exact = Probability(s_n1 * (q + (1.0 - q) * dn * p));
    return e;
}

std::vector<double> match_count_distribution(std::uint64_t n, double p, double q, std::uint64_t kmax) {
    check_frequency(p);
    check_probability(q, "P(C in D | I)");
    if (n < 1) fail(ErrorCode::validation, "database size n must be >= 1");
    std::vector<double> out;
    for (std::uint64_t k = 0; k <= std::min(kmax, n); ++k) {
        // C in D: C matches, the other n-1 members are Bin(n-1, p).
        const double in_db = k == 0 ? 0.0 : classical::binomial_pmf(n - 1, k - 1, p);
        out.push_back(q * in_db + (1.0 - q) * classical::binomial_pmf(n, k, p));
    }
    return out;
}

double double_match_coincidence(std::uint64_t n, double p, double q) {
    if (n < 2) fail(ErrorCode::validation, "two matches need a database of at least 2");
    const auto dist = match_count_distribution(n, p, q, 2);
    return (1.0 - q) * classical::binomial_pmf(n, 2, p) / dist[2];
}

double GrowthModel::inclusion(std::uint64_t n) const {
    if (population < 1) fail(ErrorCode::validation, "growth model needs a population size");
    if (n > population)
        fail(ErrorCode::domain, "database size " + std::to_string(n) + " exceeds population " +
                                    std::to_string(population));
    const double f = static_cast<double>(n) / static_cast<double>(population);
    switch (kind) {
        case InclusionKind::random_sample: return f;
        case InclusionKind::sqrt_weighted: return std::sqrt(f);
        case InclusionKind::custom: {
            if (!custom) fail(ErrorCode::validation, "custom inclusion needs a q_n table");
            const double q = custom(n);
            check_probability(q, "q_" + std::to_string(n));
            return q;
        }
    }
    fail(ErrorCode::validation, "unknown inclusion model");
}

std::vector<GrowthPoint> growth_curve(const GrowthModel& model, const std::vector<std::uint64_t>& sizes) {
    check_frequency(model.p);
    std::vector<GrowthPoint> out;
    out.reserve(sizes.size());
    double last_q = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto n = sizes[i];
        if (n < 1) fail(ErrorCode::domain, "database size must be >= 1");
        const double q = model.inclusion(n);
        if (i > 0 && n >= sizes[i - 1] && q < last_q)
            fail(ErrorCode::validation, "inclusion probability decreases at n = " + std::to_string(n));
        last_q = q;
        const auto e = database_effectiveness(n, model.p, q);
        out.push_back({n, e.odds.odds.value(), e.p_unique.value()});
    }
    return out;
}

void write_growth_csv(std::ostream& out, const std::vector<GrowthPoint>& curve) {
    out << "n,odds,p_unique\n";
    const auto flags = out.flags();
    const auto prec = out.precision();
    out << std::setprecision(17);
    for (const auto& pt : curve) out << pt.n << ',' << pt.odds << ',' << pt.p_unique << '\n';
    out.flags(flags);
    out.precision(prec);
}

bool enlargement_threshold(double q_n, double q_2n) {
    if (!(q_n > 0.0 && q_n < 1.0) || !(q_2n > 0.0 && q_2n < 1.0))
        fail(ErrorCode::domain, "inclusion probabilities must lie in (0,1)");
    return q_2n / (1.0 - q_2n) > 2.0 * q_n / (1.0 - q_n);
}

}  // namespace island::database
