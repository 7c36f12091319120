#include "island/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <thread>

#include "island/philox.hpp"

namespace island::oracle {

namespace {

constexpr double kMassTolerance = 1e-12;

double sum(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
}

void check_distribution(const std::vector<double>& v, const std::string& what, bool allow_deficit) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::isnan(v[i])) fail(ErrorCode::invalid_value, what + "[" + std::to_string(i) + "] is NaN");
        if (v[i] < 0.0 || v[i] > 1.0)
            fail(ErrorCode::domain, what + "[" + std::to_string(i) + "] must lie in [0,1]");
    }
    const double total = sum(v);
    if (total > 1.0 + kMassTolerance || (!allow_deficit && total < 1.0 - kMassTolerance))
        fail(ErrorCode::validation, what + " sums to " + std::to_string(total));
}

std::size_t subpop_count(const ScenarioSpec& spec) {
    std::size_t k = 0;
    for (auto i : spec.subpop) k = std::max(k, i + 1);
    return k;
}

struct World {
    const std::vector<std::uint8_t>* gamma;
    std::size_t c;
    std::size_t s;  // == individuals() for S = *
};

struct DatabaseStats {
    std::size_t matches = 0;
    std::size_t only = 0;  // the matching member when matches == 1
    std::uint64_t pattern = 0;  // bit j set when member j matches
};

DatabaseStats database_stats(const ScenarioSpec& spec, const std::vector<std::uint8_t>& gamma) {
    DatabaseStats st;
    for (std::size_t j = 0; j < spec.database.size(); ++j) {
        if (!gamma[spec.database[j]]) continue;
        ++st.matches;
        st.only = spec.database[j];
        if (j < 64) st.pattern |= std::uint64_t{1} << j;
    }
    return st;
}

bool atom_holds(const Atom& a, const ScenarioSpec& spec, const World& w) {
    const std::size_t none = spec.individuals();
    const auto& g = *w.gamma;
    bool r = false;
    switch (a.kind) {
        case AtomKind::G: r = w.s != none && w.s == w.c; break;
        case AtomKind::I: r = g[w.c] != 0; break;
        case AtomKind::E: r = w.s != none && g[w.s] != 0; break;
        case AtomKind::E1: r = database_stats(spec, g).matches == 1; break;
        case AtomKind::ED: {
            const auto st = database_stats(spec, g);
            const std::uint64_t want = a.arg >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.arg) - 1;
            r = st.matches == a.arg && st.pattern == want;
            break;
        }
        case AtomKind::S_is: r = w.s == a.arg; break;
        case AtomKind::S_none: r = w.s == none; break;
        case AtomKind::C_is: r = w.c == a.arg; break;
        case AtomKind::S_in: r = w.s != none && spec.subpop[w.s] == a.arg; break;
        case AtomKind::C_in: r = spec.subpop[w.c] == a.arg; break;
        case AtomKind::C_in_D:
            r = std::find(spec.database.begin(), spec.database.end(), w.c) != spec.database.end();
            break;
    }
    return r != a.negated;
}

bool event_holds(const Event& e, const ScenarioSpec& spec, const World& w) {
    for (const auto& a : e.atoms)
        if (!atom_holds(a, spec, w)) return false;
    return true;
}

void check_event(const Event& e, const ScenarioSpec& spec) {
    const std::size_t m = spec.individuals();
    for (const auto& a : e.atoms) {
        switch (a.kind) {
            case AtomKind::S_is:
            case AtomKind::C_is:
                if (a.arg >= m) fail(ErrorCode::index, "individual " + std::to_string(a.arg) + " out of range");
                break;
            case AtomKind::S_in:
            case AtomKind::C_in:
                if (a.arg >= subpop_count(spec))
                    fail(ErrorCode::index, "subpopulation " + std::to_string(a.arg) + " out of range");
                break;
            case AtomKind::E1:
            case AtomKind::ED:
            case AtomKind::C_in_D:
                if (spec.database.empty()) fail(ErrorCode::validation, "database event on a scenario without database");
                if (a.kind == AtomKind::ED && a.arg > spec.database.size())
                    fail(ErrorCode::validation, "ED=k with k larger than the database");
                break;
            default: break;
        }
    }
}

// Distribution of S given C and Gamma, as (individual or *, probability).
template <typename Fn>
void for_each_suspect(const ScenarioSpec& spec, std::size_t c, const std::vector<std::uint8_t>& gamma, Fn&& fn) {
    const std::size_t m = spec.individuals();
    if (const auto* ind = std::get_if<IndependentSuspect>(&spec.suspect)) {
        double rest = 1.0;
        for (std::size_t x = 0; x < ind->prior.size(); ++x) {
            if (ind->prior[x] > 0.0) fn(x, ind->prior[x]);
            rest -= ind->prior[x];
        }
        if (rest > kMassTolerance) fn(m, rest);
    } else if (const auto* biased = std::get_if<BiasedSuspect>(&spec.suspect)) {
        const auto& row = biased->given[c];
        double rest = 1.0;
        for (std::size_t x = 0; x < row.size(); ++x) {
            if (row[x] > 0.0) fn(x, row[x]);
            rest -= row[x];
        }
        if (rest > kMassTolerance) fn(m, rest);
    } else if (std::holds_alternative<SequentialSearch>(spec.suspect)) {
        // In a uniform random order every bearer is equally likely to come first.
        std::size_t bearers = 0;
        for (std::size_t x = 0; x < m; ++x) bearers += gamma[x];
        if (bearers == 0) {
            fn(m, 1.0);
            return;
        }
        for (std::size_t x = 0; x < m; ++x)
            if (gamma[x]) fn(x, 1.0 / static_cast<double>(bearers));
    } else {
        const auto st = database_stats(spec, gamma);
        fn(st.matches == 1 ? st.only : m, 1.0);
    }
}

// Per-individual frequencies for each configuration of the subpopulation W's.
template <typename Fn>
void for_each_frequency_config(const ScenarioSpec& spec, Fn&& fn) {
    const std::size_t m = spec.individuals();
    if (const auto* ind = std::get_if<IndependentGamma>(&spec.gamma)) {
        fn(ind->p, 1.0);
        return;
    }
    const auto& mix = std::get<MixtureGamma>(spec.gamma);
    const std::size_t k = mix.atoms.size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<double> p(m);
    while (true) {
        double w = 1.0;
        for (std::size_t i = 0; i < k; ++i) w *= mix.weights[i][idx[i]];
        for (std::size_t x = 0; x < m; ++x) p[x] = mix.atoms[spec.subpop[x]][idx[spec.subpop[x]]];
        if (w > 0.0) fn(p, w);
        std::size_t i = 0;
        while (i < k && ++idx[i] == mix.atoms[i].size()) idx[i++] = 0;
        if (i == k) break;
    }
}

struct Cumulative {
    std::vector<double> c;
    explicit Cumulative(const std::vector<double>& p) : c(p.size()) {
        double acc = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) c[i] = acc += p[i];
    }
    // Index drawn with probability p[i]; size() for the leftover mass.
    std::size_t draw(double u) const {
        return static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), u) - c.begin());
    }
};

class Sampler {
public:
    explicit Sampler(const ScenarioSpec& spec) : spec_(spec), crim_(spec.criminal_prior) {
        if (const auto* mix = std::get_if<MixtureGamma>(&spec.gamma))
            for (const auto& w : mix->weights) atom_cum_.emplace_back(w);
        if (const auto* joint = std::get_if<JointGamma>(&spec.gamma)) joint_cum_.emplace_back(joint->table);
        if (const auto* ind = std::get_if<IndependentSuspect>(&spec.suspect)) suspect_cum_.emplace_back(ind->prior);
        if (const auto* biased = std::get_if<BiasedSuspect>(&spec.suspect))
            for (const auto& row : biased->given) suspect_cum_.emplace_back(row);
    }

    struct Counts {
        std::uint64_t accepted = 0;
        std::uint64_t hits = 0;
    };

    Counts run(const Event& event, const Event& cond, std::uint64_t seed, std::uint32_t lane, std::uint64_t begin,
               std::uint64_t end) const {
        const std::size_t m = spec_.individuals();
        std::vector<std::uint8_t> gamma(m);
        std::vector<double> p(m);
        std::vector<std::size_t> order(m);
        std::vector<std::size_t> atom(atom_cum_.size());
        Counts counts;
        for (std::uint64_t t = begin; t < end; ++t) {
            rng::TrialStream rs(seed, t, lane);
            draw_gamma(rs, gamma, p, atom);
            std::size_t c = crim_.draw(rs.uniform53());
            if (c >= m) c = last_positive_;
            const std::size_t s = draw_suspect(rs, c, gamma, order);
            const World w{&gamma, c, s};
            if (!event_holds(cond, spec_, w)) continue;
            ++counts.accepted;
            if (event_holds(event, spec_, w)) ++counts.hits;
        }
        return counts;
    }

private:
    void draw_gamma(rng::TrialStream& rs, std::vector<std::uint8_t>& gamma, std::vector<double>& p,
                    std::vector<std::size_t>& atom) const {
        const std::size_t m = spec_.individuals();
        if (const auto* ind = std::get_if<IndependentGamma>(&spec_.gamma)) {
            for (std::size_t x = 0; x < m; ++x) gamma[x] = rs.bernoulli(ind->p[x]);
            return;
        }
        if (const auto* mix = std::get_if<MixtureGamma>(&spec_.gamma)) {
            for (std::size_t i = 0; i < atom.size(); ++i)
                atom[i] = std::min(atom_cum_[i].draw(rs.uniform53()), mix->atoms[i].size() - 1);
            for (std::size_t x = 0; x < m; ++x) p[x] = mix->atoms[spec_.subpop[x]][atom[spec_.subpop[x]]];
            for (std::size_t x = 0; x < m; ++x) gamma[x] = rs.bernoulli(p[x]);
            return;
        }
        const auto& joint = std::get<JointGamma>(spec_.gamma);
        const std::size_t mask = std::min(joint_cum_.front().draw(rs.uniform53()), joint.table.size() - 1);
        for (std::size_t x = 0; x < m; ++x) gamma[x] = (mask >> x) & 1u;
    }

    std::size_t draw_suspect(rng::TrialStream& rs, std::size_t c, const std::vector<std::uint8_t>& gamma,
                             std::vector<std::size_t>& order) const {
        const std::size_t m = spec_.individuals();
        if (std::holds_alternative<IndependentSuspect>(spec_.suspect))
            return std::min(suspect_cum_.front().draw(rs.uniform53()), m);
        if (std::holds_alternative<BiasedSuspect>(spec_.suspect))
            return std::min(suspect_cum_[c].draw(rs.uniform53()), m);
        if (std::holds_alternative<SequentialSearch>(spec_.suspect)) {
            // Fisher-Yates, stopped at the first bearer.
            for (std::size_t x = 0; x < m; ++x) order[x] = x;
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t j = i + rs.below(m - i);
                std::swap(order[i], order[j]);
                if (gamma[order[i]]) return order[i];
            }
            return m;
        }
        const auto st = database_stats(spec_, gamma);
        return st.matches == 1 ? st.only : m;
    }

    const ScenarioSpec& spec_;
    Cumulative crim_;
    std::vector<Cumulative> atom_cum_;
    std::vector<Cumulative> joint_cum_;
    std::vector<Cumulative> suspect_cum_;
    std::size_t last_positive_ = [this] {
        std::size_t last = 0;
        for (std::size_t i = 0; i < spec_.criminal_prior.size(); ++i)
            if (spec_.criminal_prior[i] > 0.0) last = i;
        return last;
    }();
};

Sampler::Counts run_parallel(const Sampler& sampler, const Event& event, const Event& cond, std::uint64_t seed,
                             std::uint32_t lane, std::uint64_t trials, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, trials / 1000)));
    std::vector<Sampler::Counts> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) {
        const std::uint64_t begin = trials * i / threads, end = trials * (i + 1) / threads;
        if (threads == 1) {
            parts[i] = sampler.run(event, cond, seed, lane, begin, end);
            break;
        }
        pool.emplace_back([&, i, begin, end] { parts[i] = sampler.run(event, cond, seed, lane, begin, end); });
    }
    for (auto& t : pool) t.join();
    Sampler::Counts total;
    for (const auto& c : parts) {
        total.accepted += c.accepted;
        total.hits += c.hits;
    }
    return total;
}

std::uint64_t parse_uint(std::string_view text, std::string_view atom) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        fail(ErrorCode::validation, "bad number in event atom '" + std::string(atom) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

void ScenarioSpec::validate() const {
    const std::size_t m = individuals();
    if (m == 0) fail(ErrorCode::validation, "scenario has no individuals");
    if (subpop.size() != m)
        fail(ErrorCode::validation, "subpop has " + std::to_string(subpop.size()) + " entries, expected " +
                                        std::to_string(m));
    check_distribution(criminal_prior, "criminal_prior", false);
    const std::size_t k = subpop_count(*this);
    if (const auto* ind = std::get_if<IndependentGamma>(&gamma)) {
        if (ind->p.size() != m) fail(ErrorCode::validation, "gamma.p must have one entry per individual");
        for (double p : ind->p)
            if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::domain, "gamma.p entries must lie in [0,1]");
    } else if (const auto* mix = std::get_if<MixtureGamma>(&gamma)) {
        if (mix->atoms.size() != k || mix->weights.size() != k)
            fail(ErrorCode::validation, "mixture needs atoms and weights for each of the " + std::to_string(k) +
                                            " subpopulations");
        for (std::size_t i = 0; i < k; ++i) {
            if (mix->atoms[i].empty() || mix->atoms[i].size() != mix->weights[i].size())
                fail(ErrorCode::validation, "mixture for subpopulation " + std::to_string(i) +
                                                " needs matching non-empty atoms and weights");
            for (double a : mix->atoms[i])
                if (!(a >= 0.0 && a <= 1.0)) fail(ErrorCode::domain, "mixture atoms must lie in [0,1]");
            check_distribution(mix->weights[i], "mixture weights " + std::to_string(i), false);
        }
    } else {
        const auto& joint = std::get<JointGamma>(gamma);
        if (m > kMaxExactIndividuals) fail(ErrorCode::capacity, "joint Gamma table limited to 20 individuals");
        if (joint.table.size() != (std::size_t{1} << m))
            fail(ErrorCode::validation, "joint Gamma table needs 2^" + std::to_string(m) + " entries");
        check_distribution(joint.table, "joint Gamma table", false);
    }
    if (const auto* ind = std::get_if<IndependentSuspect>(&suspect)) {
        if (ind->prior.size() != m) fail(ErrorCode::validation, "suspect prior must have one entry per individual");
        check_distribution(ind->prior, "suspect prior", true);
    } else if (const auto* biased = std::get_if<BiasedSuspect>(&suspect)) {
        if (biased->given.size() != m) fail(ErrorCode::validation, "bias matrix needs one row per criminal");
        for (std::size_t y = 0; y < m; ++y) {
            if (biased->given[y].size() != m)
                fail(ErrorCode::validation, "bias matrix row " + std::to_string(y) + " has the wrong length");
            check_distribution(biased->given[y], "bias matrix row " + std::to_string(y), true);
        }
    } else if (std::holds_alternative<DatabaseMatch>(suspect) && database.empty()) {
        fail(ErrorCode::validation, "database protocol needs database members");
    }
    std::vector<bool> seen(m, false);
    for (auto x : database) {
        if (x >= m) fail(ErrorCode::index, "database member " + std::to_string(x) + " out of range");
        if (seen[x]) fail(ErrorCode::validation, "database member " + std::to_string(x) + " listed twice");
        seen[x] = true;
    }
}

Event parse_event(std::string_view text) {
    Event e;
    if (trim(text).empty()) return e;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find_first_of("&,", pos);
        const auto piece = trim(text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos));
        pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
        if (piece.empty()) fail(ErrorCode::validation, "empty atom in event '" + std::string(text) + "'");
        Atom a;
        auto body = piece;
        if (body.front() == '!') {
            a.negated = true;
            body = trim(body.substr(1));
        }
        const auto eq = body.find('=');
        const auto name = trim(body.substr(0, eq));
        const auto value = eq == std::string_view::npos ? std::string_view{} : trim(body.substr(eq + 1));
        const bool has_value = eq != std::string_view::npos;
        auto no_value = [&](AtomKind k) {
            if (has_value) fail(ErrorCode::validation, "atom '" + std::string(piece) + "' takes no value");
            a.kind = k;
        };
        auto with_value = [&](AtomKind k) {
            if (!has_value) fail(ErrorCode::validation, "atom '" + std::string(piece) + "' needs a value");
            a.kind = k;
            a.arg = parse_uint(value, piece);
        };
        if (name == "G") no_value(AtomKind::G);
        else if (name == "I") no_value(AtomKind::I);
        else if (name == "E") no_value(AtomKind::E);
        else if (name == "E1") no_value(AtomKind::E1);
        else if (name == "C_in_D") no_value(AtomKind::C_in_D);
        else if (name == "ED") with_value(AtomKind::ED);
        else if (name == "C") with_value(AtomKind::C_is);
        else if (name == "S_in") with_value(AtomKind::S_in);
        else if (name == "C_in") with_value(AtomKind::C_in);
        else if (name == "S") {
            if (value == "*") {
                a.kind = AtomKind::S_none;
            } else {
                with_value(AtomKind::S_is);
            }
        } else {
            fail(ErrorCode::validation, "unknown event atom '" + std::string(piece) + "'");
        }
        e.atoms.push_back(a);
    }
    return e;
}

std::string to_string(const Event& event) {
    std::string out;
    for (const auto& a : event.atoms) {
        if (!out.empty()) out += " & ";
        if (a.negated) out += '!';
        const std::string n = std::to_string(a.arg);
        switch (a.kind) {
            case AtomKind::G: out += "G"; break;
            case AtomKind::I: out += "I"; break;
            case AtomKind::E: out += "E"; break;
            case AtomKind::E1: out += "E1"; break;
            case AtomKind::ED: out += "ED=" + n; break;
            case AtomKind::S_is: out += "S=" + n; break;
            case AtomKind::S_none: out += "S=*"; break;
            case AtomKind::C_is: out += "C=" + n; break;
            case AtomKind::S_in: out += "S_in=" + n; break;
            case AtomKind::C_in: out += "C_in=" + n; break;
            case AtomKind::C_in_D: out += "C_in_D"; break;
        }
    }
    return out;
}

OracleEstimate exact_posterior(const ScenarioSpec& spec, const Event& event, const Event& conditioning) {
    spec.validate();
    check_event(event, spec);
    check_event(conditioning, spec);
    const std::size_t m = spec.individuals();
    if (m > kMaxExactIndividuals)
        fail(ErrorCode::capacity, "exact enumeration is limited to " + std::to_string(kMaxExactIndividuals) +
                                      " individuals, got " + std::to_string(m));
    if (spec.database.size() > kMaxExactDatabase)
        fail(ErrorCode::capacity, "exact enumeration is limited to databases of 8");
    if (const auto* mix = std::get_if<MixtureGamma>(&spec.gamma))
        for (const auto& a : mix->atoms)
            if (a.size() > kMaxAtoms) fail(ErrorCode::capacity, "exact enumeration is limited to 4 mixture atoms");

    double total = 0.0, den = 0.0, num = 0.0;
    std::vector<std::uint8_t> gamma(m);
    auto visit = [&](std::size_t mask, double pg) {
        for (std::size_t x = 0; x < m; ++x) gamma[x] = (mask >> x) & 1u;
        for (std::size_t c = 0; c < m; ++c) {
            const double pc = spec.criminal_prior[c];
            if (pc == 0.0) continue;
            for_each_suspect(spec, c, gamma, [&](std::size_t s, double ps) {
                const double w = pg * pc * ps;
                total += w;
                const World world{&gamma, c, s};
                if (!event_holds(conditioning, spec, world)) return;
                den += w;
                if (event_holds(event, spec, world)) num += w;
            });
        }
    };
    const std::size_t masks = std::size_t{1} << m;
    if (const auto* joint = std::get_if<JointGamma>(&spec.gamma)) {
        for (std::size_t mask = 0; mask < masks; ++mask)
            if (joint->table[mask] > 0.0) visit(mask, joint->table[mask]);
    } else {
        for_each_frequency_config(spec, [&](const std::vector<double>& p, double w) {
            for (std::size_t mask = 0; mask < masks; ++mask) {
                double pg = w;
                for (std::size_t x = 0; x < m && pg > 0.0; ++x) pg *= (mask >> x) & 1u ? p[x] : 1.0 - p[x];
                if (pg > 0.0) visit(mask, pg);
            }
        });
    }
    if (!(den > 0.0))
        fail(ErrorCode::conditioning_impossible, "conditioning event '" + to_string(conditioning) +
                                                     "' has probability 0");
    OracleEstimate est;
    est.method = Method::exact;
    est.value = std::clamp(num / den, 0.0, 1.0);
    est.total_mass = total;
    return est;
}

OracleEstimate mc_posterior(const ScenarioSpec& spec, const Event& event, const Event& conditioning,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    spec.validate();
    check_event(event, spec);
    check_event(conditioning, spec);
    if (trials < kPilotTrials)
        fail(ErrorCode::validation, "Monte-Carlo needs at least " + std::to_string(kPilotTrials) + " trials");
    const Sampler sampler(spec);
    const auto pilot = run_parallel(sampler, Event{}, conditioning, seed, 1, kPilotTrials, threads);
    const double rate = static_cast<double>(pilot.accepted) / static_cast<double>(kPilotTrials);
    if (rate < kMinAcceptance)
        fail(ErrorCode::infeasible_conditioning,
             "pilot acceptance rate " + std::to_string(rate) + " is below 1e-4; use exact enumeration or closed forms");
    const auto counts = run_parallel(sampler, event, conditioning, seed, 0, trials, threads);
    if (counts.accepted == 0)
        fail(ErrorCode::infeasible_conditioning, "no trial satisfied the conditioning event");
    OracleEstimate est;
    est.method = Method::monte_carlo;
    est.value = static_cast<double>(counts.hits) / static_cast<double>(counts.accepted);
    est.trials = trials;
    est.seed = seed;
    est.accepted = counts.accepted;
    const double v = est.value;
    est.std_error = std::sqrt(v * (1.0 - v) / static_cast<double>(counts.accepted));
    return est;
}

ScenarioSpec classical_scenario(std::size_t n, double p) {
    ScenarioSpec s;
    s.variant = "classical";
    const std::size_t m = n + 1;
    s.subpop.assign(m, 0);
    s.criminal_prior.assign(m, 1.0 / static_cast<double>(m));
    s.gamma = IndependentGamma{std::vector<double>(m, p)};
    std::vector<double> suspect(m, 0.0);
    suspect[0] = 1.0;
    s.suspect = IndependentSuspect{suspect};
    return s;
}

ScenarioSpec yellin_scenario(std::size_t n, double p) {
    auto s = classical_scenario(n, p);
    s.variant = "yellin_search";
    s.suspect = SequentialSearch{};
    return s;
}

namespace {

ScenarioSpec layout(const std::vector<std::size_t>& sizes, const std::vector<double>& beta,
                    std::optional<std::size_t> suspect, const std::vector<double>& epsilon) {
    if (sizes.empty() || sizes.size() != beta.size())
        fail(ErrorCode::validation, "sizes and beta must be non-empty and of equal length");
    if (!epsilon.empty() && epsilon.size() != sizes.size())
        fail(ErrorCode::validation, "epsilon must match the number of subpopulations");
    ScenarioSpec s;
    std::size_t m = 0;
    for (auto n : sizes) {
        if (n == 0) fail(ErrorCode::validation, "subpopulation sizes must be >= 1");
        m += n;
    }
    std::vector<double> sprior(m, 0.0);
    std::size_t first = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double n = static_cast<double>(sizes[i]);
        for (std::size_t j = 0; j < sizes[i]; ++j) {
            s.subpop.push_back(i);
            s.criminal_prior.push_back(beta[i] / n);
            if (!suspect) sprior[first + j] = epsilon.empty() ? 1.0 / static_cast<double>(m) : epsilon[i] / n;
        }
        if (suspect && *suspect == i) sprior[first] = 1.0;
        first += sizes[i];
    }
    if (suspect && *suspect >= sizes.size()) fail(ErrorCode::index, "suspect subpopulation out of range");
    s.suspect = IndependentSuspect{sprior};
    return s;
}

}  // namespace

ScenarioSpec hetero_scenario(const std::vector<std::size_t>& sizes, const std::vector<double>& p,
                             const std::vector<double>& beta, std::optional<std::size_t> suspect,
                             const std::vector<double>& epsilon) {
    if (p.size() != sizes.size()) fail(ErrorCode::validation, "one frequency per subpopulation is required");
    auto s = layout(sizes, beta, suspect, epsilon);
    s.variant = "hetero";
    std::vector<double> px;
    for (auto i : s.subpop) px.push_back(p[i]);
    s.gamma = IndependentGamma{px};
    return s;
}

ScenarioSpec uncertain_scenario(const std::vector<std::size_t>& sizes, const std::vector<std::vector<double>>& atoms,
                                const std::vector<std::vector<double>>& weights, const std::vector<double>& beta,
                                std::optional<std::size_t> suspect, const std::vector<double>& epsilon) {
    auto s = layout(sizes, beta, suspect, epsilon);
    s.variant = "uncertain";
    s.gamma = MixtureGamma{atoms, weights};
    return s;
}

ScenarioSpec database_scenario(std::size_t population, std::size_t n, double p,
                               const std::vector<double>& criminal_prior) {
    if (n > population) fail(ErrorCode::validation, "database larger than the population");
    ScenarioSpec s;
    s.variant = "database";
    s.subpop.assign(population, 0);
    s.criminal_prior = criminal_prior;
    s.gamma = IndependentGamma{std::vector<double>(population, p)};
    s.suspect = DatabaseMatch{};
    for (std::size_t i = 0; i < n; ++i) s.database.push_back(i);
    return s;
}

}  // namespace island::oracle
