#include "socgrav/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "random.hpp"

namespace socgrav {

std::string_view to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::none: return "none";
        case ScheduleKind::constant: return "constant";
        case ScheduleKind::stepped_by_iteration: return "stepped";
        case ScheduleKind::stepped_by_equilibrium: return "equilibrium";
    }
    return "unknown";
}

ScheduleKind schedule_kind_from_string(std::string_view name) {
    if (name == "none") return ScheduleKind::none;
    if (name == "constant") return ScheduleKind::constant;
    if (name == "stepped" || name == "stepped-by-iteration") return ScheduleKind::stepped_by_iteration;
    if (name == "equilibrium" || name == "stepped-by-equilibrium") return ScheduleKind::stepped_by_equilibrium;
    throw std::invalid_argument("unknown schedule '" + std::string(name) + "'");
}

void LayoutConfig::validate() const {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!positive(k)) throw std::invalid_argument("k must be positive");
    if (!positive(i_max)) throw std::invalid_argument("i_max must be positive");
    if (!positive(sigma)) throw std::invalid_argument("sigma must be positive");
    if (!(std::isfinite(gamma_max) && gamma_max >= 0.0)) throw std::invalid_argument("gamma_max must be nonnegative");
    if (!(std::isfinite(gamma_constant) && gamma_constant >= 0.0))
        throw std::invalid_argument("constant gamma must be nonnegative");
    if (block_len <= 0) throw std::invalid_argument("block_len must be positive");
    if (!positive(gamma_step)) throw std::invalid_argument("gamma_step must be positive");
    if (!positive(equilibrium_eps)) throw std::invalid_argument("equilibrium_eps must be positive");
    if (max_iterations <= 0) throw std::invalid_argument("max_iterations must be positive");
    bool stepped = schedule == ScheduleKind::stepped_by_iteration || schedule == ScheduleKind::stepped_by_equilibrium;
    // gamma_max == 0 turns a stepped schedule into "no gravity".
    if (stepped && gamma_max > 0.0 && gamma_step > gamma_max)
        throw std::invalid_argument("gamma_step must not exceed gamma_max");
}

double LayoutConfig::terminal_gamma() const {
    switch (schedule) {
        case ScheduleKind::none: return 0.0;
        case ScheduleKind::constant: return gamma_constant;
        case ScheduleKind::stepped_by_iteration:
        case ScheduleKind::stepped_by_equilibrium: return gamma_max;
    }
    return 0.0;
}

std::vector<Vec2> initialize_positions(const Graph& g, std::uint64_t seed, double k) {
    const std::size_t n = g.vertex_count();
    std::vector<Vec2> out(n);
    std::mt19937_64 rng(seed);
    double side = k * std::sqrt(static_cast<double>(n));
    for (auto& p : out) {
        p.x = (detail::uniform01(rng) - 0.5) * side;
        p.y = (detail::uniform01(rng) - 0.5) * side;
    }
    return out;
}

Vec2 centroid(std::span<const Vec2> positions) {
    if (positions.empty()) throw std::invalid_argument("centroid of an empty point set");
    Vec2 sum;
    for (Vec2 p : positions) sum += p;
    return sum * (1.0 / static_cast<double>(positions.size()));
}

double schedule_gamma(long t, const LayoutState& state, const LayoutConfig& config) {
    switch (config.schedule) {
        case ScheduleKind::none: return 0.0;
        case ScheduleKind::constant: return config.gamma_constant;
        case ScheduleKind::stepped_by_iteration: {
            long blocks = std::max(0L, t) / config.block_len;
            return std::min(config.gamma_max, config.gamma_step * static_cast<double>(blocks));
        }
        case ScheduleKind::stepped_by_equilibrium:
            if (t > 0 && state.last_max_impulse < config.equilibrium_eps)
                return std::min(config.gamma_max, state.gamma + config.gamma_step);
            return std::min(config.gamma_max, state.gamma);
    }
    return 0.0;
}

Vec2 clamp_impulse(Vec2 impulse, double i_max) {
    double m2 = norm_squared(impulse);
    if (m2 <= i_max * i_max) return impulse;
    return (i_max / std::sqrt(m2)) * impulse;
}

namespace {

struct ImpulseContext {
    std::span<const Vec2> positions;
    const Graph& g;
    std::span<const double> mass;
    const PhaseOptions& options;
    Vec2 xi;
    double gamma;
    double k;
    double coincident2;  // squared distance under which two points count as coincident
};

// Returns false if v coincides with another vertex (impulse left partial).
bool impulse_of(VertexId v, const ImpulseContext& ctx, Vec2& out) {
    const Vec2 pv = ctx.positions[v];
    auto nb = ctx.g.neighbors(v);
    bool clean = true;
    Vec2 sum;
    const auto n = static_cast<VertexId>(ctx.positions.size());
    const double k2 = ctx.k * ctx.k;
    for (VertexId u = 0; u < n; ++u) {
        if (u == v) continue;
        Vec2 d = pv - ctx.positions[u];
        double d2 = norm_squared(d);
        if (d2 < ctx.coincident2) {
            clean = false;
            continue;
        }
        sum += (k2 / d2) * d;
    }
    for (VertexId u : nb) sum += attractive_force(ctx.positions[u], pv, ctx.k);
    sum += gravity_force(pv, ctx.xi, ctx.mass[v], ctx.gamma);
    out = sum;
    return clean;
}

// Moves every movable vertex that coincides with a lower-id vertex (or with a
// frozen one) by a pseudo-random offset of length 1e-3 k.
bool jitter_coincident(LayoutState& state, const LayoutConfig& config, const PhaseOptions& options) {
    const double limit = 1e-6 * config.k;
    const double limit2 = limit * limit;
    const double radius = 1e-3 * config.k;
    bool moved = false;
    auto& p = state.positions;
    for (VertexId v = 0; v < p.size(); ++v) {
        for (VertexId u = 0; u < p.size(); ++u) {
            if (u == v) continue;
            if (norm_squared(p[v] - p[u]) >= limit2) continue;
            VertexId target;
            if (options.moves(v) && (u < v || !options.moves(u)))
                target = v;
            else
                continue;  // handled when the loop reaches the other vertex
            std::uint64_t h = detail::splitmix64(config.seed ^ detail::splitmix64(
                static_cast<std::uint64_t>(state.t) * 0x100000001b3ULL ^
                (static_cast<std::uint64_t>(target) << 32 | (target == v ? u : v))));
            double angle = 2.0 * std::numbers::pi * detail::unit_double(h);
            p[target] += Vec2{radius * std::cos(angle), radius * std::sin(angle)};
            moved = true;
        }
    }
    return moved;
}

unsigned thread_count(const LayoutConfig& config, std::size_t n) {
    unsigned t = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    if (n < 64) return 1;
    return static_cast<unsigned>(std::min<std::size_t>(t, n));
}

// Fills impulses for all movable vertices; false if any pair coincided.
bool compute_impulses(const LayoutState& state, const Graph& g, const MassVector& mass, const LayoutConfig& config,
                      const PhaseOptions& options, std::vector<Vec2>& impulses) {
    const std::size_t n = state.positions.size();
    const double limit = 1e-6 * config.k;
    ImpulseContext ctx{state.positions, g, mass.values, options, centroid(state.positions), state.gamma,
                       config.k, limit * limit};
    impulses.assign(n, Vec2{});

    auto run_range = [&](std::size_t begin, std::size_t end, bool& clean) {
        clean = true;
        for (std::size_t v = begin; v < end; ++v) {
            if (!options.moves(static_cast<VertexId>(v))) continue;
            if (!impulse_of(static_cast<VertexId>(v), ctx, impulses[v])) clean = false;
        }
    };

    unsigned workers = thread_count(config, n);
    if (workers <= 1) {
        bool clean = true;
        run_range(0, n, clean);
        return clean;
    }
    std::vector<char> clean(workers, 1);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 1; w < workers; ++w) {
            std::size_t begin = std::min(n, w * chunk);
            std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                bool c = true;
                run_range(begin, end, c);
                clean[w] = c;
            });
        }
        bool c = true;
        run_range(0, std::min(n, chunk), c);
        clean[0] = c;
    }
    return std::all_of(clean.begin(), clean.end(), [](char c) { return c != 0; });
}

}  // namespace

Vec2 net_impulse(VertexId v, const LayoutState& state, const Graph& g, const MassVector& mass,
                 const LayoutConfig& config) {
    if (v >= state.positions.size()) throw std::invalid_argument("net_impulse: vertex out of range");
    const double limit = 1e-6 * config.k;
    PhaseOptions options;
    ImpulseContext ctx{state.positions, g, mass.values, options, centroid(state.positions), state.gamma,
                       config.k, limit * limit};
    Vec2 out;
    if (!impulse_of(v, ctx, out)) throw std::invalid_argument("net_impulse: coincident vertices");
    return out;
}

LayoutState make_state(std::vector<Vec2> positions, const LayoutConfig& config) {
    LayoutState state;
    state.positions = std::move(positions);
    state.gamma = schedule_gamma(0, state, config);
    return state;
}

LayoutState make_initial_state(const Graph& g, const LayoutConfig& config) {
    return make_state(initialize_positions(g, config.seed, config.k), config);
}

void step(LayoutState& state, const Graph& g, const MassVector& mass, const LayoutConfig& config,
          const PhaseOptions& options) {
    const std::size_t n = state.positions.size();
    if (n != g.vertex_count() || mass.values.size() != n)
        throw std::invalid_argument("step: state, graph and mass sizes differ");
    if (!options.movable.empty() && options.movable.size() != n)
        throw std::invalid_argument("step: movable mask size differs from vertex count");

    std::vector<Vec2> impulses;
    if (n > 0) {
        // Coincidences are rare; jitter and recompute only when one is seen.
        for (int attempt = 0; !compute_impulses(state, g, mass, config, options, impulses); ++attempt) {
            if (attempt >= 16 || !jitter_coincident(state, config, options)) break;
        }
    }

    double max_impulse = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!options.moves(static_cast<VertexId>(v))) continue;
        max_impulse = std::max(max_impulse, norm(impulses[v]));
        state.positions[v] += config.sigma * clamp_impulse(impulses[v], config.i_max);
    }
    state.last_max_impulse = max_impulse;
    ++state.t;
    state.gamma = schedule_gamma(state.t, state, config);
}

bool layout_finished(const LayoutState& state, const LayoutConfig& config) {
    if (state.t >= config.max_iterations) return true;
    return state.t > 0 && state.gamma >= config.terminal_gamma() &&
           state.last_max_impulse < config.equilibrium_eps;
}

LayoutState run_layout_from(const Graph& g, const MassVector& mass, const LayoutConfig& config,
                            std::vector<Vec2> initial, const PhaseOptions& options) {
    config.validate();
    if (initial.size() != g.vertex_count()) throw std::invalid_argument("run_layout: wrong number of positions");
    LayoutState state = make_state(std::move(initial), config);
    while (!layout_finished(state, config)) step(state, g, mass, config, options);
    return state;
}

std::vector<Vec2> run_layout(const Graph& g, const MassVector& mass, const LayoutConfig& config) {
    config.validate();
    return run_layout_from(g, mass, config, initialize_positions(g, config.seed, config.k)).positions;
}

}  // namespace socgrav
