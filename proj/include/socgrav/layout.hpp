#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "socgrav/centrality.hpp"
#include "socgrav/graph.hpp"
#include "socgrav/vec2.hpp"

namespace socgrav {

enum class ScheduleKind {
    none,                    // gamma is always 0
    constant,                // gamma is always gamma_constant
    stepped_by_iteration,    // gamma_step * floor(t / block_len), capped at gamma_max
    stepped_by_equilibrium,  // +gamma_step whenever the previous step was in equilibrium
};

std::string_view to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(std::string_view name);

struct LayoutConfig {
    double k = 80.0;      // natural edge length
    double i_max = 10.0;  // impulse magnitude cap
    double sigma = 0.1;   // impulse-to-displacement scale
    double gamma_max = 2.5;
    ScheduleKind schedule = ScheduleKind::stepped_by_iteration;
    double gamma_constant = 0.0;  // used by ScheduleKind::constant
    int block_len = 200;
    double gamma_step = 0.2;
    double equilibrium_eps = 1.0;
    int max_iterations = 4000;
    std::uint64_t seed = 0;
    unsigned threads = 1;  // 0 selects the hardware concurrency

    /// Throws std::invalid_argument when a field is out of its domain.
    void validate() const;

    /// Gravity the schedule settles at: 0, gamma_constant, or gamma_max.
    double terminal_gamma() const;
};

struct LayoutState {
    std::vector<Vec2> positions;
    long t = 0;
    double gamma = 0.0;  // gravity applied by the next step
    double last_max_impulse = 0.0;
};

// Movement restrictions for a force phase. An empty `movable` means every
// vertex moves.
struct PhaseOptions {
    std::vector<bool> movable;

    bool moves(VertexId v) const { return movable.empty() || movable[v]; }
};

std::vector<Vec2> initialize_positions(const Graph& g, std::uint64_t seed, double k);

/// Force on v pushing it away from u: (k^2 / |pu - pv|^2) (pv - pu).
inline Vec2 repulsive_force(Vec2 pu, Vec2 pv, double k) {
    Vec2 d = pv - pu;
    return (k * k / norm_squared(d)) * d;
}

/// Force on v pulling it toward u: (|pu - pv| / k) (pu - pv).
inline Vec2 attractive_force(Vec2 pu, Vec2 pv, double k) {
    Vec2 d = pu - pv;
    return (std::sqrt(norm_squared(d)) / k) * d;
}

inline Vec2 gravity_force(Vec2 pv, Vec2 xi, double mass, double gamma) {
    return (gamma * mass) * (xi - pv);
}

/// Arithmetic mean of the positions. Throws std::invalid_argument when empty.
Vec2 centroid(std::span<const Vec2> positions);

double schedule_gamma(long t, const LayoutState& state, const LayoutConfig& config);

/// Net impulse on v for the current state: repulsion from every other vertex,
/// attraction from every neighbor, and one gravity term, summed in ascending
/// vertex order.
Vec2 net_impulse(VertexId v, const LayoutState& state, const Graph& g, const MassVector& mass,
                 const LayoutConfig& config);

/// Clamps the impulse magnitude to i_max, keeping its direction.
Vec2 clamp_impulse(Vec2 impulse, double i_max);

LayoutState make_initial_state(const Graph& g, const LayoutConfig& config);
LayoutState make_state(std::vector<Vec2> positions, const LayoutConfig& config);

/// One synchronous iteration: every impulse is taken from the pre-step
/// positions, then each vertex moves by sigma * clamp(impulse).
void step(LayoutState& state, const Graph& g, const MassVector& mass, const LayoutConfig& config,
          const PhaseOptions& options = {});

// Stop rule shared by run_layout and the Lombardi phase.
bool layout_finished(const LayoutState& state, const LayoutConfig& config);

std::vector<Vec2> run_layout(const Graph& g, const MassVector& mass, const LayoutConfig& config);

/// Runs from caller-supplied initial positions; returns the final state.
LayoutState run_layout_from(const Graph& g, const MassVector& mass, const LayoutConfig& config,
                            std::vector<Vec2> initial, const PhaseOptions& options = {});

}  // namespace socgrav
