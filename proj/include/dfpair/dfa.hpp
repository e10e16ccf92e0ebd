#ifndef DFPAIR_DFA_HPP
#define DFPAIR_DFA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dfpair/rng.hpp"

/**
 * Single-objective Dragonfly optimizer over box-bounded real vectors.
 *
 * Maximizes. Each iteration evaluates the swarm, keeps the best position
 * ever seen as the food source and the worst current member as the enemy,
 * then moves every member. A member with at least one neighbour inside the
 * neighbourhood radius takes a swarm step built from separation, alignment,
 * cohesion, food attraction and enemy distraction plus inertia; an isolated
 * member takes a multiplicative Levy flight instead.
 *
 * The enemy term E = X - X_enemy points away from the enemy and only applies
 * while the enemy lies inside the member's neighbourhood. Unless weights are
 * overridden, the scheduled weights are randomly modulated every iteration
 * (see modulate).
 */
namespace dfpair::dfa
{

using Vector = std::vector<double>;

struct Bounds
{
  double lower = 0.0;
  double upper = 0.0;

  [[nodiscard]] double range() const noexcept { return upper - lower; }
};

/// Weights of the step equation. All non-negative.
struct Coefficients
{
  double w = 0.9; // inertia
  double s = 0.1; // separation
  double a = 0.1; // alignment
  double c = 0.7; // cohesion
  double f = 1.0; // food
  double e = 1.0; // enemy
};

struct Dragonfly
{
  Vector position;
  Vector step;
  double fitness = 0.0;
};

struct Scored
{
  Vector position;
  double fitness = 0.0;
};

struct SwarmState
{
  std::vector<Dragonfly> members;
  Scored food;  // best ever
  Scored enemy; // worst of the current population
  std::size_t iteration = 0;
  Vector radius;
};

inline constexpr double default_beta = 1.5;

struct SwarmConfig
{
  std::size_t population_size = 50;
  std::size_t max_iterations = 100;
  std::vector<Bounds> bounds;
  std::uint64_t seed = 0;
  /// Replaces the scheduled coefficients verbatim on every iteration.
  std::optional<Coefficients> weights;
  /// Stop as soon as the food fitness reaches this value.
  std::optional<double> target_fitness;
  /// Called after every completed iteration, once all members have moved.
  std::function<void(const SwarmState&)> observer;
};

struct Result
{
  Vector position;
  double fitness = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

using Fitness = std::function<double(std::span<const double>)>;

/// -sum_j (x - x_j); zero when there are no neighbours.
Vector separation(std::span<const double> position, std::span<const Vector> neighbours);

/// Mean of the neighbours' step vectors. Throws on an empty list.
Vector alignment(std::span<const Vector> neighbour_steps);

/// Neighbour centroid minus own position. Throws on an empty list.
Vector cohesion(std::span<const double> position, std::span<const Vector> neighbours);

Vector food_attraction(std::span<const double> position, std::span<const double> food);

/// position - enemy.
Vector enemy_distraction(std::span<const double> position, std::span<const double> enemy);

/// w falls linearly from 0.9 at iteration 0 to 0.2 at the last iteration;
/// the other weights stay at s=0.1, a=0.1, c=0.7, f=1, e=1.
Coefficients coefficient_schedule(std::size_t iteration, std::size_t max_iterations);

/// Random per-iteration weights around the nominal ones. With
/// env = max(0, 1 - 2 * iteration / max_iterations), s, a and c are scaled by
/// 2 * U * env, f by 2 * U and e by env; w is kept. Draws U for s, a, c, f in
/// that order.
Coefficients modulate(const Coefficients& nominal, std::size_t iteration, std::size_t max_iterations, Rng& rng);

/// Members j != i with |x_i,d - x_j,d| <= radius_d in every dimension.
std::vector<std::size_t> neighbourhood(std::size_t member, std::span<const Dragonfly> swarm,
                                       std::span<const double> radius);

/// range/4 + 2 * range * iteration / max_iterations per dimension.
Vector radius_schedule(std::size_t iteration, std::size_t max_iterations, std::span<const Bounds> bounds);

struct StepTerms
{
  std::span<const double> separation;
  std::span<const double> alignment;
  std::span<const double> cohesion;
  std::span<const double> food;
  std::span<const double> enemy;
};

/// s*S + a*A + c*C + f*F + e*E + w*previous, no clamping.
Vector raw_step(const StepTerms& terms, std::span<const double> previous, const Coefficients& k);

/// raw_step with each component clamped to +/- the dimension's range.
Vector step_update(const StepTerms& terms, std::span<const double> previous, const Coefficients& k,
                   std::span<const Bounds> bounds);

/// position + step, clamped into bounds.
Vector position_update(std::span<const double> position, std::span<const double> step,
                       std::span<const Bounds> bounds);

/// Mantegna scale factor for Levy-stable steps of index beta.
double levy_delta(double beta);

/// One Levy component from given uniforms: 0.01 * r1 * delta / |r2|^(1/beta).
double levy_component(double r1, double r2, double beta = default_beta);

/// Draws r1 then r2 for component 0, then component 1, and so on. A zero r2
/// is redrawn.
Vector levy_step(std::size_t dimension, Rng& rng, double beta = default_beta);

/// x * (1 + levy) component-wise, clamped into bounds.
Vector levy_position_update(std::span<const double> position, std::span<const double> levy,
                            std::span<const Bounds> bounds);

/**
 * Runs the swarm for config.max_iterations iterations (or until the target
 * fitness is reached) and returns the best position ever evaluated.
 *
 * Random draws happen in a fixed order: every member's position then step
 * during initialization; inside each iteration the weight draws of modulate
 * (skipped when weights are overridden), then Levy draws for isolated members
 * in member order. Members move in place, in index order.
 */
Result optimize(const Fitness& fitness, const SwarmConfig& config);

} // namespace dfpair::dfa

#endif
