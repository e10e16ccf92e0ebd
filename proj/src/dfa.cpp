#include "dfpair/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dfpair::dfa
{

namespace
{

void require_same(std::size_t a, std::size_t b)
{
  if (a != b)
    throw std::invalid_argument("vector dimensions differ");
}

void validate(const SwarmConfig& config)
{
  if (config.population_size < 1)
    throw std::invalid_argument("population_size must be at least 1");
  if (config.max_iterations < 1)
    throw std::invalid_argument("max_iterations must be at least 1");
  if (config.bounds.empty())
    throw std::invalid_argument("at least one dimension is required");
  for (const auto& b : config.bounds)
    if (!(b.lower <= b.upper))
      throw std::invalid_argument("lower bound exceeds upper bound");
}

bool within(std::span<const double> x, std::span<const double> y, std::span<const double> radius)
{
  for (std::size_t d = 0; d < x.size(); ++d)
    if (std::abs(x[d] - y[d]) > radius[d])
      return false;
  return true;
}

} // namespace

Vector separation(std::span<const double> position, std::span<const Vector> neighbours)
{
  Vector out(position.size(), 0.0);
  for (const auto& other : neighbours)
  {
    require_same(other.size(), position.size());
    for (std::size_t d = 0; d < out.size(); ++d)
      out[d] -= position[d] - other[d];
  }
  return out;
}

Vector alignment(std::span<const Vector> neighbour_steps)
{
  if (neighbour_steps.empty())
    throw std::invalid_argument("alignment needs at least one neighbour");
  Vector out(neighbour_steps.front().size(), 0.0);
  for (const auto& step : neighbour_steps)
  {
    require_same(step.size(), out.size());
    for (std::size_t d = 0; d < out.size(); ++d)
      out[d] += step[d];
  }
  const double n = static_cast<double>(neighbour_steps.size());
  for (auto& v : out)
    v /= n;
  return out;
}

Vector cohesion(std::span<const double> position, std::span<const Vector> neighbours)
{
  if (neighbours.empty())
    throw std::invalid_argument("cohesion needs at least one neighbour");
  Vector out(position.size(), 0.0);
  for (const auto& other : neighbours)
  {
    require_same(other.size(), position.size());
    for (std::size_t d = 0; d < out.size(); ++d)
      out[d] += other[d];
  }
  const double n = static_cast<double>(neighbours.size());
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = out[d] / n - position[d];
  return out;
}

Vector food_attraction(std::span<const double> position, std::span<const double> food)
{
  require_same(position.size(), food.size());
  Vector out(position.size());
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = food[d] - position[d];
  return out;
}

Vector enemy_distraction(std::span<const double> position, std::span<const double> enemy)
{
  require_same(position.size(), enemy.size());
  Vector out(position.size());
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = position[d] - enemy[d];
  return out;
}

Coefficients coefficient_schedule(std::size_t iteration, std::size_t max_iterations)
{
  Coefficients k;
  constexpr double w_start = 0.9;
  constexpr double w_end = 0.2;
  if (max_iterations > 1)
  {
    const double t = static_cast<double>(iteration) / static_cast<double>(max_iterations - 1);
    k.w = w_start - (w_start - w_end) * t;
  }
  return k;
}

Coefficients modulate(const Coefficients& nominal, std::size_t iteration, std::size_t max_iterations, Rng& rng)
{
  const double t = static_cast<double>(iteration) / static_cast<double>(max_iterations);
  const double envelope = std::max(0.0, 1.0 - 2.0 * t);
  Coefficients k = nominal;
  k.s *= 2.0 * rng.uniform() * envelope;
  k.a *= 2.0 * rng.uniform() * envelope;
  k.c *= 2.0 * rng.uniform() * envelope;
  k.f *= 2.0 * rng.uniform();
  k.e *= envelope;
  return k;
}

std::vector<std::size_t> neighbourhood(std::size_t member, std::span<const Dragonfly> swarm,
                                       std::span<const double> radius)
{
  std::vector<std::size_t> out;
  const auto& x = swarm[member].position;
  for (std::size_t j = 0; j < swarm.size(); ++j)
  {
    if (j == member)
      continue;
    if (within(x, swarm[j].position, radius))
      out.push_back(j);
  }
  return out;
}

Vector radius_schedule(std::size_t iteration, std::size_t max_iterations, std::span<const Bounds> bounds)
{
  const double t = static_cast<double>(iteration) / static_cast<double>(max_iterations);
  Vector out(bounds.size());
  for (std::size_t d = 0; d < bounds.size(); ++d)
  {
    const double range = bounds[d].range();
    out[d] = range / 4.0 + range * 2.0 * t;
  }
  return out;
}

Vector raw_step(const StepTerms& t, std::span<const double> previous, const Coefficients& k)
{
  const std::size_t n = previous.size();
  require_same(t.separation.size(), n);
  require_same(t.alignment.size(), n);
  require_same(t.cohesion.size(), n);
  require_same(t.food.size(), n);
  require_same(t.enemy.size(), n);
  Vector out(n);
  for (std::size_t d = 0; d < n; ++d)
    out[d] = k.s * t.separation[d] + k.a * t.alignment[d] + k.c * t.cohesion[d] + k.f * t.food[d] +
             k.e * t.enemy[d] + k.w * previous[d];
  return out;
}

Vector step_update(const StepTerms& terms, std::span<const double> previous, const Coefficients& k,
                   std::span<const Bounds> bounds)
{
  Vector out = raw_step(terms, previous, k);
  require_same(bounds.size(), out.size());
  for (std::size_t d = 0; d < out.size(); ++d)
  {
    const double limit = bounds[d].range();
    out[d] = std::clamp(out[d], -limit, limit);
  }
  return out;
}

Vector position_update(std::span<const double> position, std::span<const double> step,
                       std::span<const Bounds> bounds)
{
  require_same(position.size(), step.size());
  require_same(position.size(), bounds.size());
  Vector out(position.size());
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = std::clamp(position[d] + step[d], bounds[d].lower, bounds[d].upper);
  return out;
}

double levy_delta(double beta)
{
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  const double ratio = num / den;
  // sin(pi) evaluates to ~1e-16 rather than 0; anything that small is zero.
  if (std::abs(ratio) < 1e-12)
    return 0.0;
  return std::pow(ratio, 1.0 / beta);
}

double levy_component(double r1, double r2, double beta)
{
  return 0.01 * r1 * levy_delta(beta) / std::pow(std::abs(r2), 1.0 / beta);
}

Vector levy_step(std::size_t dimension, Rng& rng, double beta)
{
  const double delta = levy_delta(beta);
  Vector out(dimension);
  for (auto& component : out)
  {
    const double r1 = rng.uniform();
    double r2 = rng.uniform();
    while (r2 == 0.0)
      r2 = rng.uniform();
    component = 0.01 * r1 * delta / std::pow(r2, 1.0 / beta);
  }
  return out;
}

Vector levy_position_update(std::span<const double> position, std::span<const double> levy,
                            std::span<const Bounds> bounds)
{
  require_same(position.size(), levy.size());
  require_same(position.size(), bounds.size());
  Vector out(position.size());
  for (std::size_t d = 0; d < out.size(); ++d)
    out[d] = std::clamp(position[d] + levy[d] * position[d], bounds[d].lower, bounds[d].upper);
  return out;
}

Result optimize(const Fitness& fitness, const SwarmConfig& config)
{
  validate(config);
  const std::span<const Bounds> bounds = config.bounds;
  const std::size_t dim = bounds.size();
  Rng rng(config.seed);

  SwarmState state;
  state.members.resize(config.population_size);
  for (auto& m : state.members)
  {
    m.position.resize(dim);
    m.step.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
      m.position[d] = rng.uniform(bounds[d].lower, bounds[d].upper);
    for (std::size_t d = 0; d < dim; ++d)
      m.step[d] = rng.uniform(-bounds[d].range(), bounds[d].range());
  }

  Result result;
  bool have_food = false;
  std::vector<Vector> near_positions;
  std::vector<Vector> near_steps;

  for (std::size_t iter = 0; iter < config.max_iterations; ++iter)
  {
    state.iteration = iter;

    // Evaluate; ties go to the lowest member index.
    std::size_t best = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < state.members.size(); ++i)
    {
      auto& m = state.members[i];
      m.fitness = fitness(m.position);
      ++result.evaluations;
      if (m.fitness > state.members[best].fitness)
        best = i;
      if (m.fitness < state.members[worst].fitness)
        worst = i;
    }
    if (!have_food || state.members[best].fitness > state.food.fitness)
    {
      state.food = {state.members[best].position, state.members[best].fitness};
      have_food = true;
    }
    state.enemy = {state.members[worst].position, state.members[worst].fitness};
    result.iterations = iter + 1;

    if (config.target_fitness && state.food.fitness >= *config.target_fitness)
      break;

    const Coefficients k = config.weights
                               ? *config.weights
                               : modulate(coefficient_schedule(iter, config.max_iterations), iter,
                                          config.max_iterations, rng);
    state.radius = radius_schedule(iter, config.max_iterations, bounds);

    for (std::size_t i = 0; i < state.members.size(); ++i)
    {
      auto& m = state.members[i];
      const auto near = neighbourhood(i, state.members, state.radius);
      if (near.empty())
      {
        const Vector levy = levy_step(dim, rng);
        m.position = levy_position_update(m.position, levy, bounds);
        std::fill(m.step.begin(), m.step.end(), 0.0);
        continue;
      }
      // Buffers only grow so the inner vectors keep their capacity.
      if (near_positions.size() < near.size())
      {
        near_positions.resize(near.size());
        near_steps.resize(near.size());
      }
      for (std::size_t n = 0; n < near.size(); ++n)
      {
        near_positions[n] = state.members[near[n]].position;
        near_steps[n] = state.members[near[n]].step;
      }
      const std::span<const Vector> positions(near_positions.data(), near.size());
      const std::span<const Vector> steps(near_steps.data(), near.size());
      const Vector s = separation(m.position, positions);
      const Vector a = alignment(steps);
      const Vector c = cohesion(m.position, positions);
      const Vector f = food_attraction(m.position, state.food.position);
      // The enemy only repels members whose neighbourhood contains it.
      const Vector e = within(m.position, state.enemy.position, state.radius)
                           ? enemy_distraction(m.position, state.enemy.position)
                           : Vector(dim, 0.0);
      m.step = step_update({s, a, c, f, e}, m.step, k, bounds);
      m.position = position_update(m.position, m.step, bounds);
    }

    if (config.observer)
      config.observer(state);
  }

  result.position = state.food.position;
  result.fitness = state.food.fitness;
  return result;
}

} // namespace dfpair::dfa
