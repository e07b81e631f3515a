#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qgrid {

using Coord = std::int32_t;

/// Integer coordinate vector, one entry per grid axis. Signed so that a
/// tentative out-of-bounds move is representable before the validity check.
using Position = std::vector<Coord>;

/// "(x, y, ...)" rendering for messages and logs.
std::string format_position(std::span<const Coord> p);

/// Ordered, immutable table of unit displacement vectors. Every axis
/// contributes exactly one +1 and one -1 action, so size() == 2 * dimension().
class ActionTable {
 public:
  /// Validates and adopts an explicit delta list. Each delta must have
  /// exactly one nonzero entry equal to +1 or -1, and each axis must appear
  /// with both signs exactly once.
  static ActionTable from_deltas(std::vector<Position> deltas);

  /// Canonical N-D ordering: action 2k -> +1 on axis k, action 2k+1 -> -1 on
  /// axis k.
  static ActionTable canonical(int dimension);

  int size() const noexcept { return static_cast<int>(deltas_.size()); }
  int dimension() const noexcept { return dim_; }

  /// Displacement of one action. Throws std::invalid_argument when the index
  /// is out of range.
  std::span<const Coord> delta(int action) const;

 private:
  explicit ActionTable(std::vector<Position> deltas, int dim)
      : deltas_(std::move(deltas)), dim_(dim) {}

  std::vector<Position> deltas_;
  int dim_ = 0;
};

/// Immutable N-dimensional grid task: per-axis extents, start and goal
/// states, an action table, and the reward layout (goal_reward on entering
/// the goal, step_reward everywhere else). Safe to share across threads.
class GridSpec {
 public:
  /// Validates everything: extents >= 1, start/goal inside the grid,
  /// start != goal, action table dimension matching. Construction errors
  /// name the offending coordinate.
  GridSpec(std::vector<Coord> extents, Position start, Position goal,
           ActionTable actions, double goal_reward = 1.0, double step_reward = 0.0);

  int dimension() const noexcept { return static_cast<int>(extents_.size()); }
  const std::vector<Coord>& extents() const noexcept { return extents_; }
  const Position& start() const noexcept { return start_; }
  const Position& goal() const noexcept { return goal_; }
  const ActionTable& actions() const noexcept { return actions_; }
  int action_count() const noexcept { return actions_.size(); }
  double goal_reward() const noexcept { return goal_reward_; }
  double step_reward() const noexcept { return step_reward_; }

  /// Product of the extents.
  std::size_t state_count() const noexcept;

  /// True iff 0 <= p[i] < extents[i] on every axis. Throws on dimension
  /// mismatch.
  bool is_valid_position(std::span<const Coord> p) const;

  /// goal_reward when state equals the goal, step_reward otherwise.
  double get_reward(std::span<const Coord> state) const;

  /// State reached by applying an action: the displaced position when it
  /// stays inside the grid, the unchanged state otherwise (boundary bounce).
  /// Throws std::invalid_argument on an out-of-range action or invalid state.
  Position take_action(std::span<const Coord> state, int action) const;

 private:
  std::vector<Coord> extents_;
  Position start_;
  Position goal_;
  ActionTable actions_;
  double goal_reward_;
  double step_reward_;
};

/// 2D grid with the classic action order: 0 up (y+1), 1 down (y-1),
/// 2 left (x-1), 3 right (x+1).
GridSpec make_2d(Coord width, Coord height, Position start, Position goal,
                 double goal_reward = 1.0, double step_reward = 0.0);

/// 3D grid extending the 2D order with 4 forward (z+1), 5 backward (z-1).
GridSpec make_3d(Coord width, Coord height, Coord depth, Position start, Position goal,
                 double goal_reward = 1.0, double step_reward = 0.0);

/// N-D grid with the canonical axis-major action order (see
/// ActionTable::canonical). Note this differs from make_2d/make_3d, which
/// keep the classic y-first order.
GridSpec make_nd(std::vector<Coord> extents, Position start, Position goal,
                 double goal_reward = 1.0, double step_reward = 0.0);

}  // namespace qgrid
