#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::pong {

// Court geometry and pacing.  The y axis points up; the ball corridor is
// the 160 units between the walls.
constexpr int kLowerWall = 16;
constexpr int kUpperWall = 176;
constexpr int kCorridor = kUpperWall - kLowerWall;
constexpr int kRightPaddleX = 140;
constexpr int kLeftPaddleX = 20;
constexpr int kPaddleHeight = 16;
constexpr int kPaddleSpeed = 4;
constexpr int kFramesPerTurn = 3;  // one decision every three physics frames
constexpr int kTargetScore = 5;
constexpr int kServeX = 80;  // keeps ball x aligned with both paddle planes
constexpr int kServeY = 96;

enum class Action { Stay = 0, Up = 1, Down = 2 };

// One rendered observation; paddle fields store the lower interval edge
// (the interval is [y, y+16]).
struct Frame {
  int ball_x = 0;
  int ball_y = 0;
  int right_y = 0;
  int left_y = 0;
  auto operator<=>(const Frame&) const = default;
};

struct State {
  int ball_x = kServeX, ball_y = kServeY;
  int vel_x = 0, vel_y = 0;
  int right_y = kServeY - kPaddleHeight / 2;  // First seat's paddle
  int left_y = kServeY - kPaddleHeight / 2;   // Second seat's paddle
  int score_right = 0, score_left = 0;
  int frame_index = 0;
  std::vector<Frame> history;  // initial snapshot plus one per frame
};

void serve(State& s, RngStream& env);
State initial_state(RngStream& env);

// One physics frame: paddles move (clamped), ball advances with wall
// reflection, then the paddle planes are resolved (reflect or score).
void step(State& s, Action right, Action left, RngStream& env);

// Last k post-step snapshots, padded by repeating the earliest frame.
std::vector<Frame> observe(const State& s, int k);

// Closed-form intercept for a right-moving ball: y at x = 140, folded
// into [16, 176] by the even 2L-periodic triangle fold.
int intercept_y(int x, int y, int dx, int dy);

// Frame-facing oracles (exactly what the prompt asks about).  nullopt
// marks an undefined truth: a zero delta component for the direction, a
// zero x delta for the intercept.  A leftward ball's intercept truth is
// the mid-court y (the prompt's "move to the middle" rule).
std::optional<BallDirection> oracle_direction(const std::vector<Frame>& frames);
std::optional<int> oracle_intercept(const std::vector<Frame>& frames);

std::string render_frames(const std::vector<Frame>& frames, bool mirrored);

class PongGame final : public Game {
 public:
  GameId id() const override { return GameId::Pong; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override { return Seat::First; }
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  void apply_both(const std::string& first_action,
                  const std::string& second_action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }
  void set_state(State s) { st_ = std::move(s); }
  std::vector<Frame> viewer_frames(Seat viewer) const;

 private:
  State st_;
};

}  // namespace arena::pong
