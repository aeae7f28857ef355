#include "arena/games/pong.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace arena::pong {
namespace {

int paddle_delta(Action a) {
  switch (a) {
    case Action::Up: return kPaddleSpeed;
    case Action::Down: return -kPaddleSpeed;
    case Action::Stay: return 0;
  }
  return 0;
}

int clamp_paddle(int y) {
  return std::clamp(y, kLowerWall, kUpperWall - kPaddleHeight);
}

Frame snapshot(const State& s) {
  return Frame{s.ball_x, s.ball_y, s.right_y, s.left_y};
}

std::string lower_trimmed(const std::string& text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = text.find_last_not_of(" \t\r\n");
  std::string out = text.substr(b, e - b + 1);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

void serve(State& s, RngStream& env) {
  s.ball_x = kServeX;
  s.ball_y = kServeY;
  static constexpr int kSpeedsX[] = {2, 4};
  static constexpr int kSpeedsY[] = {2, 4, 8};
  int dx = kSpeedsX[env.uniform(2)];
  int dy = kSpeedsY[env.uniform(3)];
  if (env.uniform(2) == 0) dx = -dx;
  if (env.uniform(2) == 0) dy = -dy;
  s.vel_x = dx;
  s.vel_y = dy;
}

State initial_state(RngStream& env) {
  State s;
  serve(s, env);
  s.history.push_back(snapshot(s));
  return s;
}

void step(State& s, Action right, Action left, RngStream& env) {
  s.right_y = clamp_paddle(s.right_y + paddle_delta(right));
  s.left_y = clamp_paddle(s.left_y + paddle_delta(left));

  s.ball_x += s.vel_x;
  s.ball_y += s.vel_y;
  if (s.ball_y > kUpperWall) {
    s.ball_y = 2 * kUpperWall - s.ball_y;
    s.vel_y = -s.vel_y;
  } else if (s.ball_y < kLowerWall) {
    s.ball_y = 2 * kLowerWall - s.ball_y;
    s.vel_y = -s.vel_y;
  }

  // Serve-grid alignment puts the ball exactly on a paddle plane whenever
  // it crosses one, so interception is a point test, never an interval.
  if (s.ball_x == kRightPaddleX && s.vel_x > 0) {
    if (s.ball_y >= s.right_y && s.ball_y <= s.right_y + kPaddleHeight)
      s.vel_x = -s.vel_x;
  } else if (s.ball_x == kLeftPaddleX && s.vel_x < 0) {
    if (s.ball_y >= s.left_y && s.ball_y <= s.left_y + kPaddleHeight)
      s.vel_x = -s.vel_x;
  }

  if (s.ball_x > kRightPaddleX) {
    s.score_left += 1;
    serve(s, env);
  } else if (s.ball_x < kLeftPaddleX) {
    s.score_right += 1;
    serve(s, env);
  }

  s.frame_index += 1;
  s.history.push_back(snapshot(s));
}

std::vector<Frame> observe(const State& s, int k) {
  std::vector<Frame> out;
  if (s.history.empty() || k <= 0) return out;
  int have = static_cast<int>(s.history.size());
  for (int i = k; i > 0; --i) {
    int idx = have - i;
    out.push_back(s.history[idx < 0 ? 0 : idx]);
  }
  return out;
}

int intercept_y(int x, int y, int dx, int dy) {
  long long raw = y + static_cast<long long>(kRightPaddleX - x) * dy / dx;
  long long period = 2LL * kCorridor;
  long long t = raw - kLowerWall;
  long long m = ((t % period) + period) % period;
  long long folded = m <= kCorridor ? m : period - m;
  return kLowerWall + static_cast<int>(folded);
}

std::optional<BallDirection> oracle_direction(const std::vector<Frame>& frames) {
  if (frames.size() < 2) return std::nullopt;
  const Frame& a = frames[frames.size() - 2];
  const Frame& b = frames.back();
  int dx = b.ball_x - a.ball_x;
  int dy = b.ball_y - a.ball_y;
  if (dx == 0 || dy == 0) return std::nullopt;
  if (dx > 0) return dy > 0 ? BallDirection::RightUp : BallDirection::RightDown;
  return dy > 0 ? BallDirection::LeftUp : BallDirection::LeftDown;
}

std::optional<int> oracle_intercept(const std::vector<Frame>& frames) {
  if (frames.size() < 2) return std::nullopt;
  const Frame& a = frames[frames.size() - 2];
  const Frame& b = frames.back();
  int dx = b.ball_x - a.ball_x;
  int dy = b.ball_y - a.ball_y;
  if (dx == 0) return std::nullopt;
  if (dx < 0) return kServeY;  // ball leaving: wait at mid court
  return intercept_y(b.ball_x, b.ball_y, dx, dy);
}

std::string render_frames(const std::vector<Frame>& frames, bool mirrored) {
  std::ostringstream out;
  for (size_t i = 0; i < frames.size(); ++i) {
    Frame f = frames[i];
    if (mirrored) {
      f.ball_x = kRightPaddleX + kLeftPaddleX - f.ball_x;
      std::swap(f.right_y, f.left_y);
    }
    out << "Frame " << (i + 1) << "\n";
    out << "{'ball_x': " << f.ball_x << ", 'ball_y': " << f.ball_y
        << ", 'player_x': " << kRightPaddleX << ", 'player_y': [" << f.right_y
        << ", " << (f.right_y + kPaddleHeight) << "], 'opponent_x': "
        << kLeftPaddleX << ", 'opponent_y': [" << f.left_y << ", "
        << (f.left_y + kPaddleHeight) << "], 'upper_bound': " << kUpperWall
        << ", 'lower_bound': " << kLowerWall << "}\n";
  }
  return out.str();
}

namespace {

std::optional<Action> parse_action(const std::string& text) {
  std::string t = lower_trimmed(text);
  if (t == "0" || t == "stay still" || t == "0 - stay still") return Action::Stay;
  if (t == "1" || t == "move up" || t == "1 - move up") return Action::Up;
  if (t == "2" || t == "move down" || t == "2 - move down") return Action::Down;
  return std::nullopt;
}

const char* action_text(Action a) {
  switch (a) {
    case Action::Stay: return "0 - Stay Still";
    case Action::Up: return "1 - Move Up";
    case Action::Down: return "2 - Move Down";
  }
  return "0 - Stay Still";
}

}  // namespace

void PongGame::reset(RngStream& env) { st_ = initial_state(env); }

GameResult PongGame::result() const {
  GameResult r;
  if (st_.score_right >= kTargetScore) {
    r.terminal = true;
    r.reward_first = 1.0;
    r.reward_second = -1.0;
  } else if (st_.score_left >= kTargetScore) {
    r.terminal = true;
    r.reward_first = -1.0;
    r.reward_second = 1.0;
  }
  return r;
}

std::vector<std::string> PongGame::legal_actions(Seat) const {
  return {"0 - Stay Still", "1 - Move Up", "2 - Move Down"};
}

std::optional<std::string> PongGame::normalize_action(
    Seat, const std::string& action) const {
  auto a = parse_action(action);
  if (!a) return std::nullopt;
  return std::string(action_text(*a));
}

std::vector<Frame> PongGame::viewer_frames(Seat viewer) const {
  std::vector<Frame> frames = observe(st_, kFramesPerTurn);
  if (viewer == Seat::Second) {
    for (Frame& f : frames) {
      f.ball_x = kRightPaddleX + kLeftPaddleX - f.ball_x;
      std::swap(f.right_y, f.left_y);
    }
  }
  return frames;
}

std::string PongGame::state_text(Seat viewer) const {
  return render_frames(viewer_frames(viewer), false);
}

std::vector<Payload> PongGame::compute_truths(Seat viewer) const {
  std::vector<Frame> frames = viewer_frames(viewer);
  std::vector<Payload> truths(2, Payload{});
  if (auto dir = oracle_direction(frames)) truths[0] = *dir;
  if (auto y = oracle_intercept(frames))
    truths[1] = static_cast<int64_t>(*y);
  return truths;
}

void PongGame::apply(Seat, const std::string&, RngStream&) {
  throw std::logic_error("pong resolves both actions at once");
}

void PongGame::apply_both(const std::string& first_action,
                          const std::string& second_action, RngStream& env) {
  auto right = parse_action(first_action);
  auto left = parse_action(second_action);
  if (!right || !left) throw std::invalid_argument("bad pong action");
  for (int i = 0; i < kFramesPerTurn; ++i) step(st_, *right, *left, env);
}

std::string PongGame::reply_for_action(const std::string& action) const {
  auto a = parse_action(action);
  return a ? action_text(*a) : action;
}

}  // namespace arena::pong
