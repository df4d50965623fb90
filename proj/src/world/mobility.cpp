#include "coopsched/world/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "coopsched/core/rng.hpp"

namespace coopsched::world {

namespace {

constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

constexpr double kCarLength = 4.5;
constexpr double kCarWidth = 1.8;
constexpr double kMinGap = 2.0;
constexpr double kHeadway = 1.0;
constexpr double kMaxAccel = 2.5;
constexpr double kPedSize = 0.6;

struct Car {
  std::uint32_t id = 0;
  int i = 0;
  int j = 0;
  int dir = 0;
  int lane = 0;
  double s = 0.0;
  double v = 0.0;
  double v_des = 0.0;
  int next_dir = 0;
  bool is_cov = false;
};

struct Walker {
  std::uint32_t id = 0;
  Vec2 from;
  Vec2 to;
  double s = 0.0;
  double len = 0.0;
};

struct Sidewalk {
  Vec2 a;
  Vec2 b;
};

class Grid {
 public:
  explicit Grid(const ManhattanParams& p) : p_(p), n_(p.grid_nodes), b_(p.block_side_m) {}

  bool has_edge(int i, int j, int d) const {
    const int ni = i + kDx[d];
    const int nj = j + kDy[d];
    return ni >= 0 && ni < n_ && nj >= 0 && nj < n_;
  }

  int edge_key(int i, int j, int d, int lane) const { return (((i * n_ + j) * 4 + d) * 2) + lane; }

  Vec2 node(int i, int j) const { return {i * b_, j * b_}; }

  // Exit direction at the node reached while travelling in `d`.
  int pick_turn(int i, int j, int d, Rng& rng) const {
    const int straight = d;
    const int left = (d + 1) % 4;
    const int right = (d + 3) % 4;
    const double ps = 1.0 - p_.turn_left_prob - p_.turn_right_prob;
    const int options[3] = {straight, left, right};
    const double weights[3] = {ps, p_.turn_left_prob, p_.turn_right_prob};
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      if (has_edge(i, j, options[k])) total += weights[k];
    }
    if (total > 0.0) {
      double u = std::uniform_real_distribution<double>(0.0, total)(rng);
      for (int k = 0; k < 3; ++k) {
        if (!has_edge(i, j, options[k]) || weights[k] <= 0.0) continue;
        if (u < weights[k]) return options[k];
        u -= weights[k];
      }
      for (int k = 2; k >= 0; --k) {
        if (has_edge(i, j, options[k]) && weights[k] > 0.0) return options[k];
      }
    }
    for (int d2 : {right, left, straight, (d + 2) % 4}) {
      if (has_edge(i, j, d2)) return d2;
    }
    throw std::logic_error("grid node without exits");
  }

  int n() const { return n_; }
  double b() const { return b_; }

 private:
  const ManhattanParams& p_;
  int n_;
  double b_;
};

void validate(const ManhattanParams& p) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (p.grid_nodes < 2) fail("grid_nodes must be at least 2");
  if (!(p.lane_width_m > 0.0) || !(p.sidewalk_width_m >= 0.0)) fail("invalid street widths");
  if (!(p.block_side_m > 2.0 * building_inset(p) + 2.0 * kCarLength)) fail("block_side_m too small");
  if (p.n_cars < 1) fail("n_cars must be positive");
  if (!(p.cov_ratio >= 0.0 && p.cov_ratio <= 1.0)) fail("cov_ratio must lie in [0, 1]");
  if (!(p.speed_limit_kmh > 0.0)) fail("speed_limit_kmh must be positive");
  if (!(p.min_speed_fraction > 0.0 && p.min_speed_fraction <= 1.0)) fail("min_speed_fraction must lie in (0, 1]");
  if (p.turn_left_prob < 0.0 || p.turn_right_prob < 0.0 || p.turn_left_prob + p.turn_right_prob > 1.0) {
    fail("turn probabilities must be non-negative and sum to at most 1");
  }
  if (p.ped_arrival_rate < 0.0 || !(p.ped_speed_mps > 0.0)) fail("invalid pedestrian parameters");
  if (p.light_green_s < 0.0) fail("light_green_s must be non-negative");
  if (!(p.delta_t_s > 0.0) || p.delta_t_s > kHeadway) fail("delta_t_s must lie in (0, 1]");
  if (p.warmup_s < 0.0) fail("warmup_s must be non-negative");
  if (p.slots < 1) fail("slots must be positive");
}

class Simulator {
 public:
  explicit Simulator(const ManhattanParams& p)
      : p_(p), grid_(p), rng_(make_rng(p.seed, "mobility")), inset_(building_inset(p)) {
    build_sidewalks();
    place_cars();
    place_walkers();
    if (p_.light_green_s > 0.0) {
      std::uniform_real_distribution<double> phase(0.0, 2.0 * p_.light_green_s);
      phase_.resize(static_cast<std::size_t>(grid_.n() * grid_.n()));
      for (auto& x : phase_) x = phase(rng_);
    }
  }

  void step() {
    advance_cars();
    advance_walkers();
    time_ += p_.delta_t_s;
  }

  WorldFrame snapshot(Slot slot) const {
    WorldFrame f;
    f.slot = slot;
    f.ego_id = ego_id_;
    f.vehicles.reserve(cars_.size());
    for (const auto& c : cars_) {
      const Vec2 u{static_cast<double>(kDx[c.dir]), static_cast<double>(kDy[c.dir])};
      const Vec2 rn{u.y, -u.x};
      const double off = (c.lane + 0.5) * p_.lane_width_m;
      Vehicle v;
      v.id = c.id;
      v.center = grid_.node(c.i, c.j) + c.s * u + off * rn;
      v.heading = std::atan2(u.y, u.x);
      v.length = kCarLength;
      v.width = kCarWidth;
      v.is_cov = c.is_cov;
      f.vehicles.push_back(v);
    }
    for (const auto& w : walkers_) {
      const Vec2 d = w.to - w.from;
      Pedestrian ped;
      ped.id = w.id;
      ped.position = w.from + (w.s / w.len) * d;
      ped.heading = std::atan2(d.y, d.x);
      ped.length = kPedSize;
      ped.width = kPedSize;
      f.pedestrians.push_back(ped);
    }
    return f;
  }

 private:
  void build_sidewalks() {
    const double off = p_.lane_width_m * 2.0 + 0.5 * p_.sidewalk_width_m;
    const int n = grid_.n();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int d : {0, 1}) {
          if (!grid_.has_edge(i, j, d)) continue;
          const Vec2 u{static_cast<double>(kDx[d]), static_cast<double>(kDy[d])};
          const Vec2 nrm{-u.y, u.x};
          const Vec2 a = grid_.node(i, j) + off * u;
          const Vec2 b = grid_.node(i + kDx[d], j + kDy[d]) - off * u;
          for (double side : {-1.0, 1.0}) {
            sidewalks_.push_back({a + (side * off) * nrm, b + (side * off) * nrm});
          }
        }
      }
    }
  }

  void place_cars() {
    const int n = grid_.n();
    std::vector<std::array<int, 3>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int d = 0; d < 4; ++d) {
          if (grid_.has_edge(i, j, d)) edges.push_back({i, j, d});
        }
      }
    }
    const double lo = 15.0;
    const double hi = grid_.b() - inset_ - 15.0;
    const double spacing = kCarLength + kMinGap + 1.0;
    const double capacity = static_cast<double>(edges.size()) * 2.0 * std::floor((hi - lo) / spacing);
    if (static_cast<double>(p_.n_cars) > 0.5 * capacity) {
      throw std::invalid_argument("n_cars exceeds the road capacity of the grid");
    }
    const double v_max = p_.speed_limit_kmh / 3.6;
    std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
    std::uniform_int_distribution<int> pick_lane(0, 1);
    std::uniform_real_distribution<double> pick_s(lo, hi);
    std::uniform_real_distribution<double> pick_speed(p_.min_speed_fraction * v_max, v_max);
    std::unordered_map<int, std::vector<double>> occupied;
    for (int k = 0; k < p_.n_cars; ++k) {
      Car c;
      c.id = static_cast<std::uint32_t>(k + 1);
      bool placed = false;
      for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
        const auto& e = edges[pick_edge(rng_)];
        const int lane = pick_lane(rng_);
        const double s = pick_s(rng_);
        auto& taken = occupied[grid_.edge_key(e[0], e[1], e[2], lane)];
        const bool clash = std::any_of(taken.begin(), taken.end(),
                                       [&](double o) { return std::fabs(o - s) < spacing; });
        if (clash) continue;
        taken.push_back(s);
        c.i = e[0];
        c.j = e[1];
        c.dir = e[2];
        c.lane = lane;
        c.s = s;
        placed = true;
      }
      if (!placed) throw std::invalid_argument("could not place all cars on the grid");
      c.v_des = pick_speed(rng_);
      c.v = c.v_des;
      c.next_dir = grid_.pick_turn(c.i + kDx[c.dir], c.j + kDy[c.dir], c.dir, rng_);
      cars_.push_back(c);
    }

    std::vector<std::size_t> order(cars_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng_);
    const auto floor_cov = static_cast<std::size_t>(std::floor(p_.cov_ratio * p_.n_cars));
    const std::size_t n_cov = std::max<std::size_t>(1, floor_cov);
    for (std::size_t k = 0; k < n_cov; ++k) cars_[order[k]].is_cov = true;
    ego_id_ = cars_[order[0]].id;
  }

  void spawn_walker(bool anywhere) {
    std::uniform_int_distribution<std::size_t> pick(0, sidewalks_.size() - 1);
    const Sidewalk& sw = sidewalks_[pick(rng_)];
    Walker w;
    w.id = next_walker_id_++;
    const bool forward = std::bernoulli_distribution(0.5)(rng_);
    w.from = forward ? sw.a : sw.b;
    w.to = forward ? sw.b : sw.a;
    w.len = norm(w.to - w.from);
    w.s = anywhere ? std::uniform_real_distribution<double>(0.0, w.len)(rng_) : 0.0;
    walkers_.push_back(w);
  }

  void place_walkers() {
    if (p_.ped_arrival_rate <= 0.0 || sidewalks_.empty()) return;
    const double len = norm(sidewalks_.front().b - sidewalks_.front().a);
    const double mean = p_.ped_arrival_rate * len / p_.ped_speed_mps;
    const int count = std::poisson_distribution<int>(mean)(rng_);
    for (int k = 0; k < count; ++k) spawn_walker(true);
  }

  bool green(int i, int j, int dir) const {
    if (p_.light_green_s <= 0.0) return true;
    const double cycle = 2.0 * p_.light_green_s;
    const double tau = std::fmod(time_ + phase_[static_cast<std::size_t>(i * grid_.n() + j)], cycle);
    const bool east_west = tau < p_.light_green_s;
    return (dir % 2 == 0) == east_west;
  }

  void advance_cars() {
    const double b = grid_.b();
    const double dt = p_.delta_t_s;
    std::unordered_map<int, std::vector<std::size_t>> lanes;
    for (std::size_t k = 0; k < cars_.size(); ++k) {
      const Car& c = cars_[k];
      lanes[grid_.edge_key(c.i, c.j, c.dir, c.lane)].push_back(k);
    }
    for (auto& [key, idx] : lanes) {
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) { return cars_[a].s < cars_[c].s; });
    }
    const double stop_line = b - inset_;
    std::vector<double> v_new(cars_.size());
    for (std::size_t k = 0; k < cars_.size(); ++k) {
      const Car& c = cars_[k];
      const auto& lane = lanes[grid_.edge_key(c.i, c.j, c.dir, c.lane)];
      const auto pos = static_cast<std::size_t>(std::find(lane.begin(), lane.end(), k) - lane.begin());
      double gap = std::numeric_limits<double>::infinity();
      if (pos + 1 < lane.size()) {
        gap = cars_[lane[pos + 1]].s - c.s - kCarLength;
      } else {
        const int ei = c.i + kDx[c.dir];
        const int ej = c.j + kDy[c.dir];
        const auto it = lanes.find(grid_.edge_key(ei, ej, c.next_dir, c.lane));
        if (it != lanes.end() && !it->second.empty()) {
          gap = (b - c.s) + cars_[it->second.front()].s - kCarLength;
        }
      }
      const double front = c.s + 0.5 * kCarLength;
      if (front <= stop_line + 1e-9 && !green(c.i + kDx[c.dir], c.j + kDy[c.dir], c.dir)) {
        gap = std::min(gap, stop_line - front + kMinGap);
      }
      const double v_target = std::clamp((gap - kMinGap) / kHeadway, 0.0, c.v_des);
      v_new[k] = std::min(v_target, c.v + kMaxAccel * dt);
    }
    for (std::size_t k = 0; k < cars_.size(); ++k) {
      Car& c = cars_[k];
      c.v = v_new[k];
      c.s += c.v * dt;
      while (c.s >= b) {
        c.s -= b;
        c.i += kDx[c.dir];
        c.j += kDy[c.dir];
        c.dir = c.next_dir;
        c.next_dir = grid_.pick_turn(c.i + kDx[c.dir], c.j + kDy[c.dir], c.dir, rng_);
      }
    }
  }

  void advance_walkers() {
    const double dist = p_.ped_speed_mps * p_.delta_t_s;
    for (auto& w : walkers_) w.s += dist;
    std::erase_if(walkers_, [](const Walker& w) { return w.s >= w.len; });
    if (p_.ped_arrival_rate > 0.0 && !sidewalks_.empty()) {
      const int count = std::poisson_distribution<int>(p_.ped_arrival_rate * p_.delta_t_s)(rng_);
      for (int k = 0; k < count; ++k) spawn_walker(false);
    }
  }

  const ManhattanParams& p_;
  Grid grid_;
  Rng rng_;
  double inset_;
  double time_ = 0.0;
  std::vector<Car> cars_;
  std::vector<Walker> walkers_;
  std::vector<Sidewalk> sidewalks_;
  std::vector<double> phase_;
  std::uint32_t ego_id_ = 0;
  std::uint32_t next_walker_id_ = 1;
};

}  // namespace

double building_inset(const ManhattanParams& p) { return 2.0 * p.lane_width_m + p.sidewalk_width_m; }

std::vector<Rect> manhattan_buildings(const ManhattanParams& p) {
  const double inset = building_inset(p);
  const double b = p.block_side_m;
  std::vector<Rect> out;
  for (int i = 0; i + 1 < p.grid_nodes; ++i) {
    for (int j = 0; j + 1 < p.grid_nodes; ++j) {
      out.push_back({i * b + inset, j * b + inset, (i + 1) * b - inset, (j + 1) * b - inset});
    }
  }
  return out;
}

Trace generate_manhattan_trace(const ManhattanParams& p) {
  validate(p);
  Trace trace;
  trace.buildings = manhattan_buildings(p);
  Simulator sim(p);
  const auto warmup = static_cast<long>(std::llround(p.warmup_s / p.delta_t_s));
  for (long k = 0; k < warmup; ++k) sim.step();
  trace.frames.reserve(static_cast<std::size_t>(p.slots));
  for (Slot t = 1; t <= p.slots; ++t) {
    trace.frames.push_back(sim.snapshot(t));
    sim.step();
  }
  return trace;
}

}  // namespace coopsched::world
