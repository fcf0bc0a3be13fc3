#pragma once

// Forward-model and agent contracts shared by every game and every AI.

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "xkg/graphics.hpp"

namespace xkg {

struct Action {
  int id = 0;
  std::string_view label;

  friend bool operator==(const Action& a, const Action& b) { return a.id == b.id; }
};

enum class Key { left, right, up, down, space, escape, other };

struct KeyEvent {
  Key code = Key::other;
  bool pressed = true;
};

/*
 * A game state usable as a forward model.
 *
 * Copying is branching: `S copy = state;` yields a fully independent deep copy,
 * including the state's own PRNG, so planners roll copies forward without
 * touching the live game. next() advances exactly one tick in place.
 */
template <class S>
concept ForwardModel = std::copyable<S> && requires(S s, const S cs, Action a, Key k) {
  s.next(a);
  { cs.score() } -> std::convertible_to<double>;
  { cs.is_terminal() } -> std::same_as<bool>;
  { cs.n_actions() } -> std::convertible_to<int>;
  { cs.actions() } -> std::convertible_to<std::span<const Action>>;
  { cs.tick() } -> std::convertible_to<std::int64_t>;
  { cs.hash() } -> std::same_as<std::uint64_t>;
};

/// A forward model that can also draw itself and accept keyboard input.
template <class S>
concept PlayableGame = ForwardModel<S> && requires(const S cs, Key k) {
  { cs.render() } -> std::same_as<DrawList>;
  { S::actions() } -> std::convertible_to<std::span<const Action>>;
  { S::action_for_key(k) } -> std::same_as<std::optional<int>>;
  { S::kName } -> std::convertible_to<std::string_view>;
};

/// Agents see the state only through a const reference; any lookahead must
/// happen on copies.
template <class A, class S>
concept Agent = ForwardModel<S> && requires(A agent, const S& s) {
  { agent.select_action(s) } -> std::same_as<Action>;
};

template <ForwardModel S>
[[nodiscard]] std::uint64_t state_hash(const S& s) {
  return s.hash();
}

/// Maps a key press to an action for game S; releases and unmapped keys
/// yield nothing.
template <PlayableGame S>
[[nodiscard]] std::optional<Action> key_to_action(const KeyEvent& e) {
  if (!e.pressed) return std::nullopt;
  const auto id = S::action_for_key(e.code);
  if (!id) return std::nullopt;
  return S::actions()[static_cast<std::size_t>(*id)];
}

template <class S>
struct HeadlessResult {
  S state;
  std::int64_t ticks = 0;
};

struct NoTickObserver {
  template <class S>
  void operator()(const S&) const {}
};

/// Runs policy and state without rendering until the state is terminal or
/// max_ticks transitions have happened. `on_tick` sees the state after each
/// transition.
template <ForwardModel S, Agent<S> P, class Observer = NoTickObserver>
[[nodiscard]] HeadlessResult<S> run_headless(S state, P& policy, std::int64_t max_ticks, Observer&& on_tick = {}) {
  std::int64_t ticks = 0;
  while (ticks < max_ticks && !state.is_terminal()) {
    state.next(policy.select_action(state));
    ++ticks;
    on_tick(state);
  }
  return {std::move(state), ticks};
}

}  // namespace xkg
