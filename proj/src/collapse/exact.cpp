#include <algorithm>
#include <string>
#include <unordered_set>

#include "state.hpp"

namespace flaglab {
namespace detail {
namespace {

// Collapses can always be reordered so that their dimensions never increase
// (a lower pair never creates freedom for a higher one), so the search only
// branches over pairs whose coface has the current top dimension. Once the top
// dimension is d, removing d-faces only ever makes more (d-1)-faces free, so
// a greedy pass decides the rest.
class ExactSearch {
 public:
  ExactSearch(CollapseState& state, int d, std::size_t budget, IdSteps& steps)
      : state_(state), d_(d), budget_(budget), steps_(steps) {}

  Decision run() {
    const int top = state_.alive_dimension();
    if (top < d_) return Decision::yes;
    if (top == d_) {
      const auto snap = state_.snapshot();
      const std::size_t mark = steps_.size();
      if (greedy_run(state_, d_ - 1, OrderPolicy::Kind::lexicographic, 0, steps_)) return Decision::yes;
      state_.restore(snap);
      steps_.resize(mark);
      return Decision::no;
    }
    std::string key(state_.alive_flags().begin(), state_.alive_flags().end());
    if (failed_.contains(key)) return Decision::no;
    if (++nodes_ > budget_) return Decision::budget_exhausted;

    std::vector<std::pair<FaceId, FaceId>> moves;
    for (std::size_t i = 0; i < state_.complex().face_count(top); ++i) {
      const FaceId tau = state_.id(top, i);
      if (!state_.alive(tau)) continue;
      for (FaceId sigma : state_.facets(tau)) {
        if (state_.free_partner(sigma) == tau) moves.emplace_back(sigma, tau);
      }
    }
    const auto snap = state_.snapshot();
    for (auto [sigma, tau] : moves) {
      state_.apply(sigma, tau);
      steps_.emplace_back(sigma, tau);
      const Decision r = run();
      if (r == Decision::yes) return r;
      steps_.pop_back();
      state_.restore(snap);
      if (r == Decision::budget_exhausted) return r;
    }
    failed_.insert(std::move(key));
    return Decision::no;
  }

 private:
  CollapseState& state_;
  int d_;
  std::size_t budget_;
  IdSteps& steps_;
  std::size_t nodes_ = 0;
  std::unordered_set<std::string> failed_;
};

// Link of v in the alive part of the state, on the same labels. Faces
// containing v are gathered by id; ids are lexicographic within a dimension
// and dropping the common vertex v keeps that order.
SimplicialComplex alive_link(const CollapseState& state, Vertex v) {
  const Vertex single[1] = {v};
  auto start = state.find(single);
  std::vector<std::vector<Vertex>> layers;
  if (!start || !state.alive(*start)) return SimplicialComplex::from_sorted_layers(state.complex().vertex_count(), {}, SimplicialComplex::kUnbounded);
  std::vector<FaceId> found;
  std::vector<FaceId> frontier{*start};
  std::unordered_set<FaceId> seen;
  while (!frontier.empty()) {
    std::vector<FaceId> next;
    for (FaceId f : frontier) {
      for (FaceId g : state.cofaces(f)) {
        if (state.alive(g) && seen.insert(g).second) next.push_back(g);
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end());
  for (FaceId f : found) {
    const auto k = static_cast<std::size_t>(state.dim(f) - 1);
    if (layers.size() <= k) layers.resize(k + 1);
    for (Vertex w : state.vertices(f)) {
      if (w != v) layers[k].push_back(w);
    }
  }
  return SimplicialComplex::from_sorted_layers(state.complex().vertex_count(), std::move(layers),
                                               SimplicialComplex::kUnbounded);
}

std::size_t alive_vertices(const CollapseState& s) {
  return s.top_dimension() < 0 ? 0 : s.alive_count(0);
}

constexpr std::size_t kLinkExactVertices = 12;
constexpr std::size_t kLinkExactBudget = 20000;

}  // namespace

Decision exact_run(CollapseState& state, int d, std::size_t budget, IdSteps& steps) {
  return ExactSearch(state, d, budget, steps).run();
}

bool collapse_around(CollapseState& state, Vertex v, int d, std::uint64_t seed, IdSteps& steps) {
  const SimplicialComplex lk = alive_link(state, v);
  // Nothing of dimension >= d contains v: vacuous.
  if (lk.dimension() < d - 1) return true;

  CollapseState ls(lk);
  const auto fresh = ls.snapshot();
  IdSteps local;
  // Goal inside the link: for d >= 2 remove every face of dimension >= d-1;
  // for d = 1 shrink the link to one vertex w, then (v, vw) finishes.
  auto reached = [&] {
    if (d >= 2) return ls.alive_dimension() <= d - 2;
    return ls.alive_dimension() == 0 && alive_vertices(ls) == 1;
  };
  const int min_free = std::max(d - 2, 0);
  bool ok = greedy_run(ls, min_free, OrderPolicy::Kind::lexicographic, 0, local) && reached();
  if (!ok) {
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
      ls.restore(fresh);
      local.clear();
      ok = greedy_run(ls, min_free, OrderPolicy::Kind::random, mix64(seed + static_cast<std::uint64_t>(attempt) + v), local) && reached();
    }
  }
  if (!ok && d >= 2 && lk.face_count(0) <= kLinkExactVertices) {
    ls.restore(fresh);
    local.clear();
    ok = exact_run(ls, d - 1, kLinkExactBudget, local) == Decision::yes;
  }
  if (!ok) return false;

  auto lifted = [&](FaceId f) {
    auto vs = ls.vertices(f);
    std::vector<Vertex> up(vs.begin(), vs.end());
    up.insert(std::upper_bound(up.begin(), up.end(), v), v);
    return *state.find(up);
  };
  for (auto [s, t] : local) {
    const FaceId S = lifted(s), T = lifted(t);
    state.apply(S, T);
    steps.emplace_back(S, T);
  }
  if (d == 1) {
    FaceId last = kNoFace;
    for (std::size_t i = 0; i < lk.face_count(0); ++i) {
      if (ls.alive(ls.id(0, i))) last = ls.id(0, i);
    }
    const Vertex single[1] = {v};
    const FaceId S = *state.find(single), T = lifted(last);
    state.apply(S, T);
    steps.emplace_back(S, T);
  }
  return true;
}

}  // namespace detail

std::optional<std::vector<CollapseStep>> find_d_collapse(const SimplicialComplex& x, int d,
                                                         std::size_t budget) {
  if (d < 1) throw InputError("find_d_collapse: d must be at least 1");
  detail::CollapseState state(x);
  const auto fresh = state.snapshot();
  detail::IdSteps ids;
  bool ok = detail::greedy_run(state, d - 1, OrderPolicy::Kind::lexicographic, 0, ids);
  if (!ok) {
    state.restore(fresh);
    ids.clear();
    ok = detail::exact_run(state, d, budget, ids) == Decision::yes;
  }
  if (!ok) return std::nullopt;
  std::vector<CollapseStep> out;
  for (auto [s, t] : ids) out.push_back(state.step(s, t));
  return out;
}

Decision is_d_collapsible_exact(const SimplicialComplex& x, int d, std::size_t budget) {
  if (d < 1) throw InputError("is_d_collapsible_exact: d must be at least 1");
  detail::CollapseState state(x);
  const auto fresh = state.snapshot();
  detail::IdSteps ids;
  if (detail::greedy_run(state, d - 1, OrderPolicy::Kind::lexicographic, 0, ids)) return Decision::yes;
  state.restore(fresh);
  ids.clear();
  return detail::exact_run(state, d, budget, ids);
}

CollapseOutcome collapse_around_vertex(const SimplicialComplex& x, Vertex v, int d) {
  if (d < 1) throw InputError("collapse_around_vertex: d must be at least 1");
  if (v >= x.vertex_count()) throw InputError("collapse_around_vertex: vertex out of range");
  detail::CollapseState state(x);
  detail::IdSteps ids;
  CollapseOutcome out;
  if (detail::collapse_around(state, v, d, 0, ids)) {
    for (auto [s, t] : ids) out.steps.push_back(state.step(s, t));
    out.status = CollapseStatus::collapsed_below_d;
  } else {
    out.status = CollapseStatus::stuck;
  }
  out.residual = state.residual();
  return out;
}

}  // namespace flaglab
