#include <istream>
#include <ostream>
#include <queue>
#include <string>

#include "flaglab/topology/io.hpp"
#include "state.hpp"

namespace flaglab {

const char* to_string(CollapseStatus s) {
  switch (s) {
    case CollapseStatus::collapsed_below_d: return "collapsed_below_d";
    case CollapseStatus::almost_collapsed: return "almost_collapsed";
    case CollapseStatus::stuck: return "stuck";
  }
  return "?";
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace detail {
namespace {

struct Candidate {
  int coface_dim;
  std::uint64_t coface_key;
  std::uint64_t face_key;
  FaceId sigma;
  FaceId tau;
};

// std::priority_queue pops the largest element, so "less" means "later".
struct Later {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.coface_dim != b.coface_dim) return a.coface_dim < b.coface_dim;
    if (a.coface_key != b.coface_key) return a.coface_key > b.coface_key;
    return a.face_key > b.face_key;
  }
};

}  // namespace

bool greedy_run(CollapseState& state, int min_free_dim, OrderPolicy::Kind kind, std::uint64_t seed,
                IdSteps& steps) {
  const bool lex = kind == OrderPolicy::Kind::lexicographic;
  const std::uint64_t salt = mix64(seed);
  std::priority_queue<Candidate, std::vector<Candidate>, Later> heap;
  auto offer = [&](FaceId f) {
    if (state.dim(f) < min_free_dim) return;
    const FaceId t = state.free_partner(f);
    if (t == kNoFace) return;
    heap.push({state.dim(t), lex ? t : mix64(salt ^ t), lex ? f : mix64(salt + f), f, t});
  };
  for (FaceId f = 0; f < state.face_total(); ++f) offer(f);
  while (!heap.empty()) {
    const Candidate c = heap.top();
    heap.pop();
    if (!state.legal(c.sigma, c.tau)) continue;
    state.apply(c.sigma, c.tau);
    steps.emplace_back(c.sigma, c.tau);
    for (FaceId g : state.facets(c.tau)) {
      if (g != c.sigma) offer(g);
    }
    for (FaceId g : state.facets(c.sigma)) offer(g);
  }
  return state.alive_dimension() <= min_free_dim;
}

}  // namespace detail

namespace {

CollapseOutcome finish(const detail::CollapseState& state, const detail::IdSteps& ids, bool done) {
  CollapseOutcome out;
  out.steps.reserve(ids.size());
  for (auto [s, t] : ids) out.steps.push_back(state.step(s, t));
  out.residual = state.residual();
  out.status = done ? CollapseStatus::collapsed_below_d : CollapseStatus::stuck;
  return out;
}

}  // namespace

CollapseOutcome greedy_d_collapse(const SimplicialComplex& x, int d, OrderPolicy policy,
                                  std::uint64_t seed) {
  if (d < 1) throw InputError("greedy_d_collapse: d must be at least 1");
  detail::CollapseState state(x);
  detail::IdSteps ids;
  if (policy.kind == OrderPolicy::Kind::lexicographic) {
    const bool done = detail::greedy_run(state, d - 1, policy.kind, seed, ids);
    return finish(state, ids, done);
  }
  const auto start = state.snapshot();
  bool done = false;
  for (int attempt = 0; attempt < std::max(policy.retries, 1); ++attempt) {
    state.restore(start);
    ids.clear();
    done = detail::greedy_run(state, d - 1, policy.kind, seed + static_cast<std::uint64_t>(attempt), ids);
    if (done) break;
  }
  return finish(state, ids, done);
}

SimplicialComplex replay(const SimplicialComplex& x, const std::vector<CollapseStep>& steps) {
  detail::CollapseState state(x);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    auto fail = [&](const std::string& why) {
      throw IllegalCollapse("step " + std::to_string(i) + " (" + st.free_face.to_string() + " -> " +
                            st.coface.to_string() + "): " + why);
    };
    if (st.coface.dimension() != st.free_face.dimension() + 1 || !st.free_face.is_subset_of(st.coface)) {
      fail("not a codimension-one pair");
    }
    auto s = state.find(st.free_face.vertices());
    auto t = state.find(st.coface.vertices());
    if (!s || !t) fail("face not in the complex");
    if (!state.alive(*s) || !state.alive(*t)) fail("face already removed");
    if (!state.legal(*s, *t)) fail("free face has other cofaces");
    state.apply(*s, *t);
  }
  return state.residual();
}

void write_trace(std::ostream& out, const std::vector<CollapseStep>& steps) {
  for (const auto& st : steps) out << st.free_face.to_string() << " -> " << st.coface.to_string() << '\n';
}

std::vector<CollapseStep> read_trace(std::istream& in) {
  std::vector<CollapseStep> steps;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw InputError("trace line without '->': '" + line + "'");
    std::string lhs = line.substr(0, arrow);
    std::string rhs = line.substr(arrow + 2);
    while (!lhs.empty() && lhs.back() == ' ') lhs.pop_back();
    steps.push_back({parse_face(lhs), parse_face(rhs)});
  }
  return steps;
}

}  // namespace flaglab
