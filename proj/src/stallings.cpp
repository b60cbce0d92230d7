#include "amalgam/stallings.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>

namespace amalgam {

namespace {

constexpr std::size_t npos = SubgroupGraph::npos;

struct RawEdge {
  std::size_t from;
  std::size_t to;
  std::uint32_t letter;
  Word weight;
  bool alive = true;
};

Word empty_word(AlphabetPtr const& a) { return Word(a); }

}  // namespace

// Turns folded edge lists into the canonical immutable representation.
class GraphBuilder {
 public:
  static GeneratingTuple finalize(AlphabetPtr alphabet, std::size_t n,
                                  std::size_t base, std::vector<RawEdge> edges,
                                  bool weighted, AlphabetPtr t_alphabet,
                                  std::vector<Word> generators,
                                  std::vector<FoldRecord> history);

  static GeneratingTuple fold_rose(AlphabetPtr alphabet,
                                   std::vector<Word> const& generators);
};

GeneratingTuple GraphBuilder::finalize(AlphabetPtr alphabet, std::size_t n,
                                       std::size_t base,
                                       std::vector<RawEdge> edges,
                                       bool weighted, AlphabetPtr t_alphabet,
                                       std::vector<Word> generators,
                                       std::vector<FoldRecord> history) {
  std::size_t const stride = 2 * alphabet->size();

  // Core trimming: strip states of degree <= 1 other than the basepoint.
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].alive) {
      continue;
    }
    degree[edges[e].from]++;
    degree[edges[e].to]++;
    incident[edges[e].from].push_back(e);
    if (edges[e].to != edges[e].from) {
      incident[edges[e].to].push_back(e);
    }
  }
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (s != base && degree[s] <= 1) {
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.back();
    queue.pop_back();
    if (removed[s]) {
      continue;
    }
    removed[s] = true;
    for (std::size_t e : incident[s]) {
      if (!edges[e].alive) {
        continue;
      }
      edges[e].alive = false;
      std::size_t other = edges[e].from == s ? edges[e].to : edges[e].from;
      if (other == s) {
        continue;
      }
      degree[other]--;
      if (other != base && !removed[other] && degree[other] <= 1) {
        queue.push_back(other);
      }
    }
  }

  // Breadth-first numbering with ties broken by letter index, + before -.
  std::vector<std::size_t> raw_trans(n * stride, npos);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].alive) {
      continue;
    }
    auto const& ed = edges[e];
    std::size_t plus = 2 * static_cast<std::size_t>(ed.letter);
    assert(raw_trans[ed.from * stride + plus] == npos);
    assert(raw_trans[ed.to * stride + plus + 1] == npos);
    raw_trans[ed.from * stride + plus] = e;
    raw_trans[ed.to * stride + plus + 1] = e;
  }
  std::vector<std::size_t> new_index(n, npos);
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent_edge;  // raw edge into each new state
  std::vector<Letter> parent_letter;
  std::vector<std::size_t> parent_state;
  new_index[base] = 0;
  order.push_back(base);
  parent_edge.push_back(npos);
  parent_letter.push_back(Letter{});
  parent_state.push_back(npos);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::size_t s = order[head];
    for (std::size_t code = 0; code < stride; ++code) {
      std::size_t e = raw_trans[s * stride + code];
      if (e == npos) {
        continue;
      }
      Letter l = Letter::from_code(code);
      std::size_t t = l.sign > 0 ? edges[e].to : edges[e].from;
      if (new_index[t] != npos) {
        continue;
      }
      new_index[t] = order.size();
      order.push_back(t);
      parent_edge.push_back(e);
      parent_letter.push_back(l);
      parent_state.push_back(head);
    }
  }

  SubgroupGraph graph;
  graph.alphabet_ = alphabet;
  graph.stride_ = stride;
  graph.history_ = std::move(history);
  std::size_t const m = order.size();

  struct Kept {
    SubgroupGraph::Edge edge;
    std::size_t raw;
  };
  std::vector<Kept> kept;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].alive || new_index[edges[e].from] == npos) {
      continue;
    }
    kept.push_back({{new_index[edges[e].from], new_index[edges[e].to],
                     edges[e].letter},
                    e});
  }
  std::sort(kept.begin(), kept.end(), [](Kept const& x, Kept const& y) {
    if (x.edge.source != y.edge.source) {
      return x.edge.source < y.edge.source;
    }
    return x.edge.letter < y.edge.letter;
  });
  std::vector<std::size_t> raw_to_final(edges.size(), npos);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    graph.edges_.push_back(kept[i].edge);
    raw_to_final[kept[i].raw] = i;
  }
  graph.transitions_.assign(m * stride, npos);
  for (std::size_t i = 0; i < graph.edges_.size(); ++i) {
    auto const& ed = graph.edges_[i];
    std::size_t plus = 2 * static_cast<std::size_t>(ed.letter);
    graph.transitions_[ed.source * stride + plus] = i;
    graph.transitions_[ed.target * stride + plus + 1] = i;
  }
  graph.tree_edge_.assign(graph.edges_.size(), false);
  graph.tree_paths_.reserve(m);
  graph.tree_paths_.push_back(empty_word(alphabet));
  for (std::size_t i = 1; i < m; ++i) {
    graph.tree_edge_[raw_to_final[parent_edge[i]]] = true;
    std::vector<Letter> path = graph.tree_paths_[parent_state[i]].letters();
    path.push_back(parent_letter[i]);
    graph.tree_paths_.push_back(Word::unchecked(alphabet, std::move(path)));
  }
  graph.cotree_index_.assign(graph.edges_.size(), npos);
  for (std::size_t i = 0; i < graph.edges_.size(); ++i) {
    if (!graph.tree_edge_[i]) {
      graph.cotree_index_[i] = graph.cotree_edges_.size();
      graph.cotree_edges_.push_back(i);
    }
  }

  auto data = std::make_shared<GeneratingTuple::Data>();
  std::vector<Word> basis;
  for (std::size_t e : graph.cotree_edges_) {
    auto const& ed = graph.edges_[e];
    std::vector<Letter> raw = graph.tree_paths_[ed.source].letters();
    raw.push_back(Letter{ed.letter, 1});
    auto const& back = graph.tree_paths_[ed.target].letters();
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      raw.push_back(it->inverse());
    }
    basis.push_back(Word(alphabet, raw));
  }
  data->basis_alphabet = Alphabet::numbered("s", basis.size());

  if (weighted) {
    data->t_alphabet = std::move(t_alphabet);
    data->generators = std::move(generators);
    data->weights.assign(graph.edges_.size(), empty_word(data->t_alphabet));
    for (std::size_t i = 0; i < kept.size(); ++i) {
      data->weights[i] = std::move(edges[kept[i].raw].weight);
    }
  } else {
    data->t_alphabet = data->basis_alphabet;
    data->generators = basis;
    data->weights.assign(graph.edges_.size(), empty_word(data->t_alphabet));
    for (std::size_t i = 0; i < graph.edges_.size(); ++i) {
      if (graph.cotree_index_[i] != npos) {
        data->weights[i] = Word::power(data->t_alphabet, graph.cotree_index_[i], 1);
      }
    }
  }
  data->basis = std::move(basis);
  data->graph = std::move(graph);
  assert(data->graph.check_invariants());

  GeneratingTuple result;
  result.data_ = std::move(data);
  return result;
}

// Folding keeps, for every state s, an implicit offset σ(s) in the free group
// with σ(basepoint) = 1, and for every edge s -x-> t the invariant
//   substitute(weight) == σ(s) x σ(t)^-1.
// Along any closed path at the basepoint the offsets telescope, so the
// product of edge weights spells the loop label in the generators.
GeneratingTuple GraphBuilder::fold_rose(AlphabetPtr alphabet,
                                        std::vector<Word> const& input) {
  std::vector<Word> generators;
  for (auto const& g : input) {
    if (g.alphabet() != alphabet) {
      throw AlphabetMismatch();
    }
    if (!g.empty()) {
      generators.push_back(g);
    }
  }
  AlphabetPtr t_alphabet = Alphabet::numbered("t", generators.size());
  std::size_t const stride = 2 * alphabet->size();

  std::vector<RawEdge> edges;
  std::size_t n = 1;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    auto const& u = generators[gi].letters();
    std::size_t prev = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      bool last = j + 1 == u.size();
      std::size_t next = last ? 0 : n++;
      Word tau = last ? Word::power(t_alphabet, gi, 1) : Word(t_alphabet);
      if (u[j].sign > 0) {
        edges.push_back({prev, next, u[j].index, std::move(tau)});
      } else {
        edges.push_back({next, prev, u[j].index, invert(tau)});
      }
      prev = next;
    }
  }

  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].from].push_back(e);
    if (edges[e].to != edges[e].from) {
      incident[edges[e].to].push_back(e);
    }
  }
  std::vector<bool> dead(n, false);
  std::vector<FoldRecord> history;
  std::vector<std::size_t> work(n);
  std::iota(work.begin(), work.end(), std::size_t{0});

  struct Step {
    std::size_t edge = npos;
    std::size_t other;
    bool forward;
  };
  std::vector<Step> slot(stride);

  while (!work.empty()) {
    std::size_t s = work.back();
    work.pop_back();
    if (dead[s]) {
      continue;
    }
    std::fill(slot.begin(), slot.end(), Step{});
    bool folded = false;
    // Drop dead or duplicate entries while scanning.
    auto& inc = incident[s];
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    inc.erase(std::remove_if(inc.begin(), inc.end(),
                             [&](std::size_t e) { return !edges[e].alive; }),
              inc.end());
    for (std::size_t e : inc) {
      auto const& ed = edges[e];
      for (int dir = 0; dir < 2 && !folded; ++dir) {
        bool forward = dir == 0;
        if ((forward && ed.from != s) || (!forward && ed.to != s)) {
          continue;
        }
        Letter l{ed.letter, static_cast<std::int8_t>(forward ? 1 : -1)};
        std::size_t other = forward ? ed.to : ed.from;
        Step& existing = slot[l.code()];
        if (existing.edge == npos) {
          existing = {e, other, forward};
          continue;
        }
        if (existing.edge == e) {
          continue;
        }
        // Two edges leave s with the same signed label.
        Word tau1 = existing.forward ? edges[existing.edge].weight
                                     : invert(edges[existing.edge].weight);
        Word tau2 = forward ? ed.weight : invert(ed.weight);
        std::size_t keep = existing.other;
        std::size_t gone = other;
        folded = true;
        if (keep != gone) {
          Word rho = concat(invert(tau1), tau2);  // σ(keep) σ(gone)^-1
          if (gone == 0) {
            std::swap(keep, gone);
            rho = invert(rho);
          }
          history.push_back({s, keep, gone, l});
          Word rho_inv = invert(rho);
          for (std::size_t f : incident[gone]) {
            auto& fe = edges[f];
            if (!fe.alive) {
              continue;
            }
            if (fe.from == gone) {
              fe.from = keep;
              fe.weight = concat(rho, fe.weight);
            }
            if (fe.to == gone) {
              fe.to = keep;
              fe.weight = concat(fe.weight, rho_inv);
            }
            incident[keep].push_back(f);
          }
          incident[gone].clear();
          dead[gone] = true;
          work.push_back(keep);
        }
        edges[e].alive = false;
      }
      if (folded) {
        break;
      }
    }
    if (folded) {
      if (!dead[s]) {
        work.push_back(s);
      }
    }
  }

  return finalize(alphabet, n, 0, std::move(edges), true, std::move(t_alphabet),
                  std::move(generators), std::move(history));
}

std::pair<std::size_t, std::size_t> SubgroupGraph::trace(Word const& w,
                                                         std::size_t from) const {
  if (w.alphabet() != alphabet_) {
    throw AlphabetMismatch();
  }
  std::size_t state = from;
  std::size_t i = 0;
  for (; i < w.size(); ++i) {
    std::size_t next = follow(state, w[i]);
    if (next == npos) {
      break;
    }
    state = next;
  }
  return {state, i};
}

std::size_t SubgroupGraph::diameter() const {
  std::size_t n = num_states();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), npos);
    dist[src] = 0;
    std::deque<std::size_t> q{src};
    while (!q.empty()) {
      std::size_t s = q.front();
      q.pop_front();
      for (std::size_t code = 0; code < stride_; ++code) {
        std::size_t t = follow(s, Letter::from_code(code));
        if (t != npos && dist[t] == npos) {
          dist[t] = dist[s] + 1;
          best = std::max(best, dist[t]);
          q.push_back(t);
        }
      }
    }
  }
  return best;
}

bool SubgroupGraph::check_invariants() const {
  std::size_t n = num_states();
  std::vector<std::size_t> degree(n, 0);
  for (auto const& e : edges_) {
    degree[e.source]++;
    degree[e.target]++;
  }
  for (std::size_t s = 1; s < n; ++s) {
    if (degree[s] < 2) {
      return false;
    }
  }
  // Foldedness: transitions table is injective per (state, signed letter),
  // which holds iff every edge is registered at both ends.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Letter plus{edges_[i].letter, 1};
    if (edge_of(edges_[i].source, plus) != i
        || edge_of(edges_[i].target, plus.inverse()) != i) {
      return false;
    }
  }
  // Tree paths read to their states and are breadth-first geodesics.
  std::vector<std::size_t> dist(n, npos);
  dist[0] = 0;
  std::deque<std::size_t> q{0};
  while (!q.empty()) {
    std::size_t s = q.front();
    q.pop_front();
    for (std::size_t code = 0; code < stride_; ++code) {
      std::size_t t = follow(s, Letter::from_code(code));
      if (t != npos && dist[t] == npos) {
        dist[t] = dist[s] + 1;
        q.push_back(t);
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    auto [end, used] = trace(tree_paths_[s]);
    if (end != s || used != tree_paths_[s].size()
        || dist[s] != tree_paths_[s].size()) {
      return false;
    }
  }
  return true;
}

GeneratingTuple GeneratingTuple::build(AlphabetPtr alphabet,
                                       std::vector<Word> const& generators) {
  return GraphBuilder::fold_rose(std::move(alphabet), generators);
}

GeneratingTuple GeneratingTuple::build(std::vector<Word> const& generators) {
  if (generators.empty()) {
    throw MalformedInput("cannot infer the alphabet of an empty generator list");
  }
  return build(generators.front().alphabet(), generators);
}

bool contains(GeneratingTuple const& g, Word const& w) {
  auto [state, used] = g.graph().trace(w);
  return used == w.size() && state == SubgroupGraph::basepoint;
}

CosetRep coset_rep(GeneratingTuple const& g, Word const& w) {
  auto [state, used] = g.graph().trace(w);
  Word const& path = g.graph().tree_path(state);
  return {concat(path, w.suffix_from(used)), concat(w.prefix(used), invert(path))};
}

std::vector<Word> const& basis(GeneratingTuple const& g) { return g.basis(); }

namespace {

// Walks the loop spelled by w and hands each traversed edge to `visit`.
template <typename Visit>
void walk_loop(GeneratingTuple const& g, Word const& w, Visit&& visit) {
  auto const& graph = g.graph();
  if (w.alphabet() != graph.alphabet()) {
    throw AlphabetMismatch();
  }
  std::size_t state = SubgroupGraph::basepoint;
  for (Letter l : w.letters()) {
    std::size_t e = graph.edge_of(state, l);
    if (e == npos) {
      throw NotAMember("word '" + w.to_string() + "' is not in the subgroup");
    }
    visit(e, l.sign > 0);
    state = l.sign > 0 ? graph.edges()[e].target : graph.edges()[e].source;
  }
  if (state != SubgroupGraph::basepoint) {
    throw NotAMember("word '" + w.to_string() + "' is not in the subgroup");
  }
}

}  // namespace

Word express_in_basis(GeneratingTuple const& g, Word const& w) {
  std::vector<Letter> raw;
  auto const& graph = g.graph();
  walk_loop(g, w, [&](std::size_t e, bool forward) {
    std::size_t idx = graph.cotree_index(e);
    if (idx != npos) {
      raw.push_back(Letter{static_cast<std::uint32_t>(idx),
                           static_cast<std::int8_t>(forward ? 1 : -1)});
    }
  });
  return Word(g.basis_alphabet(), raw);
}

Word express_in_generators(GeneratingTuple const& g, Word const& w) {
  std::vector<Letter> raw;
  auto const& weights = g.edge_weights();
  walk_loop(g, w, [&](std::size_t e, bool forward) {
    auto const& l = weights[e].letters();
    if (forward) {
      raw.insert(raw.end(), l.begin(), l.end());
    } else {
      for (auto it = l.rbegin(); it != l.rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  });
  return Word(g.t_alphabet(), raw);
}

namespace {

// Edges of the graph as raw (unweighted) edges, plus room for a hair.
std::vector<RawEdge> raw_edges(SubgroupGraph const& graph) {
  std::vector<RawEdge> out;
  out.reserve(graph.edges().size());
  Word none(graph.alphabet());
  for (auto const& e : graph.edges()) {
    out.push_back({e.source, e.target, e.letter, none});
  }
  return out;
}

// Traces w from the basepoint, extending the graph with a fresh path where
// w leaves it.  Returns the end state.
std::size_t add_hair(SubgroupGraph const& graph, Word const& w,
                     std::vector<RawEdge>& edges, std::size_t& n) {
  auto [state, used] = graph.trace(w);
  Word none(graph.alphabet());
  for (std::size_t i = used; i < w.size(); ++i) {
    std::size_t next = n++;
    Letter l = w[i];
    if (l.sign > 0) {
      edges.push_back({state, next, l.index, none});
    } else {
      edges.push_back({next, state, l.index, none});
    }
    state = next;
  }
  return state;
}

// Deterministic transition function over a raw edge list (assumed folded).
struct RawAutomaton {
  std::size_t stride;
  std::vector<std::size_t> target;  // n * stride, npos when undefined

  RawAutomaton(std::size_t n, std::size_t stride_,
               std::vector<RawEdge> const& edges)
      : stride(stride_), target(n * stride_, npos) {
    for (auto const& e : edges) {
      std::size_t plus = 2 * static_cast<std::size_t>(e.letter);
      target[e.from * stride + plus] = e.to;
      target[e.to * stride + plus + 1] = e.from;
    }
  }
  std::size_t follow(std::size_t s, std::size_t code) const {
    return target[s * stride + code];
  }
};

}  // namespace

GeneratingTuple pullback(GeneratingTuple const& g1, GeneratingTuple const& g2) {
  auto const& a = g1.graph();
  auto const& b = g2.graph();
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatch();
  }
  std::size_t const stride = 2 * a.alphabet()->size();
  std::size_t const nb = b.num_states();
  std::vector<std::size_t> id(a.num_states() * nb, npos);
  std::vector<std::pair<std::size_t, std::size_t>> states{{0, 0}};
  id[0] = 0;
  std::vector<RawEdge> edges;
  Word none(a.alphabet());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    for (std::size_t code = 0; code < stride; ++code) {
      Letter l = Letter::from_code(code);
      std::size_t p2 = a.follow(p, l);
      std::size_t q2 = b.follow(q, l);
      if (p2 == npos || q2 == npos) {
        continue;
      }
      std::size_t& slot = id[p2 * nb + q2];
      if (slot == npos) {
        slot = states.size();
        states.push_back({p2, q2});
      }
      if (l.sign > 0) {
        edges.push_back({i, slot, l.index, none});
      }
    }
  }
  return GraphBuilder::finalize(a.alphabet(), states.size(), 0, std::move(edges),
                                false, nullptr, {}, {});
}

GeneratingTuple conjugate_graph(GeneratingTuple const& g, Word const& z) {
  auto const& graph = g.graph();
  std::vector<RawEdge> edges = raw_edges(graph);
  std::size_t n = graph.num_states();
  std::size_t base = add_hair(graph, z, edges, n);
  return GraphBuilder::finalize(graph.alphabet(), n, base, std::move(edges),
                                false, nullptr, {}, {});
}

std::optional<CosetIntersection> coset_intersection(GeneratingTuple const& k,
                                                    Word const& a,
                                                    GeneratingTuple const& l,
                                                    Word const& b) {
  auto const& gk = k.graph();
  auto const& gl = l.graph();
  if (gk.alphabet() != gl.alphabet() || a.alphabet() != gk.alphabet()
      || b.alphabet() != gk.alphabet()) {
    throw AlphabetMismatch();
  }
  std::size_t const stride = 2 * gk.alphabet()->size();
  std::vector<RawEdge> ek = raw_edges(gk);
  std::size_t nk = gk.num_states();
  std::size_t accept_k = add_hair(gk, a, ek, nk);
  std::vector<RawEdge> el = raw_edges(gl);
  std::size_t nl = gl.num_states();
  std::size_t accept_l = add_hair(gl, b, el, nl);
  RawAutomaton ak(nk, stride, ek);
  RawAutomaton al(nl, stride, el);

  // Breadth-first search in the product from (base, base).
  std::vector<std::size_t> id(nk * nl, npos);
  std::vector<std::pair<std::size_t, std::size_t>> states{{0, 0}};
  std::vector<std::size_t> parent{npos};
  std::vector<Letter> via{Letter{}};
  id[0] = 0;
  std::size_t found = npos;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    if (p == accept_k && q == accept_l) {
      found = i;
      break;
    }
    for (std::size_t code = 0; code < stride; ++code) {
      std::size_t p2 = ak.follow(p, code);
      std::size_t q2 = al.follow(q, code);
      if (p2 == npos || q2 == npos) {
        continue;
      }
      std::size_t& slot = id[p2 * nl + q2];
      if (slot == npos) {
        slot = states.size();
        states.push_back({p2, q2});
        parent.push_back(i);
        via.push_back(Letter::from_code(code));
      }
    }
  }
  if (found == npos) {
    return std::nullopt;
  }
  std::vector<Letter> raw;
  for (std::size_t i = found; parent[i] != npos; i = parent[i]) {
    raw.push_back(via[i]);
  }
  std::reverse(raw.begin(), raw.end());
  Word h(gk.alphabet(), raw);
  assert(contains(k, concat(h, invert(a))) && contains(l, concat(h, invert(b))));
  return CosetIntersection{pullback(k, l), std::move(h)};
}

std::optional<ConjugateInto> conjugacy_into(GeneratingTuple const& g,
                                            Word const& w) {
  auto const& graph = g.graph();
  auto [core, k] = cyclic_reduce(w);
  Word none(w.alphabet());
  if (core.empty()) {
    return ConjugateInto{none, none};
  }
  std::size_t const len = core.size();
  for (std::size_t s = 0; s < graph.num_states(); ++s) {
    for (std::size_t j = 0; j < len; ++j) {
      std::size_t state = s;
      std::size_t i = 0;
      for (; i < len; ++i) {
        state = graph.follow(state, core[(j + i) % len]);
        if (state == npos) {
          break;
        }
      }
      if (i < len || state != s) {
        continue;
      }
      Word const& path = graph.tree_path(s);
      Word target = concat(path, core.rotated(j), invert(path));
      Word conj = concat(path, invert(core.prefix(j)), invert(k));
      assert(conjugate(target, conj) == w);
      return ConjugateInto{std::move(target), std::move(conj)};
    }
  }
  return std::nullopt;
}

bool same_double_coset(GeneratingTuple const& g, Word const& s, Word const& t) {
  // t in HsH  iff  Ht ∩ sH != ∅, and sH = H^{s^-1} s.
  return coset_intersection(g, t, conjugate_graph(g, invert(s)), s).has_value();
}

std::vector<Word> double_transversal(GeneratingTuple const& g) {
  auto const& graph = g.graph();
  if (graph.trivial()) {
    return {};
  }
  std::size_t const n = graph.num_states();
  std::size_t const stride = 2 * graph.alphabet()->size();
  // Components of the full product graph, tracked with union-find.
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::size_t> edge_count(n * n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> product_edges;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t code = 0; code < stride; code += 2) {
        Letter l = Letter::from_code(code);
        std::size_t p2 = graph.follow(p, l);
        std::size_t q2 = graph.follow(q, l);
        if (p2 == npos || q2 == npos) {
          continue;
        }
        product_edges.push_back({p * n + q, p2 * n + q2});
        std::size_t ra = find(p * n + q);
        std::size_t rb = find(p2 * n + q2);
        if (ra != rb) {
          parent[ra] = rb;
        }
      }
    }
  }
  std::vector<std::size_t> vertex_count(n * n, 0);
  for (std::size_t v = 0; v < n * n; ++v) {
    vertex_count[find(v)]++;
  }
  for (auto const& [x, y] : product_edges) {
    edge_count[find(x)]++;
  }
  // Each looped component offers t = treePath(p) treePath(q)^-1 for every
  // state (p, q) in it; take the shortlex least.
  std::size_t const diagonal = find(0);
  std::map<std::size_t, Word> best;
  for (std::size_t v = 0; v < n * n; ++v) {
    std::size_t root = find(v);
    if (root == diagonal || edge_count[root] < vertex_count[root]) {
      continue;  // a tree carries no nontrivial loop
    }
    Word t = concat(graph.tree_path(v / n), invert(graph.tree_path(v % n)));
    auto it = best.find(root);
    if (it == best.end()) {
      best.emplace(root, std::move(t));
    } else if (t < it->second) {
      it->second = std::move(t);
    }
  }
  std::vector<Word> candidates;
  for (auto& [root, t] : best) {
    candidates.push_back(std::move(t));
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<Word> result{Word(graph.alphabet())};
  for (auto& t : candidates) {
    bool duplicate = std::any_of(result.begin(), result.end(), [&](Word const& s) {
      return same_double_coset(g, s, t);
    });
    if (!duplicate) {
      result.push_back(std::move(t));
    }
  }
  return result;
}

bool is_malnormal(GeneratingTuple const& g) {
  return double_transversal(g).size() <= 1;
}

GeneratingTuple z_subgroup(GeneratingTuple const& g, Word const& t) {
  return pullback(conjugate_graph(g, invert(t)), g);
}

bool in_generalized_normalizer(GeneratingTuple const& g, Word const& w) {
  return !pullback(conjugate_graph(g, w), g).trivial();
}

ZSetIndex::ZSetIndex(GeneratingTuple subgroup)
    : subgroup_(std::move(subgroup)),
      transversal_(double_transversal(subgroup_)) {
  for (std::size_t i = 1; i < transversal_.size(); ++i) {
    nontrivial_.push_back(transversal_[i]);
    GeneratingTuple z = z_subgroup(subgroup_, transversal_[i]);
    std::vector<Word> in_basis;
    for (auto const& w : z.basis()) {
      in_basis.push_back(express_in_basis(subgroup_, w));
    }
    z_graphs_in_basis_.push_back(
        GeneratingTuple::build(subgroup_.basis_alphabet(), in_basis));
    z_graphs_.push_back(std::move(z));
  }
}

std::optional<ZSetIndex::Witness> ZSetIndex::find(Word const& c) const {
  Word e = express_in_basis(subgroup_, c);
  auto const& table = subgroup_.basis();
  for (std::size_t i = 0; i < nontrivial_.size(); ++i) {
    auto hit = conjugacy_into(z_graphs_in_basis_[i], e);
    if (hit) {
      return Witness{nontrivial_[i],
                     substitute(hit->target, table, subgroup_.alphabet()),
                     substitute(hit->conjugator, table, subgroup_.alphabet())};
    }
  }
  return std::nullopt;
}

bool in_z_set(GeneratingTuple const& g, Word const& c) {
  return ZSetIndex(g).contains(c);
}

}  // namespace amalgam
