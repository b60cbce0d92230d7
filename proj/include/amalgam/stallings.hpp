#ifndef AMALGAM_STALLINGS_HPP_
#define AMALGAM_STALLINGS_HPP_

// Folded subgroup automata (Stallings graphs) for finitely generated
// subgroups of free groups.
//
// Conjugation convention used throughout the library:
//   h^g = g^-1 h g,   H^g = g^-1 H g.

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "amalgam/words.hpp"

namespace amalgam {

class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One elementary identification performed while folding: the state `merged`
// was glued onto `kept` because two edges with signed label `label` left
// `source`.  State numbers refer to the unfolded rose.
struct FoldRecord {
  std::size_t source;
  std::size_t kept;
  std::size_t merged;
  Letter label;
};

// A folded, pointed, labelled digraph.  The basepoint is always state 0 and
// states are numbered in breadth-first order from it.  Only positive letters
// are stored on edges; inverse transitions are implicit.
class SubgroupGraph {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t basepoint = 0;

  struct Edge {
    std::size_t source;
    std::size_t target;
    std::uint32_t letter;
  };

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return tree_paths_.size(); }
  std::vector<Edge> const& edges() const noexcept { return edges_; }
  bool trivial() const noexcept { return edges_.empty(); }

  // Target of the transition on the signed letter, or npos.
  std::size_t follow(std::size_t state, Letter l) const {
    std::size_t e = edge_of(state, l);
    if (e == npos) {
      return npos;
    }
    return l.sign > 0 ? edges_[e].target : edges_[e].source;
  }
  std::size_t edge_of(std::size_t state, Letter l) const {
    return transitions_[state * stride_ + l.code()];
  }

  // Reads w from `from` as far as possible; returns the state reached and
  // the number of letters consumed.
  std::pair<std::size_t, std::size_t> trace(Word const& w,
                                            std::size_t from = basepoint) const;

  // Label of the breadth-first geodesic from the basepoint.
  Word const& tree_path(std::size_t state) const { return tree_paths_[state]; }
  bool is_tree_edge(std::size_t edge) const { return tree_edge_[edge]; }
  // Index of the edge in the non-tree edge order (basis order), or npos.
  std::size_t cotree_index(std::size_t edge) const { return cotree_index_[edge]; }
  std::size_t rank() const noexcept { return cotree_edges_.size(); }
  std::vector<std::size_t> const& cotree_edges() const noexcept {
    return cotree_edges_;
  }

  // Largest undirected distance between two states.
  std::size_t diameter() const;

  std::vector<FoldRecord> const& folding_history() const noexcept {
    return history_;
  }

  // Folded, core-plus-base, and breadth-first tree consistent.
  bool check_invariants() const;

 private:
  friend class GraphBuilder;

  AlphabetPtr alphabet_;
  std::size_t stride_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> transitions_;
  std::vector<Word> tree_paths_;
  std::vector<bool> tree_edge_;
  std::vector<std::size_t> cotree_index_;
  std::vector<std::size_t> cotree_edges_;
  std::vector<FoldRecord> history_;
};

// A subgroup together with the generating words it was built from.  Each
// edge carries a word over the generator alphabet (one letter per generator)
// so that loop labels can be rewritten as products of the generators.
// Immutable; copies share state.
class GeneratingTuple {
 public:
  // Folds the rose of `generators`; trivial generators are dropped.
  static GeneratingTuple build(AlphabetPtr alphabet,
                               std::vector<Word> const& generators);
  static GeneratingTuple build(std::vector<Word> const& generators);

  SubgroupGraph const& graph() const noexcept { return data_->graph; }
  AlphabetPtr const& alphabet() const noexcept { return data_->graph.alphabet(); }
  std::vector<Word> const& generators() const noexcept {
    return data_->generators;
  }
  AlphabetPtr const& t_alphabet() const noexcept { return data_->t_alphabet; }
  std::vector<Word> const& edge_weights() const noexcept {
    return data_->weights;
  }

  // Free basis read off the non-tree edges, and its letter alphabet.
  std::vector<Word> const& basis() const noexcept { return data_->basis; }
  AlphabetPtr const& basis_alphabet() const noexcept {
    return data_->basis_alphabet;
  }

  bool trivial() const noexcept { return graph().trivial(); }

 private:
  friend class GraphBuilder;
  struct Data {
    SubgroupGraph graph;
    std::vector<Word> generators;
    AlphabetPtr t_alphabet;
    std::vector<Word> weights;
    std::vector<Word> basis;
    AlphabetPtr basis_alphabet;
  };
  std::shared_ptr<const Data> data_;
};

bool contains(GeneratingTuple const& g, Word const& w);

struct CosetRep {
  Word rep;   // canonical representative of the right coset H w
  Word head;  // w == head * rep, head in H
};
CosetRep coset_rep(GeneratingTuple const& g, Word const& w);

std::vector<Word> const& basis(GeneratingTuple const& g);
Word express_in_basis(GeneratingTuple const& g, Word const& w);
Word express_in_generators(GeneratingTuple const& g, Word const& w);

// Subgroup H1 ∩ H2.
GeneratingTuple pullback(GeneratingTuple const& g1, GeneratingTuple const& g2);

// Subgroup H^z = z^-1 H z.
GeneratingTuple conjugate_graph(GeneratingTuple const& g, Word const& z);

struct CosetIntersection {
  GeneratingTuple subgroup;  // K ∩ L
  Word element;              // shortest element of Ka ∩ Lb
};
// Ka ∩ Lb, which is empty or the coset (K ∩ L) h.
std::optional<CosetIntersection> coset_intersection(GeneratingTuple const& k,
                                                    Word const& a,
                                                    GeneratingTuple const& l,
                                                    Word const& b);

struct ConjugateInto {
  Word target;      // element of H
  Word conjugator;  // conjugator^-1 * target * conjugator == w
};
std::optional<ConjugateInto> conjugacy_into(GeneratingTuple const& g,
                                            Word const& w);

// True iff the double cosets H s H and H t H coincide.
bool same_double_coset(GeneratingTuple const& g, Word const& s, Word const& t);

// Representatives of the double cosets H t H making up the generalized
// normalizer N*(H); the empty word comes first.  Empty for trivial H.
std::vector<Word> double_transversal(GeneratingTuple const& g);

bool is_malnormal(GeneratingTuple const& g);

// Z_t(H) = H^{t^-1} ∩ H = { h in H : h^t in H }.
GeneratingTuple z_subgroup(GeneratingTuple const& g, Word const& t);

// H ∩ H^w != 1.
bool in_generalized_normalizer(GeneratingTuple const& g, Word const& w);

// Precomputed data for membership in Z(H), the set of elements of H that
// some element outside H conjugates back into H.
class ZSetIndex {
 public:
  struct Witness {
    Word t;           // nontrivial transversal element
    Word target;      // element of Z_t(H)
    Word conjugator;  // in H; conjugator^-1 * target * conjugator == c
  };

  explicit ZSetIndex(GeneratingTuple subgroup);

  GeneratingTuple const& subgroup() const noexcept { return subgroup_; }
  std::vector<Word> const& transversal() const noexcept { return transversal_; }
  // Z_t(H) for each nontrivial transversal element, over the ambient alphabet.
  std::vector<GeneratingTuple> const& z_graphs() const noexcept {
    return z_graphs_;
  }

  // Throws NotAMember when c is not in H.
  std::optional<Witness> find(Word const& c) const;
  bool contains(Word const& c) const { return find(c).has_value(); }

 private:
  GeneratingTuple subgroup_;
  std::vector<Word> transversal_;
  std::vector<Word> nontrivial_;
  std::vector<GeneratingTuple> z_graphs_;
  // Same subgroups written over the free basis of H.
  std::vector<GeneratingTuple> z_graphs_in_basis_;
};

bool in_z_set(GeneratingTuple const& g, Word const& c);

}  // namespace amalgam

#endif  // AMALGAM_STALLINGS_HPP_
