#include "amalgam/cosetalg.hpp"

namespace amalgam {

CosetOfC whole_c(AmalgamContext const& ctx, Side s) {
  return {s, ctx.subgroup(s), Word(ctx.alphabet(s))};
}

std::optional<CosetOfC> shift(AmalgamContext const& ctx, CosetOfC const& d,
                              Word const& p, Word const& q) {
  // p K rep q = (p K p^-1) (p rep q) = K^{p^-1} (p rep q).
  GeneratingTuple shifted = conjugate_graph(d.subgroup, invert(p));
  Word rep = concat(p, d.rep, q);
  auto hit = coset_intersection(shifted, rep, ctx.subgroup(d.side),
                                Word(ctx.alphabet(d.side)));
  if (!hit) {
    return std::nullopt;
  }
  return CosetOfC{d.side, std::move(hit->subgroup), std::move(hit->element)};
}

std::optional<CosetOfC> intersect(CosetOfC const& d1, CosetOfC const& d2) {
  if (d1.side != d2.side) {
    throw std::invalid_argument("cannot intersect cosets on different sides");
  }
  auto hit = coset_intersection(d1.subgroup, d1.rep, d2.subgroup, d2.rep);
  if (!hit) {
    return std::nullopt;
  }
  return CosetOfC{d1.side, std::move(hit->subgroup), std::move(hit->element)};
}

Cardinality cardinality(AmalgamContext const& ctx,
                        std::optional<CosetOfC> const& d) {
  if (!d) {
    return {Cardinality::Tag::Empty, Word(ctx.alphabet(Side::A))};
  }
  if (d->subgroup.trivial()) {
    return {Cardinality::Tag::Singleton, d->rep};
  }
  return {Cardinality::Tag::Infinite, d->rep};
}

CosetOfC transfer(AmalgamContext const& ctx, CosetOfC const& d) {
  Side to = other(d.side);
  try {
    std::vector<Word> gens;
    for (auto const& b : d.subgroup.basis()) {
      gens.push_back(ctx.transfer(b, d.side));
    }
    return {to, GeneratingTuple::build(ctx.alphabet(to), gens),
            ctx.transfer(d.rep, d.side)};
  } catch (NotAMember const& e) {
    throw std::logic_error(std::string("coset is not inside C: ") + e.what());
  }
}

CosetOfC move_to(AmalgamContext const& ctx, CosetOfC const& d, Side s) {
  return d.side == s ? d : transfer(ctx, d);
}

bool coset_contains(CosetOfC const& d, Word const& w) {
  return contains(d.subgroup, concat(w, invert(d.rep)));
}

}  // namespace amalgam
