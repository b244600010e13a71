#include "mser/generator.hpp"

#include <random>
#include <utility>
#include <stdexcept>

namespace mser {

namespace {

class Gen {
 public:
  explicit Gen(const GenConfig& g) : g_(g), rng_(g.seed) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) { return p > 0 && static_cast<double>(rng_() % 1000000) < p * 1000000.0; }

  Iri cls() { return name("C", pick(g_.numClasses)); }
  Iri prop() { return name("p", pick(g_.numProperties)); }
  RoleExpr role() {
    Iri p = prop();
    return RoleExpr{std::move(p), pick(2) == 1};
  }

  // Hierarchy edges point from a higher index to a lower one, so the
  // generated taxonomy is acyclic.
  std::pair<std::size_t, std::size_t> edge(std::size_t n) {
    if (n < 2) return {0, 0};
    const std::size_t sub = 1 + pick(n - 1);
    return {sub, pick(sub)};
  }

  Iri individual() {
    if (chance(g_.metaProbability)) {
      if (g_.numProperties == 0 || pick(4) != 0) return cls();
      return prop();
    }
    return name("i", pick(g_.numIndividuals));
  }

  Axiom tbox() {
    const std::size_t roll = pick(100);
    if (roll < 50 || g_.numProperties == 0) {
      const auto [sub, sup] = edge(g_.numClasses);
      return ClassInclusion{NamedClass{name("C", sub)}, NamedClass{name("C", sup)}};
    }
    if (roll < 70) return ClassInclusion{NamedClass{cls()}, QualifiedExists{role(), cls()}};
    if (roll < 85) return ClassInclusion{ExistsRole{role()}, NamedClass{cls()}};
    const auto [sub, sup] = edge(g_.numProperties);
    return make_role_inclusion(RoleExpr{name("p", sub), false}, RoleExpr{name("p", sup), pick(2) == 1});
  }

  Axiom abox() {
    if (g_.numProperties == 0 || pick(100) < 60) return ClassAssertion{cls(), individual()};
    return RoleAssertion{prop(), individual(), individual()};
  }

 private:
  static Iri name(const char* kind, std::size_t i) {
    return Iri(std::string(kGenNamespace) + kind + std::to_string(i));
  }

  const GenConfig& g_;
  std::mt19937_64 rng_;
};

}  // namespace

PrefixMap generator_prefixes() { return PrefixMap{{"ex", kGenNamespace}}; }

Ontology generate_ontology(const GenConfig& g) {
  if (g.metaProbability < 0.0 || g.metaProbability > 1.0) {
    throw std::invalid_argument("metaProbability must lie in [0, 1]");
  }
  if (g.numClasses == 0 && (g.numTBox > 0 || g.numABox > 0)) {
    throw std::invalid_argument("axioms requested but no classes available");
  }
  if (g.numIndividuals == 0 && g.numABox > 0 && g.metaProbability < 1.0) {
    throw std::invalid_argument("assertions requested but no individuals available");
  }
  Gen gen(g);
  std::vector<Axiom> tbox;
  std::vector<Axiom> abox;
  tbox.reserve(g.numTBox);
  abox.reserve(g.numABox);
  for (std::size_t i = 0; i < g.numTBox; ++i) tbox.push_back(gen.tbox());
  for (std::size_t i = 0; i < g.numABox; ++i) abox.push_back(gen.abox());
  return Ontology(std::move(tbox), std::move(abox));
}

std::string generate_text(const GenConfig& g) { return format_ontology(generate_ontology(g), generator_prefixes()); }

}  // namespace mser
