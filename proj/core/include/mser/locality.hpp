#pragma once

#include "mser/model.hpp"

namespace mser {

struct Module {
  AxiomSet axioms;
  IriSet finalSignature;
};

/// True when `a` becomes a tautology once every class and property outside
/// `sig` is replaced by the empty concept or role. Assertions and
/// reflexivity axioms are never local.
bool bottom_local(const Axiom& a, const IriSet& sig);

/// Least fixpoint: pull in every non-local axiom and grow the signature
/// until nothing changes.
Module extract_module(const IriSet& seed, const Ontology& o);

}  // namespace mser
