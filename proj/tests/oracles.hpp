#pragma once

// Unpruned brute-force reference implementations used to cross-check the
// library.  Everything here works directly on raw Cayley tables and scans the
// full n^n map space; nothing shares search logic with the library code.

#include <vector>

#include "rotabrace/clifford.hpp"
#include "rotabrace/rota_baxter.hpp"

namespace oracle {

using rotabrace::CayleyTable;
using rotabrace::Element;
using rotabrace::ElementMap;

/// First x with a*x*a = a and x*a*x = x (tables under test have unique ones).
Element inv_raw(const CayleyTable& t, Element a);

/// RB1 and RB2 checked over all pairs with locally recomputed inverses.
bool is_rb_raw(const CayleyTable& t, const ElementMap& R);

/// All n^n self-maps in lexicographic order (memory-feasible for n <= 6).
std::vector<ElementMap> all_maps(int n);

/// The unpruned filter: every self-map passing is_rb_raw, lex order.
std::vector<ElementMap> enumerate_rb_raw(const CayleyTable& t);

bool is_endo_raw(const CayleyTable& t, const ElementMap& f);
bool commutative_image_raw(const CayleyTable& t, const ElementMap& f);

/// Plain filters over all maps between the carriers (bijective for iso).
std::vector<ElementMap> homs_raw(const CayleyTable& s, const CayleyTable& t, bool iso);

/// Subgroups containing the identity, closed under product, inverse and
/// conjugation; sorted member lists, lex order.
std::vector<std::vector<Element>> normal_subgroups_raw(const CayleyTable& g);

/// Filters over all self-maps for the two structured operator families.
std::vector<ElementMap> idempotent_rb_endos_raw(const CayleyTable& g);
std::vector<ElementMap> commutative_rb_endos_raw(const CayleyTable& t);

/// Image lists of a library enumeration result, for direct comparison.
std::vector<ElementMap> images_of(const std::vector<rotabrace::RotaBaxterOperator>& ops);

}  // namespace oracle
