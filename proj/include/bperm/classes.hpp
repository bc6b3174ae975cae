#pragma once

// Characterized families of signed permutations. Each predicate has at least
// two independent implementations selected by Method, so that persistence
// statements become equalities that can be tested exhaustively.

#include <string>
#include <vector>

#include "bperm/core.hpp"
#include "bperm/patterns.hpp"

namespace bperm {

enum class Method { global_patterns, classical_patterns, structural };

const char* method_name(Method m);

// Parsed once; the text lives in fixtures.hpp.
const SignedPatternSet& vexillary_classical();
const SignedPatternSet& boolean_classical();
const SignedPatternSet& free_classical();
const SignedPatternSet& smooth_b_classical();
const SignedPatternSet& smooth_c_classical();
const SignedPatternSet& smooth_bc_classical();
const GlobalPatternSet& vexillary_global();
const GlobalPatternSet& boolean_global();
const GlobalPatternSet& free_global();
const GlobalPatternSet& smooth_bc_global();
const GlobalPatternSet& grassmannian_global();
const GlobalPatternSet& bigrassmannian_global();

// Structural method unsupported (throws UnsupportedMethod).
bool is_vexillary(const SignedPermutation& w, Method m = Method::global_patterns);
// Structural: no reduced word repeats a letter.
bool is_boolean(const SignedPermutation& w, Method m = Method::global_patterns);
// Structural: support has no two consecutive indices and length == |support|.
bool is_free(const SignedPermutation& w, Method m = Method::global_patterns);
bool is_smooth_b(const SignedPermutation& w);
bool is_smooth_c(const SignedPermutation& w);
// Structural: is_smooth_b && is_smooth_c.
bool is_smooth_bc(const SignedPermutation& w, Method m = Method::global_patterns);

// At most one descent by default; `strict` demands exactly one, which
// excludes the identity.
bool is_grassmannian(const SignedPermutation& w, bool strict = false);
bool is_bigrassmannian(const SignedPermutation& w, bool strict = false);
bool is_grassmannian_conjectured(const SignedPermutation& w);
bool is_bigrassmannian_conjectured(const SignedPermutation& w);

// Every reduced word uses each generator at most twice.
bool is_two_boolean(const SignedPermutation& w);

struct Composition {
  std::vector<int> parts;

  int size() const;
  bool is_palindromic() const;
  int max_part() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

std::string to_string(const Composition& c);

// Avoids 132 and 213. classical_patterns: pattern test; structural: the word
// splits into increasing runs of consecutive values whose blocks descend.
bool is_colayered(const Permutation& v, Method m = Method::structural);
// Lengths of the increasing runs; throws NotColayered.
Composition composition_of(const Permutation& v);
// Inverse of composition_of.
Permutation colayered_from(const Composition& c);
// composition_of(iota(w)); throws NotIn132AvoidanceClass.
Composition signed_composition(const SignedPermutation& w);

// Names accepted by the CLI `list --property`.
std::vector<std::string> property_names();
bool has_property(const SignedPermutation& w, const std::string& name);

}  // namespace bperm
