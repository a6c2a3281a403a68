#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gcr {

enum class GroupKind { cyclic, dihedral, symmetric, alternating };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

/// A finite group as a dense multiplication table. Element 0 is always the
/// identity; `mult` is row-major (n x n) with mult[a*n+b] = index of a*b.
struct Group {
  int order = 0;
  GroupKind kind = GroupKind::cyclic;
  std::string name;                 // compact spec string, e.g. "C113", "S5"
  std::vector<int> mult;            // row-major n x n
  std::vector<int> inv;             // inv[g] = index of g^-1
  std::vector<std::string> labels;  // human-readable element names

  static constexpr int identity = 0;

  int op(int a, int b) const { return mult[static_cast<size_t>(a) * order + b]; }
  int inverse(int g) const { return inv[static_cast<size_t>(g)]; }
  bool is_abelian() const;
};

struct ConjugacyClasses {
  std::vector<int> class_of;               // element -> class index
  std::vector<std::vector<int>> classes;   // partition, ordered by min element
};

/// Per-axiom result of an exhaustive table check. `counterexample` holds the
/// offending indices for the first failure found (unused slots are -1).
struct AxiomResult {
  bool ok = true;
  std::array<int, 3> counterexample{-1, -1, -1};
  std::string detail;
};

struct AxiomReport {
  AxiomResult closure;
  AxiomResult identity;
  AxiomResult inverses;
  AxiomResult associativity;
  bool all_ok() const {
    return closure.ok && identity.ok && inverses.ok && associativity.ok;
  }
  std::string summary() const;
};

// Constructors. All throw std::invalid_argument on bad parameters.
Group make_cyclic(int n);
Group make_dihedral(int n);
Group make_symmetric(int k, long max_order = 5040);
Group make_alternating(int k, long max_order = 5040);

/// Parses a compact group spec: "C113", "D59", "S5", "A5" (case-insensitive).
Group parse_group_spec(const std::string& spec, long max_order = 5040);

ConjugacyClasses conjugacy_classes(const Group& g);
AxiomReport verify_group_axioms(const Group& g);

std::string group_to_json(const Group& g);
Group group_from_json(const std::string& text);

}  // namespace gcr
