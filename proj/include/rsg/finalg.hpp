#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsg/algebra.hpp"

namespace rsg::alg {

// Finite (2,1,1)-algebra given by a multiplication table and the two unary
// maps.  This is the ingestion format for user algebras and the carrier for
// quotients and the factorisable completion.
class FinAlg {
public:
  using Elem = std::size_t;

  std::vector<std::string> names;
  std::vector<std::size_t> mul; // row-major n×n
  std::vector<std::size_t> plus_map, star_map;

  std::size_t size() const { return names.size(); }
  Elem product(Elem a, Elem b) const { return mul[a * size() + b]; }
  Elem plus(Elem a) const { return plus_map[a]; }
  Elem star(Elem a) const { return star_map[a]; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return names[a]; }

  std::vector<Elem> elements() const;
  std::optional<Elem> identity() const;
  std::vector<Elem> projections() const;
  std::size_t index_of(const std::string& name) const; // parse_error if unknown

  // table sanity: ranges, associativity; instance_error on failure
  void validate() const;

  static FinAlg semilattice(std::vector<std::string> names, std::vector<std::size_t> meet);
  static FinAlg reduced_monoid(std::vector<std::string> names, std::vector<std::size_t> mul,
                               std::size_t id);
  static FinAlg from_json_text(const std::string& text);
  std::string to_json_text() const;
};

bool sigma_related(const FinAlg& s, std::size_t a, std::size_t b);
bool is_reduced(const FinAlg& s);
bool is_proper(const FinAlg& s);
std::vector<std::size_t> units(const FinAlg& s); // instance_error without identity
bool is_factorisable(const FinAlg& s);

// Partition of a finite carrier into congruence blocks.
struct Congruence {
  std::vector<std::size_t> block_of; // element -> block id, blocks numbered 0..k-1
  std::size_t blocks = 0;

  bool related(std::size_t a, std::size_t b) const { return block_of[a] == block_of[b]; }
  std::vector<std::vector<std::size_t>> block_list() const;
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& bl);
  static Congruence equality(std::size_t n);
  bool operator==(const Congruence&) const;
};

// least (2,1,1)-congruence containing the given pairs
Congruence finite_congruence_closure(const FinAlg& s,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// empty when compatible, otherwise a human-readable violation
std::optional<std::string> congruence_violation(const FinAlg& s, const Congruence& c);

// congruence_error when c is not compatible
FinAlg quotient(const FinAlg& s, const Congruence& c);

// S with a fresh identity adjoined (1⁺ = 1* = 1); returns S itself when it
// already has one and adjoin_always is false
FinAlg adjoin_identity(const FinAlg& s, bool adjoin_always = false);

} // namespace rsg::alg
