#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsg/action.hpp"
#include "rsg/finalg.hpp"
#include "rsg/semidirect.hpp"

namespace rsg::pact {

using alg::FinAlg;
using words::Alphabet;
using words::Word;

// Partial bijection on Y indices; composition is relational.
struct PartialIso {
  std::vector<int> fwd, bwd; // -1 marks undefined; sizes |Y|

  static PartialIso identity(std::size_t n);
  static PartialIso empty(std::size_t n);
  PartialIso inverse() const { return {bwd, fwd}; }
  // first g, then this (left-operand composition: (this ∘ g)(x) = this(g(x)))
  PartialIso after(const PartialIso& g) const;
  std::optional<std::size_t> apply(std::size_t a) const {
    return fwd[a] < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(fwd[a]));
  }
  bool is_empty() const;
  std::vector<std::size_t> domain() const;
  std::vector<std::size_t> range() const;
};

// Left partial action of Ω* on a finite semilattice Y with identity, given by
// one ideal isomorphism per letter and extended multiplicatively; on FG(Ω) it
// extends by α_{t⁻¹} = α_t⁻¹ along reduced words.  Letter maps between
// principal ideals make the action a homomorphism into the Munn semigroup,
// which is the perfect case; the χ̄-semilattice requires it.
class PartialAction {
public:
  FinAlg Y; // semilattice with identity (top) element
  Alphabet alpha;
  std::map<char, PartialIso> letter; // the ◇-action of each letter

  std::size_t top = 0; // identity of Y
  bool munn = false;   // every letter map is an iso between principal ideals

  void validate(); // instance_error; also sets top and munn

  PartialIso iso_for(const Word& g) const; // α_g along the reduced word
  std::optional<std::size_t> diamond(const Word& g, std::size_t a) const; // g ◇ a
  std::optional<std::size_t> circ(std::size_t a, const Word& g) const;    // a ∘ g
  // M_g: greatest element of the range of α_g; nullopt when the range is
  // empty or has no greatest element
  std::optional<std::size_t> m_identity(const Word& g) const;

  std::size_t meet(std::size_t a, std::size_t b) const { return Y.product(a, b); }
  bool leq(std::size_t a, std::size_t b) const { return Y.product(a, b) == a; }

  static PartialAction from_json_text(const std::string& text);
  std::string to_json_text() const;
};

// M(T, Y) = {(A, t) : A∘t defined}, the perfect restriction monoid of a
// partial action.
struct MElem {
  std::size_t a;
  Word t;
  bool operator==(const MElem&) const = default;
  bool operator<(const MElem& o) const {
    if (!(t == o.t)) return t < o.t;
    return a < o.a;
  }
};

struct MAlgebra {
  const PartialAction* pa;

  using Elem = MElem;

  explicit MAlgebra(const PartialAction& p) : pa(&p) {}

  bool valid(const MElem& x) const { return pa->circ(x.a, x.t).has_value(); }
  Elem product(const Elem& x, const Elem& y) const;
  Elem plus(const Elem& x) const { return {x.a, Word{}}; }
  Elem star(const Elem& x) const;
  bool equal(const Elem& x, const Elem& y) const { return x == y; }
  std::string str(const Elem& x) const {
    return "(" + pa->Y.names[x.a] + ", " + words::wire(x.t) + ")";
  }
  bool sigma(const Elem& x, const Elem& y) const { return x.t == y.t; }
};

// all (A, t) with positive |t| ≤ maxlen
std::vector<MElem> m_fragment(const PartialAction& pa, int maxlen);

// χ̄-class of (A, g), stored by its canonical representative: the least
// (|h|, h, B) over the class members with |h| not exceeding the given one.
struct ChiClass {
  std::size_t a = 0;
  Word g;
  bool operator==(const ChiClass&) const = default;
  bool operator<(const ChiClass& o) const {
    if (!(g == o.g)) return g < o.g;
    return a < o.a;
  }
};

ChiClass chi_canonical(const PartialAction& pa, std::size_t a, const Word& g);
ChiClass chi_meet(const PartialAction& pa, const ChiClass& x, const ChiClass& y);
bool chi_in_Y(const ChiClass& x); // embedded copy of Y: canonical g = ε

// The χ̄-semilattice X with the FG(Ω)-action h·[A,g] = [A,hg], presented as a
// nice action so the semidirect machinery applies verbatim.  Requires the
// perfect (Munn) case.
struct ChiAction {
  const PartialAction* pa;

  using Lat = ChiClass;
  using Grp = Word;

  explicit ChiAction(const PartialAction& p);

  Lat one() const { return ChiClass{pa->top, Word{}}; }
  Lat meet(const Lat& a, const Lat& b) const { return chi_meet(*pa, a, b); }
  bool leq(const Lat& a, const Lat& b) const { return lat_eq(meet(a, b), a); }
  bool lat_eq(const Lat& a, const Lat& b) const { return a == b; }
  std::string lat_str(const Lat& a) const {
    return "[" + pa->Y.names[a.a] + "," + words::wire(a.g) + "]";
  }
  Lat apply(const Grp& g, const Lat& a) const {
    return chi_canonical(*pa, a.a, words::gmul(g, a.g));
  }
  Grp gid() const { return Word{}; }
  Grp gmul(const Grp& a, const Grp& b) const { return words::gmul(a, b); }
  Grp ginv(const Grp& a) const { return words::ginv(a); }
  bool grp_eq(const Grp& a, const Grp& b) const { return a == b; }
  std::string grp_str(const Grp& g) const { return words::wire(g); }
  bool in_monoid(const Grp& g) const { return words::positive(g); }
  std::vector<Grp> factorize(const Grp& g) const { return words::nice_blocks(g); }
};

// Niceness criterion: for reduced g, h with no nonempty common prefix,
// [𝟏,g] ∧ [𝟏,h] lands in the embedded Y and equals [h◇M_{h⁻¹g}, 1].
struct PrefixReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> violations;
};
PrefixReport check_prefix_criterion(const PartialAction& pa, int maxlen);

// ---- bounded congruence closure over a partial operation table ------------

// Fragment of an algebra whose operations may fall outside the fragment.
struct PartialOpsTable {
  std::size_t n = 0;
  std::vector<std::optional<std::size_t>> mul; // n×n
  std::vector<std::optional<std::size_t>> plus, star;
};

struct BoundedClosureResult {
  std::vector<std::size_t> class_of;
  std::size_t skipped = 0; // context applications that left the fragment
  bool related(std::size_t a, std::size_t b) const { return class_of[a] == class_of[b]; }
};

BoundedClosureResult bounded_congruence_closure(
    const PartialOpsTable& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

} // namespace rsg::pact
