#pragma once

#include <map>
#include <set>

#include "gfc/equiv.hpp"

namespace gfc {

// z -> scale * z or scale / z
struct MonomialMap {
  Elem scale;
  bool inverted = false;

  static MonomialMap identity(const FieldPtr& F) { return {F->one(), false}; }
  MonomialMap compose(const MonomialMap& o) const;  // this after o
  MonomialMap inverse() const;
  Moebius as_moebius() const;
  bool operator==(const MonomialMap& o) const { return scale == o.scale && inverted == o.inverted; }
};

// Coordinate automorphism of a curve a x^n y^m + b x^n + c y^m = 1 (or the
// family-I equation): optional coordinate swap followed by monomial maps in
// each coordinate. The shape is closed under composition.
struct CurveAut {
  bool swap = false;
  MonomialMap xm, ym;

  static CurveAut identity(const FieldPtr& F);
  CurveAut compose(const CurveAut& o) const;  // this after o
  CurveAut inverse() const;
  bool is_identity() const;
  bool operator==(const CurveAut& o) const { return swap == o.swap && xm == o.xm && ym == o.ym; }
  int order(int bound = 1 << 14) const;
  std::array<int64_t, 5> key() const;
  std::string str() const;
};

// The defining equation as a sparse exponent-pair -> coefficient table, used
// for exact equation-preservation certificates.
using TermMap = std::map<std::pair<int64_t, int64_t>, Elem>;

TermMap family_terms(const CurveSpec& C, const FieldPtr& E);
// True iff F o aut = (nonzero scalar) * F after clearing monomial denominators.
bool preserves_equation(const TermMap& F, const CurveAut& g);

struct GeneratorCatalog {
  FieldPtr working;               // smallest extension holding every constant
  std::vector<CurveAut> gens;     // sigma1, sigma2, then mu / tau1 / tau2 / theta as present
  CurveAut sigma1, sigma2;
  std::optional<CurveAut> mu, tau1, tau2, theta;
  bool coeffs_in_quadratic_extension = false;  // all constants already in F_{q^2}
  int coefficient_extension_degree = 1;        // [working : F_q]
};

// The coordinate-automorphism generators of the family equation: sigma1,
// sigma2 always; mu for the normalized b = c = 1 form of family IIb1; tau1,
// tau2 when additionally a = 1; theta when n = m (family I needs a = b).
// Every returned map is certified to preserve the equation exactly.
GeneratorCatalog generator_catalog(const CurveSpec& C);

struct GroupTable {
  std::vector<CurveAut> elements;        // canonically sorted, identity first
  std::vector<std::vector<int>> mul;     // mul[i][j] = index of elements[i] o elements[j]
  int index_of(const CurveAut& g) const;
  int order() const { return static_cast<int>(elements.size()); }
};

GroupTable generated_group(const std::vector<CurveAut>& gens, int bound = 10000);

struct StructureDescriptor {
  enum class Kind { trivial, cyclic, dihedral, elementary_abelian, abelian, other };
  Kind kind = Kind::other;
  int64_t order = 1;
  int64_t k = 0;       // cyclic order, or dihedral half-order (|D_k| = 2k)
  int64_t p = 0, rank = 0;  // elementary abelian
  bool abelian = false;
  std::map<int, int> order_histogram;
  std::string str() const;
};

StructureDescriptor recognize_group(const GroupTable& T);

// Verifies N (as indices into T) is a normal subgroup and recognizes T/N.
// Throws not-normal with a witness otherwise.
StructureDescriptor quotient_structure(const GroupTable& T, const std::vector<int>& N);

// --- orbit census -----------------------------------------------------------

enum class FrobCase { T3_all_preserved, T4_all_preserved, T4_two_preserved, T4_none_preserved };
const char* frob_case_name(FrobCase c);

struct OrbitData {
  int64_t size = 0;
  int64_t stabilizer_order = 1;
  SmoothPlace representative;
  bool is_short = false;
};

struct OrbitReport {
  int L = 1;                     // census extension degree over F_q
  bool full_census = false;      // long orbits enumerated too
  int64_t total_places = -1;     // only when full_census
  std::vector<OrbitData> orbits; // short orbits first (always exact), then long
  std::vector<int64_t> short_sizes;  // canonical (sorted descending)
  std::vector<int> frobenius_perm;   // image orbit index per short orbit
  FrobCase frob_case = FrobCase::T3_all_preserved;
  int64_t genus_rhp = -1;        // genus recovered from the orbit-count identity
};

// Census of the G = C_n x C_m action on degree-1 places over F_{q^L}. The
// short orbits are materialized exactly from the branch loci at the smallest
// L <= 12 making them rational (or the given L); the long-orbit census is
// included when the field is enumerable (q^L <= 13^4).
OrbitReport g_orbits(const CurveSpec& C, int L = 0);

// Classification of the Frobenius action on short orbits, cross-checked
// against the divisibility signature of (n, m); theorem-violation on mismatch.
FrobCase frobenius_orbit_action(const CurveSpec& C, const OrbitReport& R);

// 2r < s: the normality criterion for a cyclic group of order r fully
// ramified at s places.
bool kontogeorgis_normal(int64_t r, int64_t s);

// Generators of the extra automorphisms on the model z^{p^r} + z = w^2:
// translations z -> z + c over the p^r roots of c^{p^r} + c = 0, scalings
// (z, w) -> (a^2 z, a w) with a^{2(p^r-1)} = 1, and the inversion
// (z, w) -> (1/z, w/z^{(p^r+1)/2}); each certified by exact substitution.
struct ArtinSchreierGenerators {
  FieldPtr field;  // F_{p^{2r}}
  std::vector<Elem> translations;
  Elem scaling_generator;
  bool translations_ok = false, scalings_ok = false, inversion_ok = false;
  bool all_ok() const { return translations_ok && scalings_ok && inversion_ok; }
};

ArtinSchreierGenerators artin_schreier_generators(int64_t p, int r);

// Permutation each table element induces on the four short-orbit point sets
// of a IIb1-normalized curve (zeros/poles of y, zeros/poles of x).
// Entries are images of {Y0, Yinf, X0, Xinf} as indices 0..3.
std::vector<std::array<int, 4>> orbit_permutation_table(const CurveSpec& C, const GroupTable& T,
                                                        const FieldPtr& E);

// Transitivity of <sigma, mu> on the union of two short-orbit sets, stated
// with the y-side (j = 1) or x-side (j = 2) pair.
bool dihedral_transitive_on_pair(const CurveSpec& C, int side);

}  // namespace gfc
