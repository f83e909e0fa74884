#pragma once

#include "isoext/f2linalg.hpp"
#include "isoext/grading.hpp"
#include "isoext/hopf.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isoext {

/// One term m (x) basis[target] of a coaction value.
struct CoactionTerm
{
    MonomialKey mon;
    int target = 0;
    auto operator<=>(const CoactionTerm&) const = default;
};

struct BasisElem
{
    std::string label;
    Bidegree deg;
    bool operator==(const BasisElem&) const = default;
};

/// Finite bigraded left comodule over G. The coaction stores
/// psi(basis[j]) = sum of mon (x) basis[target]; the counit term
/// (1, j) is always present in canonical form.
struct Comodule
{
    std::vector<BasisElem> basis;
    std::vector<std::vector<CoactionTerm>> coaction;

    // Set when this is a windowed cofree truncation: p bound of the window
    // and the number of coaction terms dropped at the boundary.
    std::optional<int> truncated_at_p;
    int dropped_terms = 0;

    static Comodule empty()
    {
        return {};
    }
    /// Trivial coaction on the given elements.
    static Comodule trivial(std::vector<BasisElem> elems);
    /// The sphere: F2 in bidegree (0,0).
    static Comodule sphere();

    int dim() const
    {
        return static_cast<int>(basis.size());
    }
    int find(const std::string& label) const;  // -1 when absent

    /// Sort basis by (p, q, label), remap coaction targets, sort terms.
    void canonicalize();

    /// Distinct Chow-Novikov degrees of basis elements, sorted.
    std::vector<int> cn_support() const;

    /// Max topological degree of a basis element (0 for the empty comodule).
    int max_p() const;

    bool operator==(const Comodule& o) const
    {
        return basis == o.basis && coaction == o.coaction;
    }
};

using GradedDims = std::map<Bidegree, int>;

struct ValidationIssue
{
    std::string element;
    std::string message;
};

struct ValidationReport
{
    std::vector<ValidationIssue> issues;
    bool ok() const
    {
        return issues.empty();
    }
};

/// Check counit, bidegree coherence and coassociativity on every basis
/// element; malformed input yields a non-empty report, not a crash.
ValidationReport validate(const Comodule& c);

/// Throw InvalidComodule when validate(c) finds issues.
void require_valid(const Comodule& c);

/// Distinct non-unit monomials appearing in any coaction, sorted.
std::vector<MonomialKey> coaction_monomials(const Comodule& c);

/// Matrix P with P[i][j] = coefficient of mon (x) basis[i] in psi(basis[j]).
F2Matrix coaction_matrix(const Comodule& c, const MonomialKey& mon);

/// Cofree comodule G (x) V on cogenerators with multiplicities `dims`,
/// truncated to the window; dropped boundary terms are counted and the
/// truncation is flagged on the result. Throws EmptyWindow.
Comodule cofree(const GradedDims& dims, BidegreeWindow window);

/// Split into Chow-Novikov homogeneous summands. Throws InvalidComodule.
std::map<int, Comodule> cn_split(const Comodule& c);

/// Direct sum; labels must stay distinct.
Comodule direct_sum(const std::vector<Comodule>& parts);

/// Suspension Sigma^{p,q}: basis degrees shift by (p,q), coaction unchanged.
Comodule shift(const Comodule& c, Bidegree by);

/// Comodule over the singly-graded dual Steenrod algebra, the heart image
/// of a CN-0 comodule under G_{2q,q} = A_q.
struct SingleComodule
{
    std::vector<std::pair<std::string, int>> basis;  // (label, degree)
    std::vector<std::vector<CoactionTerm>> coaction;
    bool operator==(const SingleComodule&) const = default;
};

/// Regrade a CN-0 comodule to a singly-graded one ((2q,q) -> q).
/// Throws NonZeroChowNovikov.
SingleComodule regrade_heart(const Comodule& c);
/// Inverse regrading (q -> (2q,q)); round-trips with regrade_heart.
Comodule regrade_heart_inverse(const SingleComodule& c);

struct SeriesLayer
{
    Bidegree deg;
    std::string label;
    /// psi-bar of the layer vector in flag coordinates: terms
    /// mon (x) (earlier layer index); empty for split layers.
    std::vector<CoactionTerm> cocycle;
};

struct CompositionSeries
{
    std::vector<SeriesLayer> layers;
};

/// Full flag with one-dimensional trivial quotients, found by repeatedly
/// taking the primitive subspace of the quotient. Layer bidegrees are a
/// permutation of the basis bidegrees. Throws InvalidComodule.
CompositionSeries composition_series(const Comodule& c);

/// Attach a new element e in bidegree `shift` with psi(e) = 1 (x) e + z.
/// z is checked to be a degree-1 cobar cocycle. Throws NotACocycle.
Comodule extension_from_cocycle(const Comodule& c, Bidegree shift, const std::vector<CoactionTerm>& z, const std::string& label = "e");

/// Rebuild a comodule from its composition series data.
Comodule assemble_series(const CompositionSeries& series);

/// Brute-force graded comodule isomorphism test: solves for the space of
/// comodule maps and searches it for an invertible element. Exponential in
/// the intertwiner dimension; `max_dim` caps the search space.
bool comodule_isomorphic(const Comodule& a, const Comodule& b, int max_dim = 24);

}  // namespace isoext
