#pragma once

#include "isoext/f2linalg.hpp"
#include "isoext/grading.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isoext {

/// The algebra presentations in play.
///   G    : F2[xi_1, xi_2, ...], xi_i in bidegree (2^{i+1}-2, 2^i-1)
///   RISO : Lambda(tau_0, tau_1, ...) (x) F2[xi_1, ...], tau_i in (2^{i+1}-1, 2^i-1)
///   HPT  : Lambda(rho_0, rho_1, ...), rho_i in (2^{i+1}-1, 2^i-1)
///   AISO : HPT (x) RISO, as an algebra only
enum class AlgebraId
{
    G,
    RISO,
    HPT,
    AISO,
};

std::string algebra_name(AlgebraId a);
std::optional<AlgebraId> algebra_from_name(const std::string& s);

Bidegree xi_bidegree(int j);   // j >= 1
Bidegree tau_bidegree(int i);  // i >= 0
Bidegree rho_bidegree(int i);  // i >= 0

/// Basis monomial rho^eps tau^delta xi^E, exponents with trailing zeros
/// trimmed. Lexicographic order on (rho, tau, xi) is the canonical order.
struct MonomialKey
{
    std::vector<uint8_t> rho;  // rho[i] = exponent of rho_i, 0 or 1
    std::vector<uint8_t> tau;  // tau[i] = exponent of tau_i, 0 or 1
    std::vector<int> xi;       // xi[j] = exponent of xi_{j+1}

    static MonomialKey one()
    {
        return {};
    }
    static MonomialKey xi_gen(int j, int e = 1);  // xi_j^e, j >= 1
    static MonomialKey tau_gen(int i);
    static MonomialKey rho_gen(int i);

    bool is_one() const
    {
        return rho.empty() && tau.empty() && xi.empty();
    }
    bool rho_free() const
    {
        return rho.empty();
    }
    Bidegree bidegree() const;

    /// Trim trailing zero exponents.
    void normalize();

    /// Product of monomials; absent when an exterior generator squares.
    friend std::optional<MonomialKey> operator*(const MonomialKey& a, const MonomialKey& b);

    auto operator<=>(const MonomialKey&) const = default;

    /// Human-readable form, e.g. "x1^2 x2", "t0 x1", "1".
    std::string str() const;
};

/// Mod-2 sum of elementary tensors a (x) b; terms sorted and distinct.
struct TensorSum
{
    std::vector<std::pair<MonomialKey, MonomialKey>> terms;

    static TensorSum of(MonomialKey a, MonomialKey b)
    {
        TensorSum t;
        t.terms.emplace_back(std::move(a), std::move(b));
        return t;
    }

    bool contains(const MonomialKey& a, const MonomialKey& b) const;
    void add(MonomialKey a, MonomialKey b);  // mod-2 insertion
    TensorSum operator*(const TensorSum& o) const;
    TensorSum operator+(const TensorSum& o) const;
    bool operator==(const TensorSum&) const = default;
};

/// All monomials of the given bidegree, canonically ordered (memoized).
const std::vector<MonomialKey>& enumerate_basis(AlgebraId alg, Bidegree d);

/// Index of m in enumerate_basis(alg, m.bidegree()); -1 when absent.
int basis_index(AlgebraId alg, const MonomialKey& m);

/// psi(m), extended multiplicatively from the generator coproducts and
/// reduced mod 2 and mod tau_i^2 = 0. Only for G and RISO monomials.
const TensorSum& coproduct(AlgebraId alg, const MonomialKey& m);

/// Product of dual-basis elements a^v * b^v, as a vector over the canonical
/// basis of the sum bidegree: the m^v-coefficient is the coefficient of
/// a (x) b in psi(m).
F2Vector dual_product(AlgebraId alg, const MonomialKey& a, const MonomialKey& b);

/// Milnor operation Q_j acting as a derivation on HPT with Q_j rho_i =
/// delta_{ij}; vector over the basis of bidegree(m) - bidegree(rho_j).
F2Vector milnor_action(int j, const MonomialKey& m);

struct HopfReport
{
    std::vector<std::string> violations;
    long monomials_checked = 0;

    bool ok() const
    {
        return violations.empty();
    }
};

/// Check counit, coassociativity and multiplicativity of psi on every
/// monomial with topological degree <= max_p.
HopfReport verify_hopf(AlgebraId alg, int max_p);

/// All monomials with topological degree <= max_p, grouped canonically.
std::vector<MonomialKey> monomials_up_to_p(AlgebraId alg, int max_p);

}  // namespace isoext
