#ifndef TROPROOTS_ABELIAN_HPP
#define TROPROOTS_ABELIAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace troproots {

// Finitely generated abelian group Z^k + Z/m_1 + ... + Z/m_t.
// Immutable descriptor; elements carry a copy of their descriptor and
// refuse arithmetic across distinct groups.
class CoefficientGroup {
public:
    CoefficientGroup() = default;
    CoefficientGroup(int free_rank, std::vector<long long> torsion_moduli);

    int free_rank() const { return free_rank_; }
    const std::vector<long long>& torsion_moduli() const { return torsion_; }

    bool is_finite() const { return free_rank_ == 0; }
    // Order of the torsion part (the full order when finite).
    long long torsion_order() const;

    bool operator==(const CoefficientGroup& other) const = default;

    std::string to_string() const;

private:
    int free_rank_ = 0;
    std::vector<long long> torsion_;
};

inline const CoefficientGroup& integers()
{
    static const CoefficientGroup z(1, {});
    return z;
}

inline CoefficientGroup cyclic(long long m)
{
    return m == 1 ? CoefficientGroup(0, {}) : CoefficientGroup(0, {m});
}

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(CoefficientGroup group, std::vector<long long> free_part,
                 std::vector<long long> torsion_part);

    static GroupElement zero(const CoefficientGroup& group);
    // Element of Z.
    static GroupElement integer(long long n);
    // Element of Z/mZ.
    static GroupElement residue(long long a, long long m);

    const CoefficientGroup& group() const { return group_; }
    const std::vector<long long>& free_part() const { return free_; }
    const std::vector<long long>& torsion_part() const { return torsion_; }

    bool is_zero() const;
    bool is_torsion() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement operator*(long long scalar) const;
    bool operator==(const GroupElement& other) const = default;

    // Flat encoding used for deterministic ordering of flows and divisors.
    std::vector<long long> encode() const;

    std::string to_string() const;

private:
    CoefficientGroup group_;
    std::vector<long long> free_;
    std::vector<long long> torsion_;
};

// All elements of a finite group, in a fixed deterministic order.
std::vector<GroupElement> all_elements(const CoefficientGroup& group);

// True iff x -> r*x is injective on the group, i.e. gcd(|r|, m_i) = 1 for
// every torsion modulus.  Throws std::invalid_argument for r = 0.
bool is_mult_injective(const CoefficientGroup& group, long long r);

// gcd(b, a + bA) = max{ j : j divides |b|, a + bA is contained in jA }.
// For A = Z this is the usual gcd(b, a).
long long gcd_shifted(long long b, const GroupElement& a);

// The quotient A -> A/rA together with the projection and a fixed section.
class QuotientMap {
public:
    QuotientMap(CoefficientGroup source, long long r);

    const CoefficientGroup& source() const { return source_; }
    const CoefficientGroup& target() const { return target_; }
    long long r() const { return r_; }

    GroupElement project(const GroupElement& a) const;
    // Section of project: project(lift(x)) == x.
    GroupElement lift(const GroupElement& x) const;

private:
    CoefficientGroup source_;
    CoefficientGroup target_;
    long long r_ = 0;
    // Per source component: modulus of the image component, or 0 if the
    // component dies in the quotient.
    std::vector<long long> image_modulus_;
};

// Additive map A -> B given by images of the canonical generators
// (free generators first, then one generator per torsion component).
class Homomorphism {
public:
    Homomorphism(CoefficientGroup domain, CoefficientGroup codomain,
                 std::vector<GroupElement> generator_images);

    static Homomorphism identity(const CoefficientGroup& group);

    const CoefficientGroup& domain() const { return domain_; }
    const CoefficientGroup& codomain() const { return codomain_; }

    GroupElement apply(const GroupElement& a) const;

private:
    CoefficientGroup domain_;
    CoefficientGroup codomain_;
    std::vector<GroupElement> images_;
};

} // namespace troproots

#endif
