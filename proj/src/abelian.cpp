#include "troproots/abelian.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace troproots {

namespace {

long long mod_reduce(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

CoefficientGroup::CoefficientGroup(int free_rank, std::vector<long long> torsion_moduli)
    : free_rank_(free_rank), torsion_(std::move(torsion_moduli))
{
    if (free_rank < 0)
        throw std::invalid_argument("free rank must be nonnegative");
    for (long long m : torsion_)
        if (m < 2)
            throw std::invalid_argument("torsion moduli must be >= 2");
}

long long CoefficientGroup::torsion_order() const
{
    long long order = 1;
    for (long long m : torsion_)
        order *= m;
    return order;
}

std::string CoefficientGroup::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (free_rank_ == 1) {
        out << "Z";
        first = false;
    } else if (free_rank_ > 1) {
        out << "Z^" << free_rank_;
        first = false;
    }
    for (long long m : torsion_) {
        if (!first)
            out << " x ";
        out << "Z/" << m;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

GroupElement::GroupElement(CoefficientGroup group, std::vector<long long> free_part,
                           std::vector<long long> torsion_part)
    : group_(std::move(group)), free_(std::move(free_part)), torsion_(std::move(torsion_part))
{
    if (static_cast<int>(free_.size()) != group_.free_rank()
        || torsion_.size() != group_.torsion_moduli().size())
        throw std::invalid_argument("element shape does not match group");
    for (size_t i = 0; i < torsion_.size(); ++i)
        torsion_[i] = mod_reduce(torsion_[i], group_.torsion_moduli()[i]);
}

GroupElement GroupElement::zero(const CoefficientGroup& group)
{
    return GroupElement(group, std::vector<long long>(group.free_rank(), 0),
                        std::vector<long long>(group.torsion_moduli().size(), 0));
}

GroupElement GroupElement::integer(long long n)
{
    return GroupElement(integers(), {n}, {});
}

GroupElement GroupElement::residue(long long a, long long m)
{
    if (m == 1)
        return GroupElement(CoefficientGroup(0, {}), {}, {});
    return GroupElement(cyclic(m), {}, {a});
}

bool GroupElement::is_zero() const
{
    for (long long x : free_)
        if (x != 0)
            return false;
    for (long long x : torsion_)
        if (x != 0)
            return false;
    return true;
}

bool GroupElement::is_torsion() const
{
    for (long long x : free_)
        if (x != 0)
            return false;
    return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const
{
    if (group_ != other.group_)
        throw std::invalid_argument("cannot add elements of different groups");
    std::vector<long long> f(free_), t(torsion_);
    for (size_t i = 0; i < f.size(); ++i)
        f[i] += other.free_[i];
    for (size_t i = 0; i < t.size(); ++i)
        t[i] = mod_reduce(t[i] + other.torsion_[i], group_.torsion_moduli()[i]);
    return GroupElement(group_, std::move(f), std::move(t));
}

GroupElement GroupElement::operator-(const GroupElement& other) const
{
    return *this + (-other);
}

GroupElement GroupElement::operator-() const
{
    return *this * -1;
}

GroupElement GroupElement::operator*(long long scalar) const
{
    std::vector<long long> f(free_), t(torsion_);
    for (auto& x : f)
        x *= scalar;
    for (size_t i = 0; i < t.size(); ++i) {
        long long m = group_.torsion_moduli()[i];
        t[i] = mod_reduce(mod_reduce(scalar, m) * t[i], m);
    }
    return GroupElement(group_, std::move(f), std::move(t));
}

std::vector<long long> GroupElement::encode() const
{
    std::vector<long long> out(free_);
    out.insert(out.end(), torsion_.begin(), torsion_.end());
    return out;
}

std::string GroupElement::to_string() const
{
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (long long x : free_) {
        if (!first)
            out << ",";
        out << x;
        first = false;
    }
    for (long long x : torsion_) {
        if (!first)
            out << ",";
        out << x;
        first = false;
    }
    out << ")";
    return out.str();
}

std::vector<GroupElement> all_elements(const CoefficientGroup& group)
{
    if (!group.is_finite())
        throw std::invalid_argument("cannot enumerate an infinite group");
    std::vector<GroupElement> out;
    std::vector<long long> t(group.torsion_moduli().size(), 0);
    while (true) {
        out.push_back(GroupElement(group, {}, t));
        size_t i = 0;
        for (; i < t.size(); ++i) {
            if (++t[i] < group.torsion_moduli()[i])
                break;
            t[i] = 0;
        }
        if (i == t.size())
            break;
    }
    return out;
}

bool is_mult_injective(const CoefficientGroup& group, long long r)
{
    if (r == 0)
        throw std::invalid_argument("r must be nonzero");
    for (long long m : group.torsion_moduli())
        if (std::gcd(std::abs(r), m) != 1)
            return false;
    return true;
}

long long gcd_shifted(long long b, const GroupElement& a)
{
    if (b == 0)
        throw std::invalid_argument("b must be nonzero");
    long long babs = std::abs(b);
    long long best = 1;
    for (long long j = 1; j <= babs; ++j) {
        if (babs % j != 0 || j <= best)
            continue;
        bool contained = true;
        // Containment of a + bA in jA is componentwise.
        for (long long x : a.free_part()) {
            if (x % j != 0) {
                contained = false;
                break;
            }
        }
        if (contained) {
            const auto& moduli = a.group().torsion_moduli();
            for (size_t i = 0; i < moduli.size() && contained; ++i) {
                long long m = moduli[i];
                std::set<long long> jA;
                for (long long s = 0; s < m; ++s)
                    jA.insert(mod_reduce(j * s, m));
                for (long long s = 0; s < m; ++s) {
                    long long coset = mod_reduce(a.torsion_part()[i] + b * s, m);
                    if (!jA.count(coset)) {
                        contained = false;
                        break;
                    }
                }
            }
        }
        if (contained)
            best = j;
    }
    return best;
}

QuotientMap::QuotientMap(CoefficientGroup source, long long r)
    : source_(std::move(source)), r_(std::abs(r))
{
    if (r == 0)
        throw std::invalid_argument("r must be nonzero");
    std::vector<long long> moduli;
    for (int i = 0; i < source_.free_rank(); ++i) {
        image_modulus_.push_back(r_ == 1 ? 0 : r_);
        if (r_ > 1)
            moduli.push_back(r_);
    }
    for (long long m : source_.torsion_moduli()) {
        long long d = std::gcd(r_, m);
        image_modulus_.push_back(d == 1 ? 0 : d);
        if (d > 1)
            moduli.push_back(d);
    }
    target_ = CoefficientGroup(0, std::move(moduli));
}

GroupElement QuotientMap::project(const GroupElement& a) const
{
    if (a.group() != source_)
        throw std::invalid_argument("element not in the source group");
    std::vector<long long> t;
    size_t idx = 0;
    for (long long x : a.free_part()) {
        if (image_modulus_[idx] != 0)
            t.push_back(mod_reduce(x, image_modulus_[idx]));
        ++idx;
    }
    for (long long x : a.torsion_part()) {
        if (image_modulus_[idx] != 0)
            t.push_back(mod_reduce(x, image_modulus_[idx]));
        ++idx;
    }
    return GroupElement(target_, {}, std::move(t));
}

GroupElement QuotientMap::lift(const GroupElement& x) const
{
    if (x.group() != target_)
        throw std::invalid_argument("element not in the quotient group");
    std::vector<long long> f, t;
    size_t pos = 0;
    size_t idx = 0;
    for (int i = 0; i < source_.free_rank(); ++i, ++idx)
        f.push_back(image_modulus_[idx] != 0 ? x.torsion_part()[pos++] : 0);
    for (size_t i = 0; i < source_.torsion_moduli().size(); ++i, ++idx)
        t.push_back(image_modulus_[idx] != 0 ? x.torsion_part()[pos++] : 0);
    return GroupElement(source_, std::move(f), std::move(t));
}

Homomorphism::Homomorphism(CoefficientGroup domain, CoefficientGroup codomain,
                           std::vector<GroupElement> generator_images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(generator_images))
{
    size_t expected = domain_.free_rank() + domain_.torsion_moduli().size();
    if (images_.size() != expected)
        throw std::invalid_argument("wrong number of generator images");
    for (const auto& img : images_)
        if (img.group() != codomain_)
            throw std::invalid_argument("generator image not in the codomain");
    // Additivity requires m_i * f(g_i) = 0 for each torsion generator.
    for (size_t i = 0; i < domain_.torsion_moduli().size(); ++i) {
        GroupElement killed = images_[domain_.free_rank() + i] * domain_.torsion_moduli()[i];
        if (!killed.is_zero())
            throw std::invalid_argument("map is not additive: torsion relation violated");
    }
}

Homomorphism Homomorphism::identity(const CoefficientGroup& group)
{
    std::vector<GroupElement> images;
    for (int i = 0; i < group.free_rank(); ++i) {
        std::vector<long long> f(group.free_rank(), 0);
        f[i] = 1;
        images.push_back(GroupElement(group, f, std::vector<long long>(group.torsion_moduli().size(), 0)));
    }
    for (size_t i = 0; i < group.torsion_moduli().size(); ++i) {
        std::vector<long long> t(group.torsion_moduli().size(), 0);
        t[i] = 1;
        images.push_back(GroupElement(group, std::vector<long long>(group.free_rank(), 0), t));
    }
    return Homomorphism(group, group, std::move(images));
}

GroupElement Homomorphism::apply(const GroupElement& a) const
{
    if (a.group() != domain_)
        throw std::invalid_argument("element not in the domain");
    GroupElement out = GroupElement::zero(codomain_);
    size_t idx = 0;
    for (long long x : a.free_part())
        out = out + images_[idx++] * x;
    for (long long x : a.torsion_part())
        out = out + images_[idx++] * x;
    return out;
}

} // namespace troproots
