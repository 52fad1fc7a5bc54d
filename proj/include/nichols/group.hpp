#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nichols {

// element of a finite abelian group, as the canonical exponent vector
// (i_1, ..., i_n) with 0 <= i_l < m_l
struct GroupElement {
    std::vector<std::int64_t> exp;

    bool operator==(const GroupElement& o) const { return exp == o.exp; }
    bool operator!=(const GroupElement& o) const { return exp != o.exp; }
    bool operator<(const GroupElement& o) const { return exp < o.exp; }
};

// Z_{m_1} x ... x Z_{m_n}, given by the orders of the distinguished
// generators.  The trivial group is a single factor 1.
class FinAbGroup {
public:
    explicit FinAbGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const;

    GroupElement identity() const;
    GroupElement generator(int l) const;
    // g_1^{e_1} ... g_n^{e_n} with arbitrary integer exponents, canonicalized
    GroupElement element(const std::vector<std::int64_t>& exponents) const;

    bool is_valid(const GroupElement& a) const;
    void check(const GroupElement& a) const;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& a, std::int64_t k) const;
    std::int64_t elem_order(const GroupElement& a) const;

    // mixed-radix index, the iteration order of all_elements()
    std::int64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::int64_t index) const;
    std::vector<GroupElement> all_elements() const;

    bool operator==(const FinAbGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const FinAbGroup& o) const { return factors_ != o.factors_; }

    std::string str() const;

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_;
};

// homomorphism between finite abelian groups, by generator images
class GroupHom {
public:
    GroupHom(FinAbGroup domain, FinAbGroup codomain, std::vector<GroupElement> images);

    const FinAbGroup& domain() const { return domain_; }
    const FinAbGroup& codomain() const { return codomain_; }
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement apply(const GroupElement& a) const;

    static GroupHom identity(const FinAbGroup& g);

private:
    FinAbGroup domain_;
    FinAbGroup codomain_;
    std::vector<GroupElement> images_;
};

// the auxiliary group with squared factor orders, its canonical epimorphism
// onto G and the canonical section of that epimorphism
struct HatGroup {
    FinAbGroup hat;
    GroupHom pi;

    GroupElement section(const GroupElement& g_elem) const { return GroupElement{g_elem.exp}; }
};

HatGroup hat_group(const FinAbGroup& g);

GroupElement elem_mul(const FinAbGroup& g, const GroupElement& a, const GroupElement& b);
std::int64_t elem_order(const FinAbGroup& g, const GroupElement& a);

// full element set of the subgroup generated by gens, sorted by element index
std::vector<GroupElement> generated_subgroup(const FinAbGroup& g,
                                             const std::vector<GroupElement>& gens);

}  // namespace nichols
