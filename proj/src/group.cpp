#include "nichols/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nichols {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("FinAbGroup: empty factor list");
    order_ = 1;
    for (const auto m : factors_) {
        if (m < 1) throw std::invalid_argument("FinAbGroup: factors must be >= 1");
        order_ *= m;
    }
}

std::int64_t FinAbGroup::exponent() const {
    std::int64_t e = 1;
    for (const auto m : factors_) e = std::lcm(e, m);
    return e;
}

GroupElement FinAbGroup::identity() const {
    return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FinAbGroup::generator(int l) const {
    auto e = identity();
    if (l < 0 || l >= rank()) throw std::out_of_range("FinAbGroup::generator");
    if (factors_[static_cast<std::size_t>(l)] > 1) e.exp[static_cast<std::size_t>(l)] = 1;
    return e;
}

GroupElement FinAbGroup::element(const std::vector<std::int64_t>& exponents) const {
    if (exponents.size() != factors_.size())
        throw std::invalid_argument("FinAbGroup::element: rank mismatch");
    GroupElement a{exponents};
    for (std::size_t l = 0; l < factors_.size(); ++l) {
        a.exp[l] %= factors_[l];
        if (a.exp[l] < 0) a.exp[l] += factors_[l];
    }
    return a;
}

bool FinAbGroup::is_valid(const GroupElement& a) const {
    if (a.exp.size() != factors_.size()) return false;
    for (std::size_t l = 0; l < factors_.size(); ++l)
        if (a.exp[l] < 0 || a.exp[l] >= factors_[l]) return false;
    return true;
}

void FinAbGroup::check(const GroupElement& a) const {
    if (!is_valid(a)) throw std::invalid_argument("group element does not belong to " + str());
}

GroupElement FinAbGroup::mul(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement c{std::vector<std::int64_t>(factors_.size())};
    for (std::size_t l = 0; l < factors_.size(); ++l) {
        c.exp[l] = a.exp[l] + b.exp[l];
        if (c.exp[l] >= factors_[l]) c.exp[l] -= factors_[l];
    }
    return c;
}

GroupElement FinAbGroup::inv(const GroupElement& a) const {
    check(a);
    GroupElement c{std::vector<std::int64_t>(factors_.size())};
    for (std::size_t l = 0; l < factors_.size(); ++l)
        c.exp[l] = a.exp[l] == 0 ? 0 : factors_[l] - a.exp[l];
    return c;
}

GroupElement FinAbGroup::pow(const GroupElement& a, std::int64_t k) const {
    check(a);
    GroupElement c{std::vector<std::int64_t>(factors_.size())};
    for (std::size_t l = 0; l < factors_.size(); ++l) {
        const std::int64_t m = factors_[l];
        c.exp[l] = ((a.exp[l] * (k % m)) % m + m) % m;
    }
    return c;
}

std::int64_t FinAbGroup::elem_order(const GroupElement& a) const {
    check(a);
    std::int64_t ord = 1;
    for (std::size_t l = 0; l < factors_.size(); ++l)
        ord = std::lcm(ord, factors_[l] / std::gcd(factors_[l], a.exp[l]));
    return ord;
}

std::int64_t FinAbGroup::index_of(const GroupElement& a) const {
    check(a);
    std::int64_t idx = 0;
    for (std::size_t l = 0; l < factors_.size(); ++l) idx = idx * factors_[l] + a.exp[l];
    return idx;
}

GroupElement FinAbGroup::element_at(std::int64_t index) const {
    GroupElement a{std::vector<std::int64_t>(factors_.size())};
    for (std::size_t l = factors_.size(); l-- > 0;) {
        a.exp[l] = index % factors_[l];
        index /= factors_[l];
    }
    return a;
}

std::vector<GroupElement> FinAbGroup::all_elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::string FinAbGroup::str() const {
    std::ostringstream os;
    for (std::size_t l = 0; l < factors_.size(); ++l) {
        if (l) os << "x";
        os << "Z" << factors_[l];
    }
    return os.str();
}

GroupHom::GroupHom(FinAbGroup domain, FinAbGroup codomain, std::vector<GroupElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.rank())
        throw std::invalid_argument("GroupHom: one image per domain generator required");
    for (int l = 0; l < domain_.rank(); ++l) {
        codomain_.check(images_[static_cast<std::size_t>(l)]);
        const std::int64_t m = domain_.factors()[static_cast<std::size_t>(l)];
        if (m % codomain_.elem_order(images_[static_cast<std::size_t>(l)]) != 0)
            throw std::invalid_argument("GroupHom: image order does not divide generator order");
    }
}

GroupElement GroupHom::apply(const GroupElement& a) const {
    domain_.check(a);
    GroupElement out = codomain_.identity();
    for (int l = 0; l < domain_.rank(); ++l) {
        const auto p = codomain_.pow(images_[static_cast<std::size_t>(l)], a.exp[static_cast<std::size_t>(l)]);
        out = codomain_.mul(out, p);
    }
    return out;
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
    std::vector<GroupElement> images;
    for (int l = 0; l < g.rank(); ++l) images.push_back(g.generator(l));
    return GroupHom(g, g, std::move(images));
}

HatGroup hat_group(const FinAbGroup& g) {
    std::vector<std::int64_t> hf;
    hf.reserve(g.factors().size());
    for (const auto m : g.factors()) hf.push_back(m * m);
    FinAbGroup hat(hf);
    std::vector<GroupElement> images;
    for (int l = 0; l < g.rank(); ++l) images.push_back(g.generator(l));
    GroupHom pi(hat, g, std::move(images));
    return HatGroup{std::move(hat), std::move(pi)};
}

GroupElement elem_mul(const FinAbGroup& g, const GroupElement& a, const GroupElement& b) {
    return g.mul(a, b);
}

std::int64_t elem_order(const FinAbGroup& g, const GroupElement& a) { return g.elem_order(a); }

std::vector<GroupElement> generated_subgroup(const FinAbGroup& g,
                                             const std::vector<GroupElement>& gens) {
    std::set<std::int64_t> seen;
    std::vector<GroupElement> frontier{g.identity()};
    seen.insert(g.index_of(g.identity()));
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& a : frontier) {
            for (const auto& h : gens) {
                const auto b = g.mul(a, h);
                if (seen.insert(g.index_of(b)).second) next.push_back(b);
            }
        }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    out.reserve(seen.size());
    for (const auto idx : seen) out.push_back(g.element_at(idx));
    return out;
}

}  // namespace nichols
