#include "nichols/json_io.hpp"

#include <algorithm>

namespace nichols {

Phase phase_from_json(const Json& j) {
    if (!j.is_string()) throw DescriptorError("phase must be a string like \"0\" or \"1/2\"");
    auto p = Phase::parse(j.get<std::string>());
    if (!p) throw DescriptorError("cannot parse phase \"" + j.get<std::string>() + "\"");
    return *p;
}

Json phase_to_json(const Phase& p) { return p.str(); }

FinAbGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
        throw DescriptorError("group descriptor must be {\"factors\":[m1,...]}");
    std::vector<std::int64_t> factors;
    for (const auto& f : j["factors"]) {
        if (!f.is_number_integer() || f.get<std::int64_t>() < 1)
            throw DescriptorError("group factors must be positive integers");
        factors.push_back(f.get<std::int64_t>());
    }
    if (factors.empty()) throw DescriptorError("group needs at least one factor");
    return FinAbGroup(std::move(factors));
}

Json group_to_json(const FinAbGroup& g) { return Json{{"factors", g.factors()}}; }

GroupElement element_from_json(const FinAbGroup& g, const Json& j) {
    if (!j.is_array()) throw DescriptorError("group element must be an integer array");
    std::vector<std::int64_t> exp;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw DescriptorError("group element entries must be integers");
        exp.push_back(v.get<std::int64_t>());
    }
    if (static_cast<int>(exp.size()) != g.rank())
        throw DescriptorError("group element has the wrong number of exponents");
    return g.element(exp);
}

Json element_to_json(const GroupElement& e) { return Json(e.exp); }

namespace {

CocyclePtr params_cocycle_from_json(const Json& j) {
    auto g = group_from_json(j.at("group"));
    const int n = g.rank();
    std::vector<std::int64_t> c1(static_cast<std::size_t>(n), 0);
    if (j.contains("c")) {
        if (!j["c"].is_array() || static_cast<int>(j["c"].size()) != n)
            throw DescriptorError("cocycle \"c\" must list one value per generator");
        for (int l = 0; l < n; ++l) c1[static_cast<std::size_t>(l)] = j["c"][static_cast<std::size_t>(l)].get<std::int64_t>();
    }
    std::vector<std::int64_t> c2(static_cast<std::size_t>(Cocycle3::pair_count(n)), 0);
    if (j.contains("c2")) {
        for (const auto& entry : j["c2"]) {
            if (!entry.is_array() || entry.size() != 3) throw DescriptorError("c2 entries must be [i,j,c_ij]");
            const auto i = entry[0].get<std::int64_t>();
            const auto jj = entry[1].get<std::int64_t>();
            if (i < 1 || jj <= i || jj > n)
                throw DescriptorError("c2 indices must satisfy 1 <= i < j <= rank");
            // lexicographic pair slot for 1-based (i, j)
            std::int64_t slot = 0;
            for (std::int64_t a = 1; a < i; ++a) slot += n - a;
            slot += jj - i - 1;
            c2[static_cast<std::size_t>(slot)] = entry[2].get<std::int64_t>();
        }
    }
    std::vector<std::int64_t> c3(static_cast<std::size_t>(Cocycle3::triple_count(n)), 0);
    if (j.contains("c3")) {
        if (!j["c3"].empty() && n < 3)
            throw DescriptorError("c3 parameters need a group of rank at least 3");
        for (const auto& entry : j["c3"]) {
            if (!entry.is_array() || entry.size() != 4)
                throw DescriptorError("c3 entries must be [r,s,t,c_rst]");
            const auto r = entry[0].get<std::int64_t>();
            const auto s = entry[1].get<std::int64_t>();
            const auto t = entry[2].get<std::int64_t>();
            if (r < 1 || s <= r || t <= s || t > n)
                throw DescriptorError("c3 indices must satisfy 1 <= r < s < t <= rank");
            std::int64_t slot = 0;
            for (std::int64_t a = 1; a <= n; ++a)
                for (std::int64_t b = a + 1; b <= n; ++b)
                    for (std::int64_t c = b + 1; c <= n; ++c) {
                        if (a == r && b == s && c == t) goto found;
                        ++slot;
                    }
        found:
            c3[static_cast<std::size_t>(slot)] = entry[3].get<std::int64_t>();
        }
    }
    try {
        return std::make_shared<Cocycle3>(std::move(g), std::move(c1), std::move(c2), std::move(c3));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(e.what());
    }
}

}  // namespace

CocyclePtr cocycle_from_json(const Json& j) {
    if (!j.is_object()) throw DescriptorError("cocycle descriptor must be an object");
    const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "params";
    if (kind == "params") return params_cocycle_from_json(j);
    if (kind == "trivial") return std::make_shared<TrivialCocycle>(group_from_json(j.at("group")));
    if (kind == "table") {
        auto g = group_from_json(j.at("group"));
        const auto& vals = j.at("values");
        std::vector<Phase> values;
        values.reserve(vals.size());
        for (const auto& v : vals) values.push_back(phase_from_json(v));
        try {
            return std::make_shared<TableCocycle>(std::move(g), std::move(values));
        } catch (const std::invalid_argument& e) {
            throw DescriptorError(e.what());
        }
    }
    if (kind == "pullback") {
        auto base = cocycle_from_json(j.at("base"));
        auto hat = hat_group(base->group());
        return std::make_shared<PullbackCocycle>(hat.pi, std::move(base));
    }
    if (kind == "product") {
        const auto& factors = j.at("factors");
        if (!factors.is_array() || factors.size() < 2)
            throw DescriptorError("product cocycle needs at least two factors");
        CocyclePtr acc = cocycle_from_json(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i) {
            try {
                acc = std::make_shared<ProductCocycle>(acc, cocycle_from_json(factors[i]));
            } catch (const std::invalid_argument& e) {
                throw DescriptorError(e.what());
            }
        }
        return acc;
    }
    if (kind == "coboundary")
        return std::make_shared<CoboundaryCocycle>(cochain_from_json(j.at("cochain")));
    throw DescriptorError("unknown cocycle kind \"" + kind + "\"");
}

Json cocycle_to_json(const CocycleEval& phi) {
    const std::string kind = phi.kind();
    if (kind == "params") {
        const auto& c = dynamic_cast<const Cocycle3&>(phi);
        const int n = phi.group().rank();
        Json out{{"group", group_to_json(phi.group())}, {"c", c.c1()}};
        Json c2 = Json::array();
        std::size_t slot = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++slot)
                if (c.c2()[slot] != 0) c2.push_back(Json::array({i, j, c.c2()[slot]}));
        Json c3 = Json::array();
        slot = 0;
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t, ++slot)
                    if (c.c3()[slot] != 0) c3.push_back(Json::array({r, s, t, c.c3()[slot]}));
        out["c2"] = std::move(c2);
        out["c3"] = std::move(c3);
        return out;
    }
    if (kind == "trivial") return Json{{"kind", "trivial"}, {"group", group_to_json(phi.group())}};
    if (kind == "table") {
        const auto& c = dynamic_cast<const TableCocycle&>(phi);
        Json values = Json::array();
        for (const auto& p : c.values()) values.push_back(phase_to_json(p));
        return Json{{"kind", "table"}, {"group", group_to_json(phi.group())}, {"values", std::move(values)}};
    }
    if (kind == "pullback") {
        const auto& c = dynamic_cast<const PullbackCocycle&>(phi);
        return Json{{"kind", "pullback"}, {"base", cocycle_to_json(*c.base())}};
    }
    if (kind == "product") {
        const auto& c = dynamic_cast<const ProductCocycle&>(phi);
        return Json{{"kind", "product"},
                    {"factors", Json::array({cocycle_to_json(*c.lhs()), cocycle_to_json(*c.rhs())})}};
    }
    if (kind == "coboundary") {
        const auto& c = dynamic_cast<const CoboundaryCocycle&>(phi);
        return Json{{"kind", "coboundary"}, {"cochain", cochain_to_json(c.cochain())}};
    }
    throw std::logic_error("cocycle_to_json: unknown kind");
}

Cochain2 cochain_from_json(const Json& j) {
    auto g = group_from_json(j.at("group"));
    const auto& table = j.at("table");
    if (!table.is_array() || static_cast<std::int64_t>(table.size()) != g.order() * g.order())
        throw DescriptorError("cochain table must have |G|^2 phase entries");
    std::vector<Phase> phases;
    phases.reserve(table.size());
    for (const auto& v : table) phases.push_back(phase_from_json(v));
    try {
        return Cochain2(std::move(g), std::move(phases));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(e.what());
    }
}

Json cochain_to_json(const Cochain2& c) {
    Json table = Json::array();
    for (const auto& p : c.table()) table.push_back(phase_to_json(p));
    return Json{{"group", group_to_json(c.group())}, {"table", std::move(table)}};
}

YDModule module_from_json(const Json& j) {
    if (!j.is_object()) throw DescriptorError("module descriptor must be an object");
    auto cocycle = cocycle_from_json(j.at("cocycle"));
    const auto& g = cocycle->group();
    if (j.contains("group") && group_from_json(j["group"]) != g)
        throw DescriptorError("module group disagrees with its cocycle's group");

    const auto& degs = j.at("degrees");
    if (!degs.is_array() || degs.empty()) throw DescriptorError("module needs a nonempty degree list");
    std::vector<GroupElement> degrees;
    for (const auto& d : degs) degrees.push_back(element_from_json(g, d));

    const auto& acts = j.at("actions");
    if (!acts.is_array() || static_cast<int>(acts.size()) != g.rank())
        throw DescriptorError("module needs one action matrix per group generator");
    const int dim = static_cast<int>(degrees.size());
    std::vector<MonomialMatrix> gen_actions;
    for (const auto& act : acts) {
        MonomialMatrix m;
        m.row.assign(static_cast<std::size_t>(dim), -1);
        m.coeff.assign(static_cast<std::size_t>(dim), Phase());
        if (!act.is_array()) throw DescriptorError("action matrix must be a list of {col,row,phase}");
        for (const auto& entry : act) {
            const auto col = entry.at("col").get<std::int64_t>();
            const auto row = entry.at("row").get<std::int64_t>();
            if (col < 0 || col >= dim || row < 0 || row >= dim)
                throw DescriptorError("action entry out of range");
            if (m.row[static_cast<std::size_t>(col)] != -1)
                throw DescriptorError("action matrix has two entries in one column");
            m.row[static_cast<std::size_t>(col)] = static_cast<int>(row);
            m.coeff[static_cast<std::size_t>(col)] = phase_from_json(entry.at("phase"));
        }
        for (int c = 0; c < dim; ++c)
            if (m.row[static_cast<std::size_t>(c)] == -1)
                throw DescriptorError("action matrix is missing a column (not monomial)");
        gen_actions.push_back(std::move(m));
    }
    try {
        return YDModule(g, std::move(cocycle), std::move(degrees), std::move(gen_actions));
    } catch (const std::invalid_argument& e) {
        throw DescriptorError(e.what());
    }
}

Json module_to_json(const YDModule& v) {
    Json degrees = Json::array();
    for (const auto& d : v.degrees()) degrees.push_back(element_to_json(d));
    Json actions = Json::array();
    for (const auto& m : v.gen_actions()) {
        Json entries = Json::array();
        for (int c = 0; c < m.dim(); ++c)
            entries.push_back(Json{{"col", c},
                                   {"row", m.row[static_cast<std::size_t>(c)]},
                                   {"phase", phase_to_json(m.coeff[static_cast<std::size_t>(c)])}});
        actions.push_back(std::move(entries));
    }
    return Json{{"group", group_to_json(v.group())},
                {"cocycle", cocycle_to_json(*v.cocycle())},
                {"degrees", std::move(degrees)},
                {"actions", std::move(actions)}};
}

Json report_to_json(const FiniteTypeReport& report, const FinAbGroup& g) {
    Json out;
    out["standard_basis"] = report.standard_basis;
    out["verdict"] = verdict_name(report.verdict);
    out["certificate"] = report.certificate;
    if (report.roots && report.verdict == Verdict::Finite) {
        Json roots = Json::array();
        for (const auto& r : report.roots->positive_roots) roots.push_back(r);
        out["positive_roots"] = std::move(roots);
        Json hts = Json::array();
        for (const auto& h : report.root_heights) hts.push_back(*h);
        out["heights"] = std::move(hts);
    }
    if (report.dim_nichols) {
        auto bigint_json = [](const BigInt& v) -> Json {
            // numbers up to 2^53 stay numeric, larger values become strings
            if (v <= BigInt(9007199254740992LL)) return Json(v.convert_to<std::int64_t>());
            return Json(v.str());
        };
        out["dim_B"] = bigint_json(*report.dim_nichols);
        out["dim_bosonization"] = bigint_json(*report.dim_nichols * BigInt(g.order()));
    }
    if (report.standard_basis && report.basis) {
        Json q = Json::array();
        for (const auto& row : report.basis->q) {
            Json qrow = Json::array();
            for (const auto& p : row) qrow.push_back(phase_to_json(p));
            q.push_back(std::move(qrow));
        }
        out["braiding"] = std::move(q);
    }
    return out;
}

}  // namespace nichols
