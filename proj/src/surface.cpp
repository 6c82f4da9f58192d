#include "wahl/surface.hpp"

#include <algorithm>
#include <set>

namespace wahl::surface {

namespace {

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

const Curve& CurveConfig::curve(const std::string& id) const {
    for (const Curve& c : curves)
        if (c.id == id) return c;
    throw input_error("unknown curve '" + id + "'");
}

bool CurveConfig::has_curve(const std::string& id) const {
    return std::any_of(curves.begin(), curves.end(),
                       [&](const Curve& c) { return c.id == id; });
}

Int CurveConfig::pairing(const std::string& a, const std::string& b) const {
    require(a != b, "pairing of a curve with itself is its self-intersection");
    auto it = pairings.find(key(a, b));
    return it == pairings.end() ? Int(0) : it->second;
}

void CurveConfig::set_pairing(const std::string& a, const std::string& b, const Int& v) {
    require(a != b, "cannot set a pairing of a curve with itself");
    require(v >= 0, "pairings are nonnegative");
    if (v == 0)
        pairings.erase(key(a, b));
    else
        pairings[key(a, b)] = v;
}

CurveConfig blow_up(const CurveConfig& cfg, const PointSpec& pt,
                    const std::string& new_id,
                    const std::optional<std::string>& blowup_label) {
    require(!cfg.has_curve(new_id), "blow_up: curve id '" + new_id + "' already in use");
    std::set<std::string> seen;
    for (const auto& [id, mult] : pt.passes_through) {
        require(cfg.has_curve(id), "blow_up: unknown curve '" + id + "'");
        require(mult >= 1, "blow_up: multiplicity must be positive");
        require(seen.insert(id).second, "blow_up: curve '" + id + "' listed twice");
    }

    CurveConfig out = cfg;
    for (const auto& [id, mult] : pt.passes_through) {
        for (Curve& c : out.curves)
            if (c.id == id) c.self_int -= mult * mult;
    }
    for (std::size_t i = 0; i < pt.passes_through.size(); ++i) {
        for (std::size_t j = i + 1; j < pt.passes_through.size(); ++j) {
            const auto& [ci, mi] = pt.passes_through[i];
            const auto& [cj, mj] = pt.passes_through[j];
            Int old = out.pairing(ci, cj);
            require(old >= mi * mj,
                    "blow_up: inconsistent point, curves '" + ci + "' and '" + cj +
                        "' meet with total " + to_string(old) + " < " + to_string(Int(mi * mj)));
            out.set_pairing(ci, cj, old - mi * mj);
        }
    }
    out.curves.push_back(Curve{new_id, Int(-1), true, blowup_label});
    for (const auto& [id, mult] : pt.passes_through)
        out.set_pairing(id, new_id, mult);
    out.k_squared -= 1;
    out.picard_rank += 1;
    return out;
}

ChainWeights extract_chain(const CurveConfig& cfg, const std::vector<std::string>& ids) {
    require(!ids.empty(), "extract_chain: empty chain");
    std::set<std::string> distinct(ids.begin(), ids.end());
    require(distinct.size() == ids.size(), "extract_chain: repeated curve in chain");
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            Int got = cfg.pairing(ids[i], ids[j]);
            Int want = (j == i + 1) ? 1 : 0;
            require(got == want, "extract_chain: '" + ids[i] + "' and '" + ids[j] +
                                     "' meet with " + to_string(got) + ", expected " +
                                     to_string(want));
        }
    }
    ChainWeights w;
    for (const std::string& id : ids) {
        Int b = -cfg.curve(id).self_int;
        require(b >= 2, "extract_chain: curve '" + id + "' has self-intersection " +
                            to_string(Int(-b)) + "; chain components need at most -2");
        w.push_back(b);
    }
    return w;
}

ContractionResult contract_chains(const CurveConfig& cfg, const ChainSelection& sel) {
    // Disjointness across chains.
    std::set<std::string> used;
    for (const auto& chain : sel.chains)
        for (const std::string& id : chain)
            require(used.insert(id).second,
                    "contract_chains: curve '" + id + "' appears in two chains");
    for (std::size_t i = 0; i < sel.chains.size(); ++i)
        for (std::size_t j = i + 1; j < sel.chains.size(); ++j)
            for (const std::string& a : sel.chains[i])
                for (const std::string& b : sel.chains[j])
                    require(cfg.pairing(a, b) == 0,
                            "contract_chains: chains are not disjoint at '" + a + "'/'" + b + "'");

    ContractionResult result{{}, cfg.k_squared};
    // coefficient of Delta along each chain curve
    std::map<std::string, Rat> coeff;
    for (std::size_t ci = 0; ci < sel.chains.size(); ++ci) {
        ChainWeights w = extract_chain(cfg, sel.chains[ci]);
        auto [n, q] = hj::hj_eval(w);
        classt::Classification cls = classt::classify(n, q);
        if (cls.kind != classt::ChainKind::ClassT)
            throw input_error("contract_chains: chain " + std::to_string(ci + 1) +
                              " of type (" + to_string(n) + "," + to_string(q) +
                              ") is not of class T");
        classt::ClassTInvariants inv = classt::invariants(*cls.triple);
        for (std::size_t k = 0; k < sel.chains[ci].size(); ++k)
            coeff[sel.chains[ci][k]] = inv.C[k];
        result.per_chain.push_back({*cls.triple, inv.delta, inv.C});
        result.k_x_squared += inv.delta;
    }

    // Cross-check against (K_M + Delta)^2 assembled from the table, and
    // orthogonality (K_M + Delta).E = 0 on every chain component.
    auto k_dot = [&](const std::string& id) { return -2 - cfg.curve(id).self_int; };
    Rat cross = cfg.k_squared;
    for (const auto& [id, c] : coeff) cross += 2 * c * Rat(k_dot(id));
    for (const auto& [id1, c1] : coeff)
        for (const auto& [id2, c2] : coeff) {
            Rat e = (id1 == id2) ? Rat(cfg.curve(id1).self_int) : Rat(cfg.pairing(id1, id2));
            cross += c1 * c2 * e;
        }
    if (cross != Rat(result.k_x_squared))
        throw std::logic_error("contract_chains: (K_M + Delta)^2 disagrees with K_M^2 + sum delta");
    for (const auto& [id, c] : coeff) {
        Rat dot = k_dot(id) + Rat(cfg.curve(id).self_int) * c;
        for (const auto& [other, c2] : coeff)
            if (other != id) dot += c2 * Rat(cfg.pairing(id, other));
        if (dot != 0)
            throw std::logic_error("contract_chains: (K_M + Delta).E nonzero on '" + id + "'");
    }
    return result;
}

Rat delta_dot(const CurveConfig& cfg, const ChainSelection& sel, const std::string& curve_id) {
    require(cfg.has_curve(curve_id), "delta_dot: unknown curve '" + curve_id + "'");
    for (const auto& chain : sel.chains)
        for (const std::string& id : chain)
            require(id != curve_id, "delta_dot: curve '" + curve_id + "' lies in a chain");

    Rat total = 0;
    for (const auto& chain : sel.chains) {
        ChainWeights w = extract_chain(cfg, chain);
        auto [n, q] = hj::hj_eval(w);
        classt::Classification cls = classt::classify(n, q);
        if (cls.kind != classt::ChainKind::ClassT)
            throw input_error("delta_dot: selection contains a non-class-T chain");
        classt::ClassTInvariants inv = classt::invariants(*cls.triple);
        for (std::size_t k = 0; k < chain.size(); ++k)
            total += inv.C[k] * Rat(cfg.pairing(curve_id, chain[k]));
    }
    return total;
}

Int gram_determinant(const CurveConfig& cfg, const std::vector<std::string>& ids) {
    std::set<std::string> distinct(ids.begin(), ids.end());
    require(distinct.size() == ids.size(), "gram_determinant: repeated curve");
    const std::size_t n = ids.size();
    if (n == 0) return 1;

    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = cfg.curve(ids[i]).self_int;
        for (std::size_t j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = cfg.pairing(ids[i], ids[j]);
    }

    // Bareiss fraction-free elimination.
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace wahl::surface
