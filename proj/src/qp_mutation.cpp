#include "lcl/qp_mutation.hpp"

#include "lcl/error.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <functional>
#include <set>

namespace lcl {

Path canonical_rotation(const Path& cycle) {
    Path best = cycle;
    Path cur = cycle;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

void Potential::add(const Path& cycle, std::int64_t coeff) {
    if (coeff == 0) return;
    Path key = canonical_rotation(cycle);
    auto& slot = terms_[key];
    if (__builtin_add_overflow(slot, coeff, &slot)) fail("Overflow", "potential coefficient");
    if (slot == 0) terms_.erase(key);
}

std::int64_t Potential::coeff(const Path& cycle) const {
    auto it = terms_.find(canonical_rotation(cycle));
    return it == terms_.end() ? 0 : it->second;
}

std::size_t Potential::max_length() const {
    std::size_t m = 0;
    for (const auto& [p, c] : terms_) m = std::max(m, p.size());
    return m;
}

namespace {

const Arrow& arrow_of(const IceQuiver& q, const std::string& label) {
    const Arrow* a = q.find_arrow(label);
    if (!a) fail("UnknownArrow", label);
    return *a;
}

std::string word_str(const Path& p) {
    std::string s;
    for (const auto& l : p) s += (s.empty() ? "" : " ") + l;
    return s;
}

bool all_frozen(const IceQuiver& q, const Path& p) {
    return std::all_of(p.begin(), p.end(), [&](const std::string& l) { return arrow_of(q, l).frozen; });
}

void drop_frozen_terms(QP& qp) {
    Potential kept;
    for (const auto& [p, c] : qp.potential.terms())
        if (!all_frozen(qp.quiver, p)) kept.add(p, c);
    qp.potential = std::move(kept);
}

// Rotation of the cycle that starts at position i.
Path rotated(const Path& p, std::size_t i) {
    Path r(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
    r.insert(r.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
}

// Replaces every occurrence of `label` by label + sum(rep).
Potential substitute(const Potential& w, const std::string& label, const PathSum& rep) {
    Potential out;
    for (const auto& [term, coeff] : w.terms()) {
        std::vector<std::size_t> occ;
        for (std::size_t i = 0; i < term.size(); ++i)
            if (term[i] == label) occ.push_back(i);
        if (occ.empty()) {
            out.add(term, coeff);
            continue;
        }
        std::vector<std::pair<Path, std::int64_t>> choices{{{label}, 1}};
        for (const auto& [p, c] : rep) choices.emplace_back(p, c);
        std::vector<std::size_t> pick(occ.size(), 0);
        while (true) {
            Path built;
            std::int64_t c = coeff;
            std::size_t k = 0;
            for (std::size_t i = 0; i < term.size(); ++i) {
                if (k < occ.size() && occ[k] == i) {
                    const auto& ch = choices[pick[k]];
                    built.insert(built.end(), ch.first.begin(), ch.first.end());
                    if (__builtin_mul_overflow(c, ch.second, &c)) fail("Overflow", "substitution coefficient");
                    ++k;
                } else {
                    built.push_back(term[i]);
                }
            }
            out.add(built, c);
            std::size_t j = 0;
            while (j < pick.size() && ++pick[j] == choices.size()) pick[j++] = 0;
            if (j == pick.size()) break;
        }
    }
    return out;
}

// Other terms containing `label`, each contributing -c * k * (rest of the rotation).
PathSum killing_substitution(const Potential& w, const Path& key, const std::string& label, std::int64_t c) {
    PathSum rep;
    for (const auto& [term, k] : w.terms()) {
        if (term == key) continue;
        auto it = std::find(term.begin(), term.end(), label);
        if (it == term.end()) continue;
        Path r = rotated(term, static_cast<std::size_t>(it - term.begin()));
        Path rest(r.begin() + 1, r.end());
        rep[rest] -= c * k;
    }
    std::erase_if(rep, [](const auto& kv) { return kv.second == 0; });
    return rep;
}

bool mentions(const Potential& w, const Path& key, const std::string& label) {
    for (const auto& [term, k] : w.terms())
        if (term != key && std::find(term.begin(), term.end(), label) != term.end()) return true;
    return false;
}

} // namespace

bool is_closed_path(const IceQuiver& q, const Path& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Arrow* a = q.find_arrow(p[i]);
        const Arrow* b = q.find_arrow(p[(i + 1) % p.size()]);
        if (!a || !b || a->src != b->dst) return false;
    }
    return true;
}

void validate_potential(const QP& qp) {
    for (const auto& [p, c] : qp.potential.terms()) {
        if (p.size() < 2 || !is_closed_path(qp.quiver, p)) fail("BadPotentialTerm", word_str(p));
        for (const auto& l : p) {
            const Arrow& a = arrow_of(qp.quiver, l);
            if (a.src == a.dst && p.size() < 3) fail("BadPotentialTerm", "loop term of length < 3: " + word_str(p));
        }
    }
}

void check_irredundant(const QP& qp) {
    for (const auto& [p, c] : qp.potential.terms())
        if (all_frozen(qp.quiver, p)) fail("RedundantPotentialTerm", word_str(p));
}

PathSum cyclic_derivative(const QP& qp, const std::string& alpha) {
    if (!qp.quiver.has_label(alpha)) fail("UnknownArrow", alpha);
    PathSum out;
    for (const auto& [term, c] : qp.potential.terms())
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] != alpha) continue;
            Path r = rotated(term, i);
            out[Path(r.begin() + 1, r.end())] += c;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

QP premutate(const QP& qp, int v) {
    check_mutable(qp.quiver, v);
    validate_potential(qp);
    check_irredundant(qp);
    const IceQuiver& q = qp.quiver;

    QP out;
    for (const auto& x : q.vertices()) out.quiver.add_vertex(x.id, x.frozen, x.name);
    std::vector<Arrow> in, outgoing;
    for (const auto& a : q.arrows()) {
        if (a.dst == v) in.push_back(a);
        else if (a.src == v) outgoing.push_back(a);
        else out.quiver.add_arrow(a.label, a.src, a.dst, a.frozen);
    }
    auto by_label = [](const Arrow& a, const Arrow& b) { return a.label < b.label; };
    std::sort(in.begin(), in.end(), by_label);
    std::sort(outgoing.begin(), outgoing.end(), by_label);

    std::map<std::pair<std::string, std::string>, std::string> composite; // (beta, alpha)
    std::map<std::string, std::string> starred;
    for (const auto& a : in)
        for (const auto& b : outgoing) {
            std::string l = out.quiver.fresh_label("[" + b.label + "∘" + a.label + "]");
            out.quiver.add_arrow(l, a.src, b.dst, false);
            composite[{b.label, a.label}] = l;
        }
    auto star = [](const std::string& l) { return l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*"; };
    for (const auto& a : in) {
        starred[a.label] = out.quiver.fresh_label(star(a.label));
        out.quiver.add_arrow(starred[a.label], v, a.src, false);
    }
    for (const auto& b : outgoing) {
        starred[b.label] = out.quiver.fresh_label(star(b.label));
        out.quiver.add_arrow(starred[b.label], b.dst, v, false);
    }

    for (const auto& [term, c] : qp.potential.terms()) {
        // A representative that does not begin at v: the last arrow must not leave v.
        std::size_t start = 0;
        while (start < term.size() && arrow_of(q, rotated(term, start).back()).src == v) ++start;
        Path t = rotated(term, start);
        Path nt;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (arrow_of(q, t[i]).src == v) {
                nt.push_back(composite.at({t[i], t[i + 1]}));
                ++i;
            } else {
                nt.push_back(t[i]);
            }
        }
        out.potential.add(nt, c);
    }
    for (const auto& [ba, l] : composite) out.potential.add({l, starred.at(ba.second), starred.at(ba.first)}, 1);
    return out;
}

QP reduce(const QP& input, const ReduceOptions& opt) {
    validate_potential(input);
    check_irredundant(input);
    QP qp = input;
    const std::size_t cap = opt.degree_cap ? opt.degree_cap : 3 * std::max<std::size_t>(input.potential.max_length(), 1);

    auto check_cap = [&](const Potential& w) {
        if (w.max_length() > cap) fail("SubstitutionNotStabilized", "degree cap " + std::to_string(cap) + " exceeded");
    };

    while (true) {
        drop_frozen_terms(qp);
        // Unfrozen 2-cycles first, then half-frozen ones; canonical order within each.
        const Path* key = nullptr;
        for (int pass = 0; pass < 2 && !key; ++pass)
            for (const auto& [p, c] : qp.potential.terms()) {
                if (p.size() != 2) continue;
                int nfrozen = arrow_of(qp.quiver, p[0]).frozen + arrow_of(qp.quiver, p[1]).frozen;
                if ((pass == 0 && nfrozen == 0) || (pass == 1 && nfrozen == 1)) {
                    key = &p;
                    break;
                }
            }
        if (!key) break;
        const Path term = *key;
        const std::int64_t c = qp.potential.coeff(term);
        if (c != 1 && c != -1)
            fail("NonUnitTwoCycleCoefficient", word_str(term) + " has coefficient " + std::to_string(c));

        std::string x = term[0], y = term[1];
        if (arrow_of(qp.quiver, y).frozen) std::swap(x, y); // x is the frozen one if any
        const bool half = arrow_of(qp.quiver, x).frozen;

        // Kill the other x-terms by substituting y.
        int passes = 0;
        while (mentions(qp.potential, term, x)) {
            if (++passes > opt.max_passes)
                fail("SubstitutionNotStabilized", "no convergence after " + std::to_string(opt.max_passes) + " passes");
            qp.potential = substitute(qp.potential, y, killing_substitution(qp.potential, term, x, c));
            check_cap(qp.potential);
            if (qp.potential.coeff(term) != c) fail("SubstitutionNotStabilized", "2-cycle term changed");
        }
        if (half) {
            spdlog::debug("reduce: deleting frozen {} and freezing {}", x, y);
            qp.potential.add(term, -c);
            qp.quiver.remove_arrow(x);
            for (auto& a : qp.quiver.arrows_mut())
                if (a.label == y) a.frozen = true;
            continue;
        }
        // Kill the other y-terms by substituting x; x now occurs only in the 2-cycle.
        if (mentions(qp.potential, term, y)) {
            qp.potential = substitute(qp.potential, x, killing_substitution(qp.potential, term, y, c));
            check_cap(qp.potential);
        }
        qp.potential.add(term, -c);
        if (mentions(qp.potential, {}, x) || mentions(qp.potential, {}, y))
            fail("SubstitutionNotStabilized", "arrows " + x + ", " + y + " survive elimination");
        qp.quiver.remove_arrow(x);
        qp.quiver.remove_arrow(y);
    }
    return qp;
}

QP mutate_qp(const QP& qp, int v, const ReduceOptions& opt) { return reduce(premutate(qp, v), opt); }

namespace {

// Gaussian elimination over GF(2); rows are equations with the rhs in the last slot.
bool gf2_solvable(std::vector<std::vector<char>> rows, std::size_t nvars) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < nvars && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][col]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col])
                for (std::size_t k = col; k <= nvars; ++k) rows[i][k] ^= rows[r][k];
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][nvars]) return false;
    return true;
}

} // namespace

std::optional<std::map<std::string, std::string>> match_potentials(const QP& a, const QP& b, const VertexMap& m) {
    if (a.potential.terms().size() != b.potential.terms().size()) return std::nullopt;
    if (a.quiver.arrows().size() != b.quiver.arrows().size()) return std::nullopt;

    // Parallel classes in a, and their candidate images in b.
    std::map<std::tuple<int, int, bool>, std::vector<std::string>> ga, gb;
    for (const auto& x : a.quiver.arrows()) ga[{m.at(x.src), m.at(x.dst), x.frozen}].push_back(x.label);
    for (const auto& x : b.quiver.arrows()) gb[{x.src, x.dst, x.frozen}].push_back(x.label);
    if (ga.size() != gb.size()) return std::nullopt;
    std::vector<std::vector<std::string>> from, to;
    for (auto& [k, v] : ga) {
        auto it = gb.find(k);
        if (it == gb.end() || it->second.size() != v.size()) return std::nullopt;
        from.push_back(v);
        to.push_back(it->second);
        std::sort(to.back().begin(), to.back().end());
    }

    std::vector<std::string> labels;
    for (const auto& x : a.quiver.arrows()) labels.push_back(x.label);
    std::map<std::string, std::size_t> var;
    for (std::size_t i = 0; i < labels.size(); ++i) var[labels[i]] = i;

    std::map<std::string, std::string> amap;
    long budget = 200000;
    std::function<bool(std::size_t)> rec = [&](std::size_t g) -> bool {
        if (g == from.size()) {
            std::vector<std::vector<char>> rows;
            for (const auto& [term, c] : a.potential.terms()) {
                Path img;
                for (const auto& l : term) img.push_back(amap.at(l));
                std::int64_t cb = b.potential.coeff(img);
                if (cb != c && cb != -c) return false;
                std::vector<char> row(labels.size() + 1, 0);
                for (const auto& l : term) row[var.at(l)] ^= 1;
                row.back() = (cb != c);
                rows.push_back(std::move(row));
            }
            return gf2_solvable(std::move(rows), labels.size());
        }
        auto perm = to[g];
        do {
            if (--budget < 0) return false;
            for (std::size_t k = 0; k < perm.size(); ++k) amap[from[g][k]] = perm[k];
            if (rec(g + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return amap;
}

nlohmann::json to_json(const Potential& w) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [p, c] : w.terms()) out.push_back({{"coeff", c}, {"cycle", p}});
    return out;
}

Potential potential_from_json(const nlohmann::json& j) {
    Potential w;
    try {
        for (const auto& t : j) w.add(t.at("cycle").get<Path>(), t.at("coeff").get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        fail("BadJson", e.what());
    }
    return w;
}

} // namespace lcl
