#include "lcl/laurent.hpp"

#include "lcl/error.hpp"

#include <algorithm>
#include <sstream>

namespace lcl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "Laurent coefficient");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "Laurent coefficient");
    return r;
}

void same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) fail("BadShape", "Laurent polynomials in different rings");
}

} // namespace

LaurentPoly LaurentPoly::constant(int nvars, std::int64_t c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, std::int64_t c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e);
}

void LaurentPoly::add_term(const Exponent& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != nvars_) fail("BadShape", "exponent length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    same_ring(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    same_ring(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    same_ring(*this, o);
    LaurentPoly r(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, checked_mul(c1, c2));
        }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) fail("BadExponent", "negative power of a polynomial");
    LaurentPoly r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

const Exponent& LaurentPoly::leading() const {
    if (terms_.empty()) fail("ZeroPolynomial", "leading term of zero");
    return terms_.rbegin()->first;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) os << "*x" << (k + 1) << (e[k] != 1 ? "^" + std::to_string(e[k]) : "");
        first = false;
    }
    return os.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    same_ring(a, b);
    if (b.is_zero()) fail("InexactDivision", "division by zero");
    const int n = a.nvars();
    LaurentPoly q(n);
    if (a.is_zero()) return q;

    // Any exact quotient has its exponents inside this box.
    Exponent lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int amin = INT32_MAX, amax = INT32_MIN, bmin = INT32_MAX, bmax = INT32_MIN;
        for (const auto& [e, c] : a.terms()) amin = std::min(amin, e[k]), amax = std::max(amax, e[k]);
        for (const auto& [e, c] : b.terms()) bmin = std::min(bmin, e[k]), bmax = std::max(bmax, e[k]);
        lo[k] = amin - bmin;
        hi[k] = amax - bmax;
    }

    const Exponent lb = b.leading();
    const std::int64_t lc = b.terms().at(lb);
    LaurentPoly r = a;
    Exponent e(static_cast<std::size_t>(n));
    Exponent tmp(static_cast<std::size_t>(n));
    while (!r.is_zero()) {
        const Exponent lr = r.leading();
        const std::int64_t c = r.terms().at(lr);
        if (c % lc != 0) fail("InexactDivision", "coefficient not divisible");
        for (int k = 0; k < n; ++k) {
            e[k] = lr[k] - lb[k];
            if (e[k] < lo[k] || e[k] > hi[k]) fail("InexactDivision", "quotient leaves the Newton box");
        }
        const std::int64_t qc = c / lc;
        q.add_term(e, qc);
        for (const auto& [eb, cb] : b.terms()) {
            for (int k = 0; k < n; ++k) tmp[k] = e[k] + eb[k];
            r.add_term(tmp, -checked_mul(qc, cb));
        }
    }
    return q;
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", c}});
    return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j, int nvars) {
    LaurentPoly p(nvars);
    try {
        for (const auto& t : j) p.add_term(t.at("exp").get<Exponent>(), t.at("coeff").get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        fail("BadJson", e.what());
    }
    return p;
}

} // namespace lcl
