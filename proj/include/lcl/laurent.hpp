#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcl {

using Exponent = std::vector<int>;

// Sparse Laurent polynomial over Z in a fixed number of variables.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, std::int64_t c);
    static LaurentPoly monomial(const Exponent& e, std::int64_t c = 1);
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, std::int64_t c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(int k) const;
    bool operator==(const LaurentPoly& o) const = default;

    // Lexicographically largest exponent.
    const Exponent& leading() const;
    std::string str() const;

private:
    int nvars_ = 0;
    std::map<Exponent, std::int64_t> terms_;
};

// q with a = b*q; throws InexactDivision otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j, int nvars);

} // namespace lcl
