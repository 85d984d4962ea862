#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symres {

/* The ambient polynomial ring k[x_1..x_n]: an ordered list of variables and
 * the coefficient characteristic (0 or a prime < 2^31). Immutable, shared. */
class RingConfig {
public:
    static std::shared_ptr<const RingConfig> create(std::vector<std::string> variables,
                                                    std::uint32_t characteristic);

    const std::vector<std::string>& variables() const { return variables_; }
    std::uint32_t characteristic() const { return characteristic_; }
    std::size_t nvars() const { return variables_.size(); }
    std::optional<std::size_t> var_index(std::string_view name) const;

    bool operator==(const RingConfig& o) const
    {
        return variables_ == o.variables_ && characteristic_ == o.characteristic_;
    }

    std::string str() const; // e.g. "Q[x,y,z]" or "GF(7)[x,y]"

private:
    RingConfig(std::vector<std::string> variables, std::uint32_t characteristic)
        : variables_(std::move(variables)), characteristic_(characteristic)
    {
    }

    std::vector<std::string> variables_;
    std::uint32_t characteristic_;
};

using RingPtr = std::shared_ptr<const RingConfig>;

inline bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

/* Exponent vector, length = number of ring variables. */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    std::uint32_t& exponent(std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const; // *this / o, assumes o.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    /* degree-reverse-lexicographic order under the declared variable order:
     * returns <0, 0, >0 as a <, =, > b. */
    static int degrevlex_cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> e_;
};

struct DegRevLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return Monomial::degrevlex_cmp(a, b) < 0;
    }
};

} // namespace symres
