#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgbraid/scalar.hpp"

namespace dgbraid {

struct Generator {
    std::string name;
    int degree = 0;
    bool odd() const { return degree % 2 != 0; }
};

/// A free graded-commutative algebra on an ordered list of named generators.
/// The declaration order fixes the monomial normal form.
class Algebra {
  public:
    Algebra() = default;
    explicit Algebra(std::vector<Generator> gens);

    int add(const std::string& name, int degree);
    int size() const { return (int)gens_.size(); }
    const Generator& gen(int i) const { return gens_[i]; }
    const std::vector<Generator>& gens() const { return gens_; }
    int degree(int i) const { return gens_[i].degree; }
    bool odd(int i) const { return gens_[i].odd(); }

    /// Generator id by name, or -1.
    int find(const std::string& name) const;
    int lookup(const std::string& name) const;  // throws on unknown symbol

    bool allPositiveDegrees() const;

  private:
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Normal-form monomial: factors (generator id, exponent >= 1) sorted by id.
/// Odd generators carry exponent exactly 1.
class Monomial {
  public:
    using Factor = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors) : f_(std::move(factors)) {}

    static Monomial unit() { return Monomial(); }
    static Monomial gen(int id, int exp = 1) { return Monomial({{id, exp}}); }

    const std::vector<Factor>& factors() const { return f_; }
    bool isUnit() const { return f_.empty(); }
    int exponentOf(int id) const;
    int totalExponent() const;

    int degree(const Algebra& a) const;
    int parity(const Algebra& a) const;  // degree mod 2, in {0,1}

    /// Graded-commutative product. Returns the Koszul sign (+1/-1) and the
    /// normal-form result, or sign 0 when an odd generator repeats.
    static std::pair<int, Monomial> mul(const Monomial& x, const Monomial& y, const Algebra& a);

    bool operator<(const Monomial& o) const { return f_ < o.f_; }
    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    std::string str(const Algebra& a) const;

  private:
    std::vector<Factor> f_;
};

/// Normalizes a raw ordered list of generators into (sign, monomial);
/// returns sign 0 when an odd generator repeats (the product is zero).
std::pair<int, Monomial> monoNormalize(const std::vector<int>& raw, const Algebra& a);

/// Sparse exact element of a free graded-commutative algebra: a finite map
/// monomial -> nonzero scalar.
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static GradedPoly zero(AlgebraPtr alg) { return GradedPoly(std::move(alg)); }
    static GradedPoly constant(AlgebraPtr alg, Scalar c);
    static GradedPoly one(AlgebraPtr alg) { return constant(std::move(alg), Scalar::one()); }
    static GradedPoly gen(AlgebraPtr alg, int id);
    static GradedPoly term(AlgebraPtr alg, Monomial m, Scalar c);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }

    /// Degree of a homogeneous element; nullopt for 0 (degree is "any").
    /// Throws on inhomogeneous input.
    std::optional<int> degree() const;
    bool isHomogeneous() const;
    /// Splits into homogeneous components, keyed by degree.
    std::map<int, GradedPoly> homogeneousParts() const;

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);

    GradedPoly scaled(const Scalar& c) const;
    GradedPoly pow(int e) const;

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    void addTerm(const Monomial& m, const Scalar& c);

    /// Coefficient of a monomial (zero scalar if absent).
    Scalar coeff(const Monomial& m) const;

    /// Number of nonzero rational coefficients (h-orders counted separately).
    int support() const;

    /// Coefficient of h^k, termwise; a plain polynomial.
    GradedPoly hComponent(int k) const;

    std::string str() const;

  private:
    void requireSameAlgebra(const GradedPoly& o) const;

    AlgebraPtr alg_;
    std::map<Monomial, Scalar> terms_;
};

inline GradedPoly operator*(const Scalar& c, const GradedPoly& p) { return p.scaled(c); }

}  // namespace dgbraid
