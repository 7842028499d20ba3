#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clexp {

using Int = mpz_class;

struct LPolyError : std::runtime_error {
    explicit LPolyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exponent vectors of a Laurent monomial in x_1..x_N, y_1..y_N.
// x-exponents may be negative. y-exponents are nonnegative in all final
// expansion outputs; negative values appear transiently in images of the
// substitution homomorphism and are checked at the boundary.
struct Monomial {
    std::vector<int32_t> xexp;
    std::vector<int32_t> yexp;

    Monomial() = default;
    explicit Monomial(int n) : xexp(n, 0), yexp(n, 0) {}

    int vars() const { return static_cast<int>(xexp.size()); }

    bool operator==(const Monomial& o) const { return xexp == o.xexp && yexp == o.yexp; }
    bool operator<(const Monomial& o) const {
        if (xexp != o.xexp) return xexp < o.xexp;
        return yexp < o.yexp;
    }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;

    static Monomial x(int n, int i, int e = 1);
    static Monomial y(int n, int i, int e = 1);
};

// Exact multivariate Laurent polynomial over the integers.
// Canonical form: term map with no zero coefficients; equality is map equality.
class LPoly {
  public:
    LPoly() : nvars_(0) {}
    explicit LPoly(int nvars) : nvars_(nvars) {}

    static LPoly zero(int nvars) { return LPoly(nvars); }
    static LPoly one(int nvars);
    static LPoly monomial(Monomial m, Int coeff = 1);
    static LPoly var_x(int nvars, int i);
    static LPoly var_y(int nvars, int i);

    int vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c);

    LPoly operator+(const LPoly& o) const;
    LPoly operator-(const LPoly& o) const;
    LPoly operator*(const LPoly& o) const;
    LPoly operator*(const Monomial& m) const;
    bool operator==(const LPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LPoly& o) const { return !(*this == o); }

    // Exact quotient q with q*b == a; throws LPolyError("not divisible") otherwise.
    static LPoly div_exact(const LPoly& a, const LPoly& b);

    // Ring homomorphism sending x_i -> sx[i], y_i -> sy[i] (1-based index maps;
    // missing indices map to themselves). Images of variables occurring with
    // negative exponent must be monomials.
    LPoly substitute(const std::map<int, LPoly>& sx, const std::map<int, LPoly>& sy) const;

    LPoly set_y_one() const;

    bool all_coeffs_positive() const;
    bool y_exponents_nonnegative() const;
    // Max degree of y_i (1-based) over all terms; 0 for the zero polynomial.
    int max_y_degree(int i) const;

    // Canonical text form, e.g. "x1*x2^2*x6 + 2*x3*x4*y3 - x1^-1".
    std::string str() const;
    static LPoly parse(const std::string& text, int nvars);

  private:
    int nvars_;
    std::map<Monomial, Int> terms_;
};

}  // namespace clexp
