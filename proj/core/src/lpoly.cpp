#include "clexp/lpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace clexp {

namespace {

void check_same_vars(int a, int b, const char* op) {
    if (a != b) throw LPolyError(std::string(op) + ": operands have different variable counts");
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    if (vars() != o.vars()) throw LPolyError("monomial product: dimension mismatch");
    Monomial r = *this;
    for (int i = 0; i < vars(); ++i) {
        r.xexp[i] += o.xexp[i];
        r.yexp[i] += o.yexp[i];
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& e : r.xexp) e = -e;
    for (auto& e : r.yexp) e = -e;
    return r;
}

Monomial Monomial::x(int n, int i, int e) {
    Monomial m(n);
    m.xexp.at(i - 1) = e;
    return m;
}

Monomial Monomial::y(int n, int i, int e) {
    Monomial m(n);
    m.yexp.at(i - 1) = e;
    return m;
}

LPoly LPoly::one(int nvars) {
    LPoly p(nvars);
    p.add_term(Monomial(nvars), 1);
    return p;
}

LPoly LPoly::monomial(Monomial m, Int coeff) {
    LPoly p(m.vars());
    p.add_term(m, coeff);
    return p;
}

LPoly LPoly::var_x(int nvars, int i) { return monomial(Monomial::x(nvars, i)); }
LPoly LPoly::var_y(int nvars, int i) { return monomial(Monomial::y(nvars, i)); }

void LPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    if (m.vars() != nvars_) throw LPolyError("add_term: dimension mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LPoly LPoly::operator+(const LPoly& o) const {
    check_same_vars(nvars_, o.nvars_, "add");
    LPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LPoly LPoly::operator-(const LPoly& o) const {
    check_same_vars(nvars_, o.nvars_, "sub");
    LPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LPoly LPoly::operator*(const LPoly& o) const {
    check_same_vars(nvars_, o.nvars_, "mul");
    LPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

LPoly LPoly::operator*(const Monomial& m) const {
    LPoly r(nvars_);
    for (const auto& [mt, c] : terms_) r.add_term(mt * m, c);
    return r;
}

namespace {

// Componentwise minimum of all exponent vectors: the monomial content.
Monomial content(const LPoly& p) {
    Monomial m(p.vars());
    bool first = true;
    for (const auto& [t, c] : p.terms()) {
        (void)c;
        if (first) {
            m = t;
            first = false;
            continue;
        }
        for (int i = 0; i < m.vars(); ++i) {
            m.xexp[i] = std::min(m.xexp[i], t.xexp[i]);
            m.yexp[i] = std::min(m.yexp[i], t.yexp[i]);
        }
    }
    return m;
}

}  // namespace

LPoly LPoly::div_exact(const LPoly& a, const LPoly& b) {
    check_same_vars(a.nvars_, b.nvars_, "div_exact");
    if (b.is_zero()) throw LPolyError("div_exact: division by zero");
    if (a.is_zero()) return LPoly(a.nvars_);

    // Strip monomial contents so both operands become ordinary polynomials with
    // a term of exponent zero in every variable; exactness in the Laurent ring
    // then coincides with exactness in the polynomial ring.
    Monomial ca = content(a), cb = content(b);
    LPoly ra = a * ca.inverse();
    LPoly rb = b * cb.inverse();

    // Long division by the lex-leading term; for an exact quotient the leading
    // term of the remainder is always divisible.
    const auto& lead_b = std::prev(rb.terms_.end());
    LPoly q(a.nvars_);
    LPoly rem = ra;
    while (!rem.is_zero()) {
        const auto& lead_r = std::prev(rem.terms_.end());
        Monomial qm(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            qm.xexp[i] = lead_r->first.xexp[i] - lead_b->first.xexp[i];
            qm.yexp[i] = lead_r->first.yexp[i] - lead_b->first.yexp[i];
            if (qm.xexp[i] < 0 || qm.yexp[i] < 0) throw LPolyError("not divisible");
        }
        Int qc, rc;
        mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), lead_r->second.get_mpz_t(),
                    lead_b->second.get_mpz_t());
        if (rc != 0) throw LPolyError("not divisible");
        q.add_term(qm, qc);
        rem = rem - (rb * LPoly::monomial(qm, qc));
    }
    return q * (ca * cb.inverse());
}

LPoly LPoly::substitute(const std::map<int, LPoly>& sx, const std::map<int, LPoly>& sy) const {
    // Precompute images; identity where no image is given.
    auto image = [&](const std::map<int, LPoly>& s, int i, bool is_x) -> LPoly {
        auto it = s.find(i);
        if (it != s.end()) {
            if (it->second.is_zero()) throw LPolyError("substitute: zero image");
            return it->second;
        }
        return is_x ? var_x(nvars_, i) : var_y(nvars_, i);
    };
    std::vector<LPoly> ix, iy;
    for (int i = 1; i <= nvars_; ++i) {
        ix.push_back(image(sx, i, true));
        iy.push_back(image(sy, i, false));
    }
    auto power = [&](const LPoly& base, int e) -> LPoly {
        if (e == 0) return one(nvars_);
        if (e < 0) {
            if (!base.is_monomial())
                throw LPolyError("substitute: negative exponent of a non-monomial image");
            Monomial m = base.terms_.begin()->first;
            const Int& c = base.terms_.begin()->second;
            if (c != 1 && c != -1)
                throw LPolyError("substitute: negative exponent needs unit coefficient");
            LPoly inv = monomial(m.inverse(), c);
            LPoly r = one(nvars_);
            for (int k = 0; k < -e; ++k) r = r * inv;
            return r;
        }
        LPoly r = one(nvars_);
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    };
    LPoly result(nvars_);
    for (const auto& [m, c] : terms_) {
        LPoly t = monomial(Monomial(nvars_), c);
        for (int i = 0; i < nvars_; ++i) {
            if (m.xexp[i] != 0) t = t * power(ix[i], m.xexp[i]);
            if (m.yexp[i] != 0) t = t * power(iy[i], m.yexp[i]);
        }
        result = result + t;
    }
    return result;
}

LPoly LPoly::set_y_one() const {
    LPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        std::fill(m2.yexp.begin(), m2.yexp.end(), 0);
        r.add_term(m2, c);
    }
    return r;
}

bool LPoly::all_coeffs_positive() const {
    for (const auto& [m, c] : terms_) {
        (void)m;
        if (c <= 0) return false;
    }
    return true;
}

bool LPoly::y_exponents_nonnegative() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (int e : m.yexp)
            if (e < 0) return false;
    }
    return true;
}

int LPoly::max_y_degree(int i) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, static_cast<int>(m.yexp.at(i - 1)));
    }
    return d;
}

std::string LPoly::str() const {
    if (terms_.empty()) return "0";
    // Descending lex on (xexp, yexp), i.e. leading term first.
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Int c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Int ac = abs(c);
        std::ostringstream factors;
        bool any = false;
        auto emit = [&](char v, int idx, int e) {
            if (e == 0) return;
            if (any) factors << "*";
            factors << v << idx;
            if (e != 1) factors << "^" << e;
            any = true;
        };
        for (int i = 0; i < nvars_; ++i) emit('x', i + 1, m.xexp[i]);
        for (int i = 0; i < nvars_; ++i) emit('y', i + 1, m.yexp[i]);
        if (!any) {
            out << ac.get_str();
        } else {
            if (ac != 1) out << ac.get_str() << "*";
            out << factors.str();
        }
    }
    return out.str();
}

LPoly LPoly::parse(const std::string& text, int nvars) {
    LPoly result(nvars);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return result;
    int sign = 1;
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (!expect_term) {
            if (text[pos] == '+') {
                sign = 1;
            } else if (text[pos] == '-') {
                sign = -1;
            } else {
                throw LPolyError("parse: expected '+' or '-' at position " + std::to_string(pos));
            }
            ++pos;
            skip_ws();
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
            skip_ws();
        }
        // One term: optional integer, then *-joined variable powers.
        Int coeff = 1;
        Monomial m(nvars);
        bool saw_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coeff = Int(text.substr(start, pos - start));
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
            char v = text[pos++];
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw LPolyError("parse: variable without index");
            int idx = std::stoi(text.substr(start, pos - start));
            if (idx < 1 || idx > nvars) throw LPolyError("parse: variable index out of range");
            int e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                int esign = 1;
                if (pos < text.size() && text[pos] == '-') {
                    esign = -1;
                    ++pos;
                }
                start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw LPolyError("parse: missing exponent");
                e = esign * std::stoi(text.substr(start, pos - start));
            }
            if (v == 'x')
                m.xexp[idx - 1] += e;
            else
                m.yexp[idx - 1] += e;
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (!saw_factor) throw LPolyError("parse: empty term at position " + std::to_string(pos));
        result.add_term(m, sign * coeff);
        expect_term = false;
        sign = 1;
    }
    return result;
}

}  // namespace clexp
