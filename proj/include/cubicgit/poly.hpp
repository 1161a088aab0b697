#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicgit/matrix.hpp"
#include "cubicgit/rational.hpp"

namespace cubicgit {

/// Dense exponent vector of a monomial in n variables.
struct Exponent {
    std::vector<int> e;

    Exponent() = default;
    explicit Exponent(std::size_t n) : e(n, 0) {}
    Exponent(std::initializer_list<int> l) : e(l) {}

    std::size_t n() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }
    bool operator==(const Exponent& o) const { return e == o.e; }
    bool operator!=(const Exponent& o) const { return e != o.e; }

    Exponent operator+(const Exponent& o) const {
        Exponent r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Graded lexicographic, descending (higher degree first, then lex with x0 > x1 > ...).
struct GrlexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.e > b.e;  // lexicographically greater exponent vector comes first
    }
};


/// All exponents of total degree d in n variables, graded-lex descending.
inline std::vector<Exponent> all_exponents(int n, int d) {
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (n > 0 && d >= 0) rec(rec, 0, d);
    return out;
}

/// Exact multivariate polynomial over Q in n variables, canonical term map.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rat, GrlexDesc>;

    Polynomial() : n_(0) {}
    explicit Polynomial(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Polynomial: negative variable count");
    }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, const Rat& c) {
        Polynomial p(n);
        p.add_term(Exponent(static_cast<std::size_t>(n)), c);
        return p;
    }

    static Polynomial variable(int n, int i) {
        Polynomial p(n);
        Exponent m(static_cast<std::size_t>(n));
        m[i] = 1;
        p.add_term(m, Rat(1));
        return p;
    }

    static Polynomial monomial(int n, const Exponent& m, const Rat& c = Rat(1)) {
        Polynomial p(n);
        p.add_term(m, c);
        return p;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& m, const Rat& c) {
        if (static_cast<int>(m.n()) != n_) throw std::invalid_argument("Polynomial: exponent length mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Exponent& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    std::vector<Exponent> support() const {
        std::vector<Exponent> s;
        s.reserve(terms_.size());
        for (const auto& [m, c] : terms_) s.push_back(m);
        return s;
    }

    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial operator+(const Polynomial& o) const { Polynomial r = *this; r += o; return r; }
    Polynomial operator-(const Polynomial& o) const { Polynomial r = *this; r -= o; return r; }

    Polynomial operator*(const Polynomial& o) const {
        check_same(o);
        Polynomial r(n_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
        return r;
    }

    Polynomial operator*(const Rat& c) const {
        Polynomial r(n_);
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Polynomial truncated(int max_degree) const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    /// Terms of total degree exactly d.
    Polynomial homogeneous_part(int d) const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    int order() const {  // lowest total degree of a term; large sentinel for zero
        int o = 1 << 20;
        for (const auto& [m, c] : terms_) o = std::min(o, m.degree());
        return o;
    }

    Rat evaluate(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
        Rat v(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < m[i]; ++k) t *= x[i];
            v += t;
        }
        return v;
    }

    /// Substitute x_v -> x_v + delta, truncating at total degree cap.
    Polynomial substitute_shift(int v, const Polynomial& delta, int cap) const {
        if (delta.n() != n_) throw std::invalid_argument("substitute_shift: ring mismatch");
        Polynomial r(n_);
        std::vector<Polynomial> pw = {Polynomial::constant(n_, Rat(1))};
        for (const auto& [m, c] : terms_) {
            int k = m[v];
            if (m.degree() > cap) continue;
            if (k == 0) {
                r.add_term(m, c);
                continue;
            }
            while (static_cast<int>(pw.size()) <= k) pw.push_back((pw.back() * delta).truncated(cap));
            Exponent base = m;
            base[v] = 0;
            Rat binom(1);
            for (int j = 0; j <= k; ++j) {
                // c * C(k,j) * x_v^{k-j} * delta^j
                Exponent e = base;
                e[v] = k - j;
                for (const auto& [dm, dc] : pw[j].terms()) {
                    Exponent full = e + dm;
                    if (full.degree() <= cap) r.add_term(full, c * binom * dc);
                }
                binom = binom * (k - j) / (j + 1);
            }
        }
        return r;
    }

    /// Composition x_i -> g_i for arbitrary polynomials g_i (all in the same ring).
    Polynomial compose(const std::vector<Polynomial>& g) const {
        if (static_cast<int>(g.size()) != n_) throw std::invalid_argument("Polynomial::compose: dimension mismatch");
        int gn = g.empty() ? 0 : g[0].n();
        Polynomial r(gn);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(gn, c);
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < m[i]; ++k) t = t * g[i];
            r += t;
        }
        return r;
    }

    std::string str() const;

private:
    void check_same(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Polynomial: mixed variable counts");
    }

    int n_;
    Terms terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool is_const = m.degree() == 0;
        if (a != 1 || is_const) {
            s += to_string(a);
            if (!is_const) s += "*";
        }
        if (!is_const) s += m.str();
    }
    return s;
}

/// Formal partial derivative d/dx_i.
inline Polynomial partial(const Polynomial& f, int i) {
    if (i < 0 || i >= f.n()) throw std::out_of_range("partial: variable index out of range");
    Polynomial r(f.n());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        Exponent d = m;
        d[i] -= 1;
        r.add_term(d, c * m[i]);
    }
    return r;
}

/// Invertible rational change of coordinates; substitute(f, T) computes f(T x).
struct LinearChange {
    Mat m;

    explicit LinearChange(Mat mat) : m(std::move(mat)) {
        if (m.rows() != m.cols()) throw std::invalid_argument("LinearChange: not square");
        if (m.det() == 0) throw std::invalid_argument("LinearChange: singular matrix");
    }

    static LinearChange identity(int n) { return LinearChange(Mat::identity(n)); }

    static LinearChange permutation(const std::vector<int>& img) {
        // x_i -> x_{img[i]}
        Mat p(img.size(), img.size());
        for (std::size_t i = 0; i < img.size(); ++i) p(i, img[i]) = 1;
        return LinearChange(p);
    }

    int n() const { return static_cast<int>(m.rows()); }

    LinearChange compose(const LinearChange& o) const { return LinearChange(m * o.m); }

    LinearChange inverse() const { return LinearChange(*m.inverse()); }
};

inline Polynomial substitute(const Polynomial& f, const LinearChange& t) {
    if (t.n() != f.n()) throw std::invalid_argument("substitute: dimension mismatch");
    std::vector<Polynomial> imgs;
    imgs.reserve(f.n());
    for (int i = 0; i < f.n(); ++i) {
        Polynomial li(f.n());
        for (int j = 0; j < f.n(); ++j) {
            Exponent m(static_cast<std::size_t>(f.n()));
            m[j] = 1;
            li.add_term(m, t.m(i, j));
        }
        imgs.push_back(li);
    }
    return f.compose(imgs);
}

// ---------------------------------------------------------------------------
// Text form. Grammar (whitespace insignificant):
//   poly     ::= term (("+" | "-") term)*
//   term     ::= [sign] (rational | [rational "*"] factor ("*" factor)*)
//   factor   ::= "x" index ["^" exponent]
//   rational ::= integer ["/" positive-integer]
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip(); return s[i++]; }

    Int integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer", start);
        return Int(s.substr(start, i - start));
    }
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, int n) {
    detail::Cursor c{text};
    Polynomial out(n);
    bool first_term = true;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            c.take();
            sign = p == '-' ? -1 : 1;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-'", c.i);
        }
        first_term = false;

        Rat coeff(sign);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Int num = c.integer();
            Int den(1);
            if (c.peek() == '/') {
                c.take();
                den = c.integer();
                if (den <= 0) throw ParseError("denominator must be positive", c.i);
            }
            coeff *= rat(num, den);
            saw_number = true;
        }

        Exponent m(static_cast<std::size_t>(n));
        bool saw_factor = false;
        bool expect_factor = false;
        if (saw_number && c.peek() == '*') {
            c.take();
            expect_factor = true;
        }
        while (c.peek() == 'x' || expect_factor) {
            if (c.peek() != 'x') throw ParseError("expected factor", c.i);
            c.take();
            std::size_t at = c.i;
            Int idx = c.integer();
            if (idx < 0 || idx >= n) throw ParseError("variable index out of range", at);
            long e = 1;
            if (c.peek() == '^') {
                c.take();
                Int ee = c.integer();
                if (ee < 0) throw ParseError("negative exponent", c.i);
                e = ee.get_si();
            }
            m[static_cast<std::size_t>(idx.get_si())] += static_cast<int>(e);
            saw_factor = true;
            expect_factor = false;
            if (c.peek() == '*') {
                c.take();
                expect_factor = true;
            }
        }
        if (!saw_number && !saw_factor) throw ParseError("expected term", c.i);
        out.add_term(m, coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Local (affine chart) computations.
// ---------------------------------------------------------------------------

/// Affine coordinates of projective point p in the given chart.
inline std::vector<Rat> chart_coords(const std::vector<Rat>& p, int chart) {
    if (chart < 0 || chart >= static_cast<int>(p.size())) throw std::out_of_range("chart index out of range");
    if (p[chart] == 0) throw std::invalid_argument("chart coordinate vanishes at point");
    std::vector<Rat> q;
    q.reserve(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (static_cast<int>(i) != chart) q.push_back(p[i] / p[chart]);
    return q;
}

/// Chart of the largest-magnitude coordinate.
inline int default_chart(const std::vector<Rat>& p) {
    int best = -1;
    Rat mag(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat a = p[i] < 0 ? Rat(-p[i]) : p[i];
        if (best < 0 || a > mag) { best = static_cast<int>(i); mag = a; }
    }
    if (best < 0 || mag == 0) throw std::invalid_argument("default_chart: zero point");
    return best;
}

/// Dehomogenize f in the chart (x_chart = 1); result lives in n-1 variables
/// ordered as the original variables with the chart slot removed.
inline Polynomial dehomogenize(const Polynomial& f, int chart) {
    int n = f.n();
    if (chart < 0 || chart >= n) throw std::out_of_range("dehomogenize: chart out of range");
    Polynomial r(n - 1);
    for (const auto& [m, c] : f.terms()) {
        Exponent e(static_cast<std::size_t>(n - 1));
        int k = 0;
        for (int i = 0; i < n; ++i) {
            if (i == chart) continue;
            e[k++] = m[i];
        }
        r.add_term(e, c);
    }
    return r;
}

/// Taylor truncation of f at projective point p, order <= k, in affine
/// coordinates centered at p (chart slot removed).
inline Polynomial jet(const Polynomial& f, const std::vector<Rat>& p, int chart, int k) {
    if (static_cast<int>(p.size()) != f.n()) throw std::invalid_argument("jet: point dimension mismatch");
    std::vector<Rat> q = chart_coords(p, chart);
    Polynomial aff = dehomogenize(f, chart);
    int m = aff.n();
    std::vector<Polynomial> shift;
    shift.reserve(m);
    for (int i = 0; i < m; ++i) {
        Polynomial s = Polynomial::variable(m, i);
        s += Polynomial::constant(m, q[i]);
        shift.push_back(s);
    }
    return aff.compose(shift).truncated(k);
}

struct HessianData {
    int rank = 0;
    int corank = 0;
    Mat hessian;           // (n-1) x (n-1), exact
    Polynomial local_jet;  // second-order jet at the point (no constant/linear part)
};

/// Exact Hessian rank/corank of the dehomogenized f at a singular point p.
/// Errors if p is not on f or not singular there.
inline HessianData hessian_corank(const Polynomial& f, const std::vector<Rat>& p, int chart) {
    Polynomial j2 = jet(f, p, chart, 2);
    int m = f.n() - 1;
    if (!j2.homogeneous_part(0).is_zero()) throw std::invalid_argument("hessian_corank: point not on hypersurface");
    if (!j2.homogeneous_part(1).is_zero()) throw std::invalid_argument("hessian_corank: point not singular");
    HessianData h;
    h.hessian = Mat(m, m);
    for (const auto& [mon, c] : j2.terms()) {
        int i = -1, jv = -1;
        for (int t = 0; t < m; ++t) {
            if (mon[t] == 2) { i = jv = t; break; }
            if (mon[t] == 1) { (i < 0 ? i : jv) = t; }
        }
        if (i == jv) {
            h.hessian(i, i) = 2 * c;
        } else {
            h.hessian(i, jv) = c;
            h.hessian(jv, i) = c;
        }
    }
    h.rank = static_cast<int>(h.hessian.rank());
    h.corank = m - h.rank;
    h.local_jet = j2;
    return h;
}

}  // namespace cubicgit
