#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/rational.hpp"

namespace syzcurve {

using Exp3 = std::array<int, 3>;

// Term order: total degree descending, then lexicographic descending in
// (x, y, z).  Map iteration therefore matches the canonical printing order,
// and within one degree it matches the monomial indexing used for
// coefficient vectors.
struct TermOrder {
    bool operator()(const Exp3& a, const Exp3& b) const {
        const long da = a[0] + a[1] + a[2];
        const long db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        if (a[0] != b[0]) return a[0] > b[0];
        if (a[1] != b[1]) return a[1] > b[1];
        return false;
    }
};

inline long dim_forms(long k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; } // dim S_k

// Monomials of degree k in descending lex order; index_in_degree inverts the
// listing without materializing it.
inline std::vector<Exp3> monomials_of_degree(long k) {
    std::vector<Exp3> out;
    if (k < 0) return out;
    out.reserve(static_cast<std::size_t>(dim_forms(k)));
    for (int i = static_cast<int>(k); i >= 0; --i)
        for (int j = static_cast<int>(k) - i; j >= 0; --j)
            out.push_back({i, j, static_cast<int>(k) - i - j});
    return out;
}

inline long index_in_degree(const Exp3& e, long k) {
    const long i = e[0], j = e[1];
    return (k - i) * (k - i + 1) / 2 + (k - i - j);
}

// General trivariate polynomial over the rationals.
class Poly {
  public:
    using Terms = std::map<Exp3, Rat, TermOrder>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }

    static Poly variable(int v) {
        Poly p;
        Exp3 e{0, 0, 0};
        e[static_cast<std::size_t>(v)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static Poly monomial(const Exp3& e, const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long total_degree() const { // -1 for the zero polynomial
        long d = -1;
        for (const auto& t : terms_)
            d = std::max(d, static_cast<long>(t.first[0] + t.first[1] + t.first[2]));
        return d;
    }

    bool is_homogeneous(long* degree_out = nullptr, Exp3* offender = nullptr) const {
        long d = -1;
        for (const auto& t : terms_) {
            const long td = t.first[0] + t.first[1] + t.first[2];
            if (d < 0) {
                d = td;
            } else if (td != d) {
                if (offender) *offender = t.first;
                if (degree_out) *degree_out = d;
                return false;
            }
        }
        if (degree_out) *degree_out = d;
        return true;
    }

    void add_term(const Exp3& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& t : o.terms_) add_term(t.first, t.second);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& t : o.terms_) add_term(t.first, -t.second);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_)
                out.add_term({s.first[0] + t.first[0], s.first[1] + t.first[1],
                              s.first[2] + t.first[2]},
                             s.second * t.second);
        return out;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(long e) const {
        Poly r(Rat(1));
        Poly b = *this;
        long n = e;
        while (n > 0) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    Poly partial(int v) const {
        Poly out;
        for (const auto& t : terms_) {
            const int e = t.first[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            Exp3 m = t.first;
            m[static_cast<std::size_t>(v)] = e - 1;
            out.add_term(m, t.second * e);
        }
        return out;
    }

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
        Rat sum = 0;
        for (const auto& t : terms_)
            sum += t.second * pow_rat(x, static_cast<unsigned long>(t.first[0])) *
                   pow_rat(y, static_cast<unsigned long>(t.first[1])) *
                   pow_rat(z, static_cast<unsigned long>(t.first[2]));
        return sum;
    }

    // Substitute each variable by a polynomial (affine coordinate changes,
    // dehomogenization, translations).
    Poly subst(const std::array<Poly, 3>& img) const {
        Poly out;
        for (const auto& t : terms_) {
            Poly m(t.second);
            for (int v = 0; v < 3; ++v) {
                const int e = t.first[static_cast<std::size_t>(v)];
                if (e > 0) m *= img[static_cast<std::size_t>(v)].pow(e);
            }
            out += m;
        }
        return out;
    }

    // Degree in one variable.
    long degree_in(int v) const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.first[static_cast<std::size_t>(v)]));
        return d;
    }

    // Coefficient of v^e, a polynomial in the other variables.
    Poly coefficient_of(int v, int e) const {
        Poly out;
        for (const auto& t : terms_) {
            if (t.first[static_cast<std::size_t>(v)] != e) continue;
            Exp3 m = t.first;
            m[static_cast<std::size_t>(v)] = 0;
            out.add_term(m, t.second);
        }
        return out;
    }

    // Order of vanishing at the origin (minimum total degree of a term).
    long order_at_origin() const {
        long o = -1;
        for (const auto& t : terms_) {
            const long td = t.first[0] + t.first[1] + t.first[2];
            if (o < 0 || td < o) o = td;
        }
        return o;
    }

  private:
    Terms terms_;
};

inline std::string monomial_to_string(const Exp3& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int v = 0; v < 3; ++v) {
        const int p = e[static_cast<std::size_t>(v)];
        if (p == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (p > 1) s += "^" + std::to_string(p);
    }
    return s;
}

// Canonical string: terms in degree-descending, lex-descending order;
// coefficients printed as integers or num/den; unit coefficients omitted.
inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rat c = t.second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        const std::string mono = monomial_to_string(t.first);
        if (mono.empty()) {
            s += to_string(c);
        } else {
            if (c != 1) s += to_string(c) + "*";
            s += mono;
        }
    }
    return s;
}

// A homogeneous polynomial tagged with its degree.  The zero polynomial is
// allowed at any degree (it shows up as a partial derivative or a difference).
class HomogeneousPoly {
  public:
    HomogeneousPoly() : deg_(0) {}
    HomogeneousPoly(Poly p, long degree) : p_(std::move(p)), deg_(degree) {
        long d = -1;
        Exp3 bad{0, 0, 0};
        if (!p_.is_homogeneous(&d, &bad))
            throw NotHomogeneous("term " + monomial_to_string(bad) +
                                 " breaks homogeneity (expected degree " +
                                 std::to_string(d) + ")");
        if (d >= 0 && d != degree)
            throw NotHomogeneous("polynomial has degree " + std::to_string(d) +
                                 ", expected " + std::to_string(degree));
    }

    static HomogeneousPoly from_poly(const Poly& p) {
        long d = -1;
        Exp3 bad{0, 0, 0};
        if (!p.is_homogeneous(&d, &bad))
            throw NotHomogeneous("term " + monomial_to_string(bad) +
                                 " has degree " +
                                 std::to_string(bad[0] + bad[1] + bad[2]) +
                                 ", expected " + std::to_string(d));
        return HomogeneousPoly(p, d < 0 ? 0 : d);
    }

    const Poly& poly() const { return p_; }
    long degree() const { return deg_; }
    bool is_zero() const { return p_.is_zero(); }

    HomogeneousPoly partial(int v) const {
        return HomogeneousPoly(p_.partial(v), deg_ > 0 ? deg_ - 1 : 0);
    }

    // Coefficient vector over monomials_of_degree(degree()), sparse,
    // ascending index.
    std::vector<std::pair<std::int32_t, Rat>> coefficient_row() const {
        std::vector<std::pair<std::int32_t, Rat>> row;
        row.reserve(p_.terms().size());
        for (const auto& t : p_.terms())
            row.emplace_back(static_cast<std::int32_t>(index_in_degree(t.first, deg_)),
                             t.second);
        return row;
    }

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return HomogeneousPoly(a.p_ * b.p_, a.deg_ + b.deg_);
    }

    bool operator==(const HomogeneousPoly& o) const { return p_ == o.p_; }

  private:
    Poly p_;
    long deg_;
};

inline std::string to_string(const HomogeneousPoly& f) { return to_string(f.poly()); }

// Euler relation x*f_x + y*f_y + z*f_z = deg(f) * f; a cheap internal sanity
// check for homogeneous inputs.
inline bool euler_check(const HomogeneousPoly& f) {
    Poly lhs = Poly::variable(0) * f.poly().partial(0) +
               Poly::variable(1) * f.poly().partial(1) +
               Poly::variable(2) * f.poly().partial(2);
    return lhs == f.poly() * Rat(f.degree());
}

// --- univariate polynomials over Q (ascending coefficients) ---
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly constant(const Rat& v) {
        return v == 0 ? UnivariatePoly() : UnivariatePoly({v});
    }

    const std::vector<Rat>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& leading() const { return c_.back(); }
    Rat coeff(long i) const {
        return (i < 0 || i >= static_cast<long>(c_.size())) ? Rat(0)
                                                            : c_[static_cast<std::size_t>(i)];
    }

    Rat eval(const Rat& t) const {
        Rat v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
        return v;
    }

    UnivariatePoly derivative() const {
        if (c_.size() <= 1) return UnivariatePoly();
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UnivariatePoly(std::move(d));
    }

    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero() || b.is_zero()) return UnivariatePoly();
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UnivariatePoly(std::move(out));
    }

    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) {
        if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rat(0));
        for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
        a.trim();
        return a;
    }

    UnivariatePoly scaled(const Rat& s) const {
        if (s == 0) return UnivariatePoly();
        std::vector<Rat> out = c_;
        for (auto& v : out) v *= s;
        return UnivariatePoly(std::move(out));
    }

    UnivariatePoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rat(1) / c_.back());
    }

    // Division with remainder; divisor must be nonzero.
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const {
        UnivariatePoly r = *this;
        std::vector<Rat> q(static_cast<std::size_t>(
                               std::max<long>(0, degree() - d.degree() + 1)),
                           Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const long shift = r.degree() - d.degree();
            const Rat f = r.leading() / d.leading();
            q[static_cast<std::size_t>(shift)] = f;
            std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
            for (const Rat& v : d.c_) sub.push_back(v * f);
            r = r - UnivariatePoly(std::move(sub));
        }
        return {UnivariatePoly(std::move(q)), r};
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    UnivariatePoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

// All rational roots, ascending, with multiplicities.  Complete: candidates
// run over divisors of the leading and trailing coefficients of the primitive
// integer model.  Throws Error when a coefficient is too large to factor by
// trial division (does not occur for the curves this engine ships with).
inline std::vector<std::pair<Rat, long>> rational_roots(const UnivariatePoly& p) {
    std::vector<std::pair<Rat, long>> roots;
    if (p.is_zero() || p.degree() <= 0) return roots;

    UnivariatePoly q = p;
    // factor out t = 0
    long mult0 = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = UnivariatePoly(std::move(shifted));
        ++mult0;
    }
    if (mult0 > 0) roots.emplace_back(Rat(0), mult0);
    if (q.degree() <= 0) return roots;

    // integer model
    Int lead, trail;
    {
        std::vector<Rat> cs = q.coeffs();
        Int l = common_denominator(cs);
        std::vector<Int> zc(cs.size());
        Int g = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            zc[i] = cs[i].get_num() * (l / cs[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zc[i].get_mpz_t());
        }
        for (auto& v : zc) v /= g;
        lead = zc.back();
        trail = zc.front();
    }

    auto divisors = [](Int n) {
        if (n < 0) n = -n;
        std::vector<Int> ds;
        if (n > Int(1000000000)) throw Error("coefficient too large for rational root search");
        const long nn = static_cast<long>(n.get_si());
        for (long d = 1; static_cast<double>(d) * d <= static_cast<double>(nn); ++d) {
            if (nn % d == 0) {
                ds.emplace_back(d);
                ds.emplace_back(nn / d);
            }
        }
        return ds;
    };

    std::vector<std::pair<Rat, long>> found;
    for (const Int& a : divisors(trail)) {
        for (const Int& b : divisors(lead)) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                Rat cand(sign * a, b);
                cand.canonicalize();
                bool seen = false;
                for (const auto& r : found)
                    if (r.first == cand) seen = true;
                if (seen) continue;
                long m = 0;
                UnivariatePoly cur = q;
                while (!cur.is_zero() && cur.degree() >= 1 && cur.eval(cand) == 0) {
                    // divide by (t - cand)
                    auto [quot, rem] = cur.divmod(UnivariatePoly({-cand, Rat(1)}));
                    (void)rem;
                    cur = quot;
                    ++m;
                }
                if (m > 0) found.emplace_back(cand, m);
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

// --- linear forms and projective points ---
struct LinearForm {
    Rat a, b, c; // a*x + b*y + c*z, normalized: first nonzero coefficient is 1

    LinearForm(const Rat& A, const Rat& B, const Rat& C) : a(A), b(B), c(C) {
        if (a == 0 && b == 0 && c == 0) throw BadParameters("zero linear form");
        Rat lead = a != 0 ? a : (b != 0 ? b : c);
        a /= lead;
        b /= lead;
        c /= lead;
    }

    static LinearForm from_poly(const Poly& p) {
        Rat A = 0, B = 0, C = 0;
        for (const auto& t : p.terms()) {
            const Exp3& e = t.first;
            if (e == Exp3{1, 0, 0})
                A = t.second;
            else if (e == Exp3{0, 1, 0})
                B = t.second;
            else if (e == Exp3{0, 0, 1})
                C = t.second;
            else
                throw BadParameters("not a linear form: " + to_string(p));
        }
        return LinearForm(A, B, C);
    }

    Poly to_poly() const {
        Poly p;
        p.add_term({1, 0, 0}, a);
        p.add_term({0, 1, 0}, b);
        p.add_term({0, 0, 1}, c);
        return p;
    }

    HomogeneousPoly to_homogeneous() const { return HomogeneousPoly(to_poly(), 1); }

    bool operator==(const LinearForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

inline std::string to_string(const LinearForm& l) { return to_string(l.to_poly()); }

struct ProjPoint {
    Rat x, y, z;

    ProjPoint(const Rat& X, const Rat& Y, const Rat& Z) : x(X), y(Y), z(Z) {
        if (x == 0 && y == 0 && z == 0) throw BadParameters("zero projective point");
        Rat lead = x != 0 ? x : (y != 0 ? y : z);
        x /= lead;
        y /= lead;
        z /= lead;
    }

    bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const ProjPoint& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

inline std::string to_string(const ProjPoint& p) {
    return "(" + to_string(p.x) + ":" + to_string(p.y) + ":" + to_string(p.z) + ")";
}

// --- restriction of a curve to a line ---
//
// The line a*x + b*y + c*z = 0 is parametrized by (s:t) as follows:
//   c != 0          : (s, t, -(a*s + b*t)/c)
//   c == 0, b != 0  : (s, -(a/b)*s, t)
//   b == c == 0     : (0, s, t)
// restrict_to_line returns f on the line, dehomogenized at s = 1, together
// with the multiplicity of the parameter point at infinity (s = 0).
struct LineRestriction {
    UnivariatePoly p; // f(param(1, t))
    long inf_mult;    // multiplicity of the (s:t) = (0:1) point

    long degree_total() const { return p.degree() + inf_mult; }
};

inline std::array<Poly, 3> line_parametrization(const LinearForm& l) {
    const Poly s = Poly::variable(0); // reuse x-slot for the parameter s
    const Poly t = Poly::variable(1); // y-slot for t
    if (l.c != 0) return {s, t, (s * (-l.a) + t * (-l.b)) * (Rat(1) / l.c)};
    if (l.b != 0) return {s, s * (-l.a / l.b), t};
    return {Poly(Rat(0)), s, t};
}

inline ProjPoint line_point_at_parameter(const LinearForm& l, const Rat& s, const Rat& t) {
    if (l.c != 0) return ProjPoint(s, t, -(l.a * s + l.b * t) / l.c);
    if (l.b != 0) return ProjPoint(s, -(l.a / l.b) * s, t);
    return ProjPoint(0, s, t);
}

inline LineRestriction restrict_to_line(const HomogeneousPoly& f, const LinearForm& l) {
    const Poly g = f.poly().subst(line_parametrization(l)); // binary form in (s, t)
    if (g.is_zero())
        throw ZeroRestriction("line " + to_string(l) + " is a component of the curve");
    const long d = f.degree();
    std::vector<Rat> coeffs(static_cast<std::size_t>(d + 1), Rat(0));
    for (const auto& term : g.terms()) coeffs[static_cast<std::size_t>(term.first[1])] = term.second;
    UnivariatePoly p(std::move(coeffs));
    return LineRestriction{p, d - p.degree()};
}

// Number of distinct intersection points of the curve with the line.
inline long count_intersections(const HomogeneousPoly& f, const LinearForm& l) {
    LineRestriction r = restrict_to_line(f, l);
    long n = r.p.degree() <= 0 ? 0 : squarefree_part(r.p).degree();
    if (r.inf_mult > 0) ++n;
    return n;
}

// --- exact division by a linear form ---
inline HomogeneousPoly divide_exact(const HomogeneousPoly& f, const LinearForm& l) {
    // Divide in the variable with a nonzero coefficient (z preferred).
    int v;
    Rat lead;
    if (l.c != 0) {
        v = 2;
        lead = l.c;
    } else if (l.b != 0) {
        v = 1;
        lead = l.b;
    } else {
        v = 0;
        lead = l.a;
    }
    const Poly lp = l.to_poly();
    Poly rem = f.poly();
    Poly quot;
    while (!rem.is_zero() && rem.degree_in(v) >= 1) {
        const long e = rem.degree_in(v);
        Poly top = rem.coefficient_of(v, static_cast<int>(e)); // poly in the other two vars
        Exp3 shift{0, 0, 0};
        shift[static_cast<std::size_t>(v)] = static_cast<int>(e - 1);
        Poly term = top * Poly::monomial(shift, Rat(1) / lead);
        quot += term;
        rem -= term * lp;
    }
    if (!rem.is_zero())
        throw NotDivisible("curve is not divisible by " + to_string(l) + " (remainder " +
                           to_string(rem) + ")");
    return HomogeneousPoly(quot, f.degree() - 1);
}

inline bool divides(const HomogeneousPoly& f, const LinearForm& l) {
    try {
        divide_exact(f, l);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

// --- squarefreeness over Q (exact, certified both ways) ---
//
// Write f = content * primitive with respect to z, the content being the gcd
// of the coefficient binary forms in Q[x,y].  f is squarefree iff the content
// is a squarefree binary form and the primitive part is squarefree as a
// polynomial in z over Q(x,y).  The latter is decided by specializing
// (x,y) = (1,t): the z-discriminant is a binary form of bounded degree, so a
// single nonvanishing specialization certifies squarefreeness and enough
// vanishing specializations certify the converse.
namespace detail {

// Binary form B(x,y) of degree `deg`, stored as b(t) = B(t,1).
struct BinForm {
    long deg = 0;
    UnivariatePoly b;

    bool is_zero() const { return b.is_zero(); }
    long val_y() const { return deg - b.degree(); }

    Rat eval_1t(const Rat& t) const { // B(1,t)
        Rat sum = 0;
        for (long i = 0; i <= b.degree(); ++i)
            sum += b.coeff(i) * pow_rat(t, static_cast<unsigned long>(deg - i));
        return sum;
    }
};

inline BinForm binform_of(const Poly& p, long deg) {
    // p must be a binary form in x,y of the given degree (or zero)
    std::vector<Rat> c(static_cast<std::size_t>(deg + 1), Rat(0));
    for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.first[0])] = t.second;
    return BinForm{deg, UnivariatePoly(std::move(c))};
}

inline BinForm gcd(const BinForm& A, const BinForm& B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    const long vy = std::min(A.val_y(), B.val_y());
    UnivariatePoly g = syzcurve::gcd(A.b, B.b);
    return BinForm{g.degree() + vy, g};
}

inline bool squarefree(const BinForm& A) {
    if (A.is_zero()) return false;
    if (A.val_y() > 1) return false;
    return syzcurve::gcd(A.b, A.b.derivative()).degree() == 0;
}

inline BinForm div_exact(const BinForm& A, const BinForm& B) {
    auto [q, r] = A.b.divmod(B.b);
    if (!r.is_zero()) throw Error("internal: binary form division not exact");
    return BinForm{A.deg - B.deg, q};
}

} // namespace detail

inline bool is_squarefree(const HomogeneousPoly& f) {
    if (f.is_zero()) return false;
    const long d = f.degree();
    const long ez = f.poly().degree_in(2);

    std::vector<detail::BinForm> coeffs; // z^e coefficient, degree d - e
    for (long e = 0; e <= ez; ++e)
        coeffs.push_back(detail::binform_of(f.poly().coefficient_of(2, static_cast<int>(e)), d - e));

    detail::BinForm content;
    for (const auto& c : coeffs) content = detail::gcd(content, c);

    if (content.deg > 0 && !detail::squarefree(content)) return false;
    if (ez == 0) return true; // f is a binary form; content check decided it

    // primitive part, as a univariate polynomial in z with BinForm coefficients
    std::vector<detail::BinForm> prim;
    prim.reserve(coeffs.size());
    for (const auto& c : coeffs)
        prim.push_back(c.is_zero() ? c : detail::div_exact(c, content));

    // specialize (x,y) = (1,t); valid whenever the top z-coefficient survives
    const long disc_bound = 2 * d * d; // >= degree of the z-discriminant binary form
    long good = 0;
    for (long tv = 0; good <= disc_bound; ++tv) {
        const Rat t(tv);
        if (prim.back().eval_1t(t) == 0) continue; // degenerate specialization
        ++good;
        std::vector<Rat> zc;
        zc.reserve(prim.size());
        for (const auto& c : prim) zc.push_back(c.eval_1t(t));
        UnivariatePoly pz(std::move(zc));
        if (gcd(pz, pz.derivative()).degree() == 0) return true;
    }
    return false; // discriminant vanished at more points than its degree allows
}

inline void require_reduced(const HomogeneousPoly& f) {
    if (!is_squarefree(f))
        throw NotReduced("curve has a repeated component: " + to_string(f));
}

} // namespace syzcurve
