#include "treetp/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace treetp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial{};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::remainder(const Polynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial: division by zero polynomial");
    std::vector<Rational> r = c_;
    const auto& dc = d.c_;
    const Rational& lead = dc.back();
    while (r.size() >= dc.size()) {
        Rational q = r.back() / lead;
        const std::size_t shift = r.size() - dc.size();
        for (std::size_t i = 0; i < dc.size(); ++i) r[shift + i] -= q * dc[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < dc.size()) break;
    }
    return Polynomial(std::move(r));
}

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> c = p.coefficients();
    const Rational lead = c.back();
    for (auto& v : c) v /= lead;
    return Polynomial(std::move(c));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.remainder(b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    // num is a multiple of den by construction (squarefree part).
    std::vector<Rational> r = num.coefficients();
    const auto& dc = den.coefficients();
    std::vector<Rational> q(r.size() - dc.size() + 1);
    const Rational& lead = dc.back();
    for (std::size_t step = q.size(); step-- > 0;) {
        Rational f = r[step + dc.size() - 1] / lead;
        q[step] = f;
        for (std::size_t i = 0; i < dc.size(); ++i) r[step + i] -= f * dc[i];
    }
    return Polynomial(std::move(q));
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = chain[chain.size() - 2].remainder(chain.back());
        std::vector<Rational> neg = r.coefficients();
        for (auto& v : neg) v = -v;
        chain.emplace_back(std::move(neg));
    }
    chain.pop_back();
    return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = sign(p.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

}  // namespace

Polynomial Polynomial::squarefree_part() const {
    if (degree() <= 1) return *this;
    Polynomial g = poly_gcd(*this, derivative());
    if (g.degree() < 1) return *this;
    return divide_exact(*this, g);
}

Rational Polynomial::root_bound() const {
    if (degree() < 1) return 1;
    Rational bound = 0;
    const Rational& lead = c_.back();
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
        Rational ratio = abs(c_[k] / lead);
        bound = std::max(bound, ratio);
    }
    return bound + 1;
}

int Polynomial::count_real_roots(const Rational& lo, const Rational& hi) const {
    if (is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (degree() == 0) return 0;
    const Polynomial sf = squarefree_part();
    const auto chain = sturm_chain(sf);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

int Polynomial::count_real_roots() const {
    const Rational b = root_bound();
    return count_real_roots(-b, b);
}

std::vector<Rational> Polynomial::real_roots(const Rational& tol) const {
    if (is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    if (degree() == 0) return {};
    if (tol <= 0) throw std::invalid_argument("real_roots: tolerance must be > 0");

    const Polynomial sf = squarefree_part();
    const auto chain = sturm_chain(sf);
    const Rational bound = sf.root_bound();

    struct Interval {
        Rational lo, hi;
        int count;
    };
    std::vector<Interval> todo;
    {
        const int total = sign_changes(chain, -bound) - sign_changes(chain, bound);
        if (total > 0) todo.push_back({-bound, bound, total});
    }

    std::vector<Rational> roots;
    while (!todo.empty()) {
        Interval cur = todo.back();
        todo.pop_back();
        if (cur.count == 1 && cur.hi - cur.lo <= tol) {
            roots.push_back((cur.lo + cur.hi) / 2);
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        if (cur.count == 1 && sf.eval(mid) == 0) {
            roots.push_back(mid);
            continue;
        }
        const int left = sign_changes(chain, cur.lo) - sign_changes(chain, mid);
        if (left > 0) todo.push_back({cur.lo, mid, left});
        if (cur.count - left > 0) todo.push_back({mid, cur.hi, cur.count - left});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<Rational> Polynomial::smallest_real_root(const Rational& tol) const {
    auto roots = real_roots(tol);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

std::optional<Rational> Polynomial::largest_real_root(const Rational& tol) const {
    auto roots = real_roots(tol);
    if (roots.empty()) return std::nullopt;
    return roots.back();
}

Polynomial char_poly(const ExactMatrix& a) {
    const int n = a.dim();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = 1;

    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k,
    // M_{k+1} = A (M_k + c_{n-k} I).
    ExactMatrix mk = a;
    for (int k = 1; k <= n; ++k) {
        Rational ck = -mk.trace() / k;
        coeffs[static_cast<std::size_t>(n - k)] = ck;
        if (k == n) break;
        ExactMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted(i, i) += ck;
        mk = multiply(a, shifted);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace treetp
