#include "entcone/set_function.hpp"

#include <algorithm>

namespace entcone {

Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational(s); // handles "p" and "p/q"
        } catch (const std::exception& e) {
            throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
        }
    }
    // Decimal form [sign]digits.digits, accumulated digit by digit; Int's
    // string constructor would read a leading 0 as an octal prefix.
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    Int num = 0;
    size_t ndigits = 0;
    for (size_t i = pos; i < s.size(); ++i) {
        if (i == dot)
            continue;
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed decimal literal: " + s);
        num = num * 10 + (s[i] - '0');
        ++ndigits;
    }
    const size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || ndigits == 0)
        throw std::invalid_argument("malformed decimal literal: " + s);
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i)
        den *= 10;
    if (neg)
        num = -num;
    return make_rational(num, den);
}

std::string subset_to_string(unsigned mask) {
    std::string out;
    for (int i = 1; i <= 8; ++i)
        if (mask & (1u << (i - 1)))
            out += static_cast<char>('0' + i);
    return out;
}

unsigned subset_from_string(const std::string& s, int n) {
    if (s.empty())
        throw std::invalid_argument("empty subset string");
    unsigned mask = 0;
    for (char c : s) {
        if (c < '1' || c > '0' + n)
            throw std::invalid_argument("subset element out of range: " + s);
        unsigned bit = 1u << (c - '1');
        if (mask & bit)
            throw std::invalid_argument("repeated subset element: " + s);
        mask |= bit;
    }
    return mask;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1 || n > 5)
        throw std::invalid_argument("permutation size must be in [1,5]");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("image vector is not a permutation");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        im[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

unsigned Permutation::apply(unsigned mask) const {
    unsigned out = 0;
    for (int i = 1; i <= n(); ++i)
        if (mask & (1u << (i - 1)))
            out |= 1u << (image(i) - 1);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(static_cast<size_t>(n()));
    for (int i = 1; i <= n(); ++i)
        im[static_cast<size_t>(image(i) - 1)] = i;
    return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> im(static_cast<size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i)
        im[static_cast<size_t>(i - 1)] = p.image(q.image(i));
    return Permutation(std::move(im));
}

RealSetFunction to_real(const RationalSetFunction& f) {
    RealSetFunction out(f.ground());
    for (size_t t = 0; t < f.raw().size(); ++t)
        out.raw()[t] = f.raw()[t].convert_to<double>();
    return out;
}

RealSetFunction combine_real(double c1, const RationalSetFunction& f1,
                             double c2, const RationalSetFunction& f2) {
    if (!(f1.ground() == f2.ground()))
        throw std::invalid_argument("combine requires a common ground set");
    RealSetFunction out(f1.ground());
    for (size_t t = 0; t < out.raw().size(); ++t)
        out.raw()[t] = c1 * f1.raw()[t].convert_to<double>() +
                       c2 * f2.raw()[t].convert_to<double>();
    return out;
}

std::vector<LinearInequality> elemental_inequalities(GroundSet g) {
    const int n = g.n();
    const unsigned full = g.full_mask();
    std::vector<LinearInequality> out;
    int index = 0;
    for (int i = 1; i <= n; ++i) {
        LinearInequality q(g);
        q.coeffs.set_value(full, Rational(1));
        const unsigned rem = full & ~(1u << (i - 1));
        if (rem != 0)
            q.coeffs.set_value(rem, Rational(-1));
        q.index = index++;
        out.push_back(std::move(q));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const unsigned bi = 1u << (i - 1), bj = 1u << (j - 1);
            const unsigned rest = full & ~bi & ~bj;
            for (unsigned K = 0;; K = (K - rest) & rest) {
                // K runs over submasks of rest; the (K - rest) & rest step
                // enumerates them in ascending bitmask order from 0.
                LinearInequality q(g);
                auto add = [&](unsigned m, int s) {
                    if (m != 0)
                        q.coeffs.set_value(m, q.coeffs.value(m) + s);
                };
                add(K | bi, 1);
                add(K | bj, 1);
                add(K, -1);
                add(K | bi | bj, -1);
                q.index = index++;
                out.push_back(std::move(q));
                if (K == rest)
                    break;
            }
        }
    }
    return out;
}

Rational evaluate(const LinearInequality& q, const RationalSetFunction& f) {
    if (!(q.coeffs.ground() == f.ground()))
        throw std::invalid_argument("inequality and function live on different ground sets");
    Rational acc(0);
    for (size_t t = 0; t < f.raw().size(); ++t)
        if (q.coeffs.raw()[t] != 0)
            acc += q.coeffs.raw()[t] * f.raw()[t];
    return acc;
}

double evaluate(const LinearInequality& q, const RealSetFunction& f) {
    if (!(q.coeffs.ground() == f.ground()))
        throw std::invalid_argument("inequality and function live on different ground sets");
    double acc = 0;
    for (size_t t = 0; t < f.raw().size(); ++t)
        acc += q.coeffs.raw()[t].convert_to<double>() * f.raw()[t];
    return acc;
}

bool is_polymatroid(const RationalSetFunction& f) {
    for (const auto& q : elemental_inequalities(f.ground()))
        if (evaluate(q, f) < 0)
            return false;
    return true;
}

bool is_polymatroid(const RealSetFunction& f, double tol) {
    for (const auto& q : elemental_inequalities(f.ground()))
        if (evaluate(q, f) < -tol)
            return false;
    return true;
}

} // namespace entcone
