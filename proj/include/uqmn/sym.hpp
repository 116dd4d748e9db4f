#pragma once

#include "uqmn/bimodule.hpp"
#include "uqmn/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace uqmn {

/// Monomial z^d in the quantum matrix algebra: an m x n matrix of
/// non-negative exponents, canonically ordered column-major
/// z_{1,1}^{d_{1,1}} z_{2,1}^{d_{2,1}} ... z_{m,n}^{d_{m,n}}.
struct DegreeMatrix {
    int m = 0;
    int n = 0;
    std::vector<int> d;  // row-major, m*n entries

    DegreeMatrix() = default;
    DegreeMatrix(int m_, int n_) : m(m_), n(n_), d(static_cast<size_t>(m_ * n_), 0) {}
    DegreeMatrix(int m_, int n_, std::vector<int> entries) : m(m_), n(n_), d(std::move(entries)) {
        if (static_cast<int>(d.size()) != m * n) throw std::invalid_argument("DegreeMatrix size mismatch");
        for (int v : d)
            if (v < 0) throw std::invalid_argument("DegreeMatrix entries must be >= 0");
    }

    [[nodiscard]] int at(int i, int j) const { return d[static_cast<size_t>((i - 1) * n + (j - 1))]; }
    int& at(int i, int j) { return d[static_cast<size_t>((i - 1) * n + (j - 1))]; }

    [[nodiscard]] int total() const {
        int s = 0;
        for (int v : d) s += v;
        return s;
    }

    [[nodiscard]] BiWeight biweight() const {
        BiWeight w{std::vector<int>(static_cast<size_t>(m), 0), std::vector<int>(static_cast<size_t>(n), 0)};
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                w.left[static_cast<size_t>(i - 1)] += at(i, j);
                w.right[static_cast<size_t>(j - 1)] += at(i, j);
            }
        return w;
    }

    auto operator<=>(const DegreeMatrix&) const = default;

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i) {
                int e = at(i, j);
                if (e == 0) continue;
                if (!s.empty()) s += " ";
                s += "z[" + std::to_string(i) + "," + std::to_string(j) + "]";
                if (e > 1) s += "^" + std::to_string(e);
            }
        return s.empty() ? "1" : s;
    }
};

/// Finite Q(q)-linear combination of monomials.
struct SymElement {
    std::map<DegreeMatrix, QRat> terms;

    static SymElement monomial(DegreeMatrix d, QRat c = QRat(1)) {
        SymElement e;
        e.add_term(std::move(d), std::move(c));
        return e;
    }

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    void add_term(DegreeMatrix d, QRat coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(std::move(d), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    [[nodiscard]] QRat coeff_of(const DegreeMatrix& d) const {
        auto it = terms.find(d);
        return it == terms.end() ? QRat() : it->second;
    }

    SymElement& operator+=(const SymElement& o) {
        for (const auto& [d, c] : o.terms) add_term(d, c);
        return *this;
    }
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(const SymElement& a, const SymElement& b) { return a + b * QRat(-1); }
    friend SymElement operator*(SymElement a, const QRat& s) {
        if (s.is_zero()) return SymElement{};
        for (auto& [d, c] : a.terms) c *= s;
        return a;
    }
    friend bool operator==(const SymElement& a, const SymElement& b) { return a.terms == b.terms; }

    [[nodiscard]] std::string to_string() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [d, c] : terms) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "\xC2\xB7" + d.to_string();
        }
        return s;
    }
};

/// Unreduced word in the variables z_{i,j}; letters are (row, column) pairs.
using MonomialWord = std::vector<std::pair<int, int>>;

enum class ReduceStrategy { leftmost, rightmost };

namespace detail {

inline int letter_order(const std::pair<int, int>& a, int m) { return (a.second - 1) * m + a.first; }

struct Straightener {
    int m, n;
    ReduceStrategy strategy;
    std::map<MonomialWord, SymElement> memo;

    SymElement reduce(const MonomialWord& w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        int pos = -1;
        if (strategy == ReduceStrategy::leftmost) {
            for (size_t t = 0; t + 1 < w.size(); ++t)
                if (letter_order(w[t], m) > letter_order(w[t + 1], m)) {
                    pos = static_cast<int>(t);
                    break;
                }
        } else {
            for (size_t t = w.size(); t-- > 1;)
                if (letter_order(w[t - 1], m) > letter_order(w[t], m)) {
                    pos = static_cast<int>(t - 1);
                    break;
                }
        }
        SymElement result;
        if (pos < 0) {
            DegreeMatrix d(m, n);
            for (const auto& [i, j] : w) d.at(i, j) += 1;
            result = SymElement::monomial(std::move(d));
        } else {
            auto [ai, aj] = w[static_cast<size_t>(pos)];
            auto [bi, bj] = w[static_cast<size_t>(pos) + 1];
            MonomialWord swapped = w;
            std::swap(swapped[static_cast<size_t>(pos)], swapped[static_cast<size_t>(pos) + 1]);
            if (ai == bi || aj == bj) {
                // same row or same column: pick up a factor q
                result = reduce(swapped) * QRat::q();
            } else if (ai < bi) {
                // strictly north-east of the smaller letter: plain swap
                result = reduce(swapped);
            } else {
                // strictly south-east: swap plus the (q - 1/q) exchange term
                MonomialWord exchanged = w;
                exchanged[static_cast<size_t>(pos)] = {ai, bj};
                exchanged[static_cast<size_t>(pos) + 1] = {bi, aj};
                result = reduce(swapped) + reduce(exchanged) * (QRat::q() - QRat::qpow(-1));
            }
        }
        memo.emplace(w, result);
        return result;
    }
};

} // namespace detail

/// Normal-order a word by the quantum matrix algebra straightening relations
/// until every term is a column-major-sorted monomial.
inline SymElement sym_straighten(const MonomialWord& w, int m, int n,
                                 ReduceStrategy strategy = ReduceStrategy::leftmost) {
    for (const auto& [i, j] : w)
        if (i < 1 || i > m || j < 1 || j > n) throw std::out_of_range("variable index out of range");
    detail::Straightener s{m, n, strategy, {}};
    return s.reduce(w);
}

/// Closed-form generator action on a normal monomial.
inline SymElement sym_apply(Side side, GenKind kind, int index, int qeps_sign, const DegreeMatrix& dm) {
    const int m = dm.m, n = dm.n;
    SymElement out;
    if (kind == GenKind::Qeps) {
        int tot = 0;
        if (side == Side::left) {
            if (index < 1 || index > m) throw std::out_of_range("qeps index out of range");
            for (int j = 1; j <= n; ++j) tot += dm.at(index, j);
        } else {
            if (index < 1 || index > n) throw std::out_of_range("qeps index out of range");
            for (int i = 1; i <= m; ++i) tot += dm.at(i, index);
        }
        out.add_term(dm, QRat::qpow(qeps_sign >= 0 ? tot : -tot));
        return out;
    }
    if (side == Side::right) {
        const int j = index;
        if (j < 1 || j >= n) throw std::out_of_range("generator index out of range");
        for (int i = 1; i <= m; ++i) {
            if (kind == GenKind::E) {
                if (dm.at(i, j + 1) < 1) continue;
                int base = 0;
                for (int ip = 1; ip < i; ++ip) base += dm.at(ip, j + 1) - dm.at(ip, j);
                QRat coeff;
                for (int a = 0; a < dm.at(i, j + 1); ++a)
                    coeff += QRat::qpow(base + 2 * a - dm.at(i, j));
                DegreeMatrix nd = dm;
                nd.at(i, j) += 1;
                nd.at(i, j + 1) -= 1;
                out.add_term(std::move(nd), coeff);
            } else {
                if (dm.at(i, j) < 1) continue;
                int base = 0;
                for (int ip = i + 1; ip <= m; ++ip) base += dm.at(ip, j) - dm.at(ip, j + 1);
                QRat coeff;
                for (int a = 0; a < dm.at(i, j); ++a)
                    coeff += QRat::qpow(base + 2 * a - dm.at(i, j + 1));
                DegreeMatrix nd = dm;
                nd.at(i, j) -= 1;
                nd.at(i, j + 1) += 1;
                out.add_term(std::move(nd), coeff);
            }
        }
        return out;
    }
    const int i = index;
    if (i < 1 || i >= m) throw std::out_of_range("generator index out of range");
    for (int j = 1; j <= n; ++j) {
        if (kind == GenKind::E) {
            if (dm.at(i + 1, j) < 1) continue;
            int base = 0;
            for (int jp = 1; jp < j; ++jp) base += dm.at(i + 1, jp) - dm.at(i, jp);
            QRat coeff;
            for (int a = 0; a < dm.at(i + 1, j); ++a) coeff += QRat::qpow(base + 2 * a - dm.at(i, j));
            DegreeMatrix nd = dm;
            nd.at(i, j) += 1;
            nd.at(i + 1, j) -= 1;
            out.add_term(std::move(nd), coeff);
        } else {
            if (dm.at(i, j) < 1) continue;
            int base = 0;
            for (int jp = j + 1; jp <= n; ++jp) base += dm.at(i, jp) - dm.at(i + 1, jp);
            QRat coeff;
            for (int a = 0; a < dm.at(i, j); ++a) coeff += QRat::qpow(base + 2 * a - dm.at(i + 1, j));
            DegreeMatrix nd = dm;
            nd.at(i, j) -= 1;
            nd.at(i + 1, j) += 1;
            out.add_term(std::move(nd), coeff);
        }
    }
    return out;
}

inline SymElement sym_apply(Side side, GenKind kind, int index, int qeps_sign, const SymElement& x) {
    SymElement out;
    for (const auto& [d, c] : x.terms) {
        SymElement img = sym_apply(side, kind, index, qeps_sign, d);
        out += img * c;
    }
    return out;
}

/// Coproduct action on an unreduced word in the one-box letters, followed by
/// straightening; the independent route the closed forms are checked against.
inline SymElement sym_word_apply(Side side, GenKind kind, int index, const MonomialWord& w, int m,
                                 int n, ReduceStrategy strategy = ReduceStrategy::leftmost) {
    auto letter_h = [&](const std::pair<int, int>& z) {
        if (side == Side::left) return (z.first == index ? 1 : 0) - (z.first == index + 1 ? 1 : 0);
        return (z.second == index ? 1 : 0) - (z.second == index + 1 ? 1 : 0);
    };
    auto letter_move = [&](const std::pair<int, int>& z) -> std::optional<std::pair<int, int>> {
        if (side == Side::left) {
            if (kind == GenKind::E && z.first == index + 1) return std::pair{index, z.second};
            if (kind == GenKind::F && z.first == index) return std::pair{index + 1, z.second};
        } else {
            if (kind == GenKind::E && z.second == index + 1) return std::pair{z.first, index};
            if (kind == GenKind::F && z.second == index) return std::pair{z.first, index + 1};
        }
        return std::nullopt;
    };
    SymElement out;
    for (size_t t = 0; t < w.size(); ++t) {
        auto moved = letter_move(w[t]);
        if (!moved) continue;
        int shift = 0;
        if (kind == GenKind::E) {
            for (size_t s = 0; s < t; ++s) shift -= letter_h(w[s]);
        } else {
            for (size_t s = t + 1; s < w.size(); ++s) shift += letter_h(w[s]);
        }
        MonomialWord nw = w;
        nw[t] = *moved;
        out += sym_straighten(nw, m, n, strategy) * QRat::qpow(shift);
    }
    return out;
}

/// All degree matrices of total k, in canonical order.
inline std::vector<DegreeMatrix> sym_basis(int k, int m, int n) {
    std::vector<DegreeMatrix> out;
    DegreeMatrix cur(m, n);
    std::function<void(int, int)> rec = [&](int cell, int remaining) {
        if (cell == m * n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        if (cell == m * n - 1) {
            cur.d[static_cast<size_t>(cell)] = remaining;
            out.push_back(cur);
            cur.d[static_cast<size_t>(cell)] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur.d[static_cast<size_t>(cell)] = v;
            rec(cell + 1, remaining - v);
        }
        cur.d[static_cast<size_t>(cell)] = 0;
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

/// The symmetric-power module as a model for the generic relation engine.
struct SymModel {
    using Elem = SymElement;

    int m, n, k;
    std::vector<DegreeMatrix> basis;

    SymModel(int m_, int n_, int k_) : m(m_), n(n_), k(k_), basis(sym_basis(k_, m_, n_)) {}

    [[nodiscard]] int gl_rank(Side s) const { return s == Side::left ? m : n; }
    [[nodiscard]] size_t basis_count() const { return basis.size(); }
    [[nodiscard]] std::string basis_name(size_t t) const { return basis[t].to_string(); }
    [[nodiscard]] Elem basis_vector(size_t t) const { return SymElement::monomial(basis[t]); }
    [[nodiscard]] Elem apply(Side s, GenKind kk, int idx, int sign, const Elem& x) const {
        return sym_apply(s, kk, idx, sign, x);
    }
};

/// Dimension, termination/confluence and closed-form-vs-coproduct agreement
/// checks for one symmetric power.
inline CheckReport sym_dimension_check(int k, int m, int n, unsigned threads = 1) {
    (void)threads;
    CheckReport rep;
    rep.suite = "sym";
    rep.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    auto basis = sym_basis(k, m, n);
    Int expected = binomial(m * n + k - 1, k);
    rep.add("dim", Int(basis.size()) == expected,
            std::to_string(basis.size()) + " monomials vs expected " + expected.str());

    // straightening of every word of length min(k, 4): terminates, lands on
    // normal monomials of the same degree, and is strategy-independent
    {
        int len = std::min(k, 4);
        std::string witness;
        std::vector<std::pair<int, int>> letters;
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i) letters.push_back({i, j});
        MonomialWord w(static_cast<size_t>(len));
        std::function<bool(int)> rec = [&](int t) -> bool {
            if (t == len) {
                SymElement a = sym_straighten(w, m, n, ReduceStrategy::leftmost);
                SymElement b = sym_straighten(w, m, n, ReduceStrategy::rightmost);
                if (!(a == b)) {
                    witness = "strategy mismatch";
                    return false;
                }
                for (const auto& [d, c] : a.terms)
                    if (d.total() != len) {
                        witness = "degree not preserved";
                        return false;
                    }
                return true;
            }
            for (const auto& z : letters) {
                w[static_cast<size_t>(t)] = z;
                if (!rec(t + 1)) return false;
            }
            return true;
        };
        bool ok = len == 0 || rec(0);
        rep.add("straighten.confluence", ok, witness);
    }

    // closed forms against coproduct-then-straighten on every monomial
    {
        std::string witness;
        bool ok = true;
        for (const auto& d : basis) {
            MonomialWord w;
            for (int j = 1; j <= n && ok; ++j)
                for (int i = 1; i <= m; ++i)
                    for (int t = 0; t < d.at(i, j); ++t) w.push_back({i, j});
            for (Side side : {Side::left, Side::right}) {
                int rank = side == Side::left ? m : n;
                for (int idx = 1; idx < rank && ok; ++idx)
                    for (GenKind kind : {GenKind::E, GenKind::F}) {
                        SymElement closed = sym_apply(side, kind, idx, 1, d);
                        SymElement viaword = sym_word_apply(side, kind, idx, w, m, n);
                        if (!(closed == viaword)) {
                            ok = false;
                            witness = d.to_string() + " under " +
                                      GeneratorId{side, kind, idx}.to_string();
                            break;
                        }
                    }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("action.agreement", ok, witness);
    }
    return rep;
}

} // namespace uqmn
