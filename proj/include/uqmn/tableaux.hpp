#pragma once

#include "uqmn/poly.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqmn {

/// Partition lambda_1 >= ... >= lambda_r > 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    [[nodiscard]] int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    [[nodiscard]] int rows() const { return static_cast<int>(parts.size()); }
    [[nodiscard]] int part(int i) const {  // 1-based, 0 beyond the last row
        return i >= 1 && i <= rows() ? parts[static_cast<size_t>(i - 1)] : 0;
    }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; j <= (parts.empty() ? 0 : parts[0]); ++j) {
            int cnt = 0;
            for (int p : parts) cnt += p >= j ? 1 : 0;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    [[nodiscard]] bool fits(int max_rows, int max_cols) const {
        return rows() <= max_rows && (parts.empty() || parts[0] <= max_cols);
    }

    auto operator<=>(const Partition&) const = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

private:
    void validate() const {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw std::invalid_argument("partition not weakly decreasing");
        if (!parts.empty() && parts.back() <= 0)
            throw std::invalid_argument("partition parts must be positive");
    }
};

/// All partitions of `boxes` fitting in a max_rows x max_cols rectangle,
/// in a fixed (lexicographically decreasing) order.
inline std::vector<Partition> partitions_in_rectangle(int boxes, int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(boxes, max_cols);
    return out;
}

/// Semistandard Young tableau: weakly increasing rows, strictly increasing
/// columns.
struct SSYTableau {
    std::vector<std::vector<int>> rows;

    auto operator<=>(const SSYTableau&) const = default;

    [[nodiscard]] Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }

    [[nodiscard]] bool is_semistandard() const {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r + 1 < rows.size() && rows[r].size() < rows[r + 1].size()) return false;
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
                if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
            }
        }
        return true;
    }

    /// Letter multiplicities 1..max.
    [[nodiscard]] std::vector<int> content(int max) const {
        std::vector<int> cnt(static_cast<size_t>(max), 0);
        for (const auto& r : rows)
            for (int v : r) cnt[static_cast<size_t>(v - 1)] += 1;
        return cnt;
    }

    /// Reading word: rows bottom to top, each left to right.
    [[nodiscard]] std::vector<int> row_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
        return w;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r) s += "|";
            for (int v : rows[r]) s += std::to_string(v);
        }
        return s + "]";
    }
};

/// Row-insert one letter (Schensted bumping).
inline void rsk_insert(SSYTableau& t, int value) {
    int cur = value;
    for (auto& row : t.rows) {
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            return;
        }
        std::swap(*it, cur);
    }
    t.rows.push_back({cur});
}

/// Insertion tableau of a word read left to right.
inline SSYTableau rsk(const std::vector<int>& word) {
    SSYTableau t;
    for (int v : word) rsk_insert(t, v);
    return t;
}

// ---------------------------------------------------------------------------
// The +/- bracketing engine shared by all crystal operators.
// ---------------------------------------------------------------------------

enum class CrystalDir { raise_op, lower_op };

/// Cancel adjacent (-,+) pairs until the word reads +^a -^b; the raising
/// operator flips the leftmost surviving -, the lowering operator the
/// rightmost surviving +.  With `reversed` the word is scanned from the other
/// end (the opposite-coproduct orientation).
inline std::optional<size_t> bracket_flip(std::vector<int> signs, CrystalDir dir, bool reversed) {
    if (reversed) std::reverse(signs.begin(), signs.end());
    std::vector<size_t> pending_minus, unmatched_plus;
    for (size_t pos = 0; pos < signs.size(); ++pos) {
        if (signs[pos] < 0) {
            pending_minus.push_back(pos);
        } else if (!pending_minus.empty()) {
            pending_minus.pop_back();
        } else {
            unmatched_plus.push_back(pos);
        }
    }
    std::optional<size_t> flip;
    if (dir == CrystalDir::raise_op) {
        if (!pending_minus.empty()) flip = pending_minus.front();
    } else {
        if (!unmatched_plus.empty()) flip = unmatched_plus.back();
    }
    if (flip && reversed) flip = signs.size() - 1 - *flip;
    return flip;
}

/// Crystal operator on a semistandard tableau for the letter pair (i, i+1),
/// via the reading-word signature rule; returns the modified tableau or
/// nothing at the end of a string.
inline std::optional<SSYTableau> tableau_crystal(int i, CrystalDir dir, const SSYTableau& t) {
    std::vector<int> signs;
    std::vector<std::pair<size_t, size_t>> cells;  // aligned with signs
    for (size_t rr = t.rows.size(); rr-- > 0;) {
        for (size_t cc = 0; cc < t.rows[rr].size(); ++cc) {
            int v = t.rows[rr][cc];
            if (v == i) {
                signs.push_back(+1);
                cells.push_back({rr, cc});
            } else if (v == i + 1) {
                signs.push_back(-1);
                cells.push_back({rr, cc});
            }
        }
    }
    auto flip = bracket_flip(signs, dir, false);
    if (!flip) return std::nullopt;
    SSYTableau out = t;
    auto [rr, cc] = cells[*flip];
    out.rows[rr][cc] = dir == CrystalDir::raise_op ? i : i + 1;
    return out;
}

/// All semistandard tableaux of the given shape with entries in [1, alphabet].
inline std::vector<SSYTableau> enumerate_ssyt(const Partition& shape, int alphabet) {
    std::vector<SSYTableau> out;
    SSYTableau t;
    for (int r = 0; r < shape.rows(); ++r)
        t.rows.push_back(std::vector<int>(static_cast<size_t>(shape.part(r + 1)), 0));
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == shape.rows()) {
            out.push_back(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && c < shape.part(r))
            lo = std::max(lo, t.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= alphabet; ++v) {
            t.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            fill(nr, nc);
        }
    };
    if (shape.rows() == 0) return {SSYTableau{}};
    fill(0, 0);
    return out;
}

/// #SSYT(shape, [alphabet]) by the hook content formula.
inline Int hook_content_count(const Partition& shape, int alphabet) {
    Partition conj = shape.conjugate();
    Int num = 1, den = 1;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            int hook = (shape.part(r) - c) + (conj.part(c) - r) + 1;
            num *= Int(alphabet + c - r);
            den *= Int(hook);
        }
    if (num % den != 0) throw std::logic_error("hook content product is not integral");
    return num / den;
}

} // namespace uqmn
