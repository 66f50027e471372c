#include "ageal/polynomials.hpp"

#include <algorithm>

#include "ageal/errors.hpp"

namespace ageal {

bool monomial_greater(const Monomial& a, const Monomial& b, TermOrder order) {
    if (a.size() != b.size()) throw input_error("monomials of different variable counts are not comparable");
    long da = 0, db = 0;
    if (order != TermOrder::lex) {
        for (long e : a) da += e;
        for (long e : b) db += e;
        if (da != db) return da > db;
    }
    if (order == TermOrder::degrevlex) {
        // larger = smaller exponent on the last variable where they differ
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void poly_add_scaled(Polynomial& into, const Polynomial& p, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [m, c] : p) {
        Rat& slot = into[m];
        slot += c * scale;
        if (slot == 0) into.erase(m);
    }
}

Polynomial poly_product(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            if (ma.size() != mb.size()) throw input_error("polynomial product over mismatched variables");
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            Rat& slot = out[m];
            slot += ca * cb;
            if (slot == 0) out.erase(m);
        }
    return out;
}

Monomial poly_leading_monomial(const Polynomial& p, TermOrder order) {
    if (p.empty()) throw input_error("zero polynomial has no leading monomial");
    auto it = p.begin();
    Monomial best = it->first;
    for (++it; it != p.end(); ++it)
        if (monomial_greater(it->first, best, order)) best = it->first;
    return best;
}

bool SpanBasis::insert(Polynomial p) {
    while (!p.empty()) {
        Monomial lead = poly_leading_monomial(p, cmp_.order);
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            Rat inv = Rat(1) / p.at(lead);
            Polynomial monic;
            for (const auto& [m, c] : p) monic.emplace(m, c * inv);
            rows_.emplace(std::move(lead), std::move(monic));
            return true;
        }
        poly_add_scaled(p, it->second, -p.at(lead));
    }
    return false;
}

std::vector<Monomial> SpanBasis::pivot_monomials() const {
    std::vector<Monomial> out;
    out.reserve(rows_.size());
    for (const auto& [m, row] : rows_) out.push_back(m);
    return out;
}

int rank_of(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    Int prev(1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}
