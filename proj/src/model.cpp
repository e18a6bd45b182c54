#include "primsplit/model.hpp"

#include <stdexcept>

namespace primsplit {

std::size_t CohomologyModel::total_dim() const {
    std::size_t t = 0;
    for (std::size_t bk : betti) t += bk;
    return t;
}

Matrix CohomologyModel::lefschetz_block(std::size_t k) const {
    if (k + 2 > top()) return Matrix(0, b(k));
    return lefschetz[k];
}

const Matrix& CohomologyModel::pairing_block(std::size_t k) const { return pairing[k]; }

Matrix CohomologyModel::lefschetz_power(std::size_t k, std::size_t j) const {
    if (k + 2 * j > top()) return Matrix(0, b(k));
    Matrix acc = Matrix::identity(b(k));
    for (std::size_t s = 0; s < j; ++s) acc = lefschetz_block(k + 2 * s) * acc;
    return acc;
}

bool GradedMap::is_zero() const {
    for (const auto& blk : blocks)
        if (!blk.is_zero()) return false;
    return true;
}

GradedMap identity_map(const CohomologyModel& m) {
    GradedMap id;
    id.shift = 0;
    id.target_betti = m.betti;
    id.blocks.reserve(m.top() + 1);
    for (std::size_t k = 0; k <= m.top(); ++k) id.blocks.push_back(Matrix::identity(m.b(k)));
    return id;
}

GradedMap zero_map(const CohomologyModel& source, const CohomologyModel& target, int shift) {
    GradedMap z;
    z.shift = shift;
    z.target_betti = target.betti;
    for (std::size_t k = 0; k <= source.top(); ++k)
        z.blocks.emplace_back(z.target_b(static_cast<long>(k) + shift), source.b(k));
    return z;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    GradedMap h;
    h.shift = g.shift + f.shift;
    h.target_betti = g.target_betti;
    h.blocks.reserve(f.blocks.size());
    for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        const Matrix& fk = f.blocks[k];
        const long mid = static_cast<long>(k) + f.shift;
        if (mid < 0 || mid >= static_cast<long>(g.blocks.size())) {
            // f led out of the grading: composite is the zero map into the
            // h-target degree (which may itself be the zero space)
            h.blocks.emplace_back(h.target_b(static_cast<long>(k) + h.shift), fk.cols());
            continue;
        }
        h.blocks.push_back(g.blocks[static_cast<std::size_t>(mid)] * fk);
    }
    return h;
}

GradedMap map_add(const GradedMap& a, const GradedMap& b) {
    if (a.shift != b.shift || a.blocks.size() != b.blocks.size() || a.target_betti != b.target_betti)
        throw std::invalid_argument("map_add: incompatible maps");
    GradedMap c;
    c.shift = a.shift;
    c.target_betti = a.target_betti;
    for (std::size_t k = 0; k < a.blocks.size(); ++k) c.blocks.push_back(a.blocks[k] + b.blocks[k]);
    return c;
}

GradedMap map_sub(const GradedMap& a, const GradedMap& b) {
    if (a.shift != b.shift || a.blocks.size() != b.blocks.size() || a.target_betti != b.target_betti)
        throw std::invalid_argument("map_sub: incompatible maps");
    GradedMap c;
    c.shift = a.shift;
    c.target_betti = a.target_betti;
    for (std::size_t k = 0; k < a.blocks.size(); ++k) c.blocks.push_back(a.blocks[k] - b.blocks[k]);
    return c;
}

GradedMap map_scale(const Rational& s, const GradedMap& a) {
    GradedMap c;
    c.shift = a.shift;
    c.target_betti = a.target_betti;
    for (const auto& blk : a.blocks) c.blocks.push_back(s * blk);
    return c;
}

bool is_idempotent(const GradedMap& p) {
    if (p.shift != 0) return false;
    return compose(p, p) == p;
}

std::size_t map_rank(const GradedMap& p, std::size_t degree) {
    return degree < p.blocks.size() ? rank(p.blocks[degree]) : 0;
}

GradedMap lefschetz_map(const CohomologyModel& m) {
    GradedMap l;
    l.shift = 2;
    l.target_betti = m.betti;
    for (std::size_t k = 0; k <= m.top(); ++k) l.blocks.push_back(m.lefschetz_block(k));
    return l;
}

GradedMap map_power_shifted(const GradedMap& f, std::size_t j, const CohomologyModel& m) {
    GradedMap acc = identity_map(m);
    for (std::size_t s = 0; s < j; ++s) acc = compose(f, acc);
    return acc;
}

Report validate_model(const CohomologyModel& m) {
    Report rep;
    rep.subject = "validate model '" + m.name + "'";
    const std::size_t top = 2 * m.dim;

    if (m.betti.size() != top + 1) {
        rep.add("betti length", false,
                "expected " + std::to_string(top + 1) + " entries, got " + std::to_string(m.betti.size()));
        return rep;
    }
    rep.add("b_0 = 1", m.b(0) == 1, "b_0 = " + std::to_string(m.b(0)));
    rep.add("b_top = 1", m.b(top) == 1, "b_" + std::to_string(top) + " = " + std::to_string(m.b(top)));
    bool symmetric = true;
    for (std::size_t k = 0; k <= top; ++k)
        if (m.b(k) != m.b(top - k)) {
            symmetric = false;
            rep.add("betti duality", false,
                    "b_" + std::to_string(k) + " != b_" + std::to_string(top - k));
        }
    if (symmetric) rep.add("betti duality", true);

    if (m.pairing.size() != top + 1) {
        rep.add("pairing blocks present", false, "expected one block per degree");
        return rep;
    }
    const std::size_t expected_lef = top >= 2 ? top - 1 : 0;
    if (m.lefschetz.size() != expected_lef) {
        rep.add("lefschetz blocks present", false,
                "expected " + std::to_string(expected_lef) + " blocks, got " + std::to_string(m.lefschetz.size()));
        return rep;
    }

    for (std::size_t k = 0; k <= top; ++k) {
        const Matrix& p = m.pairing[k];
        if (p.rows() != m.b(k) || p.cols() != m.b(top - k)) {
            rep.add("pairing shape degree " + std::to_string(k), false,
                    std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
            continue;
        }
        if (m.b(k) == 0) continue;
        rep.add("pairing perfect degree " + std::to_string(k), rank(p) == m.b(k),
                "rank " + std::to_string(rank(p)) + " of " + std::to_string(m.b(k)));
    }

    for (std::size_t k = 0; k + 2 <= top; ++k) {
        const Matrix& l = m.lefschetz[k];
        if (l.rows() != m.b(k + 2) || l.cols() != m.b(k)) {
            rep.add("lefschetz shape degree " + std::to_string(k), false,
                    std::to_string(l.rows()) + "x" + std::to_string(l.cols()));
        }
    }
    if (!rep.passed()) return rep; // shape errors make the remaining checks meaningless

    // <L x, y> = <x, L y> for x in H^k, y in H^{2n-k-2}:
    // L_k^T P_{k+2} = P_k L_{2n-k-2} as b_k x b_{2n-k-2} matrices.
    for (std::size_t k = 0; k + 2 <= top; ++k) {
        const std::size_t kc = top - k - 2;
        if (m.b(k) == 0 || m.b(kc) == 0) continue;
        const Matrix lhs = m.lefschetz[k].transposed() * m.pairing[k + 2];
        const Matrix rhs = m.pairing[k] * m.lefschetz[kc];
        rep.add("L self-adjoint degree " + std::to_string(k), lhs == rhs);
    }
    return rep;
}

Report verify_hard_lefschetz(const CohomologyModel& m) {
    Report rep;
    rep.subject = "hard Lefschetz for '" + m.name + "'";
    const std::size_t n = m.dim;
    for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t k = n - j;
        const std::size_t expected = m.b(k);
        if (expected != m.b(n + j)) {
            rep.add("L^" + std::to_string(j), false, "betti mismatch across the middle");
            continue;
        }
        if (expected == 0) continue;
        const Matrix pw = m.lefschetz_power(k, j);
        const std::size_t r = rank(pw);
        rep.add("L^" + std::to_string(j) + " iso H^" + std::to_string(k) + " -> H^" + std::to_string(n + j),
                r == expected, "rank " + std::to_string(r) + " expected " + std::to_string(expected));
    }
    return rep;
}

} // namespace primsplit
