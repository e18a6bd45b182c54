#include "primsplit/generators.hpp"

#include "primsplit/randmat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace primsplit {

CohomologyModel gen_projective_space_scaled(std::size_t n, const Rational& pairing_scale) {
    if (pairing_scale.is_zero()) throw std::invalid_argument("pairing scale must be nonzero");
    CohomologyModel m;
    m.name = "P" + std::to_string(n);
    if (!pairing_scale.is_one()) m.name += "[pairing*" + pairing_scale.str() + "]";
    m.dim = n;
    const std::size_t top = 2 * n;
    m.betti.assign(top + 1, 0);
    for (std::size_t k = 0; k <= top; k += 2) m.betti[k] = 1;
    m.pairing.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        m.pairing[k] = Matrix(m.b(k), m.b(top - k));
        if (m.b(k) == 1) m.pairing[k].at(0, 0) = pairing_scale;
    }
    if (top >= 2) {
        m.lefschetz.resize(top - 1);
        for (std::size_t k = 0; k + 2 <= top; ++k) {
            m.lefschetz[k] = Matrix(m.b(k + 2), m.b(k));
            if (m.b(k) == 1) m.lefschetz[k].at(0, 0) = Rational(1);
        }
    }
    return m;
}

CohomologyModel gen_projective_space(std::size_t n) {
    return gen_projective_space_scaled(n, Rational(1));
}

namespace {

// Shared layout for the two ruled-surface models (P^1 x P^1 and the quadric).
CohomologyModel ruled_surface(const std::string& name) {
    CohomologyModel m;
    m.name = name;
    m.dim = 2;
    m.betti = {1, 0, 2, 0, 1};
    m.pairing.resize(5);
    m.pairing[0] = Matrix{{1}};
    m.pairing[1] = Matrix(0, 0);
    m.pairing[2] = Matrix{{0, 1}, {1, 0}};
    m.pairing[3] = Matrix(0, 0);
    m.pairing[4] = Matrix{{1}};
    m.lefschetz.resize(3);
    m.lefschetz[0] = Matrix{{1}, {1}};   // 1 -> e + f
    m.lefschetz[1] = Matrix(0, 0);
    m.lefschetz[2] = Matrix{{1, 1}};     // x -> <h, x> vol
    return m;
}

} // namespace

CohomologyModel gen_product_p1p1() { return ruled_surface("P1xP1"); }

CohomologyModel gen_hypersurface_p3(std::size_t d) {
    if (d < 1) throw std::invalid_argument("gen_hypersurface_p3: degree must be >= 1");
    if (d == 2) return ruled_surface("quadric-p3");
    // b_2 from the topological Euler characteristic d^3 - 4d^2 + 6d minus
    // the two classes in degrees 0 and 4.
    const std::size_t b2 = d * d * d - 4 * d * d + 6 * d - 2;
    CohomologyModel m;
    m.name = "hypersurface-p3-d" + std::to_string(d);
    m.dim = 2;
    m.betti = {1, 0, b2, 0, 1};
    m.pairing.resize(5);
    m.pairing[0] = Matrix{{1}};
    m.pairing[1] = Matrix(0, 0);
    Matrix p2(b2, b2);
    p2.at(0, 0) = Rational(static_cast<long>(d));        // h.h = d
    for (std::size_t i = 1; i < b2; ++i) p2.at(i, i) = Rational(-1);
    m.pairing[2] = std::move(p2);
    m.pairing[3] = Matrix(0, 0);
    m.pairing[4] = Matrix{{1}};
    m.lefschetz.resize(3);
    Matrix l0(b2, 1);
    l0.at(0, 0) = Rational(1);                           // 1 -> h
    m.lefschetz[0] = std::move(l0);
    m.lefschetz[1] = Matrix(0, 0);
    Matrix l2(1, b2);
    l2.at(0, 0) = Rational(static_cast<long>(d));        // x -> <h, x> vol
    m.lefschetz[2] = std::move(l2);
    return m;
}

std::vector<std::size_t> jordan_profile_from_seed(std::uint64_t seed, std::size_t max_total) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> max_len_pick(1, 4); // max length 3..9
    std::vector<std::size_t> lengths;
    const std::size_t max_len = 2 * max_len_pick(rng) + 1;
    lengths.push_back(max_len);
    std::size_t total = max_len;
    std::uniform_int_distribution<std::size_t> extra_pick(0, (max_len - 3) / 2); // strictly shorter
    std::uniform_int_distribution<int> more(0, 3);
    while (total < max_total && more(rng) != 0) {
        const std::size_t len = 2 * extra_pick(rng) + 1;
        if (total + len > max_total) break;
        lengths.push_back(len);
        total += len;
    }
    return lengths;
}

JordanModel gen_jordan_strings(std::uint64_t seed, const std::vector<std::size_t>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("gen_jordan_strings: empty profile");
    std::size_t max_len = 0;
    for (std::size_t len : lengths) {
        if (len % 2 == 0) throw std::invalid_argument("gen_jordan_strings: string lengths must be odd");
        max_len = std::max(max_len, len);
    }
    if (std::count(lengths.begin(), lengths.end(), max_len) != 1)
        throw std::invalid_argument("gen_jordan_strings: the maximal string must be unique");

    const std::size_t n = max_len - 1; // level of the maximal string
    const std::size_t top = 2 * n;

    // Position bookkeeping: vector m of string s sits in degree n - j_s + 2m.
    struct Slot {
        std::size_t string, m;
    };
    std::vector<std::vector<Slot>> slots(top + 1);
    std::vector<std::size_t> level(lengths.size());
    for (std::size_t s = 0; s < lengths.size(); ++s) {
        level[s] = lengths[s] - 1;
        for (std::size_t m = 0; m <= level[s]; ++m)
            slots[n - level[s] + 2 * m].push_back({s, m});
    }

    CohomologyModel model;
    model.name = "jordan-strings-seed" + std::to_string(seed);
    model.dim = n;
    model.betti.assign(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) model.betti[k] = slots[k].size();

    auto index_of = [&](std::size_t k, std::size_t s, std::size_t m) -> std::size_t {
        for (std::size_t i = 0; i < slots[k].size(); ++i)
            if (slots[k][i].string == s && slots[k][i].m == m) return i;
        throw InternalError("jordan slot lookup failed");
    };

    // L in the string basis: v_{s,m} -> v_{s,m+1} while the string lasts.
    model.lefschetz.resize(top >= 2 ? top - 1 : 0);
    for (std::size_t k = 0; k + 2 <= top; ++k) {
        Matrix l(model.b(k + 2), model.b(k));
        for (std::size_t i = 0; i < slots[k].size(); ++i) {
            const Slot sl = slots[k][i];
            if (sl.m + 1 <= level[sl.string])
                l.at(index_of(k + 2, sl.string, sl.m + 1), i) = Rational(1);
        }
        model.lefschetz[k] = std::move(l);
    }
    // Pairing: <v_{s,m}, v_{t,m'}> = 1 iff s = t and m + m' = level.
    model.pairing.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        Matrix p(model.b(k), model.b(top - k));
        for (std::size_t i = 0; i < slots[k].size(); ++i) {
            const Slot sl = slots[k][i];
            const std::size_t mirror = level[sl.string] - sl.m;
            p.at(i, index_of(top - k, sl.string, mirror)) = Rational(1);
        }
        model.pairing[k] = std::move(p);
    }

    JordanModel out;
    out.primitive_rank.assign(top + 1, 0);
    for (std::size_t s = 0; s < lengths.size(); ++s) out.primitive_rank[n - level[s]] += 1;

    // Conjugate by a seeded unimodular change of coordinates in each degree.
    std::mt19937_64 rng(seed);
    std::vector<Matrix> g(top + 1), g_inv(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        g[k] = random_unimodular(rng, model.b(k));
        g_inv[k] = *inverse(g[k]);
    }
    for (std::size_t k = 0; k + 2 <= top; ++k)
        model.lefschetz[k] = g[k + 2] * model.lefschetz[k] * g_inv[k];
    for (std::size_t k = 0; k <= top; ++k)
        model.pairing[k] = g_inv[k].transposed() * model.pairing[k] * g_inv[top - k];

    out.model = std::move(model);
    return out;
}

EmbeddingModel gen_ci_embedding(std::size_t d) {
    if (d < 2) throw std::invalid_argument("gen_ci_embedding: degree must be >= 2");
    EmbeddingModel e;
    e.ambient = gen_projective_space_scaled(3, Rational(static_cast<long>(d)));
    e.sub = gen_hypersurface_p3(d);
    e.codim = 1;
    const std::size_t b2 = e.sub.b(2);

    // i^*: restriction; h -> h|X, h^2 -> (h|X)^2 = d vol.
    GradedMap pull;
    pull.shift = 0;
    pull.target_betti = e.sub.betti;
    pull.blocks.resize(7);
    pull.blocks[0] = Matrix{{1}};
    pull.blocks[1] = Matrix(0, 0);
    Matrix p2(b2, 1);
    if (d == 2) {
        p2.at(0, 0) = Rational(1); // h|X = e + f on the quadric
        p2.at(1, 0) = Rational(1);
    } else {
        p2.at(0, 0) = Rational(1);
    }
    pull.blocks[2] = std::move(p2);
    pull.blocks[3] = Matrix(0, 0);
    pull.blocks[4] = Matrix{{static_cast<long>(d)}};
    pull.blocks[5] = Matrix(0, 0);
    pull.blocks[6] = Matrix(0, 1);
    e.pullback = std::move(pull);

    // i_*: fixed by adjunction against the scaled ambient pairing; the
    // degree-2 row solves d * row = L_X's top block.
    GradedMap push;
    push.shift = 2;
    push.target_betti = e.ambient.betti;
    push.blocks.resize(5);
    push.blocks[0] = Matrix{{1}};
    push.blocks[1] = Matrix(0, 0);
    Matrix q2(1, b2);
    if (d == 2) {
        q2.at(0, 0) = Rational(1, 2);
        q2.at(0, 1) = Rational(1, 2);
    } else {
        q2.at(0, 0) = Rational(1);
    }
    push.blocks[2] = std::move(q2);
    push.blocks[3] = Matrix(0, 0);
    Matrix q4(1, 1);
    q4.at(0, 0) = Rational(1, static_cast<long>(d));
    push.blocks[4] = std::move(q4);
    e.pushforward = std::move(push);
    return e;
}

} // namespace primsplit
