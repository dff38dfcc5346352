#include "pathideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "pathideal/bigint.hpp"

namespace pathideal {

namespace {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int rank_exact(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    BigInt prev = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

// Reduced homology dimensions of the complex whose faces are the given
// masks (the empty face included). Entry k of the result is
// dim H~_{k-1}. `max_card` bounds the face cardinalities considered.
std::vector<long long> homology_of_faces(const std::vector<unsigned>& face_masks, int max_card) {
    // bucket faces by cardinality
    std::vector<std::vector<unsigned>> by_card(static_cast<size_t>(max_card) + 1);
    for (unsigned f : face_masks) by_card[static_cast<size_t>(std::popcount(f))].push_back(f);
    for (auto& bucket : by_card) std::sort(bucket.begin(), bucket.end());

    // boundary ranks: boundary_rank[c] is the rank of the map from
    // cardinality-c faces to cardinality-(c-1) faces
    std::vector<int> boundary_rank(static_cast<size_t>(max_card) + 2, 0);
    for (int c = 1; c <= max_card; ++c) {
        const auto& src = by_card[static_cast<size_t>(c)];
        const auto& dst = by_card[static_cast<size_t>(c - 1)];
        if (src.empty() || dst.empty()) continue;
        std::vector<std::vector<BigInt>> mat(src.size(),
                                             std::vector<BigInt>(dst.size(), BigInt(0)));
        for (size_t j = 0; j < src.size(); ++j) {
            unsigned face = src[j];
            int sign = 1;
            for (unsigned bits = face; bits; bits &= bits - 1) {
                unsigned low = bits & (~bits + 1);
                unsigned sub = face ^ low;
                auto it = std::lower_bound(dst.begin(), dst.end(), sub);
                if (it != dst.end() && *it == sub)
                    mat[j][static_cast<size_t>(it - dst.begin())] = sign;
                sign = -sign;
            }
        }
        boundary_rank[static_cast<size_t>(c)] = rank_exact(std::move(mat));
    }

    // H~_{c-1} = #faces of cardinality c - rank d_c - rank d_{c+1}
    std::vector<long long> dims(static_cast<size_t>(max_card) + 1, 0);
    for (int c = 0; c <= max_card; ++c) {
        long long value = static_cast<long long>(by_card[static_cast<size_t>(c)].size()) -
                          boundary_rank[static_cast<size_t>(c)] -
                          boundary_rank[static_cast<size_t>(c) + 1];
        dims[static_cast<size_t>(c)] = value;
    }
    return dims;
}

}  // namespace

long long BettiTable::value(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, v] : entries)
        if (v != 0) pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::quotient_regularity() const {
    int reg = 0;
    for (const auto& [key, v] : entries)
        if (v != 0) reg = std::max(reg, key.second - key.first);
    return reg;
}

std::string BettiTable::markdown() const {
    int pd = projective_dimension();
    int reg = quotient_regularity();
    std::ostringstream os;
    os << "|       |";
    for (int i = 0; i <= pd; ++i) os << " " << i << " |";
    os << "\n|-------|";
    for (int i = 0; i <= pd; ++i) os << "---|";
    os << "\n| total |";
    for (int i = 0; i <= pd; ++i) {
        long long total = 0;
        for (const auto& [key, v] : entries)
            if (key.first == i) total += v;
        os << " " << total << " |";
    }
    os << "\n";
    for (int d = 0; d <= reg; ++d) {
        os << "| " << d << " |";
        for (int i = 0; i <= pd; ++i) {
            long long v = value(i, i + d);
            if (v == 0)
                os << " . |";
            else
                os << " " << v << " |";
        }
        os << "\n";
    }
    return os.str();
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("stanley_reisner_complex: ideal is not squarefree");
    if (ideal.is_unit())
        throw std::invalid_argument("stanley_reisner_complex: unit ideal has no complex");
    int n = ideal.ambient();
    if (n > 20)
        throw std::invalid_argument("stanley_reisner_complex: face scan capped at 20 variables");
    std::vector<unsigned> gen_masks;
    for (const auto& g : ideal.generators()) {
        unsigned m = 0;
        for (int v : g.support()) m |= 1u << (v - 1);
        gen_masks.push_back(m);
    }
    auto is_face = [&](unsigned mask) {
        for (unsigned g : gen_masks)
            if ((g & mask) == g) return false;
        return true;
    };
    // faces that stay maximal under single-vertex extensions
    std::vector<std::vector<int>> facets;
    unsigned full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (!is_face(mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask & (1u << v)) && is_face(mask | (1u << v))) maximal = false;
        if (!maximal) continue;
        std::vector<int> facet;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) facet.push_back(v + 1);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty())
        throw std::invalid_argument(
            "stanley_reisner_complex: every vertex is a generator; the complex is the empty "
            "face only");
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const std::vector<int>& sigma) {
    unsigned sigma_mask = 0;
    for (int v : sigma) {
        if (v < 1 || v > complex.vertex_count())
            throw std::invalid_argument("reduced_homology_dims: vertex out of range");
        sigma_mask |= 1u << (v - 1);
    }
    const auto& facets = complex.facet_masks();
    std::vector<unsigned> faces;
    // enumerate subsets of sigma contained in some facet
    unsigned sub = sigma_mask;
    while (true) {
        for (unsigned f : facets)
            if ((sub & f) == sub) {
                faces.push_back(sub);
                break;
            }
        if (sub == 0) break;
        sub = (sub - 1) & sigma_mask;
    }
    return homology_of_faces(faces, std::popcount(sigma_mask));
}

BettiTable betti_table(const MonomialIdeal& ideal) {
    int n = ideal.ambient();
    if (n > 12)
        throw std::invalid_argument("betti_table: restriction scan capped at 12 variables, got " +
                                    std::to_string(n));
    if (!ideal.is_squarefree())
        throw std::invalid_argument("betti_table: ideal is not squarefree");
    if (ideal.is_unit()) throw std::invalid_argument("betti_table: unit ideal (S/I is zero)");

    std::vector<unsigned> gen_masks;
    for (const auto& g : ideal.generators()) {
        unsigned m = 0;
        for (int v : g.support()) m |= 1u << (v - 1);
        gen_masks.push_back(m);
    }
    unsigned full = (1u << n) - 1;
    std::vector<char> is_face(static_cast<size_t>(full) + 1, 1);
    for (unsigned mask = 0; mask <= full; ++mask)
        for (unsigned g : gen_masks)
            if ((g & mask) == g) {
                is_face[mask] = 0;
                break;
            }

    BettiTable table;
    table.entries[{0, 0}] = 1;  // sigma empty: H~_{-1} of the empty-face complex
    for (unsigned sigma = 1; sigma <= full; ++sigma) {
        if (is_face[sigma]) continue;  // simplex restriction, acyclic
        int card = std::popcount(sigma);
        // collect the faces inside sigma
        std::vector<unsigned> faces;
        unsigned sub = sigma;
        while (true) {
            if (is_face[sub]) faces.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & sigma;
        }
        // skip cones: a vertex lying in every face extension
        bool cone = false;
        for (unsigned bits = sigma; bits && !cone; bits &= bits - 1) {
            unsigned v = bits & (~bits + 1);
            bool cone_point = true;
            for (unsigned f : faces)
                if (!is_face[f | v]) {
                    cone_point = false;
                    break;
                }
            if (cone_point) cone = true;
        }
        if (cone) continue;
        std::vector<long long> dims = homology_of_faces(faces, card);
        for (int c = 0; c <= card; ++c) {
            long long d = dims[static_cast<size_t>(c)];
            if (d == 0) continue;
            // homological degree c-1 contributes to beta_{card-c, card}
            table.entries[{card - c, card}] += d;
        }
    }
    // drop explicit zeros
    for (auto it = table.entries.begin(); it != table.entries.end();)
        it = it->second == 0 ? table.entries.erase(it) : std::next(it);
    return table;
}

int projective_dimension(const MonomialIdeal& ideal) {
    return betti_table(ideal).projective_dimension();
}

int regularity(const MonomialIdeal& ideal) {
    BettiTable table = betti_table(ideal);
    int reg = 0;
    bool seen = false;
    for (const auto& [key, v] : table.entries) {
        if (v == 0 || key.first < 1) continue;
        reg = seen ? std::max(reg, key.second - key.first + 1) : key.second - key.first + 1;
        seen = true;
    }
    if (!seen) throw std::invalid_argument("regularity: zero ideal has no generators");
    return reg;
}

int pd_formula_value(int n, int t) {
    int p = n / (t + 1), q = n % (t + 1);
    return q == t ? 2 * p + 1 : 2 * p;
}

}  // namespace pathideal
