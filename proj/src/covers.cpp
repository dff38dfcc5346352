#include "pathideal/covers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pathideal {

namespace {

std::vector<int> mask_to_set(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i + 1);
    return out;
}

// Drop every mask that strictly contains another mask of the list; dedup.
std::vector<unsigned> inclusion_minimal(std::vector<unsigned> masks) {
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<unsigned> kept;
    for (unsigned m : masks) {
        bool dominated = false;
        for (unsigned k : kept) {
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(m);
    }
    return kept;
}

CoverFamily family_from_masks(int ambient, const std::vector<unsigned>& masks) {
    CoverFamily fam;
    fam.ambient = ambient;
    fam.covers.reserve(masks.size());
    for (unsigned m : masks) fam.covers.emplace_back(ambient, mask_to_set(m));
    std::sort(fam.covers.begin(), fam.covers.end());
    return fam;
}

}  // namespace

std::string CoverFamily::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < covers.size(); ++i) {
        if (i) os << ", ";
        os << covers[i].str();
    }
    os << "]";
    return os.str();
}

CoverFamily make_cover_family(int ambient, std::vector<std::vector<int>> sets) {
    CoverFamily fam;
    fam.ambient = ambient;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        fam.covers.emplace_back(ambient, s);
    }
    std::sort(fam.covers.begin(), fam.covers.end());
    fam.covers.erase(std::unique(fam.covers.begin(), fam.covers.end()), fam.covers.end());
    return fam;
}

CoverFamily minimal_covers(const SimplicialComplex& complex) {
    if (complex.facet_count() == 0)
        throw std::invalid_argument("minimal_covers: complex has no facets");
    const auto& facets = complex.facet_masks();
    for (unsigned f : facets)
        if (f == 0) throw std::invalid_argument("minimal_covers: empty facet");
    // Berge expansion: partial covers of the first k facets, minimalized
    // after each extension step.
    std::vector<unsigned> partial;
    for (int v = 0; v < complex.vertex_count(); ++v)
        if (facets[0] & (1u << v)) partial.push_back(1u << v);
    for (size_t k = 1; k < facets.size(); ++k) {
        std::vector<unsigned> next;
        next.reserve(partial.size() * 2);
        for (unsigned cover : partial) {
            if (cover & facets[k]) {
                next.push_back(cover);
                continue;
            }
            unsigned rest = facets[k];
            while (rest) {
                unsigned low = rest & (~rest + 1);
                next.push_back(cover | low);
                rest ^= low;
            }
        }
        partial = inclusion_minimal(std::move(next));
    }
    return family_from_masks(complex.vertex_count(), partial);
}

CoverFamily minimal_covers_bruteforce(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    if (n > 22)
        throw std::invalid_argument("minimal_covers_bruteforce: subset scan capped at n = 22");
    const auto& facets = complex.facet_masks();
    auto is_cover = [&](unsigned mask) {
        for (unsigned f : facets)
            if ((mask & f) == 0) return false;
        return true;
    };
    std::vector<unsigned> covers;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!is_cover(mask)) continue;
        bool minimal = true;
        for (unsigned bits = mask; bits && minimal; bits &= bits - 1) {
            unsigned without = mask ^ (bits & (~bits + 1));
            if (is_cover(without)) minimal = false;
        }
        if (minimal) covers.push_back(mask);
    }
    return family_from_masks(n, covers);
}

bool cnt_member(const std::vector<int>& subset, int n, int t) {
    if (subset.empty()) return false;
    std::vector<int> f = subset;
    std::sort(f.begin(), f.end());
    int r = static_cast<int>(f.size());
    for (int v : f)
        if (v < 1 || v > n) return false;
    if (!(1 <= f[0] && f[0] <= t)) return false;                               // (1)
    if (r >= 2 && !(f[1] > t)) return false;                                   // (2)
    for (int j = 0; j + 1 < r; ++j)                                            // (3)
        if (!(1 <= f[j + 1] - f[j] && f[j + 1] - f[j] <= t)) return false;
    for (int j = 0; j + 2 < r; ++j)                                            // (4)
        if (!(f[j + 2] - f[j] > t)) return false;
    if (r >= 2 && !(f[r - 2] < n - t + 1)) return false;                       // (5)
    if (!(n - t + 1 <= f[r - 1] && f[r - 1] <= n)) return false;               // (6)
    return true;
}

CoverFamily cnt_family(int n, int t) {
    if (t < 1 || t > n) throw std::invalid_argument("cnt_family: need 1 <= t <= n");
    if (n > 22) throw std::invalid_argument("cnt_family: subset scan capped at n = 22");
    std::vector<std::vector<int>> members;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> f = mask_to_set(mask);
        if (cnt_member(f, n, t)) members.push_back(std::move(f));
    }
    return make_cover_family(n, std::move(members));
}

bool verify_theorem_minimal_primes(int n, int t) {
    return minimal_covers(facet_complex(n, t)) == cnt_family(n, t);
}

int height(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("height: zero ideal");
    if (ideal.is_unit()) throw std::invalid_argument("height: unit ideal");
    CoverFamily covers = minimal_covers(support_complex(ideal.radical()));
    int best = ideal.ambient();
    for (const auto& c : covers.covers) best = std::min(best, c.size());
    return best;
}

int m_grade(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("m_grade: zero ideal");
    if (ideal.is_unit()) throw std::invalid_argument("m_grade: unit ideal");
    const auto& gens = ideal.generators();
    std::vector<unsigned long long> supp;
    supp.reserve(gens.size());
    for (const auto& g : gens) {
        unsigned long long m = 0;
        for (int v : g.support()) m |= 1ull << (v - 1);
        supp.push_back(m);
    }
    int best = 0;
    // exhaustive search for the largest pairwise-disjoint subfamily
    std::function<void(size_t, unsigned long long, int)> extend = [&](size_t from,
                                                                      unsigned long long used,
                                                                      int count) {
        best = std::max(best, count);
        if (count + static_cast<int>(supp.size() - from) <= best) return;
        for (size_t i = from; i < supp.size(); ++i)
            if ((supp[i] & used) == 0) extend(i + 1, used | supp[i], count + 1);
    };
    extend(0, 0, 0);
    return best;
}

std::vector<std::vector<int>> enumerate_T(int a, int t) {
    if (a < 1 || t < 1) throw std::invalid_argument("enumerate_T: need a >= 1 and t >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<size_t>(a));
    std::function<void(int)> rec = [&](int j) {
        if (j == a) {
            out.push_back(seq);
            return;
        }
        int lo = j * t + 1;  // (j)t + 1 with 0-based j: ((j+1)-1)t + 1
        int hi = (j + 1) * t;
        if (j > 0) {
            lo = std::max(lo, seq[static_cast<size_t>(j - 1)] + 1);
            hi = std::min(hi, seq[static_cast<size_t>(j - 1)] + t);
        }
        for (int v = lo; v <= hi; ++v) {
            seq[static_cast<size_t>(j)] = v;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_X(int n, int t) {
    if (t < 1 || n < t) throw std::invalid_argument("enumerate_X: need 1 <= t <= n");
    int a = n / t, b = n % t;
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<size_t>(a));
    std::function<void(int)> rec = [&](int j) {
        if (j == a) {
            out.push_back(seq);
            return;
        }
        int lo = j * t + b + 1;
        int hi = (j + 1) * t;
        if (j > 0) {
            lo = std::max(lo, seq[static_cast<size_t>(j - 1)] + 1);
            hi = std::min(hi, seq[static_cast<size_t>(j - 1)] + t);
        }
        for (int v = lo; v <= hi; ++v) {
            seq[static_cast<size_t>(j)] = v;
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> shift_by_position(const std::vector<int>& seq) {
    std::vector<int> out(seq.size());
    for (size_t j = 0; j < seq.size(); ++j) out[j] = seq[j] - static_cast<int>(j + 1);
    return out;
}

std::vector<int> shift_by_step(const std::vector<int>& seq, int b) {
    std::vector<int> out(seq.size());
    for (size_t j = 0; j < seq.size(); ++j) out[j] = seq[j] - b * static_cast<int>(j + 1);
    return out;
}

int tau_statistic(const std::vector<int>& seq, int t) {
    for (size_t j = 0; j < seq.size(); ++j)
        if (seq[j] == static_cast<int>(j) * t + 1) return static_cast<int>(j + 1);
    return static_cast<int>(seq.size()) + 1;
}

CoverFamily min_height_primes(int n, int t) {
    CoverFamily all = minimal_covers(facet_complex(n, t));
    int h = n;
    for (const auto& c : all.covers) h = std::min(h, c.size());
    CoverFamily out;
    out.ambient = n;
    for (const auto& c : all.covers)
        if (c.size() == h) out.covers.push_back(c);
    return out;
}

BigInt multiplicity_squarefree(int n, int t) {
    return BigInt(min_height_primes(n, t).size());
}

}  // namespace pathideal
