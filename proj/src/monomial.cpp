#include "evolalg/monomial.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <ostream>
#include <set>

#include "evolalg/io.hpp"

namespace evolalg {

MonomialMap MonomialMap::identity(int n, const Field& f) {
    return MonomialMap{identity_perm(n), std::vector<Scalar>(n, Scalar::one(f))};
}

MonomialMap MonomialMap::make(Perm perm, std::vector<Scalar> scales) {
    if (perm.size() != scales.size())
        throw ValidationError("SizeMismatch: permutation and scale vector lengths differ");
    if (!is_permutation(perm))
        throw ValidationError("NotAPermutation: bad image list");
    for (const Scalar& s : scales)
        if (s.is_zero()) throw ValidationError("ZeroScale: monomial scales must be nonzero");
    return MonomialMap{std::move(perm), std::move(scales)};
}

bool MonomialMap::is_identity() const {
    return is_identity_perm(perm) && scales_all_one();
}

bool MonomialMap::scales_all_one() const {
    return std::all_of(scales.begin(), scales.end(), [](const Scalar& s) { return s.is_one(); });
}

MonomialMap MonomialMap::after(const MonomialMap& inner) const {
    if (size() != inner.size())
        throw ValidationError("SizeMismatch: monomial map sizes differ");
    Perm p = compose_perm(perm, inner.perm);
    std::vector<Scalar> s;
    s.reserve(scales.size());
    for (int i = 0; i < size(); ++i) s.push_back(inner.scales[i] * scales[inner.perm[i]]);
    return MonomialMap{std::move(p), std::move(s)};
}

MonomialMap MonomialMap::inverse() const {
    Perm p = inverse_perm(perm);
    std::vector<Scalar> s;
    s.reserve(scales.size());
    for (int j = 0; j < size(); ++j) s.push_back(scales[p[j]].inverse());
    return MonomialMap{std::move(p), std::move(s)};
}

bool MonomialMap::operator<(const MonomialMap& rhs) const {
    if (perm != rhs.perm) return perm < rhs.perm;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const int c = Scalar::cmp(scales[i], rhs.scales[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void MonomialMap::write(std::ostream& out) const {
    out << "monomial v1\n" << size() << "\n";
    for (int i = 0; i < size(); ++i) {
        if (i) out << ' ';
        out << perm[i];
    }
    out << "\n";
    for (int i = 0; i < size(); ++i) {
        if (i) out << ' ';
        out << scales[i].str();
    }
    out << "\n";
}

MonomialMap MonomialMap::read(std::istream& in, const Field& f) {
    TokenReader r(in);
    r.expect("monomial");
    r.expect("v1");
    const int n = static_cast<int>(r.next_int("size", 0, 1000000));
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = static_cast<int>(r.next_int("permutation image", 0, n - 1));
    std::vector<Scalar> s;
    s.reserve(n);
    for (int i = 0; i < n; ++i) s.push_back(Scalar::parse(f, r.next("scale")));
    r.expect_end();
    return make(std::move(p), std::move(s));
}

namespace {

bool satisfies_iso_system(const Matrix& m1, const Matrix& m2, const Perm& perm,
                          const std::vector<Scalar>& scales) {
    const int n = m2.rows();
    for (int i = 0; i < n; ++i) {
        const Scalar si2 = scales[i].squared();
        for (int j = 0; j < n; ++j) {
            if (si2 * m1.at(perm[j], perm[i]) != scales[j] * m2.at(j, i)) return false;
        }
    }
    return true;
}

} // namespace

bool is_automorphism(const EvolutionAlgebra& x, const MonomialMap& m) {
    if (m.size() != x.dim())
        throw ValidationError("SizeMismatch: monomial map does not fit the algebra");
    for (const Scalar& s : m.scales)
        if (s.field() != x.field())
            throw ValidationError("FieldMismatch: scale field differs from algebra field");
    return satisfies_iso_system(x.structure(), x.structure(), m.perm, m.scales);
}

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

namespace {

using Words = std::vector<std::uint64_t>;

void set_bit(Words& w, int i) { w[i >> 6] |= 1ull << (i & 63); }
bool get_bit(const Words& w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }

int popcount(const Words& w) {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
}

// Zero pattern of a structure matrix viewed as a digraph on basis indices:
// arc i -> j whenever w_ji != 0 (column i supports row j).
struct SupportPattern {
    int n = 0;
    std::size_t words = 0;
    std::vector<Words> col_sup; // col_sup[i] bit j = (w_ji != 0)
    std::vector<Words> row_sup; // row_sup[j] bit i = (w_ji != 0)
    std::vector<int> col_cnt, row_cnt;
    std::vector<char> diag;

    explicit SupportPattern(const Matrix& m) {
        n = m.rows();
        words = (n + 63) / 64;
        if (words == 0) words = 1;
        col_sup.assign(n, Words(words, 0));
        row_sup.assign(n, Words(words, 0));
        col_cnt.assign(n, 0);
        row_cnt.assign(n, 0);
        diag.assign(n, 0);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (m.at(j, i).is_zero()) continue;
                set_bit(col_sup[i], j);
                set_bit(row_sup[j], i);
                ++col_cnt[i];
                ++row_cnt[j];
                if (i == j) diag[i] = 1;
            }
        }
    }
};

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// Iterated neighborhood-signature colors of the support digraph(s); colors
// are comparable across both patterns because they are computed jointly.
// Any zero-pattern-preserving map must match colors, so candidate sets may
// be restricted to equal-color indices.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> joint_support_colors(
    const SupportPattern& a, const SupportPattern& b) {
    const int total = a.n + b.n;
    std::vector<std::uint64_t> color(total);
    auto idx = [&](bool second, int i) { return second ? a.n + i : i; };
    auto pattern_of = [&](int v) -> const SupportPattern& { return v < a.n ? a : b; };
    auto local = [&](int v) { return v < a.n ? v : v - a.n; };

    for (int v = 0; v < total; ++v) {
        const SupportPattern& p = pattern_of(v);
        const int i = local(v);
        std::uint64_t h = hash_combine(0, p.col_cnt[i]);
        h = hash_combine(h, p.row_cnt[i]);
        h = hash_combine(h, p.diag[i]);
        color[v] = h;
    }

    std::vector<int> compact(total), prev_compact(total, -1);
    for (int round = 0; round < total + 1; ++round) {
        std::vector<std::uint64_t> next(total);
        for (int v = 0; v < total; ++v) {
            const SupportPattern& p = pattern_of(v);
            const int i = local(v);
            std::vector<std::uint64_t> out_colors, in_colors;
            for (int j = 0; j < p.n; ++j) {
                if (get_bit(p.col_sup[i], j)) out_colors.push_back(color[idx(v >= a.n, j)]);
                if (get_bit(p.row_sup[i], j)) in_colors.push_back(color[idx(v >= a.n, j)]);
            }
            std::sort(out_colors.begin(), out_colors.end());
            std::sort(in_colors.begin(), in_colors.end());
            std::uint64_t h = hash_combine(1, color[v]);
            for (std::uint64_t c : out_colors) h = hash_combine(h, c);
            h = hash_combine(h, 0x517cc1b727220a95ull);
            for (std::uint64_t c : in_colors) h = hash_combine(h, c);
            next[v] = h;
        }
        color = std::move(next);
        std::map<std::uint64_t, int> ids;
        for (int v = 0; v < total; ++v) {
            auto [it, fresh] = ids.emplace(color[v], static_cast<int>(ids.size()));
            compact[v] = it->second;
            (void)fresh;
        }
        if (compact == prev_compact) break;
        prev_compact = compact;
    }
    return {std::vector<std::uint64_t>(color.begin(), color.begin() + a.n),
            std::vector<std::uint64_t>(color.begin() + a.n, color.end())};
}

// Backtracking over the basis permutation with forward checking on the zero
// pattern and incremental scale propagation. Maps indices of m2 to indices
// of m1 so that a solution (perm, scales) satisfies
//   scales[i]^2 * m1(perm(j), perm(i)) = scales[j] * m2(j, i).
class MonomialSearch {
public:
    MonomialSearch(const Matrix& m1, const Matrix& m2, std::uint64_t cap, bool first_only,
                   bool lexicographic)
        : m1_(m1), m2_(m2), n_(m2.rows()), field_(m2.field()), cap_(cap),
          first_only_(first_only), lexicographic_(lexicographic), pat1_(m1), pat2_(m2) {}

    std::vector<MonomialMap> run() {
        if (n_ == 0) return {MonomialMap::identity(0, field_)};
        auto [colors1, colors2] = joint_support_colors(pat1_, pat2_);
        cand_.assign(n_, Words(pat1_.words, 0));
        for (int i = 0; i < n_; ++i) {
            for (int a = 0; a < n_; ++a)
                if (colors2[i] == colors1[a]) set_bit(cand_[i], a);
            if (popcount(cand_[i]) == 0) return {};
        }
        sigma_.assign(n_, -1);
        taken_.assign(n_, 0);
        lam_.assign(n_, std::nullopt);
        dfs();
        std::sort(found_.begin(), found_.end());
        return found_;
    }

    /// All scale completions for one total permutation (oracle path).
    std::vector<MonomialMap> run_fixed(const Perm& sigma) {
        sigma_ = sigma;
        lam_.assign(n_, std::nullopt);
        std::vector<int> lam_trail;
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i)
            if (!m2_.at(i, i).is_zero())
                ok = assign_lambda(i, m2_.at(i, i) / m1_.at(sigma[i], sigma[i]), lam_trail);
        if (ok && propagate_all(lam_trail)) complete_rec();
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    struct Constraint {
        int src, dst;   // lambda[dst] = ratio * lambda[src]^2
        Scalar ratio;   // m1(perm(dst), perm(src)) / m2(dst, src)
    };

    bool assign_lambda(int i, const Scalar& v, std::vector<int>& lam_trail) {
        if (lam_[i]) return *lam_[i] == v;
        if (v.is_zero()) return false;
        lam_[i] = v;
        lam_trail.push_back(i);
        return true;
    }

    // Runs known-value propagation over active constraints to a fixpoint.
    bool propagate(std::vector<int>& lam_trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Constraint& c : active_) {
                if (!lam_[c.src]) continue;
                const Scalar v = lam_[c.src]->squared() * c.ratio;
                if (!lam_[c.dst]) {
                    if (!assign_lambda(c.dst, v, lam_trail)) return false;
                    changed = true;
                } else if (*lam_[c.dst] != v) {
                    return false;
                }
            }
        }
        return true;
    }

    // Activates the scale constraints created by assigning sigma(i); the
    // diagonal one pins lambda[i] immediately.
    bool activate_constraints(int i, std::vector<int>& lam_trail) {
        const int a = sigma_[i];
        if (!m2_.at(i, i).is_zero()) {
            const Scalar v = m2_.at(i, i) / m1_.at(a, a);
            if (!assign_lambda(i, v, lam_trail)) return false;
        }
        for (int j = 0; j < n_; ++j) {
            if (sigma_[j] < 0) continue;
            const int b = sigma_[j];
            if (!m2_.at(j, i).is_zero() && (i != j))
                active_.push_back({i, j, m1_.at(b, a) / m2_.at(j, i)});
            if (!m2_.at(i, j).is_zero() && (i != j))
                active_.push_back({j, i, m1_.at(a, b) / m2_.at(i, j)});
        }
        return true;
    }

    // Candidate filtering against the newly assigned pair (i -> a): any
    // unassigned k must map into indices whose pattern against a matches
    // its own pattern against i.
    void filter_candidates(int i, int a) {
        for (int k = 0; k < n_; ++k) {
            if (sigma_[k] >= 0 || k == i) continue;
            Words& ck = cand_[k];
            for (std::size_t w = 0; w < ck.size(); ++w) {
                const std::uint64_t row_mask = get_bit(pat2_.col_sup[i], k)
                                                   ? pat1_.col_sup[a][w]
                                                   : ~pat1_.col_sup[a][w];
                const std::uint64_t col_mask = get_bit(pat2_.row_sup[i], k)
                                                   ? pat1_.row_sup[a][w]
                                                   : ~pat1_.row_sup[a][w];
                ck[w] &= row_mask & col_mask;
            }
            ck[a >> 6] &= ~(1ull << (a & 63));
        }
    }

    int pick_variable() const {
        if (lexicographic_) {
            for (int i = 0; i < n_; ++i)
                if (sigma_[i] < 0) return i;
            return -1;
        }
        int best = -1, best_count = INT_MAX;
        for (int i = 0; i < n_; ++i) {
            if (sigma_[i] >= 0) continue;
            const int c = popcount(cand_[i]);
            if (c < best_count) {
                best_count = c;
                best = i;
            }
        }
        return best;
    }

    void dfs() {
        if (first_only_ && !found_.empty()) return;
        const int i = pick_variable();
        if (i < 0) {
            complete_rec();
            return;
        }
        std::vector<int> images;
        for (int a = 0; a < n_; ++a)
            if (get_bit(cand_[i], a) && !taken_[a]) images.push_back(a);
        const std::vector<Words> cand_snapshot = cand_;
        for (int a : images) {
            sigma_[i] = a;
            taken_[a] = 1;
            const std::size_t active_mark = active_.size();
            std::vector<int> lam_trail;
            if (activate_constraints(i, lam_trail) && propagate(lam_trail)) {
                filter_candidates(i, a);
                bool dead = false;
                for (int k = 0; k < n_ && !dead; ++k)
                    if (sigma_[k] < 0 && popcount(cand_[k]) == 0) dead = true;
                if (!dead) dfs();
                cand_ = cand_snapshot;
            }
            active_.resize(active_mark);
            for (int t : lam_trail) lam_[t] = std::nullopt;
            taken_[a] = 0;
            sigma_[i] = -1;
            if (first_only_ && !found_.empty()) return;
        }
    }

    // All lambda completions for the fully assigned permutation: repeatedly
    // extract a dependency cycle among the unknowns and branch over the
    // exact roots it forces.
    void complete_rec() {
        int start = -1;
        for (int i = 0; i < n_; ++i) {
            if (!lam_[i]) {
                start = i;
                break;
            }
        }
        if (start < 0) {
            emit();
            return;
        }
        // Walk incoming constraints through unknowns until a repeat: every
        // unknown has an unknown source after propagation.
        std::vector<int> path{start};
        std::vector<int> pos(n_, -1);
        pos[start] = 0;
        int cycle_at = -1;
        while (cycle_at < 0) {
            const int cur = path.back();
            int src = -1;
            for (int s = 0; s < n_; ++s) {
                if (s != cur && !lam_[s] && get_bit(pat2_.row_sup[cur], s)) {
                    src = s;
                    break;
                }
            }
            if (src < 0) {
                // Only a self-loop remains: the diagonal pins lambda, which
                // propagation would have applied. Treat as inconsistent.
                return;
            }
            if (pos[src] >= 0) {
                cycle_at = pos[src];
            } else {
                pos[src] = static_cast<int>(path.size());
                path.push_back(src);
            }
        }
        // Cycle nodes path[cycle_at..]; the constraint into cycle[t] has
        // source cycle[(t+1) % k]. Substituting around the cycle yields
        //   lambda[x0] = K * lambda[x0]^(2^k),  K = prod_t ratio_t^(2^t),
        // so the completions are exactly the roots of x^(2^k - 1) = 1/K.
        std::vector<int> cycle(path.begin() + cycle_at, path.end());
        const int k = static_cast<int>(cycle.size());
        const int x0 = cycle[0];
        Scalar coeff = Scalar::one(field_);
        for (int t = k - 1; t >= 0; --t) {
            const int dst = cycle[t];
            const int src = cycle[(t + 1) % k];
            const Scalar ratio = m1_.at(sigma_[dst], sigma_[src]) / m2_.at(dst, src);
            coeff = coeff.squared() * ratio;
        }
        const BigInt exponent = (BigInt(1) << k) - 1;
        const std::vector<Scalar> roots = coeff.inverse().nth_roots(exponent);
        for (const Scalar& r : roots) {
            if (r.is_zero()) continue;
            std::vector<int> lam_trail;
            if (assign_lambda(x0, r, lam_trail) && propagate_all(lam_trail)) complete_rec();
            for (int t : lam_trail) lam_[t] = std::nullopt;
        }
    }

    // Propagation over the full constraint set (used once sigma is total).
    bool propagate_all(std::vector<int>& lam_trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n_; ++i) {
                if (!lam_[i]) continue;
                const Scalar si2 = lam_[i]->squared();
                for (int j = 0; j < n_; ++j) {
                    if (m2_.at(j, i).is_zero()) continue;
                    const Scalar v = si2 * m1_.at(sigma_[j], sigma_[i]) / m2_.at(j, i);
                    if (!lam_[j]) {
                        if (!assign_lambda(j, v, lam_trail)) return false;
                        changed = true;
                    } else if (*lam_[j] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void emit() {
        Perm p(n_);
        std::vector<Scalar> s;
        s.reserve(n_);
        for (int i = 0; i < n_; ++i) {
            p[i] = sigma_[i];
            s.push_back(*lam_[i]);
        }
        if (!satisfies_iso_system(m1_, m2_, p, s)) return;
        found_.push_back(MonomialMap{std::move(p), std::move(s)});
        if (found_.size() > cap_)
            throw CapError("GroupTooLarge: more than " + std::to_string(cap_) +
                           " monomial automorphisms");
    }

    const Matrix& m1_;
    const Matrix& m2_;
    int n_;
    Field field_;
    std::uint64_t cap_;
    bool first_only_;
    bool lexicographic_;
    SupportPattern pat1_, pat2_;

    std::vector<Words> cand_;
    std::vector<int> sigma_;
    std::vector<char> taken_;
    std::vector<std::optional<Scalar>> lam_;
    std::vector<Constraint> active_;
    std::vector<MonomialMap> found_;
};

AlgebraAutomorphisms package_automorphisms(const EvolutionAlgebra& x,
                                           std::vector<MonomialMap> elements,
                                           std::uint64_t cap) {
    AlgebraAutomorphisms out;
    out.order = elements.size();
    out.all_scales_one =
        std::all_of(elements.begin(), elements.end(),
                    [](const MonomialMap& m) { return m.scales_all_one(); });

    std::vector<Perm> sigmas;
    sigmas.reserve(elements.size());
    for (const MonomialMap& m : elements) sigmas.push_back(m.perm);
    out.sigma_group = PermGroup::from_generators(x.dim(), std::move(sigmas), cap);

    // Greedy generating set over the monomial group itself.
    std::set<MonomialMap> have{MonomialMap::identity(x.dim(), x.field())};
    for (const MonomialMap& g : elements) {
        if (have.count(g)) continue;
        out.generators.push_back(g);
        std::vector<MonomialMap> queue(have.begin(), have.end());
        while (!queue.empty()) {
            MonomialMap e = std::move(queue.back());
            queue.pop_back();
            for (const MonomialMap& h : out.generators) {
                MonomialMap prod = h.after(e);
                if (have.insert(prod).second) queue.push_back(std::move(prod));
            }
        }
    }
    out.elements = std::move(elements);
    return out;
}

} // namespace

AlgebraAutomorphisms algebra_automorphisms(const EvolutionAlgebra& x, std::uint64_t cap) {
    if (!x.is_regular())
        throw NotRegularError("NotRegular: automorphism search requires a regular algebra");
    MonomialSearch search(x.structure(), x.structure(), cap, false, false);
    return package_automorphisms(x, search.run(), cap);
}

AlgebraAutomorphisms algebra_automorphisms_brute_force(const EvolutionAlgebra& x,
                                                       std::uint64_t cap) {
    if (!x.is_regular())
        throw NotRegularError("NotRegular: automorphism search requires a regular algebra");
    const int n = x.dim();
    if (n > 9)
        throw CapError("GroupTooLarge: brute-force enumeration limited to dimension 9");
    const Matrix& m = x.structure();
    std::vector<MonomialMap> found;
    if (n == 0) {
        found.push_back(MonomialMap::identity(0, x.field()));
        return package_automorphisms(x, std::move(found), cap);
    }
    Perm p = identity_perm(n);
    do {
        bool pattern_ok = true;
        for (int i = 0; i < n && pattern_ok; ++i)
            for (int j = 0; j < n; ++j)
                if (m.at(j, i).is_zero() != m.at(p[j], p[i]).is_zero()) {
                    pattern_ok = false;
                    break;
                }
        if (!pattern_ok) continue;
        MonomialSearch search(m, m, cap, false, true);
        for (MonomialMap& s : search.run_fixed(p)) found.push_back(std::move(s));
        if (found.size() > cap)
            throw CapError("GroupTooLarge: more than " + std::to_string(cap) +
                           " monomial automorphisms");
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(found.begin(), found.end());
    return package_automorphisms(x, std::move(found), cap);
}

std::optional<MonomialMap> algebra_isomorphism(const EvolutionAlgebra& x1,
                                               const EvolutionAlgebra& x2) {
    if (x1.field() != x2.field())
        throw ValidationError("FieldMismatch: algebras live over different fields");
    if (!x1.is_regular() || !x2.is_regular())
        throw NotRegularError("NotRegular: isomorphism search requires regular algebras");
    if (x1.dim() != x2.dim()) return std::nullopt;
    MonomialSearch search(x1.structure(), x2.structure(), 1000000, true, true);
    std::vector<MonomialMap> sols = search.run();
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

} // namespace evolalg
