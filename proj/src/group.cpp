#include "modisom/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <set>
#include <sstream>

#include "modisom/config.hpp"

namespace modisom {

AbelianType AbelianType::of_cyclic_factors(const std::vector<uint32_t>& exps) {
    uint32_t total = std::accumulate(exps.begin(), exps.end(), 0u);
    AbelianType t;
    for (uint32_t k = 0;; ++k) {
        uint32_t a = 0;
        for (uint32_t e : exps) a += std::min(k, e);
        t.orders_profile.push_back(a);
        if (a == total) break;
    }
    return t;
}

GroupPtr Group::from_presentation(PcPresentation pres, kernels::Mode mode) {
    Collector coll(std::move(pres));
    ConsistencyReport report = check_consistency(coll);
    if (!report.consistent) {
        std::ostringstream msg;
        msg << "inconsistent presentation: " << report.detail << " at generators (" << report.witness[0]
            << "," << report.witness[1] << "," << report.witness[2] << ")";
        throw error(msg.str());
    }
    const uint32_t L = coll.num_gens();
    const uint32_t p = coll.prime();
    const uint32_t n = static_cast<uint32_t>(coll.order());

    auto g = std::shared_ptr<Group>(new Group());
    g->p_ = p;
    g->n_ = n;
    g->identity_ = 0;

    std::vector<uint32_t> gen_index(L);
    for (uint32_t k = 0; k < L; ++k) gen_index[k] = static_cast<uint32_t>(coll.index_of(coll.generator(k)));

    std::vector<uint32_t> gen_cols(static_cast<size_t>(n) * L);
    kernels::for_indexed(n, mode, [&](uint64_t i) {
        ExpVec x = coll.element_at(i);
        for (uint32_t k = 0; k < L; ++k)
            gen_cols[i * L + k] = static_cast<uint32_t>(coll.index_of(coll.multiply_by_gen(x, k)));
    });

    // elem_j = elem_{j - step} * g_k where k is the last nonzero digit of j.
    std::vector<std::pair<uint32_t, uint32_t>> decomp(n, {0, 0});
    for (uint32_t j = 1; j < n; ++j) {
        uint64_t step = 1;
        uint32_t k = L - 1;
        uint64_t rest = j;
        while (rest % p == 0) {
            rest /= p;
            step *= p;
            --k;
        }
        decomp[j] = {static_cast<uint32_t>(j - step), k};
    }

    kernels::fill_product_table(n, L, gen_cols, gen_index, decomp, g->table_, mode);
    g->generators_ = gen_index;
    g->collector_.emplace(std::move(coll));
    g->finish_setup();
    return g;
}

GroupPtr Group::from_table(uint32_t p, std::vector<uint16_t> table, uint32_t identity_index) {
    uint64_t n64 = 0;
    while (n64 * n64 < table.size()) ++n64;
    if (n64 * n64 != table.size()) throw error("from_table: table is not square");
    uint32_t n = static_cast<uint32_t>(n64);
    if (n > caps::group_order) throw cap_exceeded("from_table: group order over cap");
    if (identity_index >= n) throw error("from_table: bad identity index");

    auto g = std::shared_ptr<Group>(new Group());
    g->p_ = p;
    g->n_ = n;
    g->identity_ = identity_index;
    g->table_ = std::move(table);

    std::vector<bool> seen(n);
    for (uint32_t a = 0; a < n; ++a) {
        if (g->mul(a, identity_index) != a || g->mul(identity_index, a) != a)
            throw error("from_table: identity does not act as identity");
        std::fill(seen.begin(), seen.end(), false);
        for (uint32_t b = 0; b < n; ++b) {
            uint32_t x = g->mul(a, b);
            if (x >= n || seen[x]) throw error("from_table: row is not a permutation");
            seen[x] = true;
        }
    }

    // Greedy small generating set.
    std::vector<bool> in_sub(n, false);
    in_sub[identity_index] = true;
    uint32_t covered = 1;
    std::vector<uint32_t> gens;
    while (covered < n) {
        uint32_t next = 0;
        while (in_sub[next]) ++next;
        gens.push_back(next);
        std::vector<bool> grown = in_sub;
        std::vector<uint32_t> all;
        for (uint32_t x = 0; x < n; ++x)
            if (in_sub[x]) all.push_back(x);
        // close the previous subgroup together with the new generator
        std::vector<uint32_t> frontier = all;
        frontier.push_back(next);
        if (!grown[next]) {
            grown[next] = true;
            ++covered;
        }
        std::vector<uint32_t> work = frontier;
        while (!work.empty()) {
            uint32_t x = work.back();
            work.pop_back();
            for (uint32_t s : frontier) {
                uint32_t y = g->mul(x, s);
                if (!grown[y]) {
                    grown[y] = true;
                    ++covered;
                    work.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
        in_sub = grown;
    }
    g->generators_ = gens;
    g->finish_setup();
    return g;
}

void Group::finish_setup() {
    inv_.assign(n_, 0);
    for (uint32_t a = 0; a < n_; ++a) {
        for (uint32_t b = 0; b < n_; ++b)
            if (mul(a, b) == identity_) {
                inv_[a] = b;
                break;
            }
    }
    pow_p_.assign(n_, 0);
    for (uint32_t a = 0; a < n_; ++a) pow_p_[a] = power(a, p_);
    order_of_.assign(n_, 0);
    for (uint32_t a = 0; a < n_; ++a) {
        uint32_t x = a, ord = 1, guard = 0;
        while (x != identity_) {
            x = pow_p_[x];
            ord *= p_;
            if (++guard > 64) throw error("group table does not describe a p-group");
        }
        order_of_[a] = ord;
    }
}

uint32_t Group::power(uint32_t a, uint64_t e) const {
    uint32_t result = identity_, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

uint32_t Group::exponent() const {
    uint32_t m = 1;
    for (uint32_t a = 0; a < n_; ++a) m = std::max(m, order_of_[a]);
    return m;
}

uint32_t Group::exponent_log() const {
    uint32_t e = exponent(), k = 0;
    while (e > 1) {
        e /= p_;
        ++k;
    }
    return k;
}

bool Group::is_abelian() const {
    for (uint32_t s : generators_)
        for (uint32_t t : generators_)
            if (mul(s, t) != mul(t, s)) return false;
    return true;
}

bool Group::verify_table(kernels::Mode mode) const {
    std::vector<uint8_t> bad(n_, 0);
    kernels::for_indexed(n_, mode, [&](uint64_t a) {
        for (uint32_t b = 0; b < n_ && !bad[a]; ++b) {
            uint32_t ab = mul(static_cast<uint32_t>(a), b);
            for (uint32_t c = 0; c < n_; ++c)
                if (mul(ab, c) != mul(static_cast<uint32_t>(a), mul(b, c))) {
                    bad[a] = 1;
                    break;
                }
        }
    });
    return std::none_of(bad.begin(), bad.end(), [](uint8_t x) { return x != 0; });
}

Subgroup::Subgroup(GroupPtr parent, std::vector<uint32_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || !contains(parent_->identity()))
        throw error("Subgroup: must contain the identity");
}

Subgroup Subgroup::trivial(GroupPtr parent) {
    uint32_t id = parent->identity();
    return Subgroup(std::move(parent), {id});
}

Subgroup Subgroup::full(GroupPtr parent) {
    std::vector<uint32_t> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(uint32_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

bool Subgroup::is_normal() const {
    const auto& g = *parent_;
    for (uint32_t s : g.generators())
        for (uint32_t m : members_)
            if (!contains(g.conj(m, s))) return false;
    return true;
}

bool Subgroup::is_abelian() const {
    const auto& g = *parent_;
    for (uint32_t a : members_)
        for (uint32_t b : members_) {
            if (b >= a) break;
            if (g.mul(a, b) != g.mul(b, a)) return false;
        }
    return true;
}

namespace {

std::vector<uint32_t> closure_members(const Group& g, std::vector<uint32_t> gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<uint32_t> members{g.identity()};
    in[g.identity()] = true;
    std::vector<uint32_t> work;
    for (uint32_t x : gens)
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    gens = members; // generators incl. identity; products close the set
    while (!work.empty()) {
        uint32_t x = work.back();
        work.pop_back();
        for (size_t k = 0; k < gens.size(); ++k) {
            uint32_t y = g.mul(x, gens[k]);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
                work.push_back(y);
                gens.push_back(y);
            }
            uint32_t z = g.mul(gens[k], x);
            if (!in[z]) {
                in[z] = true;
                members.push_back(z);
                work.push_back(z);
                gens.push_back(z);
            }
        }
    }
    return members;
}

} // namespace

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<uint32_t>& gens) {
    return Subgroup(g, closure_members(*g, gens));
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<uint32_t>& gens) {
    // All conjugates first, then one plain closure.
    std::vector<uint32_t> seed;
    for (uint32_t x : gens)
        for (uint32_t t = 0; t < g->order(); ++t) seed.push_back(g->conj(x, t));
    return subgroup_closure(g, seed);
}

Subgroup center(const GroupPtr& g) {
    std::vector<uint32_t> members;
    for (uint32_t x = 0; x < g->order(); ++x) {
        bool central = true;
        for (uint32_t s : g->generators())
            if (g->mul(x, s) != g->mul(s, x)) {
                central = false;
                break;
            }
        if (central) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& u) {
    std::vector<uint32_t> members;
    for (uint32_t x = 0; x < g->order(); ++x) {
        bool commutes = true;
        for (uint32_t m : u.members())
            if (g->mul(x, m) != g->mul(m, x)) {
                commutes = false;
                break;
            }
        if (commutes) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

Subgroup centralizer_of_element(const GroupPtr& g, uint32_t x) {
    std::vector<uint32_t> members;
    for (uint32_t y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) members.push_back(y);
    return Subgroup(g, std::move(members));
}

Subgroup derived_subgroup(const GroupPtr& g) {
    std::vector<uint32_t> comms;
    for (uint32_t s : g->generators())
        for (uint32_t t : g->generators()) comms.push_back(g->comm(s, t));
    return normal_closure(g, comms);
}

Subgroup derived_subgroup_of(const Subgroup& u) {
    const auto& g = *u.parent();
    std::vector<uint32_t> comms;
    for (uint32_t a : u.members())
        for (uint32_t b : u.members()) comms.push_back(g.comm(a, b));
    return subgroup_closure(u.parent(), comms);
}

Subgroup agemo(const Subgroup& u, uint32_t n) {
    const auto& g = *u.parent();
    uint64_t q = 1;
    for (uint32_t t = 0; t < n; ++t) q *= g.prime();
    std::vector<uint32_t> gens;
    for (uint32_t m : u.members()) gens.push_back(g.power(m, q));
    return subgroup_closure(u.parent(), gens);
}

Subgroup omega(const Subgroup& u, uint32_t n) {
    const auto& g = *u.parent();
    uint64_t q = 1;
    for (uint32_t t = 0; t < n; ++t) q *= g.prime();
    std::vector<uint32_t> gens;
    for (uint32_t m : u.members())
        if (g.element_order(m) <= q) gens.push_back(m);
    return subgroup_closure(u.parent(), gens);
}

Subgroup frattini(const GroupPtr& g) {
    return subgroup_product(agemo(Subgroup::full(g), 1), derived_subgroup(g));
}

Subgroup subgroup_product(const Subgroup& a, const Subgroup& b) {
    std::vector<uint32_t> gens = a.members();
    gens.insert(gens.end(), b.members().begin(), b.members().end());
    return subgroup_closure(a.parent(), gens);
}

std::vector<Subgroup> lower_central_series(const GroupPtr& g) {
    std::vector<Subgroup> series{Subgroup::full(g)};
    while (series.back().order() > 1) {
        const Subgroup& prev = series.back();
        std::vector<uint32_t> comms;
        for (uint32_t x = 0; x < g->order(); ++x)
            for (uint32_t m : prev.members()) comms.push_back(g->comm(x, m));
        Subgroup next = subgroup_closure(g, comms);
        if (next.order() == prev.order()) throw error("lower central series did not descend");
        series.push_back(std::move(next));
    }
    return series;
}

uint32_t nilpotency_class(const GroupPtr& g) {
    return static_cast<uint32_t>(lower_central_series(g).size()) - 1;
}

std::vector<Subgroup> dimension_subgroups_group_side(const GroupPtr& g) {
    std::vector<Subgroup> gammas = lower_central_series(g);
    const uint32_t p = g->prime();
    std::vector<Subgroup> series;
    for (uint32_t m = 1;; ++m) {
        // D_m = prod_i gamma_i^{p^{j_i}} with j_i minimal s.t. i p^{j_i} >= m.
        Subgroup d = Subgroup::trivial(g);
        for (uint32_t i = 1; i <= gammas.size(); ++i) {
            const Subgroup& gamma = gammas[i - 1];
            if (gamma.order() == 1) break;
            uint32_t j = 0;
            uint64_t ipj = i;
            while (ipj < m) {
                ipj *= p;
                ++j;
            }
            d = subgroup_product(d, agemo(gamma, j));
        }
        series.push_back(d);
        if (series.back().order() == 1) break;
        if (m > 1 && series[m - 1].order() > series[m - 2].order())
            throw error("dimension subgroup series not descending");
    }
    return series;
}

bool verify_dimension_series_laws(const GroupPtr& g, const std::vector<Subgroup>& d) {
    const uint32_t p = g->prime();
    const Subgroup triv = Subgroup::trivial(g);
    // D_m for m beyond the chain is trivial.
    auto at = [&](size_t m) -> const Subgroup& { return (m - 1 < d.size()) ? d[m - 1] : triv; };
    // Inductive formula D_m = [G, D_{m-1}] D_{ceil(m/p)}^p.
    for (size_t m = 2; m <= d.size(); ++m) {
        std::vector<uint32_t> comms;
        for (uint32_t x = 0; x < g->order(); ++x)
            for (uint32_t y : at(m - 1).members()) comms.push_back(g->comm(x, y));
        Subgroup rhs = subgroup_product(subgroup_closure(g, comms), agemo(at((m + p - 1) / p), 1));
        if (!(rhs == at(m))) return false;
    }
    // N-series laws.
    for (size_t i = 1; i <= d.size(); ++i)
        for (size_t j = 1; j <= d.size(); ++j) {
            const Subgroup& target = at(i + j);
            for (uint32_t a : at(i).members())
                for (uint32_t b : at(j).members())
                    if (!target.contains(g->comm(a, b))) return false;
        }
    for (size_t i = 1; i <= d.size(); ++i) {
        const Subgroup& target = at(i * p);
        for (uint32_t a : at(i).members())
            if (!target.contains(g->power(a, p))) return false;
    }
    return true;
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const GroupPtr& g) {
    std::vector<bool> seen(g->order(), false);
    std::vector<std::vector<uint32_t>> classes;
    for (uint32_t x = 0; x < g->order(); ++x) {
        if (seen[x]) continue;
        std::vector<uint32_t> orbit{x};
        seen[x] = true;
        std::vector<uint32_t> work{x};
        while (!work.empty()) {
            uint32_t y = work.back();
            work.pop_back();
            for (uint32_t s : g->generators()) {
                uint32_t z = g->conj(y, s);
                if (!seen[z]) {
                    seen[z] = true;
                    orbit.push_back(z);
                    work.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

std::vector<uint32_t> class_index_map(const GroupPtr& g,
                                      const std::vector<std::vector<uint32_t>>& classes) {
    std::vector<uint32_t> idx(g->order(), 0);
    for (uint32_t c = 0; c < classes.size(); ++c)
        for (uint32_t m : classes[c]) idx[m] = c;
    return idx;
}

namespace {

uint32_t log_p_exact(uint32_t p, uint64_t value, const char* what) {
    uint32_t k = 0;
    while (value > 1) {
        if (value % p) throw error(std::string(what) + ": count is not a power of p");
        value /= p;
        ++k;
    }
    return k;
}

} // namespace

AbelianType abelian_type(const Subgroup& u) {
    if (!u.is_abelian()) throw error("abelian_type: subgroup is not abelian");
    const auto& g = *u.parent();
    const uint32_t p = g.prime();
    uint32_t full = log_p_exact(p, u.order(), "abelian_type");
    AbelianType t;
    for (uint32_t k = 0;; ++k) {
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) q *= p;
        uint64_t count = 0;
        for (uint32_t m : u.members()) count += (g.element_order(m) <= q);
        t.orders_profile.push_back(log_p_exact(p, count, "abelian_type"));
        if (t.orders_profile.back() == full) break;
    }
    return t;
}

AbelianType abelian_type_quotient(const Subgroup& u, const Subgroup& v) {
    const auto& g = *u.parent();
    const uint32_t p = g.prime();
    if (!u.contains_subgroup(v)) throw error("abelian_type_quotient: v not inside u");
    for (uint32_t a : u.members())
        for (uint32_t m : v.members())
            if (!v.contains(g.conj(m, a))) throw error("abelian_type_quotient: v not normal in u");
    for (uint32_t a : u.members())
        for (uint32_t b : u.members())
            if (!v.contains(g.comm(a, b))) throw error("abelian_type_quotient: quotient not abelian");
    uint32_t full = log_p_exact(p, u.order() / v.order(), "abelian_type_quotient");
    AbelianType t;
    for (uint32_t k = 0;; ++k) {
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) q *= p;
        uint64_t count = 0;
        for (uint32_t m : u.members()) count += v.contains(g.power(m, q));
        t.orders_profile.push_back(log_p_exact(p, count / v.order(), "abelian_type_quotient"));
        if (t.orders_profile.back() == full) break;
    }
    return t;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
    if (!n.is_normal()) throw error("quotient_group: subgroup is not normal");
    const uint32_t order = g->order();
    std::vector<uint32_t> rep(order);
    for (uint32_t x = 0; x < order; ++x) {
        uint32_t least = x;
        for (uint32_t m : n.members()) least = std::min(least, g->mul(x, m));
        rep[x] = least;
    }
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<uint32_t> coset_of(order);
    for (uint32_t x = 0; x < order; ++x)
        coset_of[x] =
            static_cast<uint32_t>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
    const uint32_t q = static_cast<uint32_t>(reps.size());
    std::vector<uint16_t> table(static_cast<size_t>(q) * q);
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            table[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>(coset_of[g->mul(reps[a], reps[b])]);
    QuotientGroup out;
    out.group = Group::from_table(g->prime(), std::move(table), coset_of[g->identity()]);
    out.coset_of = std::move(coset_of);
    out.rep_of = std::move(reps);
    return out;
}

GroupPtr subgroup_as_group(const Subgroup& u) {
    const auto& g = *u.parent();
    const auto& mem = u.members();
    const uint32_t k = u.order();
    auto pos = [&](uint32_t x) {
        return static_cast<uint32_t>(std::lower_bound(mem.begin(), mem.end(), x) - mem.begin());
    };
    std::vector<uint16_t> table(static_cast<size_t>(k) * k);
    for (uint32_t a = 0; a < k; ++a)
        for (uint32_t b = 0; b < k; ++b) {
            uint32_t prod = g.mul(mem[a], mem[b]);
            if (!u.contains(prod)) throw error("subgroup_as_group: set not closed");
            table[static_cast<size_t>(a) * k + b] = static_cast<uint16_t>(pos(prod));
        }
    return Group::from_table(g.prime(), std::move(table), pos(g.identity()));
}

GroupPtr section_group(const Subgroup& u, const Subgroup& v) {
    GroupPtr ug = subgroup_as_group(u);
    const auto& mem = u.members();
    auto pos = [&](uint32_t x) {
        return static_cast<uint32_t>(std::lower_bound(mem.begin(), mem.end(), x) - mem.begin());
    };
    std::vector<uint32_t> v_pos;
    for (uint32_t m : v.members()) {
        if (!u.contains(m)) throw error("section_group: v not inside u");
        v_pos.push_back(pos(m));
    }
    return quotient_group(ug, Subgroup(ug, std::move(v_pos))).group;
}

namespace {

struct GenExpr {
    uint32_t parent;
    uint32_t gen_slot;
};

// Stage-wise closure of <g_1..g_d> recording, for each element, one product
// expression over the generator slots.
struct StagedClosure {
    std::vector<std::vector<uint32_t>> stage_members; // members after adding slot k
    std::vector<int> first_stage;                     // element -> stage discovered (-1 unknown)
    std::vector<GenExpr> expr;                        // element -> (parent, slot)
};

StagedClosure staged_closure(const Group& g, const std::vector<uint32_t>& gens) {
    StagedClosure out;
    out.first_stage.assign(g.order(), -1);
    out.expr.assign(g.order(), {0, 0});
    std::vector<uint32_t> members{g.identity()};
    out.first_stage[g.identity()] = 0;
    for (uint32_t k = 0; k < gens.size(); ++k) {
        std::vector<uint32_t> work = members;
        if (out.first_stage[gens[k]] < 0) {
            out.first_stage[gens[k]] = static_cast<int>(k + 1);
            out.expr[gens[k]] = {g.identity(), k};
            members.push_back(gens[k]);
            work.push_back(gens[k]);
        }
        while (!work.empty()) {
            uint32_t x = work.back();
            work.pop_back();
            for (uint32_t slot = 0; slot <= k; ++slot) {
                uint32_t y = g.mul(x, gens[slot]);
                if (out.first_stage[y] < 0) {
                    out.first_stage[y] = static_cast<int>(k + 1);
                    out.expr[y] = {x, slot};
                    members.push_back(y);
                    work.push_back(y);
                }
            }
        }
        std::vector<uint32_t> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        out.stage_members.push_back(std::move(sorted));
    }
    return out;
}

std::vector<uint32_t> greedy_generators(const Group& g) {
    std::vector<bool> in(g.order(), false);
    in[g.identity()] = true;
    uint32_t covered = 1;
    std::vector<uint32_t> gens;
    std::vector<uint32_t> members{g.identity()};
    while (covered < g.order()) {
        uint32_t next = 0;
        while (in[next]) ++next;
        gens.push_back(next);
        std::vector<uint32_t> work{next};
        in[next] = true;
        ++covered;
        members.push_back(next);
        while (!work.empty()) {
            uint32_t x = work.back();
            work.pop_back();
            for (size_t i = 0; i < members.size(); ++i) {
                uint32_t y = g.mul(x, members[i]);
                if (!in[y]) {
                    in[y] = true;
                    ++covered;
                    members.push_back(y);
                    work.push_back(y);
                }
                uint32_t z = g.mul(members[i], x);
                if (!in[z]) {
                    in[z] = true;
                    ++covered;
                    members.push_back(z);
                    work.push_back(z);
                }
            }
        }
    }
    return gens;
}

bool map_consistent_on(const Group& a, const Group& b, const StagedClosure& sc,
                       const std::vector<uint32_t>& images, uint32_t stage,
                       std::vector<uint32_t>& phi) {
    const auto& members = sc.stage_members[stage - 1];
    // Evaluate the expressions bottom-up; members of earlier stages come
    // first in discovery, so iterate by discovery via expr recursion.
    phi.assign(a.order(), UINT32_MAX);
    phi[a.identity()] = b.identity();
    // Repeated passes are at most |members| deep; expressions form a tree
    // rooted at the identity, so one pass in discovery order suffices if we
    // resolve parents recursively.
    std::vector<uint32_t> stack;
    for (uint32_t m : members) {
        uint32_t x = m;
        stack.clear();
        while (phi[x] == UINT32_MAX) {
            stack.push_back(x);
            x = sc.expr[x].parent;
        }
        while (!stack.empty()) {
            uint32_t y = stack.back();
            stack.pop_back();
            phi[y] = b.mul(phi[sc.expr[y].parent], images[sc.expr[y].gen_slot]);
        }
    }
    // Injectivity on the partial subgroup.
    std::set<uint32_t> image_set;
    for (uint32_t m : members) image_set.insert(phi[m]);
    if (image_set.size() != members.size()) return false;
    // Multiplicativity on the partial subgroup.
    for (uint32_t x : members)
        for (uint32_t y : members)
            if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    // Orders must match.
    for (uint32_t x : members)
        if (a.element_order(x) != b.element_order(phi[x])) return false;
    return true;
}

bool iso_backtrack(const Group& a, const Group& b, const StagedClosure& sc,
                   const std::vector<uint32_t>& gens,
                   const std::vector<std::vector<uint32_t>>& candidates,
                   std::vector<uint32_t>& images, uint32_t slot) {
    if (slot == gens.size()) return true;
    std::vector<uint32_t> phi;
    for (uint32_t cand : candidates[slot]) {
        images[slot] = cand;
        if (map_consistent_on(a, b, sc, images, slot + 1, phi) &&
            iso_backtrack(a, b, sc, gens, candidates, images, slot + 1))
            return true;
    }
    return false;
}

std::vector<uint64_t> class_size_histogram(const GroupPtr& g) {
    std::vector<uint64_t> sizes;
    for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

bool is_isomorphic_small(const GroupPtr& a, const GroupPtr& b, uint32_t cap) {
    if (a->order() != b->order() || a->prime() != b->prime()) return false;
    if (a->order() > cap) throw cap_exceeded("is_isomorphic_small: order over cap");
    std::vector<uint32_t> ord_a, ord_b;
    for (uint32_t x = 0; x < a->order(); ++x) ord_a.push_back(a->element_order(x));
    for (uint32_t x = 0; x < b->order(); ++x) ord_b.push_back(b->element_order(x));
    std::sort(ord_a.begin(), ord_a.end());
    std::sort(ord_b.begin(), ord_b.end());
    if (ord_a != ord_b) return false;
    bool ab_a = a->is_abelian(), ab_b = b->is_abelian();
    if (ab_a != ab_b) return false;
    if (ab_a)
        return abelian_type(Subgroup::full(a)) == abelian_type(Subgroup::full(b));
    if (class_size_histogram(a) != class_size_histogram(b)) return false;
    if (center(a).order() != center(b).order()) return false;
    if (derived_subgroup(a).order() != derived_subgroup(b).order()) return false;

    std::vector<uint32_t> gens = greedy_generators(*a);
    StagedClosure sc = staged_closure(*a, gens);
    auto classes_b = conjugacy_classes(b);
    std::vector<uint32_t> class_size_b(b->order());
    for (const auto& c : classes_b)
        for (uint32_t m : c) class_size_b[m] = static_cast<uint32_t>(c.size());
    auto classes_a = conjugacy_classes(a);
    std::vector<uint32_t> class_size_a(a->order());
    for (const auto& c : classes_a)
        for (uint32_t m : c) class_size_a[m] = static_cast<uint32_t>(c.size());

    std::vector<std::vector<uint32_t>> candidates(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        for (uint32_t y = 0; y < b->order(); ++y)
            if (b->element_order(y) == a->element_order(gens[k]) &&
                class_size_b[y] == class_size_a[gens[k]])
                candidates[k].push_back(y);
        if (candidates[k].empty()) return false;
    }
    std::vector<uint32_t> images(gens.size(), 0);
    return iso_backtrack(*a, *b, sc, gens, candidates, images, 0);
}

namespace {

std::vector<uint32_t> order_p_elements(const Group& g) {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < g.order(); ++x)
        if (x != g.identity() && g.element_order(x) == g.prime()) out.push_back(x);
    return out;
}

} // namespace

std::map<uint32_t, uint32_t> maximal_elementary_abelian_classes(const GroupPtr& g) {
    const uint32_t p = g->prime();
    if (g->is_abelian()) {
        Subgroup e = omega(Subgroup::full(g), 1);
        return {{log_p_exact(p, e.order(), "maximal_elementary_abelian_classes"), 1}};
    }
    std::vector<uint32_t> invollike = order_p_elements(*g);
    std::map<std::vector<uint32_t>, bool> seen; // member set -> is maximal
    std::vector<std::vector<uint32_t>> queue;
    for (uint32_t x : invollike) {
        auto s = subgroup_closure(g, {x}).members();
        if (seen.emplace(s, false).second) queue.push_back(s);
    }
    size_t processed = 0;
    while (processed < queue.size()) {
        if (queue.size() > 200000)
            throw cap_exceeded("maximal_elementary_abelian_classes: too many subgroups");
        std::vector<uint32_t> s = queue[processed++];
        bool extensible = false;
        for (uint32_t x : invollike) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            bool commutes = true;
            for (uint32_t m : s)
                if (g->mul(x, m) != g->mul(m, x)) {
                    commutes = false;
                    break;
                }
            if (!commutes) continue;
            extensible = true;
            std::vector<uint32_t> gens = s;
            gens.push_back(x);
            auto bigger = subgroup_closure(g, gens).members();
            if (seen.emplace(bigger, false).second) queue.push_back(bigger);
        }
        if (!extensible) seen[s] = true;
    }
    // Conjugacy classes of the maximal ones.
    std::set<std::vector<uint32_t>> maximal;
    for (const auto& [members, is_max] : seen)
        if (is_max) maximal.insert(members);
    std::map<uint32_t, uint32_t> counts;
    std::set<std::vector<uint32_t>> used;
    for (const auto& start : maximal) {
        if (used.count(start)) continue;
        std::vector<std::vector<uint32_t>> work{start};
        used.insert(start);
        while (!work.empty()) {
            auto s = std::move(work.back());
            work.pop_back();
            for (uint32_t t : g->generators()) {
                std::vector<uint32_t> conj_set;
                conj_set.reserve(s.size());
                for (uint32_t m : s) conj_set.push_back(g->conj(m, t));
                std::sort(conj_set.begin(), conj_set.end());
                if (used.insert(conj_set).second) work.push_back(conj_set);
            }
        }
        counts[log_p_exact(p, static_cast<uint64_t>(start.size()),
                           "maximal_elementary_abelian_classes")] += 1;
    }
    if (counts.empty()) counts[0] = 1; // trivial group
    return counts;
}

uint32_t cyclic_subgroup_class_count(const GroupPtr& g) {
    std::set<std::vector<uint32_t>> cyclics;
    for (uint32_t x = 0; x < g->order(); ++x) {
        std::vector<uint32_t> members;
        uint32_t y = g->identity();
        do {
            members.push_back(y);
            y = g->mul(y, x);
        } while (y != g->identity());
        std::sort(members.begin(), members.end());
        cyclics.insert(std::move(members));
    }
    std::set<std::vector<uint32_t>> used;
    uint32_t classes = 0;
    for (const auto& start : cyclics) {
        if (used.count(start)) continue;
        ++classes;
        std::vector<std::vector<uint32_t>> work{start};
        used.insert(start);
        while (!work.empty()) {
            auto s = std::move(work.back());
            work.pop_back();
            for (uint32_t t : g->generators()) {
                std::vector<uint32_t> conj_set;
                conj_set.reserve(s.size());
                for (uint32_t m : s) conj_set.push_back(g->conj(m, t));
                std::sort(conj_set.begin(), conj_set.end());
                if (used.insert(conj_set).second) work.push_back(conj_set);
            }
        }
    }
    return classes;
}

SubgroupCounts count_subgroups(const GroupPtr& g, uint32_t cap) {
    if (g->order() > cap) throw cap_exceeded("count_subgroups: order over cap");
    std::set<std::vector<uint32_t>> seen;
    std::vector<std::vector<uint32_t>> queue;
    auto push = [&](std::vector<uint32_t> s) {
        if (seen.insert(s).second) queue.push_back(std::move(s));
    };
    push(Subgroup::trivial(g).members());
    size_t processed = 0;
    while (processed < queue.size()) {
        std::vector<uint32_t> s = queue[processed++];
        for (uint32_t x = 0; x < g->order(); ++x) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            std::vector<uint32_t> gens = s;
            gens.push_back(x);
            push(subgroup_closure(g, gens).members());
        }
    }
    SubgroupCounts out;
    out.subgroups = seen.size();
    std::set<std::vector<uint32_t>> used;
    for (const auto& start : seen) {
        if (used.count(start)) continue;
        ++out.subgroup_classes;
        std::vector<std::vector<uint32_t>> work{start};
        used.insert(start);
        while (!work.empty()) {
            auto s = std::move(work.back());
            work.pop_back();
            for (uint32_t t : g->generators()) {
                std::vector<uint32_t> conj_set;
                conj_set.reserve(s.size());
                for (uint32_t m : s) conj_set.push_back(g->conj(m, t));
                std::sort(conj_set.begin(), conj_set.end());
                if (used.insert(conj_set).second) work.push_back(conj_set);
            }
        }
    }
    out.cyclic_subgroup_classes = cyclic_subgroup_class_count(g);
    return out;
}

} // namespace modisom
