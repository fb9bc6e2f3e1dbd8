#include "hilbcert/ideal.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace hilbcert {

MultigradedIdeal::MultigradedIdeal(RingSpec ring,
                                   std::vector<RingElement> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
    generator_degrees_.reserve(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const RingElement& g = generators_[i];
        if (g.is_zero())
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " is zero");
        auto deg = ring_.homogeneous_degree(g);
        if (!deg)
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " is not homogeneous");
        generator_degrees_.push_back(std::move(*deg));
    }
    is_monomial_ = std::all_of(generators_.begin(), generators_.end(),
                               [](const RingElement& g) {
                                   return g.is_unit_monomial();
                               });
    lifted_set_is_monomial_ =
        std::all_of(generators_.begin(), generators_.end(),
                    [](const RingElement& g) { return g.terms().size() == 1; }) &&
        std::all_of(ring_.relations().begin(), ring_.relations().end(),
                    [](const RingElement& r) { return r.terms().size() == 1; });
}

bool MultigradedIdeal::is_member(const Monomial& m) const {
    if (!is_monomial_)
        throw std::invalid_argument(
            "is_member requires a monomial ideal (all generators single terms "
            "with coefficient 1)");
    if (m.exps.size() != ring_.var_count())
        throw std::invalid_argument("monomial length mismatch");
    for (const RingElement& g : generators_)
        if (divides(Monomial(g.terms().front().exps), m)) return true;
    return false;
}

Multidegree MultigradedIdeal::generation_degree_bound() const {
    Multidegree bound = Multidegree::zeros(ring_.factor_count());
    for (const Multidegree& d : generator_degrees_)
        bound = componentwise_max(bound, d);
    return bound;
}

Multidegree MultigradedIdeal::lifted_generation_bound() const {
    Multidegree bound = generation_degree_bound();
    for (const RingElement& r : ring_.relations())
        bound = componentwise_max(bound, *ring_.homogeneous_degree(r));
    return bound;
}

std::vector<RingElement> lifted_generators(const MultigradedIdeal& ideal) {
    std::vector<RingElement> gens = ideal.ring().relations();
    gens.insert(gens.end(), ideal.generators().begin(),
                ideal.generators().end());
    return gens;
}

// ---------------------------------------------------------------------------
// Monomial counting path: standard monomials of multidegree e outside the
// ideal, by deletion/colon recursion on exponent vectors.
// ---------------------------------------------------------------------------

namespace {

using Exps = std::vector<std::uint32_t>;

struct CountState {
    std::uint64_t nodes_left;

    void consume() {
        if (nodes_left == 0)
            throw budget_error("monomial counting recursion exceeded budget");
        --nodes_left;
    }
};

Multidegree exps_degree(const std::vector<std::uint32_t>& blocks,
                        const Exps& g) {
    Multidegree d = Multidegree::zeros(blocks.size());
    std::size_t v = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::uint32_t j = 0; j <= blocks[i]; ++j, ++v) d[i] += g[v];
    return d;
}

Int free_dimension(const std::vector<std::uint32_t>& blocks,
                   const Multidegree& e) {
    Int dim = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        dim *= binomial(blocks[i] + Int(static_cast<unsigned long>(e[i])),
                        blocks[i]);
    return dim;
}

bool exps_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Drops generators divisible by another generator; keeps one copy of equals.
void minimalize(std::vector<Exps>& gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exps> out;
    out.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && exps_divides(gens[j], gens[i]))
                redundant = gens[j] != gens[i];
        if (!redundant) out.push_back(gens[i]);
    }
    gens.swap(out);
}

struct StateKeyHash {
    std::size_t operator()(const std::string& k) const {
        return std::hash<std::string>{}(k);
    }
};

std::string make_key(const std::vector<std::uint32_t>& blocks,
                     const std::vector<Exps>& gens, const Multidegree& e) {
    std::string k;
    auto push = [&](const void* p, std::size_t n) {
        k.append(static_cast<const char*>(p), n);
    };
    push(blocks.data(), blocks.size() * sizeof(std::uint32_t));
    push(e.entries.data(), e.entries.size() * sizeof(std::uint64_t));
    for (const Exps& g : gens) {
        k.push_back('|');
        push(g.data(), g.size() * sizeof(std::uint32_t));
    }
    return k;
}

using Memo = std::unordered_map<std::string, Int, StateKeyHash>;

// Index of the single variable of a total-degree-1 exponent vector, or npos.
std::size_t linear_variable(const Exps& g) {
    std::size_t var = std::string::npos;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g[v] == 0) continue;
        if (g[v] > 1 || var != std::string::npos) return std::string::npos;
        var = v;
    }
    return var;
}

Int count_standard(std::vector<std::uint32_t> blocks, std::vector<Exps> gens,
                   Multidegree e, CountState& state, Memo& memo) {
    state.consume();

    // Prune generators that cannot divide a monomial of degree e, and catch
    // the unit ideal.
    std::erase_if(gens, [&](const Exps& g) {
        return !leq_componentwise(exps_degree(blocks, g), e);
    });
    for (const Exps& g : gens)
        if (std::all_of(g.begin(), g.end(), [](std::uint32_t x) { return !x; }))
            return 0;

    // A linear generator x[i][j] deletes its variable from the ring: every
    // surviving monomial avoids it, and generators involving it never divide
    // one. A deleted point factor (n_i = 0) kills all degrees with e_i >= 1.
    for (std::size_t gi = 0; gi < gens.size();) {
        std::size_t var = linear_variable(gens[gi]);
        if (var == std::string::npos) {
            ++gi;
            continue;
        }
        std::size_t block = 0, offset = 0;
        while (offset + blocks[block] + 1 <= var) {
            offset += blocks[block] + 1;
            ++block;
        }
        if (blocks[block] == 0) return 0;  // pruning left e[block] >= 1
        blocks[block] -= 1;
        std::vector<Exps> kept;
        kept.reserve(gens.size() - 1);
        for (std::size_t gj = 0; gj < gens.size(); ++gj) {
            if (gj == gi || gens[gj][var] > 0) continue;
            Exps g = gens[gj];
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(var));
            kept.push_back(std::move(g));
        }
        gens.swap(kept);
        gi = 0;
    }

    if (gens.empty()) return free_dimension(blocks, e);
    minimalize(gens);

    std::string key = make_key(blocks, gens, e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Pivot: a generator of maximal total degree tends to collapse fastest.
    std::size_t pivot = 0;
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::uint64_t total = 0;
        for (std::uint32_t x : gens[i]) total += x;
        if (total >= best) {
            best = total;
            pivot = i;
        }
    }
    Exps p = gens[pivot];
    std::vector<Exps> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != pivot) rest.push_back(gens[i]);

    Multidegree pdeg = exps_degree(blocks, p);
    Multidegree shifted = e;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= pdeg[i];

    std::vector<Exps> colon;
    colon.reserve(rest.size());
    for (const Exps& g : rest) {
        Exps q = g;
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] = q[i] > p[i] ? q[i] - p[i] : 0;
        colon.push_back(std::move(q));
    }

    Int kept = count_standard(blocks, std::move(rest), e, state, memo);
    Int dropped = count_standard(std::move(blocks), std::move(colon),
                                 std::move(shifted), state, memo);
    Int result = kept - dropped;
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rank path: sparse fraction-free elimination on the generator-multiple
// matrix, columns keyed by monomial index in the canonical order.
// ---------------------------------------------------------------------------

namespace {

struct ExpsHash {
    std::size_t operator()(const Exps& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using SparseRow = std::vector<std::pair<std::uint32_t, Int>>;  // sorted by col

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sgn(row.front().second) < 0)
        for (auto& [c, v] : row) v = -v;
}

// pivot_lead * row - row_lead * pivot, leading column cancelled.
SparseRow eliminate_leading(const SparseRow& row, const SparseRow& pivot) {
    const Int& a = pivot.front().second;
    const Int& b = row.front().second;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j >= pivot.size() ||
            (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i >= row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            Int v = a * row[i].second - b * pivot[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

class SparseEliminator {
public:
    using RowValue = Int;

    void add_row(SparseRow row) {
        make_primitive(row);
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            row = eliminate_leading(row, it->second);
            make_primitive(row);
        }
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::unordered_map<std::uint32_t, SparseRow> pivots_;
};

constexpr std::uint64_t kRankPrimes[] = {
    1073741827ull, 1073741831ull, 1073741833ull, 1073741839ull,
    1073741843ull, 1073741857ull, 1073741891ull, 1073741909ull,
    1073741939ull, 1073741953ull, 1073741969ull, 1073741971ull,
    1073741987ull, 1073741993ull, 1073742037ull, 1073742053ull};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    std::uint64_t r = 1;
    for (a %= p; n; n >>= 1) {
        if (n & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
    }
    return r;
}

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

class ModEliminator {
public:
    using RowValue = std::uint64_t;

    explicit ModEliminator(std::uint64_t p) : p_(p) {}

    void add_row(ModRow row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                std::uint64_t inv = powmod(row.front().second, p_ - 2, p_);
                for (auto& [c, v] : row) v = mulmod(v, inv, p_);
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            const ModRow& pivot = it->second;  // normalized, lead == 1
            std::uint64_t f = row.front().second;
            ModRow out;
            out.reserve(row.size() + pivot.size());
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < pivot.size()) {
                if (j >= pivot.size() ||
                    (i < row.size() && row[i].first < pivot[j].first)) {
                    out.push_back(row[i]);
                    ++i;
                } else if (i >= row.size() || pivot[j].first < row[i].first) {
                    out.emplace_back(pivot[j].first,
                                     p_ - mulmod(f, pivot[j].second, p_));
                    ++j;
                } else {
                    std::uint64_t v =
                        (row[i].second + p_ - mulmod(f, pivot[j].second, p_)) %
                        p_;
                    if (v) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    std::uint64_t p_;
    std::unordered_map<std::uint32_t, ModRow> pivots_;
};

// A generator scaled to integer coefficients (rows are scalar multiples of
// generators, so scaling preserves the row space).
struct PreparedGen {
    Multidegree degree;
    std::vector<std::pair<Exps, Int>> terms;
};

std::vector<PreparedGen> prepare_generators(const RingSpec& ring,
                                            const std::vector<RingElement>& gens,
                                            const Multidegree& e) {
    std::vector<PreparedGen> out;
    for (const RingElement& g : gens) {
        Multidegree dg = *ring.homogeneous_degree(g);
        if (!leq_componentwise(dg, e)) continue;
        Int scale = 1;
        for (const Term& t : g.terms())
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    t.coeff.get_den().get_mpz_t());
        PreparedGen pg{std::move(dg), {}};
        pg.terms.reserve(g.terms().size());
        for (const Term& t : g.terms())
            pg.terms.emplace_back(t.exps,
                                  Int(t.coeff.get_num() *
                                      (scale / t.coeff.get_den())));
        out.push_back(std::move(pg));
    }
    return out;
}

template <typename Eliminator, typename CoeffFn>
std::size_t rank_of_multiples(const RingSpec& ambient,
                              const std::vector<PreparedGen>& gens,
                              const Multidegree& e, std::uint64_t budget,
                              Eliminator& elim, const CoeffFn& coeff_of) {
    std::vector<Monomial> basis = enumerate_monomials(ambient, e, budget);
    budget -= basis.size();
    std::unordered_map<Exps, std::uint32_t, ExpsHash> index;
    index.reserve(basis.size() * 2);
    for (std::uint32_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i].exps, i);

    std::vector<std::pair<std::uint32_t, typename Eliminator::RowValue>> row;
    for (const PreparedGen& g : gens) {
        Multidegree shift = e;
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= g.degree[i];
        std::vector<Monomial> multipliers =
            enumerate_monomials(ambient, shift, budget);
        budget -= multipliers.size();
        for (const Monomial& u : multipliers) {
            row.clear();
            row.reserve(g.terms.size());
            for (const auto& [exps, coeff] : g.terms) {
                Exps prod = u.exps;
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += exps[i];
                row.emplace_back(index.at(prod), coeff_of(coeff));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) {
                          return a.first < b.first;
                      });
            elim.add_row(row);
        }
    }
    return elim.rank();
}

}  // namespace

Int hilbert_function_via_rank(const MultigradedIdeal& ideal,
                              const Multidegree& e, const EvalOptions& opts) {
    RingSpec ambient = ideal.ring().ambient();
    std::vector<PreparedGen> gens =
        prepare_generators(ideal.ring(), lifted_generators(ideal), e);
    Int dim = graded_piece_dimension(ambient, e);
    SparseEliminator elim;
    std::size_t rank = rank_of_multiples(ambient, gens, e, opts.budget, elim,
                                         [](const Int& c) { return c; });
    return dim - Int(static_cast<unsigned long>(rank));
}

Int hilbert_function_via_rank_modp(const MultigradedIdeal& ideal,
                                   const Multidegree& e,
                                   const EvalOptions& opts) {
    RingSpec ambient = ideal.ring().ambient();
    std::vector<PreparedGen> gens =
        prepare_generators(ideal.ring(), lifted_generators(ideal), e);
    Int dim = graded_piece_dimension(ambient, e);

    static thread_local std::mt19937_64 rng{std::random_device{}()};
    std::uint64_t p = kRankPrimes[rng() % std::size(kRankPrimes)];
    ModEliminator elim(p);
    Int pz(static_cast<unsigned long>(p));
    std::size_t rank = rank_of_multiples(
        ambient, gens, e, opts.budget, elim, [&](const Int& c) {
            Int r = c % pz;
            if (r < 0) r += pz;
            return static_cast<std::uint64_t>(r.get_ui());
        });
    return dim - Int(static_cast<unsigned long>(rank));
}

// ---------------------------------------------------------------------------

Int MultigradedIdeal::evaluate(const Multidegree& e,
                               const EvalOptions& opts) const {
    if (lifted_set_is_monomial_) {
        std::vector<Exps> gens;
        for (const RingElement& g : lifted_generators(*this))
            gens.push_back(g.terms().front().exps);
        CountState state{opts.budget};
        Memo memo;
        return count_standard(ring_.blocks(), std::move(gens), e, state, memo);
    }
    return hilbert_function_via_rank(*this, e, opts);
}

Int MultigradedIdeal::hilbert_function(const Multidegree& e,
                                       const EvalOptions& opts) const {
    if (e.size() != ring_.factor_count())
        throw std::invalid_argument("degree " + to_string(e) +
                                    " does not match factor count " +
                                    std::to_string(ring_.factor_count()));
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (auto it = cache_->values.find(e.entries); it != cache_->values.end())
            return it->second;
    }
    Int value = evaluate(e, opts);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->values.emplace(e.entries, value);
    }
    return value;
}

HilbertValue MultigradedIdeal::hilbert_value(const Multidegree& e,
                                             const EvalOptions& opts) const {
    if (opts.allow_probabilistic && !lifted_set_is_monomial_) {
        Int v = hilbert_function_via_rank_modp(*this, e, opts);
        return HilbertValue{e, std::move(v), true};
    }
    return HilbertValue{e, hilbert_function(e, opts), false};
}

MultigradedIdeal permute_ideal(const MultigradedIdeal& ideal,
                               std::span<const std::size_t> perm) {
    RingSpec ring = permute_blocks(ideal.ring(), perm);
    std::vector<RingElement> gens;
    gens.reserve(ideal.generators().size());
    for (const RingElement& g : ideal.generators())
        gens.push_back(permute_element(ideal.ring(), g, perm));
    return MultigradedIdeal(std::move(ring), std::move(gens));
}

}  // namespace hilbcert
