#include "prym/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "prym/characters.hpp"

namespace prym {

namespace {

constexpr int kMaxD = 16;  // storage bound; the oracle cap is kMaxOracleDegree
static_assert(kMaxOracleDegree < kMaxD);

// Permutation of {0..n-1}, stored by images. Product convention:
// (p * q)(i) = q(p(i)), i.e. apply p first.
struct Perm {
    std::array<uint8_t, kMaxD> img{};
    uint8_t n = 0;

    static Perm identity(int n) {
        Perm p;
        p.n = static_cast<uint8_t>(n);
        for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        return p;
    }
    uint8_t operator()(uint8_t i) const { return img[i]; }
    friend bool operator==(const Perm&, const Perm&) = default;
};

Perm multiply(const Perm& p, const Perm& q) {
    Perm r;
    r.n = p.n;
    for (uint8_t i = 0; i < p.n; ++i) r.img[i] = q.img[p.img[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r;
    r.n = p.n;
    for (uint8_t i = 0; i < p.n; ++i) r.img[p.img[i] & (kMaxD - 1)] = i;
    return r;
}

Perm conjugate(const Perm& x, const Perm& s) {  // s^{-1} x s under our product
    Perm r;
    r.n = x.n;
    const Perm si = inverse(s);
    for (uint8_t i = 0; i < x.n; ++i) r.img[i] = s.img[x.img[si.img[i]]];
    return r;
}

int cycle_count(const Perm& p) {
    std::array<bool, kMaxD> seen{};
    int cycles = 0;
    for (uint8_t i = 0; i < p.n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        uint8_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p.img[j];
        }
    }
    return cycles;
}

Partition cycle_type(const Perm& p) {
    std::array<bool, kMaxD> seen{};
    std::vector<int> parts;
    for (uint8_t i = 0; i < p.n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        uint8_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p.img[j];
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

bool has_cycle_type(const Perm& p, const Partition& mu) {
    return cycle_type(p) == mu;
}

const std::vector<Perm>& all_perms(int d) {
    static std::map<int, std::vector<Perm>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<uint8_t> images(static_cast<size_t>(d));
    std::iota(images.begin(), images.end(), uint8_t{0});
    std::vector<Perm> perms;
    do {
        Perm p;
        p.n = static_cast<uint8_t>(d);
        std::copy(images.begin(), images.end(), p.img.begin());
        perms.push_back(p);
    } while (std::next_permutation(images.begin(), images.end()));
    return cache.emplace(d, std::move(perms)).first->second;
}

const std::vector<Perm>& conjugacy_class(int d, const Partition& mu) {
    static std::map<std::pair<int, std::vector<int>>, std::vector<Perm>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(d, mu.parts());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Perm> members;
    for (const Perm& p : all_perms(d))
        if (has_cycle_type(p, mu)) members.push_back(p);
    return cache.emplace(std::move(key), std::move(members)).first->second;
}

bool tuple_transitive(const std::vector<Perm>& tuple, int d) {
    if (d == 1) return true;
    std::array<uint8_t, kMaxD> parent{};
    for (int i = 0; i < d; ++i) parent[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    std::function<uint8_t(uint8_t)> find = [&](uint8_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = d;
    for (const Perm& p : tuple)
        for (uint8_t i = 0; i < d; ++i) {
            const uint8_t a = find(i);
            const uint8_t b = find(p.img[i]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    return components == 1;
}

void check_bound(const HurwitzProblem& p, const OracleConfig& config) {
    const int bound = std::min(config.degree_bound, kMaxOracleDegree);
    if (p.degree > bound)
        throw resource_limit("degree " + std::to_string(p.degree) +
                                 " exceeds the oracle degree bound " + std::to_string(bound),
                             bound);
}

// Profiles sorted so that the largest conjugacy class is solved for rather
// than enumerated. Reordering prescribed classes does not change any of the
// counts (adjacent classes swap via a conjugation-equivariant bijection that
// preserves the product and the generated subgroup).
std::vector<Partition> enumeration_order(const HurwitzProblem& p) {
    std::vector<Partition> profiles = p.profiles;
    std::stable_sort(profiles.begin(), profiles.end(),
                     [](const Partition& a, const Partition& b) {
                         return conjugacy_class_size(a) < conjugacy_class_size(b);
                     });
    return profiles;
}

struct Enumeration {
    int d;
    std::vector<Partition> profiles;                    // enumeration order
    std::vector<const std::vector<Perm>*> classes;      // aligned with profiles
    std::vector<long> budget_after;                     // sum of (d - parts) over profiles > j
    std::vector<Perm> tuple;                            // handles + profiles, filled in
    size_t handles = 0;

    // visit(tuple) is called for every relation-satisfying tuple.
    template <typename Visitor>
    void run(size_t depth, const Perm& partial, Visitor&& visit) {
        const size_t n = profiles.size();
        if (n == 0) {
            if (partial == Perm::identity(d)) visit(tuple);
            return;
        }
        if (depth + 1 == n) {
            Perm last = inverse(partial);
            if (has_cycle_type(last, profiles[depth])) {
                tuple[handles + depth] = last;
                visit(tuple);
            }
            return;
        }
        for (const Perm& x : *classes[depth]) {
            const Perm next = multiply(partial, x);
            const int needed = d - cycle_count(next);
            const long budget = budget_after[depth];
            if (needed > budget || ((budget - needed) & 1L)) continue;
            tuple[handles + depth] = x;
            run(depth + 1, next, visit);
        }
    }
};

// Runs `visit` over every monodromy tuple of the problem. For genus 1 the two
// handle permutations occupy tuple[0], tuple[1]. Sharding (if threads > 1)
// splits the outermost enumerated loop; `make_visitor(shard)` provides a
// per-shard callback.
template <typename VisitorFactory>
void enumerate_tuples(const HurwitzProblem& p, const OracleConfig& config,
                      VisitorFactory&& make_visitor) {
    const int d = p.degree;
    Enumeration base;
    base.d = d;
    base.profiles = enumeration_order(p);
    const size_t n = base.profiles.size();
    base.classes.resize(n);
    for (size_t j = 0; j < n; ++j) base.classes[j] = &conjugacy_class(d, base.profiles[j]);
    base.budget_after.assign(n, 0);
    {
        // budget_after[j] = sum over t > j of (d - length of profile t)
        long acc = 0;
        for (size_t j = n; j-- > 0;) {
            base.budget_after[j] = acc;
            acc += d - base.profiles[j].length();
        }
    }
    base.handles = p.base_genus == 1 ? 2 : 0;
    base.tuple.assign(base.handles + n, Perm::identity(d));

    const int threads = std::max(1, config.threads);

    if (p.base_genus == 0) {
        if (n <= 1) {
            auto visit = make_visitor(0);
            Enumeration e = base;
            e.run(0, Perm::identity(d), visit);
            return;
        }
        const std::vector<Perm>& outer = *base.classes[0];
        auto work = [&](int shard, size_t begin, size_t end) {
            auto visit = make_visitor(shard);
            Enumeration e = base;
            for (size_t idx = begin; idx < end; ++idx) {
                const Perm& x = outer[idx];
                e.tuple[0] = x;
                const int needed = d - cycle_count(x);
                if (needed > e.budget_after[0] || ((e.budget_after[0] - needed) & 1L)) continue;
                e.run(1, x, visit);
            }
        };
        if (threads == 1 || outer.size() < 2) {
            work(0, 0, outer.size());
        } else {
            std::vector<std::thread> pool;
            const size_t chunk = (outer.size() + static_cast<size_t>(threads) - 1) /
                                 static_cast<size_t>(threads);
            for (int t = 0; t < threads; ++t) {
                const size_t b = std::min(outer.size(), static_cast<size_t>(t) * chunk);
                const size_t e2 = std::min(outer.size(), b + chunk);
                if (b < e2) pool.emplace_back(work, t, b, e2);
            }
            for (auto& th : pool) th.join();
        }
        return;
    }

    // Genus 1: enumerate the handle pair, then extend by the profiles.
    const std::vector<Perm>& sd = all_perms(d);
    auto work = [&](int shard, size_t begin, size_t end) {
        auto visit = make_visitor(shard);
        Enumeration e = base;
        for (size_t ia = begin; ia < end; ++ia) {
            const Perm& a = e.tuple[0] = sd[ia];
            const Perm a_inv = inverse(a);
            for (const Perm& b : sd) {
                e.tuple[1] = b;
                const Perm commutator =
                    multiply(multiply(a, b), multiply(a_inv, inverse(b)));
                e.run(0, commutator, visit);
            }
        }
    };
    if (threads == 1) {
        work(0, 0, sd.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk =
            (sd.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const size_t b = std::min(sd.size(), static_cast<size_t>(t) * chunk);
            const size_t e2 = std::min(sd.size(), b + chunk);
            if (b < e2) pool.emplace_back(work, t, b, e2);
        }
        for (auto& th : pool) th.join();
    }
}

std::string encode_tuple(const std::vector<Perm>& tuple, int d) {
    std::string out;
    out.reserve(tuple.size() * static_cast<size_t>(d));
    for (const Perm& p : tuple)
        for (int i = 0; i < d; ++i) out += static_cast<char>(p.img[static_cast<size_t>(i)]);
    return out;
}

std::vector<Perm> decode_tuple(const std::string& code, int d) {
    std::vector<Perm> tuple(code.size() / static_cast<size_t>(d));
    for (size_t t = 0; t < tuple.size(); ++t) {
        tuple[t].n = static_cast<uint8_t>(d);
        for (int i = 0; i < d; ++i)
            tuple[t].img[static_cast<size_t>(i)] =
                static_cast<uint8_t>(code[t * static_cast<size_t>(d) + static_cast<size_t>(i)]);
    }
    return tuple;
}

// ---- character path ------------------------------------------------------

std::string problem_key(const HurwitzProblem& p) {
    std::vector<Partition> sorted = p.profiles;
    std::sort(sorted.begin(), sorted.end());
    std::string key = std::to_string(p.degree) + ";" + std::to_string(p.base_genus);
    for (const auto& mu : sorted) key += "|" + mu.to_string();
    return key;
}

// All ways to pick a sub-multiset of `mu` with total `e`; returns
// (picked, complement) pairs, each pick appearing once.
std::vector<std::pair<Partition, Partition>> sub_partitions_of_size(const Partition& mu,
                                                                    int e) {
    std::vector<std::pair<int, int>> distinct;  // (value, multiplicity)
    for (int v : mu.parts())
        if (distinct.empty() || distinct.back().first != v)
            distinct.emplace_back(v, mu.multiplicity(v));
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> picked;
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (remaining == 0 || idx == distinct.size()) {
            if (remaining != 0) return;
            std::vector<int> rest;
            for (auto [v, m] : distinct) {
                int used = 0;
                for (int w : picked)
                    if (w == v) ++used;
                for (int t = used; t < m; ++t) rest.push_back(v);
            }
            out.emplace_back(Partition(picked), Partition(rest));
            return;
        }
        const auto [v, m] = distinct[idx];
        for (int take = 0; take <= m && take * v <= remaining; ++take) {
            for (int t = 0; t < take; ++t) picked.push_back(v);
            rec(idx + 1, remaining - take * v);
            for (int t = 0; t < take; ++t) picked.pop_back();
        }
    };
    rec(0, e);
    return out;
}

Integer frobenius_count(const HurwitzProblem& p);

Integer transitive_characters_memo(const HurwitzProblem& p,
                                   std::unordered_map<std::string, Integer>& memo) {
    const std::string key = problem_key(p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int d = p.degree;
    Integer total = frobenius_count(p);
    const size_t n = p.profiles.size();

    for (int e = 1; e < d; ++e) {
        // Distribute every profile across the sheet-1 block (size e) and the
        // complement; the block containing sheet 1 can be chosen C(d-1,e-1) ways.
        std::vector<std::vector<std::pair<Partition, Partition>>> choices(n);
        bool feasible = true;
        for (size_t j = 0; j < n && feasible; ++j) {
            choices[j] = sub_partitions_of_size(p.profiles[j], e);
            feasible = !choices[j].empty();
        }
        if (!feasible) continue;

        std::vector<size_t> pick(n, 0);
        const Integer ways = safe_binomial(d - 1, e - 1);
        while (true) {
            HurwitzProblem block{e, p.base_genus, {}};
            HurwitzProblem rest{d - e, p.base_genus, {}};
            for (size_t j = 0; j < n; ++j) {
                block.profiles.push_back(choices[j][pick[j]].first);
                rest.profiles.push_back(choices[j][pick[j]].second);
            }
            total -= ways * transitive_characters_memo(block, memo) * frobenius_count(rest);

            size_t j = 0;
            while (j < n && ++pick[j] == choices[j].size()) {
                pick[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
    }
    memo.emplace(key, total);
    return total;
}

Integer frobenius_count(const HurwitzProblem& p) {
    const int d = p.degree;
    const CharacterTable& table = CharacterTable::of_degree(d);
    const auto& labels = table.labels();
    const Integer order = factorial(d);

    std::vector<int> class_index(p.profiles.size());
    std::vector<Integer> class_size(p.profiles.size());
    for (size_t j = 0; j < p.profiles.size(); ++j) {
        if (p.profiles[j].size() != d)
            throw invalid_input("profile size differs from degree");
        class_index[j] = table.index_of(p.profiles[j]);
        class_size[j] = conjugacy_class_size(p.profiles[j]);
    }

    const int identity_class =
        table.index_of(Partition(std::vector<int>(static_cast<size_t>(d), 1)));
    Rational total = 0;
    for (size_t li = 0; li < labels.size(); ++li) {
        const Integer f = table.value(static_cast<int>(li), identity_class);
        Rational term(f * f);
        if (p.base_genus == 1) {
            const Rational handle = make_rational(order, f);
            term *= handle * handle;
        }
        for (size_t j = 0; j < p.profiles.size(); ++j)
            term *= make_rational(class_size[j] * table.value(static_cast<int>(li),
                                                              class_index[j]),
                                  f);
        total += term;
    }
    total /= Rational(order);
    return to_integer(total);
}

}  // namespace

HurwitzProblem::HurwitzProblem(int d, int genus, std::vector<Partition> profs)
    : degree(d), base_genus(genus), profiles(std::move(profs)) {
    if (degree < 1) throw invalid_input("degree must be positive");
    if (base_genus != 0 && base_genus != 1)
        throw invalid_input("base genus must be 0 or 1");
    for (const auto& mu : profiles)
        if (mu.size() != degree)
            throw invalid_input("profile " + mu.to_string() + " does not partition " +
                                std::to_string(degree));
}

HurwitzProblem HurwitzProblem::parse(const std::string& literal) {
    int degree = 0;
    int genus = -1;
    bool saw_degree = false;
    std::vector<Partition> profiles;
    std::istringstream in(literal);
    std::string field;
    auto strip = [](std::string s) {
        const size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, field, ';')) {
        field = strip(field);
        if (field.empty()) continue;
        const size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw invalid_input("bad field in problem literal: " + field);
        const std::string key = strip(field.substr(0, eq));
        const std::string value = strip(field.substr(eq + 1));
        auto parse_int = [&](const std::string& text) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(text, &used);
            } catch (const std::exception&) {
                throw invalid_input("bad integer in problem literal: " + text);
            }
            if (used != text.size())
                throw invalid_input("bad integer in problem literal: " + text);
            return v;
        };
        if (key == "d") {
            degree = parse_int(value);
            saw_degree = true;
        } else if (key == "g") {
            genus = parse_int(value);
        } else if (key == "profiles") {
            if (value.empty()) continue;
            std::istringstream profs(value);
            std::string one;
            while (std::getline(profs, one, '|')) profiles.push_back(Partition::parse(strip(one)));
        } else {
            throw invalid_input("unknown field in problem literal: " + key);
        }
    }
    if (!saw_degree || genus < 0)
        throw invalid_input("problem literal must set d and g: " + literal);
    return HurwitzProblem(degree, genus, std::move(profiles));
}

std::string HurwitzProblem::to_string() const {
    std::string out = "d=" + std::to_string(degree) + "; g=" + std::to_string(base_genus) +
                      "; profiles=";
    for (size_t j = 0; j < profiles.size(); ++j) {
        if (j) out += '|';
        out += profiles[j].to_string();
    }
    return out;
}

TupleCounts count_tuples_oracle(const HurwitzProblem& p, const OracleConfig& config) {
    check_bound(p, config);
    const int d = p.degree;
    const int threads = std::max(1, config.threads);
    std::vector<Integer> all(static_cast<size_t>(threads), 0);
    std::vector<Integer> transitive(static_cast<size_t>(threads), 0);
    enumerate_tuples(p, config, [&](int shard) {
        return [&, shard](const std::vector<Perm>& tuple) {
            all[static_cast<size_t>(shard)] += 1;
            if (tuple_transitive(tuple, d)) transitive[static_cast<size_t>(shard)] += 1;
        };
    });
    TupleCounts counts{0, 0};
    for (int t = 0; t < threads; ++t) {
        counts.all += all[static_cast<size_t>(t)];
        counts.transitive += transitive[static_cast<size_t>(t)];
    }
    return counts;
}

Integer count_tuples_bruteforce(const HurwitzProblem& p, bool require_transitive,
                                const OracleConfig& config) {
    const TupleCounts counts = count_tuples_oracle(p, config);
    return require_transitive ? counts.transitive : counts.all;
}

Integer count_tuples_frobenius(const HurwitzProblem& p) { return frobenius_count(p); }

Integer transitive_count_characters(const HurwitzProblem& p) {
    static std::unordered_map<std::string, Integer> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return transitive_characters_memo(p, memo);
}

Rational connected_weighted_count(const HurwitzProblem& p, Backend backend,
                                  const OracleConfig& config) {
    const Integer transitive = backend == Backend::oracle
                                   ? count_tuples_oracle(p, config).transitive
                                   : transitive_count_characters(p);
    return make_rational(transitive, factorial(p.degree));
}

std::vector<CoverClassOrbit> cover_class_orbits(const HurwitzProblem& p,
                                                const OracleConfig& config) {
    check_bound(p, config);
    const int d = p.degree;
    std::unordered_set<std::string> pool;
    enumerate_tuples(p, OracleConfig{config.degree_bound, 1}, [&](int) {
        return [&](const std::vector<Perm>& tuple) {
            if (tuple_transitive(tuple, d)) pool.insert(encode_tuple(tuple, d));
        };
    });

    const std::vector<Perm>& sd = all_perms(d);
    std::vector<CoverClassOrbit> orbits;
    while (!pool.empty()) {
        const std::vector<Perm> rep = decode_tuple(*pool.begin(), d);
        std::unordered_set<std::string> orbit;
        Integer stabilizer = 0;
        for (const Perm& s : sd) {
            std::vector<Perm> image(rep.size());
            for (size_t t = 0; t < rep.size(); ++t) image[t] = conjugate(rep[t], s);
            if (image == rep) stabilizer += 1;
            orbit.insert(encode_tuple(image, d));
        }
        for (const std::string& member : orbit) pool.erase(member);
        orbits.push_back(CoverClassOrbit{Integer(orbit.size()), stabilizer});
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const CoverClassOrbit& a, const CoverClassOrbit& b) { return a.size > b.size; });
    return orbits;
}

Integer count_cover_classes(const HurwitzProblem& p, const OracleConfig& config) {
    return Integer(cover_class_orbits(p, config).size());
}

}  // namespace prym
