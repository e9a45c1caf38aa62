#include "prym/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace prym {

namespace {

std::string memo_key(const std::vector<int>& shape, const std::vector<int>& mu) {
    std::string key;
    for (int p : shape) {
        key += std::to_string(p);
        key += ',';
    }
    key += '|';
    for (int p : mu) {
        key += std::to_string(p);
        key += ',';
    }
    return key;
}

// Murnaghan-Nakayama recursion on beta-numbers. Removes the first part of mu
// as a border strip in every possible way; the sign is (-1)^height where the
// height counts the beta values passed over.
Integer mn_recurse(const std::vector<int>& shape, const std::vector<int>& mu,
                   std::unordered_map<std::string, Integer>& memo) {
    if (shape.empty()) return mu.empty() ? 1 : 0;

    const std::string key = memo_key(shape, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int rows = static_cast<int>(shape.size());

    std::vector<int> beta(shape.begin(), shape.end());
    for (int j = 0; j < rows; ++j) beta[static_cast<size_t>(j)] += rows - 1 - j;

    Integer total = 0;
    for (int j = 0; j < rows; ++j) {
        const int target = beta[static_cast<size_t>(j)] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

        int height = 0;
        for (int k = 0; k < rows; ++k)
            if (beta[static_cast<size_t>(k)] > target && beta[static_cast<size_t>(k)] < beta[static_cast<size_t>(j)])
                ++height;

        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(j)] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nshape;
        for (int k = 0; k < rows; ++k) {
            const int part = nbeta[static_cast<size_t>(k)] - (rows - 1 - k);
            if (part > 0) nshape.push_back(part);
        }

        const Integer sub = mn_recurse(nshape, rest, memo);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo.emplace(key, total);
    return total;
}

std::unordered_map<std::string, Integer>& shared_memo() {
    static std::unordered_map<std::string, Integer> memo;
    return memo;
}

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Integer character_value(const CharacterQuery& q) {
    if (q.shape.size() != q.cycle_type.size())
        throw invalid_input("character query with mismatched sizes: shape of " +
                            std::to_string(q.shape.size()) + ", class of " +
                            std::to_string(q.cycle_type.size()));
    std::lock_guard<std::mutex> lock(memo_mutex());
    return mn_recurse(q.shape.parts(), q.cycle_type.parts(), shared_memo());
}

Integer dimension(const Partition& shape) {
    const int n = shape.size();
    if (n == 0) return 1;
    const auto& rows = shape.parts();
    std::vector<int> conjugate(static_cast<size_t>(rows[0]), 0);
    for (int r : rows)
        for (int c = 0; c < r; ++c) ++conjugate[static_cast<size_t>(c)];

    Integer hooks = 1;
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c)
            hooks *= (rows[r] - c) + (conjugate[static_cast<size_t>(c)] - static_cast<int>(r)) - 1;
    return factorial(n) / hooks;
}

CharacterTable::CharacterTable(int d) : degree_(d), labels_(partitions_of(d)) {
    values_.resize(labels_.size());
    std::lock_guard<std::mutex> lock(memo_mutex());
    for (size_t i = 0; i < labels_.size(); ++i) {
        values_[i].reserve(labels_.size());
        for (size_t j = 0; j < labels_.size(); ++j)
            values_[i].push_back(
                mn_recurse(labels_[i].parts(), labels_[j].parts(), shared_memo()));
    }
}

const CharacterTable& CharacterTable::of_degree(int d) {
    if (d < 0) throw invalid_input("character table of negative degree");
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    static std::mutex tables_mutex;
    std::lock_guard<std::mutex> lock(tables_mutex);
    auto it = tables.find(d);
    if (it == tables.end())
        it = tables.emplace(d, std::unique_ptr<CharacterTable>(new CharacterTable(d))).first;
    return *it->second;
}

int CharacterTable::index_of(const Partition& p) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == p) return static_cast<int>(i);
    throw invalid_input("partition " + p.to_string() + " does not have size " +
                        std::to_string(degree_));
}

const Integer& CharacterTable::value(const Partition& shape,
                                     const Partition& cycle_type) const {
    return value(index_of(shape), index_of(cycle_type));
}

}  // namespace prym
