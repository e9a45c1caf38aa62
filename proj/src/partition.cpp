#include "prym/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace prym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p < 1) throw invalid_input("partition parts must be positive");
        size_ += p;
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim spaces
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) {
            if (parts.empty() && in.eof()) break;
            throw invalid_input("empty part in partition literal: " + text);
        }
        token = token.substr(b, e - b + 1);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw invalid_input("bad partition literal: " + text);
        }
        if (used != token.size())
            throw invalid_input("bad partition literal: " + text);
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(parts_[j]);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw invalid_input("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = std::min(remaining, max_part); first >= 1; --first) {
            current.push_back(first);
            gen(remaining - first, first);
            current.pop_back();
        }
    };
    gen(n, n == 0 ? 1 : n);
    return out;
}

Integer centralizer_order(const Partition& p) {
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    Integer z = 1;
    for (auto [value, m] : mult) {
        z *= factorial(m);
        z *= int_pow(Integer(value), static_cast<unsigned long>(m));
    }
    return z;
}

Integer conjugacy_class_size(const Partition& p) {
    return factorial(p.size()) / centralizer_order(p);
}

}  // namespace prym
