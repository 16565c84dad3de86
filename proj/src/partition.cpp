#include "lhd/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lhd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]));
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p > j) ++count;
        conj[static_cast<size_t>(j)] = count;
    }
    return Partition(std::move(conj));
}

int Partition::arm(int i, int j) const {
    if (i < 0 || i >= length() || j < 0 || j >= part(i))
        throw std::invalid_argument("Partition::arm: cell outside the diagram");
    return part(i) - j - 1;
}

int Partition::leg(int i, int j) const {
    if (i < 0 || i >= length() || j < 0 || j >= part(i))
        throw std::invalid_argument("Partition::leg: cell outside the diagram");
    int below = 0;
    for (int r = i + 1; r < length(); ++r)
        if (part(r) > j) ++below;
    return below;
}

BigInt Partition::z() const {
    BigInt acc = 1;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        const auto mult = static_cast<unsigned>(j - i);
        for (unsigned c = 0; c < mult; ++c) acc *= parts_[i];
        acc *= big_factorial(mult);
        i = j;
    }
    return acc;
}

bool Partition::dominates(const Partition& o) const {
    if (weight_ != o.weight_)
        throw std::invalid_argument("Partition::dominates: weights differ");
    const int len = std::max(length(), o.length());
    int mine = 0, theirs = 0;
    for (int i = 0; i < len; ++i) {
        mine += part(i);
        theirs += o.part(i);
        if (mine < theirs) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << "]";
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> build = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            build(remaining - p, p);
            current.pop_back();
        }
    };
    build(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lhd
