#include "starfact/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition text");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("malformed partition text: trailing comma");
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Integer z_value(const Partition& lambda) {
    Integer z = 1;
    int run = 0;
    int prev = 0;
    for (int p : lambda.parts()) {
        z *= p;
        run = (p == prev) ? run + 1 : 1;
        prev = p;
        z *= run;  // accumulates the multiplicity factorials part by part
    }
    return z;
}

Integer product_of_parts(const Partition& lambda) {
    Integer r = 1;
    for (int p : lambda.parts()) r *= p;
    return r;
}

Partition add_one_each(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) ++p;
    return Partition(std::move(parts));
}

Partition union_one(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    parts.push_back(1);
    return Partition(std::move(parts));
}

Partition remove_a_one(const Partition& lambda) {
    if (lambda.multiplicity(1) == 0)
        throw MissingPartOne("remove_a_one: no part equal to 1 in " +
                             (lambda.empty() ? std::string("()") : lambda.to_string()));
    std::vector<int> parts = lambda.parts();
    parts.pop_back();  // parts are sorted, the trailing one is a 1
    return Partition(std::move(parts));
}

Partition pad_with_ones(const Partition& lambda, int n) {
    if (lambda.weight() > n)
        throw WeightExceedsN("pad_with_ones: |lambda| exceeds n");
    std::vector<int> parts = lambda.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(n - lambda.weight()), 1);
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(k, k, prefix, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
}

}  // namespace starfact
