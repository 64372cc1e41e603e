#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/rational.hpp"

namespace starfact {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is a valid value and is written as the empty string.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the comma format, e.g. "3,1,1". "" parses to the empty
    /// partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// m_i: the number of parts equal to value.
    int multiplicity(int value) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// z_lambda = (prod of parts) * (prod of multiplicity factorials).
Integer z_value(const Partition& lambda);

Integer product_of_parts(const Partition& lambda);

Partition add_one_each(const Partition& lambda);
Partition union_one(const Partition& lambda);
/// Deletes one part equal to 1; throws MissingPartOne if there is none.
Partition remove_a_one(const Partition& lambda);
/// lambda 1^(n-|lambda|); requires |lambda| <= n.
Partition pad_with_ones(const Partition& lambda, int n);

/// All partitions of weight k, reverse-lexicographic: (4), (3,1), (2,2),
/// (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int k);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace starfact
