#include "starfact/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace starfact {

namespace {

void validate_ground(const std::vector<int>& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 1) throw std::invalid_argument("ground points must be positive");
        if (i > 0 && g[i - 1] >= g[i])
            throw std::invalid_argument("ground must be strictly increasing");
    }
}

}  // namespace

Permutation Permutation::identity(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    validate_ground(ground);
    std::vector<int> images = ground;
    Permutation p;
    p.ground_ = std::move(ground);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_images(std::vector<int> ground, std::vector<int> images) {
    if (ground.size() != images.size())
        throw std::invalid_argument("ground/images size mismatch");
    // sort the association by ground point
    std::vector<std::size_t> idx(ground.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ground[a] < ground[b]; });
    Permutation p;
    p.ground_.reserve(ground.size());
    p.images_.reserve(ground.size());
    for (std::size_t i : idx) {
        p.ground_.push_back(ground[i]);
        p.images_.push_back(images[i]);
    }
    validate_ground(p.ground_);
    std::vector<int> sorted_images = p.images_;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_images != p.ground_)
        throw std::invalid_argument("images are not a bijection of the ground set");
    return p;
}

Permutation Permutation::transposition(int a, int b) {
    if (a == b) throw std::invalid_argument("transposition needs two distinct points");
    return from_images({a, b}, {b, a});
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles,
                                     std::vector<int> ground) {
    std::vector<int> points;
    for (const auto& c : cycles) points.insert(points.end(), c.begin(), c.end());
    std::vector<int> sorted_points = points;
    std::sort(sorted_points.begin(), sorted_points.end());
    if (std::adjacent_find(sorted_points.begin(), sorted_points.end()) != sorted_points.end())
        throw std::invalid_argument("cycles are not disjoint");
    if (ground.empty()) {
        ground = sorted_points;
    } else {
        std::sort(ground.begin(), ground.end());
        if (!is_subset(sorted_points, ground))
            throw std::invalid_argument("cycle points outside the given ground set");
    }
    Permutation p = identity(std::move(ground));
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int from = c[i];
            int to = c[(i + 1) % c.size()];
            auto it = std::lower_bound(p.ground_.begin(), p.ground_.end(), from);
            p.images_[static_cast<std::size_t>(it - p.ground_.begin())] = to;
        }
    }
    return p;
}

bool Permutation::contains(int x) const {
    return std::binary_search(ground_.begin(), ground_.end(), x);
}

int Permutation::apply(int x) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
    if (it == ground_.end() || *it != x) return x;
    return images_[static_cast<std::size_t>(it - ground_.begin())];
}

Permutation Permutation::inverse() const {
    return from_images(images_, ground_);
}

std::vector<int> Permutation::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (images_[i] != ground_[i]) s.push_back(ground_[i]);
    return s;
}

Permutation Permutation::extended_to(const std::vector<int>& superset) const {
    if (!is_subset(ground_, superset))
        throw std::invalid_argument("extended_to: not a superset of the ground set");
    std::vector<int> images;
    images.reserve(superset.size());
    for (int x : superset) images.push_back(apply(x));
    return from_images(superset, std::move(images));
}

Permutation Permutation::restricted_to(const std::vector<int>& subset) const {
    std::vector<int> images;
    images.reserve(subset.size());
    for (int x : subset) {
        if (!contains(x))
            throw std::invalid_argument("restricted_to: point outside the ground set");
        int y = apply(x);
        if (!std::binary_search(subset.begin(), subset.end(), y))
            throw std::invalid_argument("restricted_to: subset is not invariant");
        images.push_back(y);
    }
    return from_images(subset, std::move(images));
}

Permutation Permutation::conjugated_by(const Permutation& tau) const {
    std::vector<int> ground;
    std::vector<int> images;
    ground.reserve(ground_.size());
    images.reserve(ground_.size());
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        ground.push_back(tau.apply(ground_[i]));
        images.push_back(tau.apply(images_[i]));
    }
    return from_images(std::move(ground), std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(ground_.size(), false);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (seen[i] || images_[i] == ground_[i]) continue;
        std::vector<int> cycle;
        int x = ground_[i];
        do {
            auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
            seen[static_cast<std::size_t>(it - ground_.begin())] = true;
            cycle.push_back(x);
            x = apply(x);
        } while (x != ground_[i]);
        out.push_back(std::move(cycle));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(ground_.size(), false);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        int x = ground_[i];
        do {
            auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
            seen[static_cast<std::size_t>(it - ground_.begin())] = true;
            ++len;
            x = apply(x);
        } while (x != ground_[i]);
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

std::size_t Permutation::num_cycles() const {
    return cycle_type().parts().size();
}

bool Permutation::is_identity() const {
    return ground_ == images_;
}

std::string Permutation::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "id";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    std::vector<int> ground = set_union(p.ground(), q.ground());
    std::vector<int> images;
    images.reserve(ground.size());
    for (int x : ground) images.push_back(p.apply(q.apply(x)));
    return Permutation::from_images(std::move(ground), std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
}

std::vector<int> ground_upto(int n) {
    std::vector<int> g(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
    return g;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_minus(const std::vector<int>& a, int x) {
    std::vector<int> out;
    out.reserve(a.size());
    for (int y : a)
        if (y != x) out.push_back(y);
    return out;
}

std::string set_to_string(const std::vector<int>& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
    }
    out += '}';
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        int needed = k - static_cast<int>(current.size());
        for (int x = next; x + needed - 1 <= n; ++x) {
            current.push_back(x);
            self(self, x + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Permutation> all_permutations(const std::vector<int>& ground) {
    std::vector<int> sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> images = sorted;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(sorted, images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace starfact
