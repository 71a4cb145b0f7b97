#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

class Partition {
public:
    Partition() = default;
    // Sorts and drops zeros, so any multiset of positive parts is accepted.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    // Multiplicity of the part value k.
    int multiplicity(int k) const;
    bool contains(const Partition& mu) const;

    // Total order: by size, then reverse lexicographic (larger first part first).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& lambda);

// All partitions of n, largest first in reverse-lex order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

// Number of partitions of n from the pentagonal-number recurrence.
std::int64_t partition_count(int n);

// Centralizer order prod_i i^{m_i} m_i!.
std::int64_t z_lambda(const Partition& lambda);

bool even_rows(const Partition& lambda);
bool even_columns(const Partition& lambda);

// "2,1^2" style; the empty partition renders as "0".
std::string to_string(const Partition& lambda);
Partition parse_partition(const std::string& text);

// Union of the multisets of parts.
Partition join(const Partition& a, const Partition& b);
// Every part multiplied by k.
Partition scale(const Partition& a, int k);

}  // namespace torelli
