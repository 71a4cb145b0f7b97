#include "doctest.h"
#include "oracles.hpp"
#include "torelli/partition.hpp"

using namespace torelli;

TEST_CASE("partition counts agree with brute-force enumeration") {
    for (int n = 0; n <= 20; ++n) {
        auto brute = oracle::brute_partitions(n);
        CHECK(partition_count(n) == static_cast<std::int64_t>(brute.size()));
        CHECK(partitions_of(n).size() == brute.size());
    }
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("partitions_of lists distinct partitions in the total order") {
    auto ps = partitions_of(8);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] < ps[i + 1]);
    CHECK(ps.front() == Partition{8});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1, 1, 1});
    for (auto& p : partitions_of(8, 3)) CHECK(p.length() <= 3);
}

TEST_CASE("order is by size then reverse lexicographic") {
    CHECK(Partition{2, 1} < Partition{1, 1, 1});
    CHECK(Partition{3} < Partition{2, 1});
    CHECK(Partition{1, 1, 1} < Partition{4});
    CHECK(Partition{} < Partition{1});
}

TEST_CASE("conjugation is an involution and swaps row/column parity") {
    for (int n = 0; n <= 10; ++n)
        for (auto& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).size() == n);
            CHECK(even_rows(p) == even_columns(conjugate(p)));
        }
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("z_lambda is the centralizer order counted over S_n") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, long> class_size;
        for (auto& perm : oracle::all_permutations(n)) ++class_size[oracle::cycle_type(perm)];
        for (auto& [mu, c] : class_size)
            CHECK(z_lambda(mu) * c == oracle::factorial(n).get_si());
    }
}

TEST_CASE("text form round-trips") {
    CHECK(to_string(Partition{2, 1, 1}) == "2,1^2");
    CHECK(to_string(Partition{}) == "0");
    for (int n = 0; n <= 9; ++n)
        for (auto& p : partitions_of(n)) CHECK(parse_partition(to_string(p)) == p);
    CHECK(parse_partition("3,2^2,1") == Partition{3, 2, 2, 1});
}

TEST_CASE("join and scale") {
    CHECK(join(Partition{3, 1}, Partition{2}) == Partition{3, 2, 1});
    CHECK(scale(Partition{2, 1}, 3) == Partition{6, 3});
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3}.contains(Partition{1, 1}));
}
