#include "hpf/partition.hpp"

#include <numeric>

#include "hpf/errors.hpp"

namespace hpf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = parts_.empty() ? 0 : parts_.front();
    for (int p : parts_) {
        if (p <= 0) throw ValidationError("partition parts must be positive");
        if (p > prev) throw ValidationError("partition parts must be nonincreasing");
        prev = p;
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 1 || cols < 1) throw ValidationError("rectangle shape needs positive sides");
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

BigInt Partition::standard_tableau_count() const {
    // hook(r, c) = arm + leg + 1, where arm counts cells to the right in the
    // row and leg counts cells below in the column.
    const int rows = static_cast<int>(parts_.size());
    BigInt hooks = 1;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c) {
            int arm = parts_[static_cast<std::size_t>(r)] - c - 1;
            int leg = 0;
            for (int r2 = r + 1; r2 < rows && parts_[static_cast<std::size_t>(r2)] > c; ++r2) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    BigInt count = factorial(static_cast<unsigned long>(weight()));
    // The hook product always divides |shape|! exactly.
    mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), hooks.get_mpz_t());
    return count;
}

BigInt rectangle_dimension(int n, int m) {
    if (n < 1 || m < 1) throw ValidationError("rectangle_dimension needs positive arguments");
    if (m % n != 0) return 0;
    return Partition::rectangle(n, m / n).standard_tableau_count();
}

}  // namespace hpf
