#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lzlef {

using BigInt = mpz_class;

/******** Dense matrices over Z ********/

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    // Fixture format: first line "rows cols", then rows of space-separated
    // integers.
    std::string dump() const;
    static IntegerMatrix from_dump(const std::string& text);

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

// Exact determinant by fraction-free elimination. The 0x0 determinant is 1.
// Throws std::invalid_argument for non-square input.
BigInt determinant(const IntegerMatrix& M);

// Exact permanent: Gray-code inclusion-exclusion for n <= 20 on 0/1 input,
// matching backtracking with a column-bitmask memo for n <= 64, plain
// backtracking beyond. Requires a square matrix with nonnegative entries.
BigInt permanent(const IntegerMatrix& M);

// Exact rank over Q (characteristic 0) or over F_p (characteristic a
// prime). Throws on composite characteristic.
int rank(const IntegerMatrix& M, long characteristic);

bool is_prime(long p);

}  // namespace lzlef
