#pragma once

#include <cstdint>
#include <vector>

namespace latsim {

// Dense bit matrix over GF(2), one row = packed 64-bit words.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool v) {
        std::uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
        const std::uint64_t m = 1ULL << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void xor_rows(int dst, int src) {
        std::uint64_t* d = &data_[static_cast<size_t>(dst) * words_];
        const std::uint64_t* s = &data_[static_cast<size_t>(src) * words_];
        for (int i = 0; i < words_; ++i) d[i] ^= s[i];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        std::uint64_t* pa = &data_[static_cast<size_t>(a) * words_];
        std::uint64_t* pb = &data_[static_cast<size_t>(b) * words_];
        for (int i = 0; i < words_; ++i) std::swap(pa[i], pb[i]);
    }

  private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

struct Gf2Rref {
    Gf2Matrix mat;               // reduced row echelon form
    std::vector<int> pivot_cols; // one per nonzero row, ascending
    int rank = 0;
};

Gf2Rref gf2_rref(Gf2Matrix a);
int gf2_rank(const Gf2Matrix& a);

} // namespace latsim
