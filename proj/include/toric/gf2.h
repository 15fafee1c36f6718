// Copyright 2026 The toric-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_GF2_H
#define TORIC_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toric {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits at positions >= size() are always zero, so word-level comparison,
/// hashing and popcount never need masking.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_(word_count(num_bits), 0) {
    }

    static BitVector from_indices(size_t num_bits, std::span<const size_t> indices);
    static BitVector from_indices(size_t num_bits, std::initializer_list<size_t> indices) {
        return from_indices(num_bits, std::span<const size_t>(indices.begin(), indices.size()));
    }

    static constexpr size_t word_count(size_t num_bits) {
        return (num_bits + 63) / 64;
    }

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(size_t index, bool value = true) {
        uint64_t bit = uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= bit;
        } else {
            words_[index >> 6] &= ~bit;
        }
    }
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    size_t popcount() const;
    bool none() const;
    bool any() const {
        return !none();
    }
    /// Index of the lowest set bit, or size() if there is none.
    size_t lowest_set_bit() const;
    std::vector<size_t> indices() const;

    template <typename Fn>
    void for_each_set_bit(Fn &&fn) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t word = words_[w];
            while (word) {
                fn(w * 64 + static_cast<size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    /// Complement within [0, size()).
    BitVector operator~() const;
    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }

    /// Packs the bits selected by `mask` into a vector of length mask.popcount(),
    /// preserving ascending order.
    BitVector compress(const BitVector &mask) const;

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic on (size, words); gives a stable order for map keys.
    bool operator<(const BitVector &other) const;

    std::string str() const;

   private:
    void clear_padding();

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const;
};

/// A dense binary matrix stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
    }
    /// Throws ArgumentError if any row length differs from num_cols.
    BitMatrix(std::vector<BitVector> rows, size_t num_cols);

    static BitMatrix identity(size_t n);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    std::span<const BitVector> rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    void append_row(BitVector row);

    /// XOR of all rows.
    BitVector row_sum() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Row-echelon basis built incrementally. Each stored row is keyed by its lowest
/// set column (its pivot); pivots are therefore resolved in ascending column order.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t num_cols);

    /// Reduces `v` against the basis. Returns true if `v` was independent, in
    /// which case it is stored (in reduced form).
    bool insert(BitVector v);
    /// Reduces `v` in place; returns true if it reduced to zero.
    bool reduce(BitVector &v) const;
    bool contains(BitVector v) const {
        return reduce(v);
    }

    size_t rank() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    /// Stored basis vectors, in insertion order.
    std::vector<BitVector> basis() const;

   private:
    struct StoredRow {
        size_t first_word;
        std::vector<uint64_t> words;
    };

    size_t num_cols_;
    std::vector<int64_t> row_of_pivot_;
    std::vector<StoredRow> rows_;
};

/// Dimension of the row space over GF(2).
size_t rank(const BitMatrix &m);

/// Keeps the columns selected by `column_mask`, in ascending column order.
/// Throws ArgumentError if the mask length differs from m.num_cols().
BitMatrix column_submatrix(const BitMatrix &m, const BitVector &column_mask);

inline constexpr size_t kDefaultEnumerationLimit = 24;

/// Calls `visit` once for each of the 2^rank(m) vectors in the row space, in
/// Gray-code order over a reduced basis (starting with the zero vector).
/// Throws ResourceLimitError if rank(m) > max_rank_bits.
void for_each_in_rowspace(
    const BitMatrix &m, const std::function<void(const BitVector &)> &visit,
    size_t max_rank_bits = kDefaultEnumerationLimit);

/// Collects for_each_in_rowspace into a vector.
std::vector<BitVector> enumerate_rowspace(const BitMatrix &m, size_t max_rank_bits = kDefaultEnumerationLimit);

/// True iff `v` is a GF(2) combination of rows of `m`.
bool in_rowspace(const BitMatrix &m, const BitVector &v);

}  // namespace toric

#endif
