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

#include "toric/gf2.h"

#include <algorithm>

#include "toric/errors.h"

namespace toric {

namespace {

// Number of mask bits strictly before word w, for every w.
std::vector<size_t> mask_prefix_counts(const BitVector &mask) {
    std::vector<size_t> prefix(mask.num_words() + 1, 0);
    auto words = mask.words();
    for (size_t w = 0; w < words.size(); w++) {
        prefix[w + 1] = prefix[w] + static_cast<size_t>(std::popcount(words[w]));
    }
    return prefix;
}

void compress_into(
    std::span<const uint64_t> src, const BitVector &mask, const std::vector<size_t> &prefix, BitVector &out) {
    auto mask_words = mask.words();
    for (size_t w = 0; w < src.size(); w++) {
        uint64_t x = src[w] & mask_words[w];
        while (x) {
            int b = std::countr_zero(x);
            uint64_t below = (uint64_t{1} << b) - 1;
            out.set(prefix[w] + static_cast<size_t>(std::popcount(mask_words[w] & below)));
            x &= x - 1;
        }
    }
}

}  // namespace

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVector v(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw ArgumentError("bit index " + std::to_string(i) + " out of range for length " + std::to_string(num_bits));
        }
        v.set(i);
    }
    return v;
}

size_t BitVector::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) {
        n += static_cast<size_t>(std::popcount(w));
    }
    return n;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitVector::lowest_set_bit() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + static_cast<size_t>(std::countr_zero(words_[w]));
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVector::indices() const {
    std::vector<size_t> out;
    for_each_set_bit([&](size_t i) { out.push_back(i); });
    return out;
}

void BitVector::clear_padding() {
    if (num_bits_ & 63) {
        words_.back() &= (uint64_t{1} << (num_bits_ & 63)) - 1;
    }
}

BitVector BitVector::operator~() const {
    BitVector out = *this;
    for (uint64_t &w : out.words_) {
        w = ~w;
    }
    out.clear_padding();
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw ArgumentError("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw ArgumentError("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw ArgumentError("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

BitVector BitVector::compress(const BitVector &mask) const {
    if (mask.size() != num_bits_) {
        throw ArgumentError("compress: mask length mismatch");
    }
    BitVector out(mask.popcount());
    compress_into(words_, mask, mask_prefix_counts(mask), out);
    return out;
}

bool BitVector::operator<(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    return words_ < other.words_;
}

std::string BitVector::str() const {
    std::string s(num_bits_, '0');
    for_each_set_bit([&](size_t i) { s[i] = '1'; });
    return s;
}

size_t BitVectorHash::operator()(const BitVector &v) const {
    // FNV-1a over words.
    uint64_t h = 1469598103934665603ull ^ v.size();
    for (uint64_t w : v.words()) {
        h ^= w;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

BitMatrix::BitMatrix(std::vector<BitVector> rows, size_t num_cols) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw ArgumentError("BitMatrix row length " + std::to_string(r.size()) + " != " + std::to_string(num_cols_));
        }
    }
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != num_cols_) {
        throw ArgumentError("BitMatrix row length mismatch");
    }
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::row_sum() const {
    BitVector acc(num_cols_);
    for (const auto &r : rows_) {
        acc ^= r;
    }
    return acc;
}

EchelonBasis::EchelonBasis(size_t num_cols) : num_cols_(num_cols), row_of_pivot_(num_cols, -1) {
}

bool EchelonBasis::reduce(BitVector &v) const {
    auto w = v.words();
    size_t wi = 0;
    while (wi < w.size()) {
        if (w[wi] == 0) {
            wi++;
            continue;
        }
        size_t col = wi * 64 + static_cast<size_t>(std::countr_zero(w[wi]));
        int64_t r = row_of_pivot_[col];
        if (r < 0) {
            return false;
        }
        const StoredRow &stored = rows_[static_cast<size_t>(r)];
        // Stored rows have no bits below their pivot, so the cursor never moves back.
        for (size_t j = 0; j < stored.words.size(); j++) {
            w[stored.first_word + j] ^= stored.words[j];
        }
    }
    return true;
}

bool EchelonBasis::insert(BitVector v) {
    if (v.size() != num_cols_) {
        throw ArgumentError("EchelonBasis: vector length mismatch");
    }
    if (reduce(v)) {
        return false;
    }
    size_t pivot = v.lowest_set_bit();
    auto w = v.words();
    size_t first = pivot / 64;
    size_t last = w.size();
    while (last > first && w[last - 1] == 0) {
        last--;
    }
    row_of_pivot_[pivot] = static_cast<int64_t>(rows_.size());
    rows_.push_back(StoredRow{first, std::vector<uint64_t>(w.begin() + first, w.begin() + last)});
    return true;
}

std::vector<BitVector> EchelonBasis::basis() const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (const auto &stored : rows_) {
        BitVector v(num_cols_);
        std::copy(stored.words.begin(), stored.words.end(), v.words().begin() + stored.first_word);
        out.push_back(std::move(v));
    }
    return out;
}

size_t rank(const BitMatrix &m) {
    EchelonBasis basis(m.num_cols());
    for (const auto &r : m.rows()) {
        basis.insert(r);
    }
    return basis.rank();
}

BitMatrix column_submatrix(const BitMatrix &m, const BitVector &column_mask) {
    if (column_mask.size() != m.num_cols()) {
        throw ArgumentError(
            "column mask length " + std::to_string(column_mask.size()) + " != matrix columns " +
            std::to_string(m.num_cols()));
    }
    auto prefix = mask_prefix_counts(column_mask);
    BitMatrix out(m.num_rows(), prefix.back());
    for (size_t r = 0; r < m.num_rows(); r++) {
        compress_into(m.row(r).words(), column_mask, prefix, out.row(r));
    }
    return out;
}

void for_each_in_rowspace(
    const BitMatrix &m, const std::function<void(const BitVector &)> &visit, size_t max_rank_bits) {
    EchelonBasis echelon(m.num_cols());
    for (const auto &r : m.rows()) {
        echelon.insert(r);
        if (echelon.rank() > max_rank_bits) {
            throw ResourceLimitError(
                "row space has more than 2^" + std::to_string(max_rank_bits) + " elements (raise the enumeration limit)");
        }
    }
    std::vector<BitVector> basis = echelon.basis();
    BitVector current(m.num_cols());
    visit(current);
    uint64_t count = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < count; i++) {
        current ^= basis[static_cast<size_t>(std::countr_zero(i))];
        visit(current);
    }
}

std::vector<BitVector> enumerate_rowspace(const BitMatrix &m, size_t max_rank_bits) {
    std::vector<BitVector> out;
    for_each_in_rowspace(m, [&](const BitVector &v) { out.push_back(v); }, max_rank_bits);
    return out;
}

bool in_rowspace(const BitMatrix &m, const BitVector &v) {
    EchelonBasis basis(m.num_cols());
    for (const auto &r : m.rows()) {
        basis.insert(r);
    }
    return basis.contains(v);
}

}  // namespace toric
