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

#include "toric/region_dsl.h"

#include <cctype>
#include <limits>
#include <vector>

#include "toric/errors.h"

namespace toric {

namespace {

class SpecParser {
   public:
    SpecParser(std::string_view text, const Surface &s) : text_(text), surface_(s) {
    }

    Region parse() {
        Region r = spec();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'", pos_);
        }
        return r;
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    std::string word() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        if (start == pos_) {
            throw ParseError("expected a keyword", start);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        pos_++;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    size_t number() {
        skip_space();
        size_t start = pos_;
        size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            size_t digit = static_cast<size_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<size_t>::max() - digit) / 10) {
                throw ParseError("integer too large", start);
            }
            value = value * 10 + digit;
            pos_++;
        }
        if (start == pos_) {
            throw ParseError("expected a non-negative integer", start);
        }
        return value;
    }

    Region spec() {
        skip_space();
        size_t start = pos_;
        std::string kind = word();
        if (kind == "not") {
            expect('(');
            Region inner = spec();
            expect(')');
            return inner.complement();
        }
        expect(':');
        if (kind == "rect") {
            size_t i0 = number();
            expect(',');
            size_t j0 = number();
            expect(',');
            size_t a = number();
            expect(',');
            size_t b = number();
            return rect_region(surface_, i0, j0, a, b);
        }
        if (kind == "chain") {
            size_t at = pos_;
            std::string which = word();
            if (which != "row" && which != "col") {
                throw ParseError("chain orientation must be 'row' or 'col'", at);
            }
            expect(',');
            size_t index = number();
            return chain_region(surface_, which == "row" ? ChainOrientation::kRow : ChainOrientation::kColumn, index);
        }
        if (kind == "orient") {
            size_t at = pos_;
            std::string which = word();
            if (which != "v" && which != "h") {
                throw ParseError("orientation must be 'v' or 'h'", at);
            }
            return orientation_region(surface_, which == "v" ? LinkOrientation::kVertical : LinkOrientation::kHorizontal);
        }
        if (kind == "links") {
            std::vector<size_t> links{number()};
            while (accept(',')) {
                links.push_back(number());
            }
            return links_region(surface_, links);
        }
        throw ParseError("unknown region kind '" + kind + "'", start);
    }

    std::string_view text_;
    const Surface &surface_;
    size_t pos_ = 0;
};

std::string links_spec(const BitVector &mask) {
    std::string out = "links:";
    bool first = true;
    mask.for_each_set_bit([&](size_t i) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(i);
        first = false;
    });
    return out;
}

}  // namespace

Region parse_region_spec(std::string_view text, const Surface &s) {
    return SpecParser(text, s).parse();
}

std::string to_region_spec(const Region &r) {
    if (r.mask().none()) {
        return "not(" + links_spec(~r.mask()) + ")";
    }
    return links_spec(r.mask());
}

}  // namespace toric
