/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "gvm/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gvm {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::SingularWeight: return "singular weight";
    case ErrorCode::NotOnOrbit: return "not on orbit";
    case ErrorCode::NotDominant: return "not dominant";
    case ErrorCode::NotPDominant: return "not p-dominant";
    case ErrorCode::RankTooLarge: return "rank too large";
    }
    return "unknown error";
}

ParabolicContext::ParabolicContext(int k, int n) : k_(k), n_(n) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1, got " + std::to_string(k));
    }
    if (n < 3 || n % 2 == 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be odd and at least 3, got " + std::to_string(n));
    }
}

Weight::Weight(std::vector<HalfInt> coords, std::size_t split) : coords_(std::move(coords)), split_(split) {
    if (split_ > coords_.size()) {
        throw Error(ErrorCode::InvalidArgument, "block split exceeds rank");
    }
}

std::string Weight::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) {
            out += (split_ > 0 && i == split_) ? '|' : ',';
        }
        out += coords_[i].to_string();
    }
    if (split_ > 0 && split_ == coords_.size()) {
        out += '|';
    }
    out += ']';
    return out;
}

std::string to_string(const Weight& w) { return w.to_string(); }

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::Parse, "cannot parse weight \"" + std::string(text) + "\": " + why);
}

HalfInt parse_token(std::string_view whole, std::string_view tok) {
    if (tok.empty()) {
        parse_fail(whole, "empty coordinate");
    }
    bool negative = false;
    if (tok.front() == '-' || tok.front() == '+') {
        negative = tok.front() == '-';
        tok.remove_prefix(1);
    }
    std::string_view num = tok;
    std::string_view den;
    if (auto slash = tok.find('/'); slash != std::string_view::npos) {
        num = tok.substr(0, slash);
        den = tok.substr(slash + 1);
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty()) {
        parse_fail(whole, "bad coordinate '" + std::string(tok) + "'");
    }
    if (!den.empty() || tok.find('/') != std::string_view::npos) {
        if (den != "2") {
            parse_fail(whole, "'" + std::string(tok) + "' is not a half-integer");
        }
        return HalfInt::from_twice(negative ? -value : value);
    }
    return HalfInt::from_twice(2 * (negative ? -value : value));
}

}  // namespace

Weight parse_weight(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            cleaned += '-';
            i += 2;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            cleaned += text[i];
        }
    }
    std::string_view body = cleaned;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        parse_fail(text, "expected brackets");
    }
    body = body.substr(1, body.size() - 2);

    std::vector<HalfInt> coords;
    std::size_t split = 0;
    bool seen_bar = false;
    std::size_t start = 0;
    auto flush = [&](std::size_t end, bool allow_empty) {
        auto tok = body.substr(start, end - start);
        if (tok.empty() && allow_empty) {
            return;
        }
        coords.push_back(parse_token(text, tok));
    };
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size()) {
            // "[1/2|]" and "[]" have empty trailing blocks
            flush(i, seen_bar || coords.empty());
            break;
        }
        if (body[i] == ',') {
            flush(i, false);
            start = i + 1;
        } else if (body[i] == '|') {
            if (seen_bar) {
                parse_fail(text, "more than one block separator");
            }
            flush(i, coords.empty());
            seen_bar = true;
            split = coords.size();
            start = i + 1;
        }
    }
    return Weight(std::move(coords), split);
}

std::vector<int> Root::vector(std::size_t rank) const {
    std::vector<int> v(rank, 0);
    switch (kind) {
    case Kind::Diff:
        v[i] = 1;
        v[j] = -1;
        break;
    case Kind::Sum:
        v[i] = 1;
        v[j] = 1;
        break;
    case Kind::Short: v[i] = 1; break;
    }
    return v;
}

std::string Root::to_string() const {
    auto e = [](std::size_t idx) { return "e" + std::to_string(idx + 1); };
    switch (kind) {
    case Kind::Diff: return e(i) + "-" + e(j);
    case Kind::Sum: return e(i) + "+" + e(j);
    case Kind::Short: return e(i);
    }
    return {};
}

std::vector<Root> positive_roots(std::size_t rank) {
    std::vector<Root> roots;
    roots.reserve(rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = i + 1; j < rank; ++j) {
            roots.push_back(Root::diff(i, j));
            roots.push_back(Root::sum(i, j));
        }
        roots.push_back(Root::short_root(i));
    }
    return roots;
}

std::vector<Root> simple_roots(std::size_t rank) {
    std::vector<Root> roots;
    for (std::size_t i = 0; i + 1 < rank; ++i) {
        roots.push_back(Root::diff(i, i + 1));
    }
    if (rank > 0) {
        roots.push_back(Root::short_root(rank - 1));
    }
    return roots;
}

std::vector<Root> levi_simple_roots(const ParabolicContext& ctx) {
    auto roots = simple_roots(static_cast<std::size_t>(ctx.rank()));
    roots.erase(roots.begin() + (ctx.k() - 1));
    return roots;
}

HalfInt pairing(const Weight& lambda, const Root& beta) {
    switch (beta.kind) {
    case Root::Kind::Diff: return lambda[beta.i] - lambda[beta.j];
    case Root::Kind::Sum: return lambda[beta.i] + lambda[beta.j];
    case Root::Kind::Short: return lambda[beta.i] + lambda[beta.i];
    }
    return {};
}

Weight reflect(const Weight& lambda, const Root& beta) {
    auto coords = lambda.coords();
    switch (beta.kind) {
    case Root::Kind::Diff: std::swap(coords[beta.i], coords[beta.j]); break;
    case Root::Kind::Sum: {
        auto a = coords[beta.i];
        coords[beta.i] = -coords[beta.j];
        coords[beta.j] = -a;
        break;
    }
    case Root::Kind::Short: coords[beta.i] = -coords[beta.i]; break;
    }
    return Weight(std::move(coords), lambda.split());
}

Weight delta(const ParabolicContext& ctx) {
    const auto m = static_cast<std::int64_t>(ctx.rank());
    std::vector<HalfInt> coords;
    coords.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 1; i <= m; ++i) {
        coords.push_back(HalfInt::from_twice(2 * (m - i) + 1));
    }
    return Weight(std::move(coords), static_cast<std::size_t>(ctx.k()));
}

HalfInt grading_eval(const Weight& lambda) {
    HalfInt sum;
    for (std::size_t i = 0; i < lambda.split(); ++i) {
        sum += lambda[i];
    }
    return sum;
}

bool is_p_dominant_integral_shifted(const Weight& lambda, const ParabolicContext& ctx) {
    const auto k = static_cast<std::size_t>(ctx.k());
    if (lambda.rank() != static_cast<std::size_t>(ctx.rank()) || lambda.split() != k) {
        throw Error(ErrorCode::InvalidArgument,
                    "weight " + lambda.to_string() + " does not match rank/split of the parabolic pair");
    }
    const auto& c = lambda.coords();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        auto d = c[i] - c[i + 1];
        if (!d.is_positive_integer()) {
            return false;
        }
    }
    for (std::size_t i = k; i + 1 < c.size(); ++i) {
        auto d = c[i] - c[i + 1];
        if (!d.is_positive_integer()) {
            return false;
        }
    }
    return c.size() == k || c.back().twice() > 0;
}

bool is_dominant(const Weight& lambda) {
    const auto& c = lambda.coords();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i] < c[i + 1]) {
            return false;
        }
    }
    return c.empty() || c.back().twice() >= 0;
}

Weight dominant_rep(const Weight& lambda) {
    std::vector<HalfInt> coords;
    coords.reserve(lambda.rank());
    for (auto c : lambda.coords()) {
        coords.push_back(c.abs());
    }
    std::sort(coords.begin(), coords.end(), std::greater<>());
    return Weight(std::move(coords), 0);
}

bool is_singular(const Weight& lambda) {
    auto dom = dominant_rep(lambda);
    const auto& c = dom.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero() || (i + 1 < c.size() && c[i] == c[i + 1])) {
            return true;
        }
    }
    return false;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in weight difference");
    }
    std::vector<HalfInt> coords(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
        coords[i] = a[i] - b[i];
    }
    return Weight(std::move(coords), a.split());
}

}  // namespace gvm
