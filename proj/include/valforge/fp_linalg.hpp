#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace valforge {

// vector over F_p, entries reduced mod p
using FpVec = std::vector<std::uint64_t>;

inline std::int64_t pack_fp(const FpVec& v, std::uint64_t p) {
    std::int64_t idx = 0, mul = 1;
    for (auto c : v) {
        idx += static_cast<std::int64_t>(c) * mul;
        mul *= static_cast<std::int64_t>(p);
    }
    return idx;
}

inline FpVec unpack_fp(std::int64_t idx, std::uint64_t p, int d) {
    FpVec v(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        v[static_cast<size_t>(i)] = static_cast<std::uint64_t>(idx % static_cast<std::int64_t>(p));
        idx /= static_cast<std::int64_t>(p);
    }
    return v;
}

// idx-th coordinate tuple in lexicographic order (leftmost coordinate most
// significant); this is the presentation order for classes in reports
inline FpVec lex_vec(std::int64_t idx, std::uint64_t p, int d) {
    FpVec v(static_cast<size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = static_cast<std::uint64_t>(idx % static_cast<std::int64_t>(p));
        idx /= static_cast<std::int64_t>(p);
    }
    return v;
}

inline std::int64_t lex_index(const FpVec& v, std::uint64_t p) {
    std::int64_t idx = 0;
    for (auto c : v) idx = idx * static_cast<std::int64_t>(p) + static_cast<std::int64_t>(c);
    return idx;
}

inline FpVec fp_add(const FpVec& a, const FpVec& b, std::uint64_t p) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

inline FpVec fp_scale(const FpVec& a, std::uint64_t c, std::uint64_t p) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
    return r;
}

inline bool fp_is_zero(const FpVec& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

// subspace of F_p^d with explicit membership table (desk-scale ambient spaces)
class FpSubspace {
public:
    // throws if the basis vectors are dependent or malformed
    FpSubspace(std::uint64_t p, int ambient_dim, const std::vector<FpVec>& basis)
        : FpSubspace(p, ambient_dim, basis, true) {}

    static FpSubspace zero_subspace(std::uint64_t p, int d) { return FpSubspace(p, d, {}, true); }

    static FpSubspace full_space(std::uint64_t p, int d) {
        std::vector<FpVec> basis;
        for (int i = 0; i < d; ++i) {
            FpVec e(static_cast<size_t>(d), 0);
            e[static_cast<size_t>(i)] = 1;
            basis.push_back(e);
        }
        return FpSubspace(p, d, basis, true);
    }

    // span, silently dropping dependent vectors
    static FpSubspace span_of(std::uint64_t p, int d, const std::vector<FpVec>& vecs) {
        return FpSubspace(p, d, vecs, false);
    }

    std::uint64_t p() const { return p_; }
    int ambient_dim() const { return d_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FpVec>& basis() const { return basis_; }

    bool contains(const FpVec& v) const {
        if (static_cast<int>(v.size()) != d_) throw std::invalid_argument("vector dimension mismatch");
        return mask_[static_cast<size_t>(pack_fp(v, p_))] != 0;
    }

    bool contains_packed(std::int64_t idx) const { return mask_[static_cast<size_t>(idx)] != 0; }

    // all members, ascending packed index
    std::vector<FpVec> elements() const {
        std::vector<FpVec> out;
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(mask_.size()); ++i)
            if (mask_[static_cast<size_t>(i)]) out.push_back(unpack_fp(i, p_, d_));
        return out;
    }

    bool same_subspace(const FpSubspace& o) const { return p_ == o.p_ && mask_ == o.mask_; }

    FpSubspace extended_by(const FpVec& v) const {
        auto vecs = basis_;
        vecs.push_back(v);
        return span_of(p_, d_, vecs);
    }

private:
    FpSubspace(std::uint64_t p, int d, const std::vector<FpVec>& vecs, bool strict)
        : p_(p), d_(d) {
        if (p < 2 || d < 0) throw std::invalid_argument("bad subspace parameters");
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i) {
            total *= static_cast<std::int64_t>(p);
            if (total > (1 << 20)) throw std::invalid_argument("ambient space too large");
        }
        mask_.assign(static_cast<size_t>(total), 0);
        mask_[0] = 1;
        for (const auto& v : vecs) {
            if (static_cast<int>(v.size()) != d) throw std::invalid_argument("basis vector dimension mismatch");
            FpVec w(v);
            for (auto& c : w) c %= p;
            if (contains(w)) {
                if (strict) throw std::invalid_argument("dependent basis vector");
                continue;
            }
            basis_.push_back(w);
            // close the span: add all multiples of w shifted by current members
            std::vector<std::int64_t> members;
            for (std::int64_t i = 0; i < total; ++i)
                if (mask_[static_cast<size_t>(i)]) members.push_back(i);
            for (std::int64_t m : members) {
                FpVec base = unpack_fp(m, p_, d_);
                for (std::uint64_t c = 1; c < p_; ++c) {
                    FpVec sum = fp_add(base, fp_scale(w, c, p_), p_);
                    mask_[static_cast<size_t>(pack_fp(sum, p_))] = 1;
                }
            }
        }
    }

    std::uint64_t p_;
    int d_;
    std::vector<FpVec> basis_;
    std::vector<char> mask_;
};

}  // namespace valforge
