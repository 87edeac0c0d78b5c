#pragma once

// Permutations of {0,1,2,3}, used as the vertex maps of face gluings.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nst {

class Perm4 {
public:
    Perm4() : img_{0, 1, 2, 3} {}
    Perm4(int a, int b, int c, int d) : img_{static_cast<std::int8_t>(a),
                                             static_cast<std::int8_t>(b),
                                             static_cast<std::int8_t>(c),
                                             static_cast<std::int8_t>(d)} {
        validate();
    }

    /// Parse the four-digit file form "p0p1p2p3".
    static Perm4 fromDigits(const std::string& s) {
        if (s.size() != 4)
            throw std::invalid_argument("permutation must have 4 digits: " + s);
        int v[4];
        for (int i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '3')
                throw std::invalid_argument("permutation digit out of range: " + s);
            v[i] = s[i] - '0';
        }
        return Perm4(v[0], v[1], v[2], v[3]);
    }

    int operator[](int i) const { return img_[i]; }

    Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i)
            p.img_[img_[i]] = static_cast<std::int8_t>(i);
        return p;
    }

    /// (this ∘ other): first apply other, then this.
    Perm4 after(const Perm4& other) const {
        Perm4 p;
        for (int i = 0; i < 4; ++i)
            p.img_[i] = img_[other.img_[i]];
        return p;
    }

    /// +1 for even permutations, -1 for odd.
    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }
    bool isOdd() const { return sign() < 0; }

    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }

    /// Transposition (a b).
    static Perm4 transposition(int a, int b) {
        Perm4 p;
        p.img_[a] = static_cast<std::int8_t>(b);
        p.img_[b] = static_cast<std::int8_t>(a);
        return p;
    }

    /// All 24 permutations, ordered lexicographically by image.
    static const std::array<Perm4, 24>& all();

private:
    std::array<std::int8_t, 4> img_;

    void validate() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[i] < 0 || img_[i] > 3)
                throw std::invalid_argument("permutation image out of range");
            seen |= 1 << img_[i];
        }
        if (seen != 0xF)
            throw std::invalid_argument("not a permutation of {0,1,2,3}");
    }
};

inline const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t;
        int n = 0;
        int v[4] = {0, 1, 2, 3};
        // lexicographic enumeration
        std::array<int, 4> p{0, 1, 2, 3};
        do {
            t[n++] = Perm4(p[0], p[1], p[2], p[3]);
        } while (std::next_permutation(p.begin(), p.end()));
        (void)v;
        return t;
    }();
    return table;
}

} // namespace nst
