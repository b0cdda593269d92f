#include "lzlef/intmatrix.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lzlef {

using i64 = long long;
using i128 = __int128;

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("IntegerMatrix: negative dimension");
    e_.assign(std::size_t(rows) * cols, BigInt(0));
}

std::string IntegerMatrix::dump() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntegerMatrix IntegerMatrix::from_dump(const std::string& text) {
    std::istringstream is(text);
    int r = -1, c = -1;
    if (!(is >> r >> c) || r < 0 || c < 0)
        throw std::invalid_argument("matrix dump: bad header");
    IntegerMatrix M(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("matrix dump: missing entries");
            if (M.at(i, j).set_str(tok, 10) != 0)
                throw std::invalid_argument("matrix dump: bad integer '" + tok + "'");
        }
    return M;
}

namespace {

constexpr i64 kI64Max = std::numeric_limits<i64>::max();

// Entries as int64 when they all fit, for the fast elimination path.
std::optional<std::vector<i64>> to_i64(const IntegerMatrix& M) {
    std::vector<i64> v;
    v.reserve(std::size_t(M.rows()) * M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            const BigInt& e = M.at(i, j);
            if (!e.fits_slong_p()) return std::nullopt;
            v.push_back(e.get_si());
        }
    return v;
}

// One fraction-free elimination step; entries stay minors of the input, so
// exact division by the previous pivot. Returns false when a quotient
// leaves the int64 range and the caller must redo the work in big
// integers.
bool bareiss_step_i64(std::vector<i64>& a, int cols, const std::vector<int>& rowperm,
                      const std::vector<int>& colperm, int k, int m, int n, i64 prev) {
    const i64 pivot = a[std::size_t(rowperm[k]) * cols + colperm[k]];
    for (int i = k + 1; i < m; ++i) {
        const i64 aik = a[std::size_t(rowperm[i]) * cols + colperm[k]];
        for (int j = k + 1; j < n; ++j) {
            i128 num = i128(a[std::size_t(rowperm[i]) * cols + colperm[j]]) * pivot -
                       i128(aik) * a[std::size_t(rowperm[k]) * cols + colperm[j]];
            num /= prev;
            if (num > i128(kI64Max) || num < -i128(kI64Max)) return false;
            a[std::size_t(rowperm[i]) * cols + colperm[j]] = i64(num);
        }
        a[std::size_t(rowperm[i]) * cols + colperm[k]] = 0;
    }
    return true;
}

struct EliminationResult {
    int rank = 0;
    int sign = 1;          // parity of the row/column swaps applied
    BigInt last_pivot = 1; // final pivot = determinant when full-rank square
};

// Fraction-free Gaussian elimination with full pivoting; works for rank on
// any shape and yields the determinant of square input.
EliminationResult bareiss(const IntegerMatrix& M) {
    const int m = M.rows(), n = M.cols();
    const int steps = std::min(m, n);
    std::vector<int> rp(m), cp(n);
    for (int i = 0; i < m; ++i) rp[i] = i;
    for (int j = 0; j < n; ++j) cp[j] = j;

    EliminationResult res;
    auto fast = to_i64(M);
    if (fast) {
        std::vector<i64>& a = *fast;
        i64 prev = 1;
        bool ok = true;
        for (int k = 0; k < steps && ok; ++k) {
            int pi = -1, pj = -1;
            for (int i = k; i < m && pi < 0; ++i)
                for (int j = k; j < n; ++j)
                    if (a[std::size_t(rp[i]) * n + cp[j]] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) return res;
            if (pi != k) { std::swap(rp[pi], rp[k]); res.sign = -res.sign; }
            if (pj != k) { std::swap(cp[pj], cp[k]); res.sign = -res.sign; }
            if (!bareiss_step_i64(a, n, rp, cp, k, m, n, prev)) { ok = false; break; }
            prev = a[std::size_t(rp[k]) * n + cp[k]];
            res.rank = k + 1;
            res.last_pivot = BigInt(long(prev));
        }
        if (ok) return res;
        res = EliminationResult{};
        for (int i = 0; i < m; ++i) rp[i] = i;
        for (int j = 0; j < n; ++j) cp[j] = j;
    }

    // Big-integer path.
    std::vector<BigInt> a;
    a.reserve(std::size_t(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.push_back(M.at(i, j));
    BigInt prev = 1;
    for (int k = 0; k < steps; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < m && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (a[std::size_t(rp[i]) * n + cp[j]] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return res;
        if (pi != k) { std::swap(rp[pi], rp[k]); res.sign = -res.sign; }
        if (pj != k) { std::swap(cp[pj], cp[k]); res.sign = -res.sign; }
        const BigInt pivot = a[std::size_t(rp[k]) * n + cp[k]];
        for (int i = k + 1; i < m; ++i) {
            const BigInt aik = a[std::size_t(rp[i]) * n + cp[k]];
            for (int j = k + 1; j < n; ++j) {
                BigInt& t = a[std::size_t(rp[i]) * n + cp[j]];
                t = (t * pivot - aik * a[std::size_t(rp[k]) * n + cp[j]]) / prev;
            }
            a[std::size_t(rp[i]) * n + cp[k]] = 0;
        }
        prev = pivot;
        res.rank = k + 1;
        res.last_pivot = pivot;
    }
    return res;
}

}  // namespace

BigInt determinant(const IntegerMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const int n = M.rows();
    if (n == 0) return 1;
    EliminationResult r = bareiss(M);
    if (r.rank < n) return 0;
    return r.sign > 0 ? r.last_pivot : BigInt(-r.last_pivot);
}

namespace {

BigInt ryser_01(const IntegerMatrix& M) {
    const int n = M.rows();
    std::vector<uint32_t> colbits(n, 0);  // column j -> bitmask of rows with a 1
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M.at(i, j) != 0) colbits[j] |= uint32_t(1) << i;
    std::vector<i64> rowsum(n, 0);
    i128 total = 0;
    uint32_t gray = 0;
    for (uint32_t step = 1; step < (uint32_t(1) << n); ++step) {
        const int bit = __builtin_ctz(step);
        const uint32_t mask = uint32_t(1) << bit;
        gray ^= mask;
        const int delta = (gray & mask) ? 1 : -1;
        for (int i = 0; i < n; ++i)
            if (colbits[bit] & (uint32_t(1) << i)) rowsum[i] += delta;
        i128 prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        if (__builtin_popcount(gray) % 2 == n % 2)
            total += prod;
        else
            total -= prod;
    }
    const bool neg = total < 0;
    unsigned __int128 mag = neg ? (unsigned __int128)(-total) : (unsigned __int128)total;
    BigInt out = 0;
    BigInt base = BigInt(1) << 64;
    out = BigInt(uint64_t(mag >> 64)) * base + BigInt(uint64_t(mag));
    return neg ? BigInt(-out) : out;
}

BigInt permanent_memo(const IntegerMatrix& M) {
    const int n = M.rows();
    std::unordered_map<uint64_t, BigInt> memo;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M.at(i, j) != 0) adj[i].push_back(j);
    struct Rec {
        const IntegerMatrix& M;
        const std::vector<std::vector<int>>& adj;
        std::unordered_map<uint64_t, BigInt>& memo;
        int n;
        BigInt go(int row, uint64_t used) {
            if (row == n) return 1;
            auto it = memo.find(used);
            if (it != memo.end()) return it->second;
            BigInt total = 0;
            for (int j : adj[row])
                if (!(used & (uint64_t(1) << j)))
                    total += M.at(row, j) * go(row + 1, used | (uint64_t(1) << j));
            memo.emplace(used, total);
            return total;
        }
    } rec{M, adj, memo, n};
    return rec.go(0, 0);
}

BigInt permanent_plain(const IntegerMatrix& M) {
    const int n = M.rows();
    std::vector<bool> used(n, false);
    struct Rec {
        const IntegerMatrix& M;
        std::vector<bool>& used;
        int n;
        BigInt go(int row) {
            if (row == n) return 1;
            BigInt total = 0;
            for (int j = 0; j < n; ++j)
                if (!used[j] && M.at(row, j) != 0) {
                    used[j] = true;
                    total += M.at(row, j) * go(row + 1);
                    used[j] = false;
                }
            return total;
        }
    } rec{M, used, n};
    return rec.go(0);
}

}  // namespace

BigInt permanent(const IntegerMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("permanent: matrix is not square");
    const int n = M.rows();
    if (n == 0) return 1;
    bool zero_one = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const BigInt& e = M.at(i, j);
            if (e < 0) throw std::invalid_argument("permanent: negative entry");
            if (e > 1) zero_one = false;
        }
    if (zero_one && n <= 20) return ryser_01(M);
    if (n <= 64) return permanent_memo(M);
    return permanent_plain(M);
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

int rank_mod_p(const IntegerMatrix& M, long p) {
    const int m = M.rows(), n = M.cols();
    std::vector<uint64_t> a(std::size_t(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            a[std::size_t(i) * n + j] = mpz_fdiv_ui(M.at(i, j).get_mpz_t(), (unsigned long)p);
    const uint64_t up = uint64_t(p);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pi = -1;
        for (int i = row; i < m; ++i)
            if (a[std::size_t(i) * n + col] != 0) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        if (pi != row)
            for (int j = col; j < n; ++j)
                std::swap(a[std::size_t(pi) * n + j], a[std::size_t(row) * n + j]);
        // modular inverse of the pivot (p prime)
        uint64_t inv = 1, base = a[std::size_t(row) * n + col] % up, e = up - 2;
        while (e) {
            if (e & 1) inv = (unsigned __int128)(inv)*base % up;
            base = (unsigned __int128)(base)*base % up;
            e >>= 1;
        }
        for (int i = row + 1; i < m; ++i) {
            const uint64_t f = (unsigned __int128)(a[std::size_t(i) * n + col]) * inv % up;
            if (f == 0) continue;
            for (int j = col; j < n; ++j) {
                uint64_t& t = a[std::size_t(i) * n + j];
                t = (t + up - (unsigned __int128)(f)*a[std::size_t(row) * n + j] % up) % up;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const IntegerMatrix& M, long characteristic) {
    if (characteristic == 0) return bareiss(M).rank;
    if (characteristic < 2 || !is_prime(characteristic))
        throw std::invalid_argument("rank: characteristic must be 0 or a prime");
    if (characteristic >= (1L << 31))
        throw std::invalid_argument("rank: prime characteristic above 2^31 is unsupported");
    return rank_mod_p(M, characteristic);
}

}  // namespace lzlef
