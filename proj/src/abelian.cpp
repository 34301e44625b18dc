#include "roundfold/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace roundfold {

std::string ring_name(Ring r) {
    return r == Ring::Integers ? "Z" : "Z/2";
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

int64_t gcd_nonneg(int64_t a, int64_t b) {
    if (a < 0) a = checked_sub(0, a);
    if (b < 0) b = checked_sub(0, b);
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm_checked(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    int64_t g = gcd_nonneg(a, b);
    return checked_mul(a < 0 ? -a : a, (b < 0 ? -b : b) / g);
}

AbGroup AbGroup::free(int rank) {
    AbGroup g;
    g.rank = rank;
    return g;
}

AbGroup AbGroup::cyclic(int64_t k) {
    if (k < 0) k = -k;
    if (k == 0) return free(1);
    if (k == 1) return zero();
    AbGroup g;
    g.torsion.push_back(k);
    return g;
}

AbGroup AbGroup::mod_two_vector_space(int dim) {
    AbGroup g;
    g.torsion.assign(static_cast<size_t>(dim), 2);
    return g;
}

std::optional<int64_t> AbGroup::order() const {
    if (rank > 0) return std::nullopt;
    int64_t n = 1;
    for (int64_t d : torsion) n = checked_mul(n, d);
    return n;
}

bool AbGroup::is_canonical() const {
    if (rank < 0) return false;
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) return false;
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) return false;
    }
    return true;
}

std::string AbGroup::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        if (!first) out << " ⊕ ";
        out << "Z";
        first = false;
    }
    for (int64_t d : torsion) {
        if (!first) out << " ⊕ ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

AbGroup canonicalize(int rank, std::vector<int64_t> torsion) {
    std::vector<int64_t> ds;
    for (int64_t d : torsion) {
        if (d < 0) d = -d;
        if (d == 0) {
            ++rank;
            continue;
        }
        if (d > 1) ds.push_back(d);
    }
    // Pairwise gcd/lcm passes until d_i | d_{i+1} throughout.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(ds.begin(), ds.end());
        for (size_t i = 0; i + 1 < ds.size(); ++i) {
            if (ds[i + 1] % ds[i] != 0) {
                int64_t g = gcd_nonneg(ds[i], ds[i + 1]);
                int64_t l = lcm_checked(ds[i], ds[i + 1]);
                ds[i] = g;
                ds[i + 1] = l;
                changed = true;
            }
        }
    }
    std::vector<int64_t> keep;
    for (int64_t d : ds)
        if (d > 1) keep.push_back(d);
    AbGroup out;
    out.rank = rank;
    out.torsion = std::move(keep);
    return out;
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    std::vector<int64_t> torsion = a.torsion;
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
    return canonicalize(a.rank + b.rank, std::move(torsion));
}

AbGroup tensor(const AbGroup& a, const AbGroup& b) {
    std::vector<int64_t> torsion;
    // Z^r (x) Z/d contributes (Z/d)^r on either side.
    for (int64_t d : a.torsion)
        for (int i = 0; i < b.rank; ++i) torsion.push_back(d);
    for (int64_t e : b.torsion)
        for (int i = 0; i < a.rank; ++i) torsion.push_back(e);
    for (int64_t d : a.torsion)
        for (int64_t e : b.torsion) torsion.push_back(gcd_nonneg(d, e));
    return canonicalize(a.rank * b.rank, std::move(torsion));
}

AbGroup tor_product(const AbGroup& a, const AbGroup& b) {
    std::vector<int64_t> torsion;
    for (int64_t d : a.torsion)
        for (int64_t e : b.torsion) torsion.push_back(gcd_nonneg(d, e));
    return canonicalize(0, std::move(torsion));
}

IntMatrix::IntMatrix(int rows_, int cols_) : rows(rows_), cols(cols_) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimensions");
    entries.assign(static_cast<size_t>(rows) * cols, 0);
}

IntMatrix::IntMatrix(int rows_, int cols_, std::vector<int64_t> entries_)
    : rows(rows_), cols(cols_), entries(std::move(entries_)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimensions");
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw DomainError("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](int64_t x) { return x == 0; });
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < rows; ++r) {
        if (r) out << ",";
        out << "[";
        for (int c = 0; c < cols; ++c) {
            if (c) out << ",";
            out << at(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix& m, int a, int b, int64_t q) {
    for (int c = 0; c < m.cols; ++c)
        m.at(a, c) = checked_sub(m.at(a, c), checked_mul(q, m.at(b, c)));
}

void col_axpy(IntMatrix& m, int a, int b, int64_t q) {
    for (int r = 0; r < m.rows; ++r)
        m.at(r, a) = checked_sub(m.at(r, a), checked_mul(q, m.at(r, b)));
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    int t = 0;  // current pivot slot
    const int limit = std::min(m.rows, m.cols);
    while (t < limit) {
        // Pick the nonzero entry of least magnitude in the remaining block.
        int pr = -1, pc = -1;
        int64_t best = 0;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                int64_t v = m.at(r, c);
                if (v == 0) continue;
                int64_t a = v < 0 ? -v : v;
                if (pr < 0 || a < best) {
                    pr = r;
                    pc = c;
                    best = a;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = t + 1; r < m.rows; ++r) {
                int64_t v = m.at(r, t);
                if (v == 0) continue;
                int64_t q = v / m.at(t, t);
                row_axpy(m, r, t, q);
                if (m.at(r, t) != 0) {
                    swap_rows(m, t, r);
                    clean = false;
                }
            }
            for (int c = t + 1; c < m.cols; ++c) {
                int64_t v = m.at(t, c);
                if (v == 0) continue;
                int64_t q = v / m.at(t, t);
                col_axpy(m, c, t, q);
                if (m.at(t, c) != 0) {
                    swap_cols(m, t, c);
                    clean = false;
                }
            }
        }
        // Enforce divisibility against the rest of the block: if some entry is
        // not divisible by the pivot, fold its column in and redo this slot.
        int64_t pivot = m.at(t, t);
        bool redo = false;
        for (int r = t + 1; r < m.rows && !redo; ++r)
            for (int c = t + 1; c < m.cols && !redo; ++c)
                if (m.at(r, c) % pivot != 0) {
                    col_axpy(m, t, c, -1);
                    redo = true;
                }
        if (!redo) ++t;
    }
    SmithResult out;
    for (int i = 0; i < limit; ++i) {
        int64_t d = m.at(i, i);
        if (d == 0) continue;
        out.invariant_factors.push_back(d < 0 ? -d : d);
    }
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

int rank_mod_two(const IntMatrix& input) {
    // Gaussian elimination over GF(2) on a bit copy.
    std::vector<std::vector<uint8_t>> m(static_cast<size_t>(input.rows),
                                        std::vector<uint8_t>(static_cast<size_t>(input.cols)));
    for (int r = 0; r < input.rows; ++r)
        for (int c = 0; c < input.cols; ++c)
            m[r][c] = static_cast<uint8_t>(((input.at(r, c) % 2) + 2) % 2);
    int rank = 0;
    for (int c = 0; c < input.cols && rank < input.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < input.rows; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < input.rows; ++r)
            if (r != rank && m[r][c])
                for (int k = c; k < input.cols; ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

namespace {

int64_t generator_order(const AbGroup& g, int index) {
    // 0 encodes infinite order.
    if (index < g.rank) return 0;
    return g.torsion[static_cast<size_t>(index - g.rank)];
}

}  // namespace

HomMatrix::HomMatrix(AbGroup source_, AbGroup target_, IntMatrix matrix_, Ring ring_)
    : source(std::move(source_)), target(std::move(target_)), matrix(std::move(matrix_)), ring(ring_) {
    if (!source.is_canonical() || !target.is_canonical())
        throw DomainError("HomMatrix endpoints must be canonical groups");
    if (matrix.rows != target.generators() || matrix.cols != source.generators())
        throw DomainError("HomMatrix shape mismatch: expected " + std::to_string(target.generators()) +
                          "x" + std::to_string(source.generators()) + ", got " +
                          std::to_string(matrix.rows) + "x" + std::to_string(matrix.cols));
    if (ring == Ring::ModTwo) {
        auto elementary = [](const AbGroup& g) {
            return g.rank == 0 &&
                   std::all_of(g.torsion.begin(), g.torsion.end(), [](int64_t d) { return d == 2; });
        };
        if (!elementary(source) || !elementary(target))
            throw DomainError("mod-2 HomMatrix endpoints must be (Z/2)^d");
        for (auto& e : matrix.entries) e = ((e % 2) + 2) % 2;
        return;
    }
    // Reduce entries modulo the target generator orders.
    for (int r = 0; r < matrix.rows; ++r) {
        int64_t ord = generator_order(target, r);
        if (ord == 0) continue;
        for (int c = 0; c < matrix.cols; ++c)
            matrix.at(r, c) = ((matrix.at(r, c) % ord) + ord) % ord;
    }
    // Torsion compatibility: d * (image of an order-d generator) must be a
    // target relation.
    for (int c = source.rank; c < matrix.cols; ++c) {
        int64_t d = generator_order(source, c);
        for (int r = 0; r < matrix.rows; ++r) {
            int64_t ord = generator_order(target, r);
            int64_t v = checked_mul(d, matrix.at(r, c));
            bool ok = (ord == 0) ? v == 0 : v % ord == 0;
            if (!ok)
                throw DomainError("torsion-incompatible column: source generator " + std::to_string(c) +
                                  " of order " + std::to_string(d) + " maps outside the relation lattice at row " +
                                  std::to_string(r));
        }
    }
}

HomMatrix HomMatrix::zero(const AbGroup& source, const AbGroup& target, Ring ring) {
    return HomMatrix(source, target, IntMatrix(target.generators(), source.generators()), ring);
}

HomMatrix HomMatrix::identity(const AbGroup& group, Ring ring) {
    return HomMatrix(group, group, IntMatrix::identity(group.generators()), ring);
}

AbGroup cokernel(const HomMatrix& h) {
    if (h.ring == Ring::ModTwo) {
        int dim = h.target.generators() - rank_mod_two(h.matrix);
        return AbGroup::mod_two_vector_space(dim);
    }
    // Stack the image columns with the target relation columns and take SNF.
    int gens = h.target.generators();
    int torsion_count = static_cast<int>(h.target.torsion.size());
    IntMatrix p(gens, h.matrix.cols + torsion_count);
    for (int r = 0; r < gens; ++r)
        for (int c = 0; c < h.matrix.cols; ++c) p.at(r, c) = h.matrix.at(r, c);
    for (int i = 0; i < torsion_count; ++i)
        p.at(h.target.rank + i, h.matrix.cols + i) = h.target.torsion[static_cast<size_t>(i)];
    SmithResult snf = smith_normal_form(p);
    return canonicalize(gens - snf.rank, snf.invariant_factors);
}

bool is_surjective(const HomMatrix& h) {
    if (h.ring == Ring::ModTwo) return rank_mod_two(h.matrix) == h.target.generators();
    return cokernel(h).is_zero();
}

bool is_primitive(const std::vector<int64_t>& v, int ambient_rank) {
    if (ambient_rank < 1 || static_cast<int>(v.size()) != ambient_rank)
        throw DomainError("is_primitive expects a vector of length ambient_rank >= 1");
    int64_t g = 0;
    for (int64_t x : v) g = gcd_nonneg(g, x);
    return g == 1;
}

}  // namespace roundfold
