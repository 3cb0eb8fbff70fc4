// Copyright 2026 The ghzw Authors
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

#pragma once

// Dense complex linear algebra for one, two and three qubits.
//
// Basis convention: the computational basis state |q_A q_B q_C> has index
// k = 4*q_A + 2*q_B + q_C, i.e. qubit A is the most significant bit. Every
// other header in this library relies on this ordering.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghzw {

using Complex = std::complex<double>;

/// Raised for every rejected input (bad dimension, non-Hermitian operator,
/// broken normalization, ...). Internal failures use other exception types.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Qubit : int { A = 0, B = 1, C = 2 };

inline constexpr std::array<Qubit, 3> kAllQubits{Qubit::A, Qubit::B, Qubit::C};

inline constexpr int slot(Qubit q) { return static_cast<int>(q); }

inline const char *qubit_name(Qubit q) {
    switch (q) {
        case Qubit::A:
            return "A";
        case Qubit::B:
            return "B";
        case Qubit::C:
            return "C";
    }
    return "?";
}

/// A bipartition of the three qubits: `solo` against the remaining pair.
struct BipartitionCut {
    Qubit solo;
    friend bool operator==(const BipartitionCut &, const BipartitionCut &) = default;
};

inline constexpr std::array<BipartitionCut, 3> kAllCuts{
    BipartitionCut{Qubit::A}, BipartitionCut{Qubit::B}, BipartitionCut{Qubit::C}};

inline constexpr double kHermitianTol = 1e-10;

namespace detail {

inline bool supported_dim(int dim) { return dim == 2 || dim == 4 || dim == 8; }

inline void require_dim(int dim) {
    if (!supported_dim(dim)) {
        throw ValidationError("dimension " + std::to_string(dim) + " is not one of 2, 4, 8");
    }
}

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Bit of qubit `q` inside a three-qubit basis index.
inline constexpr int bit_of(int index, Qubit q) { return (index >> (2 - slot(q))) & 1; }

inline constexpr int with_bit(int index, Qubit q, int value) {
    const int mask = 1 << (2 - slot(q));
    return value ? (index | mask) : (index & ~mask);
}

}  // namespace detail

class Ket {
   public:
    explicit Ket(std::span<const Complex> amps) : dim_(static_cast<int>(amps.size())) {
        detail::require_dim(dim_);
        for (int k = 0; k < dim_; ++k) {
            if (!detail::finite(amps[k])) {
                throw ValidationError("ket amplitude " + std::to_string(k) + " is not finite");
            }
            amps_[k] = amps[k];
        }
    }

    Ket(std::initializer_list<Complex> amps) : Ket(std::span<const Complex>(amps.begin(), amps.size())) {}

    static Ket basis(int dim, int index) {
        detail::require_dim(dim);
        if (index < 0 || index >= dim) {
            throw ValidationError("basis index " + std::to_string(index) + " out of range");
        }
        std::array<Complex, 8> a{};
        a[index] = 1.0;
        return Ket(std::span<const Complex>(a.data(), dim));
    }

    int dim() const { return dim_; }
    std::span<const Complex> amps() const { return {amps_.data(), static_cast<size_t>(dim_)}; }
    Complex operator[](int k) const { return amps_[k]; }

    double norm_sq() const {
        double s = 0;
        for (int k = 0; k < dim_; ++k) s += std::norm(amps_[k]);
        return s;
    }

    Ket normalized() const {
        const double n = std::sqrt(norm_sq());
        if (!(n > 0)) throw ValidationError("cannot normalize a zero ket");
        std::array<Complex, 8> a{};
        for (int k = 0; k < dim_; ++k) a[k] = amps_[k] / n;
        return Ket(std::span<const Complex>(a.data(), dim_));
    }

   private:
    int dim_;
    std::array<Complex, 8> amps_{};
};

inline Ket operator*(Complex s, const Ket &x) {
    std::array<Complex, 8> a{};
    for (int k = 0; k < x.dim(); ++k) a[k] = s * x[k];
    return Ket(std::span<const Complex>(a.data(), x.dim()));
}

inline Ket operator+(const Ket &x, const Ket &y) {
    if (x.dim() != y.dim()) throw ValidationError("ket dimension mismatch in sum");
    std::array<Complex, 8> a{};
    for (int k = 0; k < x.dim(); ++k) a[k] = x[k] + y[k];
    return Ket(std::span<const Complex>(a.data(), x.dim()));
}

inline Ket operator-(const Ket &x, const Ket &y) { return x + Complex(-1.0) * y; }

inline double norm(const Ket &x) { return std::sqrt(x.norm_sq()); }

/// Square operator of dimension 2, 4 or 8, stored row-major.
class Operator {
   public:
    explicit Operator(int dim) : dim_(dim) { detail::require_dim(dim); }

    Operator(int dim, std::span<const Complex> row_major) : Operator(dim) {
        if (static_cast<int>(row_major.size()) != dim * dim) {
            throw ValidationError("operator needs " + std::to_string(dim * dim) + " entries, got " +
                                  std::to_string(row_major.size()));
        }
        for (int i = 0; i < dim * dim; ++i) {
            if (!detail::finite(row_major[i])) {
                throw ValidationError("operator entry " + std::to_string(i) + " is not finite");
            }
            e_[i] = row_major[i];
        }
    }

    static Operator identity(int dim) {
        Operator r(dim);
        for (int i = 0; i < dim; ++i) r(i, i) = 1.0;
        return r;
    }

    static Operator diagonal(std::span<const double> d) {
        Operator r(static_cast<int>(d.size()));
        for (int i = 0; i < r.dim(); ++i) r(i, i) = d[i];
        return r;
    }

    int dim() const { return dim_; }
    Complex operator()(int r, int c) const { return e_[r * dim_ + c]; }
    Complex &operator()(int r, int c) { return e_[r * dim_ + c]; }

    friend bool operator==(const Operator &, const Operator &) = default;

   private:
    int dim_;
    std::array<Complex, 64> e_{};
};

inline Operator operator+(const Operator &x, const Operator &y) {
    if (x.dim() != y.dim()) throw ValidationError("operator dimension mismatch in sum");
    Operator r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

inline Operator operator*(Complex s, const Operator &x) {
    Operator r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = s * x(i, j);
    return r;
}

inline Operator operator-(const Operator &x, const Operator &y) { return x + Complex(-1.0) * y; }

inline Operator operator*(const Operator &x, const Operator &y) {
    if (x.dim() != y.dim()) throw ValidationError("operator dimension mismatch in product");
    const int n = x.dim();
    Operator r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex xik = x(i, k);
            if (xik == Complex{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

inline Ket operator*(const Operator &m, const Ket &x) {
    if (m.dim() != x.dim()) throw ValidationError("operator/ket dimension mismatch");
    std::array<Complex, 8> a{};
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a[i] += m(i, j) * x[j];
    return Ket(std::span<const Complex>(a.data(), x.dim()));
}

inline Operator adjoint(const Operator &x) {
    Operator r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = std::conj(x(j, i));
    return r;
}

inline Complex trace(const Operator &x) {
    Complex t = 0;
    for (int i = 0; i < x.dim(); ++i) t += x(i, i);
    return t;
}

inline double max_abs_diff(const Operator &x, const Operator &y) {
    if (x.dim() != y.dim()) throw ValidationError("operator dimension mismatch");
    double m = 0;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

inline double frobenius_norm(const Operator &x) {
    double s = 0;
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) s += std::norm(x(i, j));
    return std::sqrt(s);
}

inline double hermiticity_defect(const Operator &x) { return max_abs_diff(x, adjoint(x)); }

inline bool is_hermitian(const Operator &x, double tol = kHermitianTol) { return hermiticity_defect(x) <= tol; }

inline double unitarity_defect(const Operator &u) {
    return max_abs_diff(adjoint(u) * u, Operator::identity(u.dim()));
}

/// amps[i*dim_y + j] = x_i * y_j.
inline Ket tensor(const Ket &x, const Ket &y) {
    const int dim = x.dim() * y.dim();
    if (dim > 8) throw ValidationError("tensor product dimension " + std::to_string(dim) + " exceeds 8");
    std::array<Complex, 8> a{};
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < y.dim(); ++j) a[i * y.dim() + j] = x[i] * y[j];
    return Ket(std::span<const Complex>(a.data(), dim));
}

inline Operator kron(const Operator &x, const Operator &y) {
    const int dim = x.dim() * y.dim();
    if (dim > 8) throw ValidationError("Kronecker product dimension " + std::to_string(dim) + " exceeds 8");
    Operator r(dim);
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j)
            for (int k = 0; k < y.dim(); ++k)
                for (int l = 0; l < y.dim(); ++l) r(i * y.dim() + k, j * y.dim() + l) = x(i, j) * y(k, l);
    return r;
}

/// Sum_k conj(x_k) y_k.
inline Complex inner(const Ket &x, const Ket &y) {
    if (x.dim() != y.dim()) {
        throw ValidationError("inner product of kets with dims " + std::to_string(x.dim()) + " and " +
                              std::to_string(y.dim()));
    }
    Complex s = 0;
    for (int k = 0; k < x.dim(); ++k) s += std::conj(x[k]) * y[k];
    return s;
}

/// |x><x|.
inline Operator outer(const Ket &x) {
    Operator r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x[i] * std::conj(x[j]);
    return r;
}

/// <x|M|x>.
inline Complex sandwich(const Ket &x, const Operator &m) { return inner(x, m * x); }

/// Reduced single-qubit operator of slot `keep` of a three-qubit operator.
inline Operator partial_trace(const Operator &rho, Qubit keep) {
    if (rho.dim() != 8) throw ValidationError("partial_trace expects a three-qubit (dim 8) operator");
    Operator r(2);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            // Traced-out bits of row and column indices must agree.
            if (detail::with_bit(i, keep, 0) != detail::with_bit(j, keep, 0)) continue;
            r(detail::bit_of(i, keep), detail::bit_of(j, keep)) += rho(i, j);
        }
    }
    return r;
}

/// Transposes the tensor indices of slot `cut` only.
///
/// Dimension 8 uses slots A, B, C. Dimension 4 is read as a two-qubit
/// operator whose first factor is slot A and second factor is slot B;
/// transposing slot C of a dim-4 operator is rejected.
inline Operator partial_transpose(const Operator &rho, Qubit cut) {
    int shift = 0;
    if (rho.dim() == 8) {
        shift = 2 - slot(cut);
    } else if (rho.dim() == 4) {
        if (cut == Qubit::C) throw ValidationError("two-qubit partial transpose accepts only slots A and B");
        shift = cut == Qubit::A ? 1 : 0;
    } else {
        throw ValidationError("partial_transpose expects a dim 4 or dim 8 operator");
    }
    const int mask = 1 << shift;
    Operator r(rho.dim());
    for (int i = 0; i < rho.dim(); ++i) {
        for (int j = 0; j < rho.dim(); ++j) {
            const int bi = i & mask;
            const int bj = j & mask;
            r((i & ~mask) | bj, (j & ~mask) | bi) = rho(i, j);
        }
    }
    return r;
}

/// Eigenvalues in ascending order; column k of `vectors` belongs to values[k].
struct EigenSystem {
    std::vector<double> values;
    Operator vectors;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian operator.
inline EigenSystem hermitian_eigensystem(const Operator &op) {
    const double defect = hermiticity_defect(op);
    if (defect > kHermitianTol) {
        throw ValidationError("operator is not Hermitian (max |M - M^dagger| = " + std::to_string(defect) + ")");
    }
    const int n = op.dim();
    // Symmetrize so rounding noise below the gate does not bias the result.
    Operator a = Complex(0.5) * (op + adjoint(op));
    Operator v = Operator::identity(n);
    const double scale = std::max(1.0, frobenius_norm(a));

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-12;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= kOffTol * scale) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const Complex ph = apq / mag;
                const Complex phc = std::conj(ph);
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Rotation J: J(p,p)=c, J(p,q)=s, J(q,p)=-s*conj(ph), J(q,q)=c*conj(ph).
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * vkp + c * phc * vkq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem out{std::vector<double>(n), Operator(n)};
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> hermitian_eigs(const Operator &op) { return hermitian_eigensystem(op).values; }

inline Ket eigenvector(const EigenSystem &es, int k) {
    std::array<Complex, 8> a{};
    for (int i = 0; i < es.vectors.dim(); ++i) a[i] = es.vectors(i, k);
    return Ket(std::span<const Complex>(a.data(), es.vectors.dim()));
}

}  // namespace ghzw
