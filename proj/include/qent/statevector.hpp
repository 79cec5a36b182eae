#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qent {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
/// 2x2 complex matrix acting on one qubit; also used for observables.
using Gate = Eigen::Matrix2cd;

/// Default absolute comparison tolerance for floating checks.
inline constexpr double kDefaultTol = 1e-9;

/// Thrown when a numerical self-consistency check fails (e.g. a Hermitian
/// expectation value acquires a non-negligible imaginary part).
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Dense complex statevector over n qubits.
 *
 * Basis indices are big-endian: qubit 1 is the most significant bit, so the
 * basis state |q1 q2 ... qn> has index sum_i q_i 2^(n-i). This matches the
 * top-to-bottom wire order of the usual circuit diagrams and is fixed
 * globally for the whole library.
 */
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);

    /// Wraps an amplitude vector; its length must be exactly 2^n_qubits.
    StateVector(int n_qubits, Vector amplitudes);

    /// Deduces the qubit count from the vector length (must be a power of two).
    static StateVector from_amplitudes(Vector amplitudes);

    /// Computational basis state |index>.
    static StateVector basis_state(int n_qubits, Eigen::Index index);

    /// Uniform superposition |+>^n = H^n |0...0>.
    static StateVector uniform(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(Eigen::Index index) const { return amps_(index); }

    double norm() const { return amps_.norm(); }
    StateVector normalized() const;

  private:
    int n_qubits_;
    Vector amps_;
};

namespace gates {
/// Pauli and Hadamard matrices in the computational basis.
const Gate& x();
const Gate& y();
const Gate& z();
const Gate& h();
}  // namespace gates

/// Kronecker product a (x) b, with a acting on the more significant qubits.
Matrix kron(const Matrix& a, const Matrix& b);

/// gate^(x)n. n = 0 yields the 1x1 matrix [1].
Matrix kronecker_power(const Matrix& gate, int n);

/// (I (x) ... (x) gate (x) ... (x) I)|state>, gate on `qubit` (1-based, MSB first).
/// O(2^n): pairs basis indices differing only in the target bit. Input unmodified.
StateVector apply_single_qubit(const StateVector& state, int qubit, const Gate& gate);

/// sum_i conj(a_i) b_i.
Complex inner_product(const StateVector& a, const StateVector& b);

bool is_unitary(const Matrix& g, double tol = kDefaultTol);
bool is_hermitian(const Matrix& g, double tol = kDefaultTol);

namespace detail {
/// In-place kernel behind apply_single_qubit; shared with the other modules'
/// hot paths. `gate` need not be unitary.
void apply_single_qubit_inplace(Vector& amps, int n_qubits, int qubit, const Gate& gate);

/// Bit position (0 = LSB) of a 1-based wire index.
inline int wire_bit(int n_qubits, int wire) { return n_qubits - wire; }

bool is_power_of_two(Eigen::Index value);
int log2_exact(Eigen::Index value);
}  // namespace detail

}  // namespace qent
