#include "qrepnet/channel.hpp"

#include <cmath>

#include "qrepnet/errors.hpp"

namespace qrepnet {

namespace {

constexpr Real _norm_tol = 1e-9;

const DensityMatrix& _pauli_x() {
    static const DensityMatrix m = (DensityMatrix() << Complex(0, 0), Complex(1, 0),
                                    Complex(1, 0), Complex(0, 0))
                                       .finished();
    return m;
}

const DensityMatrix& _pauli_y() {
    static const DensityMatrix m = (DensityMatrix() << Complex(0, 0), Complex(0, -1),
                                    Complex(0, 1), Complex(0, 0))
                                       .finished();
    return m;
}

const DensityMatrix& _pauli_z() {
    static const DensityMatrix m = (DensityMatrix() << Complex(1, 0), Complex(0, 0),
                                    Complex(0, 0), Complex(-1, 0))
                                       .finished();
    return m;
}

void _check_channel(const PauliChannel& ch) {
    const Real ps[4] = {ch.p_i, ch.p_x, ch.p_y, ch.p_z};
    Real sum = 0;
    for (Real p : ps) {
        if (!(p >= -1e-12 && p <= 1 + 1e-12))
            throw InvalidProbabilityError("Pauli weight outside [0, 1]");
        sum += p;
    }
    if (std::abs(sum - 1) > _norm_tol)
        throw InvalidProbabilityError("Pauli weights do not sum to 1");
}

void _check_density(const DensityMatrix& rho) {
    if (!rho.allFinite()) throw InvalidStateError("density matrix has non-finite entries");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > _norm_tol)
        throw InvalidStateError("density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1) > _norm_tol || std::abs(rho.trace().imag()) > _norm_tol)
        throw InvalidStateError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -_norm_tol)
        throw InvalidStateError("density matrix has a negative eigenvalue");
}

// Eigenvalues this small on a unit-trace PSD matrix are rounding noise, not
// signal, and the square root would amplify them (sqrt(1e-17) ~ 3e-9) enough
// to corrupt trace-based fidelity values. Treat them as exact zeros.
constexpr Real _eig_floor = 1e-14;

Eigen::Vector2d _sqrt_clamped(const Eigen::Vector2d& vals) {
    return vals.unaryExpr([](Real v) { return v < _eig_floor ? Real(0) : std::sqrt(v); });
}

// Hermitian square root with noise-level eigenvalues clamped to zero.
DensityMatrix _psd_sqrt(const DensityMatrix& m) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const Eigen::Vector2d vals = _sqrt_clamped(es.eigenvalues());
    return es.eigenvectors() * vals.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

PureState::PureState(Complex a, Complex b) {
    const Real n2 = std::norm(a) + std::norm(b);
    if (std::abs(n2 - 1) > _norm_tol)
        throw InvalidStateError("state amplitudes are not normalized");
    const Real n = std::sqrt(n2);
    ket_ << a / n, b / n;
}

PureState PureState::zero() { return PureState(Complex(1, 0), Complex(0, 0)); }
PureState PureState::one() { return PureState(Complex(0, 0), Complex(1, 0)); }
PureState PureState::plus() {
    const Real s = 1 / std::sqrt(Real(2));
    return PureState(Complex(s, 0), Complex(s, 0));
}
PureState PureState::minus() {
    const Real s = 1 / std::sqrt(Real(2));
    return PureState(Complex(s, 0), Complex(-s, 0));
}

PureState PureState::from_bloch(const BlochVector& r) {
    if (std::abs(r.norm() - 1) > _norm_tol)
        throw InvalidStateError("Bloch vector is not unit length");
    const Real theta = std::acos(std::clamp(r.z(), Real(-1), Real(1)));
    const Real phi = std::atan2(r.y(), r.x());
    return PureState(Complex(std::cos(theta / 2), 0),
                     std::polar(std::sin(theta / 2), phi));
}

DensityMatrix PureState::density() const { return ket_ * ket_.adjoint(); }

Real p_fiber(Real attenuation_db_per_km, Real length_km) {
    if (attenuation_db_per_km < 0) throw InvalidInputError("attenuation must be >= 0");
    if (length_km < 0) throw InvalidInputError("length must be >= 0");
    return 1 - std::pow(Real(10), -attenuation_db_per_km * length_km / 10);
}

Real p_memory(Real wait_s, Real time_constant_s) {
    if (wait_s < 0) throw InvalidInputError("wait time must be >= 0");
    if (!(time_constant_s > 0)) throw InvalidInputError("memory time constant must be > 0");
    return -std::expm1(-wait_s / time_constant_s);
}

PauliChannel fiber_channel(Real p) {
    if (!(p >= 0 && p <= 1)) throw InvalidProbabilityError("fiber p outside [0, 1]");
    return PauliChannel{1 - 3 * p / 4, p / 4, p / 4, p / 4};
}

PauliChannel memory_channel(Real p) {
    if (!(p >= 0 && p <= 1)) throw InvalidProbabilityError("memory p outside [0, 1]");
    return PauliChannel{1 - p, p, 0, 0};
}

DensityMatrix apply_channel(const PauliChannel& ch, const DensityMatrix& rho) {
    _check_channel(ch);
    _check_density(rho);
    DensityMatrix out = ch.p_i * rho;
    out += ch.p_x * (_pauli_x() * rho * _pauli_x());
    out += ch.p_y * (_pauli_y() * rho * _pauli_y());
    out += ch.p_z * (_pauli_z() * rho * _pauli_z());
    return out;
}

Real fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    _check_density(rho);
    _check_density(sigma);

    const DensityMatrix root = _psd_sqrt(rho);
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(DensityMatrix(root * sigma * root),
                                                    Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const Real tr = _sqrt_clamped(es.eigenvalues()).sum();
    const Real f = std::min(tr * tr, Real(1));

    // For pure rho the general formula must collapse to <psi|sigma|psi>. Pure
    // here means the small eigenvalue sits below the clamp floor, so sqrt(rho)
    // is exactly rank one and the identity holds to rounding; anything mixed
    // beyond the floor legitimately deviates by O(sqrt(eps)) and is skipped.
    Eigen::SelfAdjointEigenSolver<DensityMatrix> er(rho);
    if (er.eigenvalues().maxCoeff() > 1 - _eig_floor) {
        const Ket psi = er.eigenvectors().col(1);
        const Real shortcut = (psi.adjoint() * sigma * psi)(0).real();
        if (std::abs(f - shortcut) > 1e-12)
            throw NumericalError("fidelity disagrees with the pure-state shortcut");
    }
    return f;
}

Real edge_cost(const PureState& state, const FiberParams& fiber,
               const MemoryParams& memory) {
    const DensityMatrix rho = state.density();
    DensityMatrix out =
        apply_channel(fiber_channel(p_fiber(fiber.attenuation_db_per_km, fiber.length_km)), rho);
    out = apply_channel(memory_channel(p_memory(memory.wait_s, memory.time_constant_s)), out);
    return std::clamp(1 - fidelity(rho, out), Real(0), Real(1));
}

}  // namespace qrepnet
