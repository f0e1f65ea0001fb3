#ifndef QREPNET_CHANNEL_HPP
#define QREPNET_CHANNEL_HPP

#include "qrepnet/types.hpp"

namespace qrepnet {

// Qubit state |psi> = a|0> + b|1>, kept normalized on construction.
class PureState {
  public:
    PureState(Complex a, Complex b);

    static PureState zero();
    static PureState one();
    static PureState plus();
    static PureState minus();
    // theta, phi are the usual Bloch sphere angles of the unit vector.
    static PureState from_bloch(const BlochVector& r);

    const Ket& ket() const { return ket_; }
    DensityMatrix density() const;

  private:
    Ket ket_;
};

// Mixing weights of the four Pauli operators; must sum to one.
struct PauliChannel {
    Real p_i;
    Real p_x;
    Real p_y;
    Real p_z;
};

struct FiberParams {
    Real attenuation_db_per_km;
    Real length_km;
};

struct MemoryParams {
    Real wait_s;
    Real time_constant_s;
};

// Depolarizing strength of a fiber segment: 1 - 10^(-eta*l/10).
Real p_fiber(Real attenuation_db_per_km, Real length_km);

// Bit-flip strength of a memory dwell: 1 - exp(-t_w / T).
Real p_memory(Real wait_s, Real time_constant_s);

// Fiber transmission as a Pauli mix: (1 - 3p/4) I + p/4 (X + Y + Z).
PauliChannel fiber_channel(Real p);

// Memory dwell as a pure bit-flip mix: (1 - p) I + p X.
PauliChannel memory_channel(Real p);

// rho' = sum_v p_v O_v rho O_v^dagger. Validates both channel and state.
DensityMatrix apply_channel(const PauliChannel& ch, const DensityMatrix& rho);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via the spectral
// decomposition. When rho is pure this must equal <psi|sigma|psi>; the
// implementation cross-checks itself against that shortcut.
Real fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// 1 - F between the input state and the same state after fiber transit
// followed by a memory dwell.
Real edge_cost(const PureState& state, const FiberParams& fiber,
               const MemoryParams& memory);

}  // namespace qrepnet

#endif
