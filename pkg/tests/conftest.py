import numpy as np
from hypothesis import strategies as st

from densecode import Ket

_finite = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def ket_strategy(num_qubits: int):
    """Random normalized kets with the given qubit count."""
    dim = 2**num_qubits

    def build(pairs):
        amps = np.array([complex(re, im) for re, im in pairs])
        norm = float(np.linalg.norm(amps))
        if norm < 1e-3:
            return None
        return Ket(num_qubits, amps / norm)

    return (
        st.lists(st.tuples(_finite, _finite), min_size=dim, max_size=dim)
        .map(build)
        .filter(lambda k: k is not None)
    )


def random_ket(rng: np.random.Generator, num_qubits: int) -> Ket:
    """Seeded random normalized ket (for loops where hypothesis is overkill)."""
    amps = rng.normal(size=2**num_qubits) + 1j * rng.normal(size=2**num_qubits)
    return Ket(num_qubits, amps / np.linalg.norm(amps))
