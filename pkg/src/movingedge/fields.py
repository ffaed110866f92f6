"""Container for the six complex Cartesian field components."""

from dataclasses import dataclass

import numpy as np

COMPONENTS = ("Ex", "Ey", "Ez", "cBx", "cBy", "cBz")


@dataclass(frozen=True)
class EMField:
    """E and cB, each stacked as an array of shape (3, *points)."""

    E: np.ndarray
    cB: np.ndarray

    @classmethod
    def from_components(cls, Ex=0, Ey=0, Ez=0, cBx=0, cBy=0, cBz=0):
        parts = np.broadcast_arrays(*(np.asarray(v, dtype=complex) for v in (Ex, Ey, Ez, cBx, cBy, cBz)))
        stacked = np.stack(parts)
        return cls(stacked[:3], stacked[3:])

    @classmethod
    def zeros(cls, shape=()):
        z = np.zeros((3,) + tuple(shape), dtype=complex)
        return cls(z, z.copy())

    @property
    def shape(self):
        return self.E.shape[1:]

    def as_array(self):
        """Shape (6, *points) array in the order of ``COMPONENTS``."""
        return np.concatenate([self.E, self.cB])

    def component(self, name):
        return self.as_array()[COMPONENTS.index(name)]

    def norm(self):
        """Euclidean norm of the 6-vector at each point."""
        return np.sqrt(np.sum(np.abs(self.as_array()) ** 2, axis=0))

    def __add__(self, other):
        return EMField(self.E + other.E, self.cB + other.cB)

    def __sub__(self, other):
        return EMField(self.E - other.E, self.cB - other.cB)

    def __mul__(self, alpha):
        return EMField(alpha * self.E, alpha * self.cB)

    __rmul__ = __mul__

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return EMField(self.E[(slice(None),) + idx], self.cB[(slice(None),) + idx])

    def allclose(self, other, rtol=1e-12, atol=0.0):
        return np.allclose(self.as_array(), other.as_array(), rtol=rtol, atol=atol)
