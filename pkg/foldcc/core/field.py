"""
Prime field arithmetic for foldcc.

Every code and protocol object in the package lives over a single prime field
F_q. This module validates the modulus, finds and verifies primitive elements,
and exposes the scalar operations the codecs need. Array arithmetic itself is
delegated to ``galois`` field arrays, which always hold canonical
representatives in [0, q).
"""

import logging
from functools import lru_cache
from typing import Any, Union

import galois
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

logger = logging.getLogger(__name__)

# A field element or an array of them.
Fe = galois.FieldArray

ElementLike = Union[int, np.integer, galois.FieldArray]

INT64_MAX = int(np.iinfo(np.int64).max)


@lru_cache(maxsize=None)
def field_class(q: int) -> type[galois.FieldArray]:
    """Return the galois array class for GF(q).

    Args:
        q: Prime modulus

    Returns:
        The FieldArray subclass for the prime field of order q
    """
    logger.debug(f"Building galois field class for q={q}")
    return galois.GF(q)


def is_prime(q: int) -> bool:
    """Deterministic primality test, exact for every 64-bit modulus."""
    return bool(galois.is_prime(q))


def find_primitive(q: int) -> Fe:
    """Find the smallest primitive element of F_q.

    The returned g satisfies g^((q-1)/p) != 1 for every prime divisor p of
    q-1, so its multiplicative order is exactly q-1.

    Args:
        q: Prime modulus, at least 3

    Returns:
        The primitive element as a field scalar

    Raises:
        ValueError: If q is not a prime >= 3
    """
    if q < 3 or not is_prime(q):
        raise ValueError(f"q={q} must be a prime >= 3 to have a primitive element")
    g = int(galois.primitive_root(q))
    return field_class(q)(g)


def is_primitive(g: int, q: int) -> bool:
    """Check that g has multiplicative order exactly q-1 in F_q."""
    if not 0 < g < q:
        return False
    return bool(galois.is_primitive_root(g, q))


class PrimeField(BaseModel):
    """A prime field F_q together with a verified primitive element.

    The primitive element plays the role of the folding generator of the FRS
    code and of the evaluation-point generator of FLCC. Instances are
    immutable and safe to share across threads and processes.
    """

    model_config = ConfigDict(frozen=True)

    q: int
    gamma: int

    @model_validator(mode="after")
    def _validate_field(self) -> "PrimeField":
        """Check primality of q and primitivity of gamma."""
        if self.q < 3 or not is_prime(self.q):
            raise ValueError(f"modulus q={self.q} must be a prime >= 3")
        if not is_primitive(self.gamma, self.q):
            raise ValueError(f"gamma={self.gamma} is not a primitive element of F_{self.q}")
        return self

    @classmethod
    def from_modulus(cls, q: int) -> "PrimeField":
        """Build the field with its smallest primitive element."""
        return cls(q=q, gamma=int(find_primitive(q)))

    @property
    def gf(self) -> type[galois.FieldArray]:
        """The galois array class backing this field."""
        return field_class(self.q)

    def element(self, value: ElementLike) -> Fe:
        """Reduce an integer (possibly negative) to its canonical field element."""
        if isinstance(value, galois.FieldArray):
            return value
        return self.gf(int(value) % self.q)

    def array(self, values: Any) -> Fe:
        """Reduce an integer array-like to a field array.

        Values are reduced as Python ints, so inputs and moduli beyond the
        int64 range are handled exactly.
        """
        if isinstance(values, galois.FieldArray):
            return values
        q = self.q
        reduced = np.frompyfunc(lambda v: int(v) % q, 1, 1)(np.asarray(values, dtype=object))
        return self.gf(np.asarray(reduced, dtype=self.gf.dtypes[-1]))

    def zeros(self, shape: Union[int, tuple[int, ...]]) -> Fe:
        return self.gf.Zeros(shape)

    # Scalar operations. They accept plain integers and return field scalars.

    def add(self, a: ElementLike, b: ElementLike) -> Fe:
        return self.element(a) + self.element(b)

    def sub(self, a: ElementLike, b: ElementLike) -> Fe:
        return self.element(a) - self.element(b)

    def mul(self, a: ElementLike, b: ElementLike) -> Fe:
        return self.element(a) * self.element(b)

    def neg(self, a: ElementLike) -> Fe:
        return -self.element(a)

    def inv(self, a: ElementLike) -> Fe:
        """Multiplicative inverse.

        Raises:
            ZeroDivisionError: If a is zero
        """
        a = self.element(a)
        if a == 0:
            raise ZeroDivisionError(f"cannot invert zero in F_{self.q}")
        return a**-1

    def pow(self, a: ElementLike, e: int) -> Fe:
        """Raise a to an integer power; negative exponents invert first."""
        a = self.element(a)
        if e < 0 and a == 0:
            raise ZeroDivisionError(f"cannot raise zero to a negative power in F_{self.q}")
        return a**e

    def gamma_powers(self, start: int, count: int) -> Fe:
        """Return gamma^start, ..., gamma^(start+count-1) as a field array."""
        exponents = np.arange(start, start + count, dtype=np.int64)
        return self.gf(self.gamma) ** exponents

    def random(self, rng: np.random.Generator, shape: Union[int, tuple[int, ...]]) -> Fe:
        """Uniform field elements drawn from ``rng``."""
        return self._draw(rng, 0, shape)

    def random_nonzero(self, rng: np.random.Generator, shape: Union[int, tuple[int, ...]]) -> Fe:
        """Uniform nonzero field elements drawn from ``rng``."""
        return self._draw(rng, 1, shape)

    def _draw(self, rng: np.random.Generator, low: int, shape: Union[int, tuple[int, ...]]) -> Fe:
        # Every draw comes from ``rng`` so trial seeds reproduce for any 64-bit q.
        if self.q <= INT64_MAX:
            return self.gf(rng.integers(low, self.q, size=shape, dtype=np.int64))
        draws = rng.integers(low, self.q, size=shape, dtype=np.uint64)
        return self.gf(np.asarray(draws.astype(object), dtype=self.gf.dtypes[-1]))


def stack(arrays: list[Fe], axis: int = 0) -> Fe:
    """Stack same-field arrays along a new axis, keeping the field type."""
    if not arrays:
        raise ValueError("cannot stack an empty list of field arrays")
    field = type(arrays[0])
    return field(np.stack([a.view(np.ndarray) for a in arrays], axis=axis))
