"""The extended affine symmetric group in window notation.

An element w is a bijection of the integers with w(i + d) = w(i) + d,
recorded by its window (w(1), ..., w(d)).  The translation element rho has
window (2, 3, ..., d + 1) and satisfies rho s_i rho^-1 = s_{i+1 mod d}.
Every element factors uniquely as rho^m times an element of the affine
symmetric group (the subgroup with rho-power zero).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AffinePerm:
    d: int
    window: tuple[int, ...]

    def __post_init__(self):
        if len(self.window) != self.d:
            raise ValueError("window length must equal d")
        if sorted(v % self.d for v in self.window) != list(range(self.d)):
            raise ValueError("window residues must be distinct mod d")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(d: int) -> "AffinePerm":
        return AffinePerm(d, tuple(range(1, d + 1)))

    @staticmethod
    def simple(d: int, i: int) -> "AffinePerm":
        """The simple reflection s_i for 0 <= i <= d-1."""
        if not 0 <= i < d:
            raise ValueError(f"simple reflection index {i} out of range")
        w = list(range(1, d + 1))
        if i == 0:
            w[0], w[d - 1] = 0, d + 1
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePerm(d, tuple(w))

    @staticmethod
    def rho(d: int) -> "AffinePerm":
        return AffinePerm(d, tuple(range(2, d + 2)))

    @staticmethod
    def from_word(d: int, m: int, word: tuple[int, ...] | list[int]) -> "AffinePerm":
        out = AffinePerm.rho(d) ** m
        for i in word:
            out = out * AffinePerm.simple(d, i)
        return out

    # -- the underlying bijection of Z ------------------------------------

    def apply(self, i: int) -> int:
        quot, rem = divmod(i - 1, self.d)
        return self.window[rem] + quot * self.d

    # -- group structure --------------------------------------------------

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        if self.d != other.d:
            raise ValueError("mismatched d")
        return AffinePerm(
            self.d, tuple(self.apply(other.window[k]) for k in range(self.d))
        )

    def inverse(self) -> "AffinePerm":
        w = [0] * self.d
        for pos, v in enumerate(self.window):
            quot, rem = divmod(v - 1, self.d)
            w[rem] = pos + 1 - quot * self.d
        return AffinePerm(self.d, tuple(w))

    def __pow__(self, n: int) -> "AffinePerm":
        if n < 0:
            return self.inverse() ** (-n)
        out = AffinePerm.identity(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.d + 1))

    # -- length, rho-power, reduced words ---------------------------------

    def rho_power(self) -> int:
        return (sum(self.window) - self.d * (self.d + 1) // 2) // self.d

    def length(self) -> int:
        """Coxeter length, computed from window inversions."""
        d = self.d
        total = 0
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                diff = self.window[j - 1] - self.window[i - 1]
                total += abs(diff // d)
        return total

    def has_descent(self, i: int) -> bool:
        """Right descent: l(w s_i) < l(w)."""
        if i == 0:
            return self.apply(0) > self.window[0]
        return self.window[i - 1] > self.window[i]

    def descents(self) -> list[int]:
        return [i for i in range(self.d) if self.has_descent(i)]

    def reduced_word(self) -> tuple[int, tuple[int, ...]]:
        """Return (m, word) with self = rho^m s_{word[0]} ... s_{word[-1]}."""
        m = self.rho_power()
        w = (AffinePerm.rho(self.d) ** (-m)) * self
        rev = []
        while not w.is_identity():
            i = min(w.descents())
            w = w * AffinePerm.simple(self.d, i)
            rev.append(i)
        return m, tuple(reversed(rev))

    def __repr__(self) -> str:
        return f"AffinePerm(d={self.d}, window={list(self.window)})"
