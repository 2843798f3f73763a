"""Sparse elements of L (x) L and L (x) L (x) L over an algebra's basis indices."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import DimensionMismatch, OwnerMismatch
from .exact import as_rational, format_rational, parse_rational

__all__ = ["Tensor2", "Tensor3", "tau", "xi", "cyclic_sum", "apply_one_tensor_delta", "act_on_tensor2"]


class _SparseTensor:
    rank = 0

    __slots__ = ("owner", "_coeffs")

    def __init__(self, owner, coeffs: Mapping[tuple, object] | None = None):
        self.owner = owner
        clean = {}
        d = owner.dim
        for idx, v in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != self.rank or not all(0 <= i < d for i in idx):
                raise DimensionMismatch(f"bad index {idx} for a rank-{self.rank} tensor over dim {d}")
            v = as_rational(v)
            if v:
                clean[idx] = v
        self._coeffs = clean

    @classmethod
    def _raw(cls, owner, coeffs: dict):
        # Trusted constructor: caller guarantees valid indices and no zeros.
        t = cls.__new__(cls)
        t.owner = owner
        t._coeffs = coeffs
        return t

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.owner is not self.owner:
            raise OwnerMismatch("tensors belong to different algebras")

    def items(self):
        return self._coeffs.items()

    def sorted_items(self):
        return sorted(self._coeffs.items())

    def __getitem__(self, idx) -> Fraction:
        return self._coeffs.get(tuple(idx), Fraction(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(self.owner, out)

    def __neg__(self):
        return type(self)._raw(self.owner, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return type(self)._raw(self.owner, {})
        return type(self)._raw(self.owner, {k: c * v for k, v in self._coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.owner is self.owner and other._coeffs == self._coeffs

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"idx": list(k), "coeff": format_rational(v)} for k, v in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, owner, obj: dict):
        if obj.get("rank") != cls.rank:
            raise DimensionMismatch(f"expected rank {cls.rank}, got {obj.get('rank')}")
        coeffs: dict[tuple, Fraction] = {}
        for term in obj["terms"]:
            k = tuple(term["idx"])
            coeffs[k] = coeffs.get(k, 0) + parse_rational(term["coeff"])
        return cls(owner, coeffs)

    def __repr__(self) -> str:
        labels = self.owner.labels
        if not self._coeffs:
            return f"{type(self).__name__}(0)"
        terms = " + ".join(
            f"{format_rational(v)}*" + "(x)".join(labels[i] for i in k) for k, v in self.sorted_items()
        )
        return f"{type(self).__name__}({terms})"


class Tensor2(_SparseTensor):
    """Element of L (x) L; ``coeffs[(a, b)]`` is the coefficient of b_a (x) b_b."""

    rank = 2
    __slots__ = ()

    @classmethod
    def simple(cls, owner, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Tensor2:
        """The pure tensor u (x) v of two sparse coordinate vectors."""
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                if x and y:
                    out[(a, b)] = out.get((a, b), 0) + x * y
        return cls(owner, out)


class Tensor3(_SparseTensor):
    """Element of L (x) L (x) L."""

    rank = 3
    __slots__ = ()


def tau(t: Tensor2) -> Tensor2:
    """Flip u (x) v -> v (x) u."""
    return Tensor2._raw(t.owner, {(b, a): v for (a, b), v in t.items()})


def xi(t: Tensor3) -> Tensor3:
    """Cyclic shift u (x) v (x) w -> v (x) w (x) u."""
    return Tensor3._raw(t.owner, {(b, c, a): v for (a, b, c), v in t.items()})


def cyclic_sum(t: Tensor3) -> Tensor3:
    """(1 + xi + xi^2) t."""
    x1 = xi(t)
    return t + x1 + xi(x1)


def apply_one_tensor_delta(delta, t: Tensor2) -> Tensor3:
    """(1 (x) delta) t = sum of t[a, b] * b_a (x) delta(b_b)."""
    if delta.owner is not t.owner:
        raise OwnerMismatch("cobracket and tensor belong to different algebras")
    out: dict[tuple[int, int, int], Fraction] = {}
    images = delta.images
    for (a, b), c in t.items():
        for (p, q), v in images[b].items():
            k = (a, p, q)
            out[k] = out.get(k, 0) + c * v
    return Tensor3._raw(t.owner, {k: v for k, v in out.items() if v})


def act_on_tensor2(alg, x: Mapping[int, Fraction], t: Tensor2) -> Tensor2:
    """Adjoint action x . (u (x) v) = [x, u] (x) v + u (x) [x, v]."""
    if t.owner is not alg:
        raise OwnerMismatch("tensor does not belong to this algebra")
    sc = alg.structure_constants
    out: dict[tuple[int, int], Fraction] = {}
    for (u, v), c in t.items():
        for a, xa in x.items():
            for k, s in sc.get((a, u), {}).items():
                key = (k, v)
                out[key] = out.get(key, 0) + c * xa * s
            for k, s in sc.get((a, v), {}).items():
                key = (u, k)
                out[key] = out.get(key, 0) + c * xa * s
    return Tensor2._raw(alg, {k: v for k, v in out.items() if v})
