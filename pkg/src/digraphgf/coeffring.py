"""Exact coefficient ring: sparse integer polynomials in ``w`` and ``u``.

``w`` marks edges and ``u`` marks one structural parameter. A polynomial
is stored as a dict ``{(e_w, e_u): coefficient}`` with no zero entries.
Large products go through Kronecker substitution so that the heavy work
is a single big-integer multiplication.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

Exponent = Tuple[int, int]

# below this many term pairs the schoolbook product beats packing
_KRONECKER_THRESHOLD = 48


class CoeffPoly:
    """Immutable sparse polynomial in ``w`` and ``u`` over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, int]] = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for (ew, eu), c in terms.items():
                if ew < 0 or eu < 0:
                    raise ValueError(f"negative exponent {(ew, eu)}")
                if c:
                    clean[(int(ew), int(eu))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: Dict[Exponent, int]) -> "CoeffPoly":
        # caller guarantees: no zero coefficients, valid exponents
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "CoeffPoly":
        return cls._trusted({(0, 0): c} if c else {})

    @classmethod
    def w(cls) -> "CoeffPoly":
        return cls._trusted({(1, 0): 1})

    @classmethod
    def u(cls) -> "CoeffPoly":
        return cls._trusted({(0, 1): 1})

    @classmethod
    def from_w_coeffs(cls, coeffs: Iterable[int]) -> "CoeffPoly":
        """Build ``sum_m coeffs[m] * w**m``."""
        return cls._trusted({(m, 0): c for m, c in enumerate(coeffs) if c})

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order, ascending on ``(e_w, e_u)``."""
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def coeff(self, ew: int, eu: int = 0) -> int:
        return self._terms.get((ew, eu), 0)

    def deg_w(self) -> int:
        return max((ew for ew, _ in self._terms), default=-1)

    def deg_u(self) -> int:
        return max((eu for _, eu in self._terms), default=-1)

    def has_u(self) -> bool:
        return any(eu for _, eu in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CoeffPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly._trusted({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "CoeffPoly":
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        elif not isinstance(other, CoeffPoly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "CoeffPoly":
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        elif not isinstance(other, CoeffPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other) -> "CoeffPoly":
        return (-self) + other

    def __mul__(self, other) -> "CoeffPoly":
        if isinstance(other, int):
            return poly_scale(self, other)
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CoeffPoly":
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


ZERO = CoeffPoly._trusted({})
ONE = CoeffPoly._trusted({(0, 0): 1})


def poly_add(a: CoeffPoly, b: CoeffPoly) -> CoeffPoly:
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out = dict(a._terms)
    for k, c in b._terms.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return CoeffPoly._trusted(out)


def poly_scale(a: CoeffPoly, c: int) -> CoeffPoly:
    if not c:
        return ZERO
    if c == 1:
        return a
    return CoeffPoly._trusted({k: v * c for k, v in a._terms.items()})


def poly_mul(a: CoeffPoly, b: CoeffPoly) -> CoeffPoly:
    ta, tb = a._terms, b._terms
    if not ta or not tb:
        return ZERO
    if len(ta) * len(tb) <= _KRONECKER_THRESHOLD:
        return _mul_schoolbook(ta, tb)
    return _mul_kronecker(ta, tb)


def _mul_schoolbook(ta, tb) -> CoeffPoly:
    out: Dict[Exponent, int] = {}
    get = out.get
    for (aw, au), ac in ta.items():
        for (bw, bu), bc in tb.items():
            k = (aw + bw, au + bu)
            out[k] = get(k, 0) + ac * bc
    return CoeffPoly._trusted({k: c for k, c in out.items() if c})


def _pack(terms, stride: int, nslots: int, nbytes: int) -> int:
    """Evaluate the polynomial at w = X**stride, u = X with X = 256**nbytes."""
    pos = bytearray(nslots * nbytes)
    neg = bytearray(nslots * nbytes)
    any_neg = False
    for (ew, eu), c in terms.items():
        off = (ew * stride + eu) * nbytes
        if c > 0:
            pos[off:off + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[off:off + nbytes] = (-c).to_bytes(nbytes, "little")
            any_neg = True
    value = int.from_bytes(pos, "little")
    if any_neg:
        value -= int.from_bytes(neg, "little")
    return value


def _mul_kronecker(ta, tb) -> CoeffPoly:
    a_dw = max(ew for ew, _ in ta)
    a_du = max(eu for _, eu in ta)
    b_dw = max(ew for ew, _ in tb)
    b_du = max(eu for _, eu in tb)
    stride = a_du + b_du + 1
    nslots = (a_dw + b_dw + 1) * stride
    bound = max(abs(c) for c in ta.values()) * max(abs(c) for c in tb.values())
    bound *= min(len(ta), len(tb))
    # one spare bit for the sign of the balanced digit
    nbytes = (bound.bit_length() + 2 + 7) // 8
    x = _pack(ta, stride, nslots, nbytes) * _pack(tb, stride, nslots, nbytes)
    return CoeffPoly._trusted(_unpack_signed(x, stride, nslots, nbytes))


def _unpack_signed(x: int, stride: int, nslots: int, nbytes: int) -> Dict[Exponent, int]:
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * nslots, "little")
    raw = (x + bias).to_bytes(nslots * nbytes, "little")
    out: Dict[Exponent, int] = {}
    from_bytes = int.from_bytes
    for slot in range(nslots):
        off = slot * nbytes
        c = from_bytes(raw[off:off + nbytes], "little") - half
        if c:
            out[divmod(slot, stride)] = c
    return out


_SHIFT_CACHE: Dict[int, CoeffPoly] = {}
_SHIFT_LOCK = threading.Lock()


def one_plus_w_pow(k: int) -> CoeffPoly:
    """The expanded polynomial ``(1 + w)**k``; cached per ``k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = _SHIFT_CACHE.get(k)
    if p is None:
        row = [1]
        c = 1
        for i in range(k):
            c = c * (k - i) // (i + 1)
            row.append(c)
        p = CoeffPoly.from_w_coeffs(row)
        with _SHIFT_LOCK:
            _SHIFT_CACHE.setdefault(k, p)
    return p


def poly_subst_u(p: CoeffPoly, delta: int) -> CoeffPoly:
    """Replace ``u`` with ``u + delta`` and expand."""
    if delta == 0 or not p.has_u():
        return p
    out: Dict[Exponent, int] = {}
    for (ew, eu), c in p._terms.items():
        # (u + delta)^eu = sum_j C(eu, j) delta^(eu - j) u^j
        binom = 1
        for j in range(eu, -1, -1):
            k = (ew, j)
            out[k] = out.get(k, 0) + c * binom * delta ** (eu - j)
            binom = binom * j // (eu - j + 1)
    return CoeffPoly._trusted({k: c for k, c in out.items() if c})


def poly_eval(p: CoeffPoly, w_value: int, u_value: int) -> int:
    total = 0
    for (ew, eu), c in p._terms.items():
        total += c * w_value ** ew * u_value ** eu
    return total


def poly_eval_u(p: CoeffPoly, u_value: int) -> CoeffPoly:
    """Evaluate ``u`` only; ``w`` stays symbolic."""
    if not p.has_u():
        return p
    out: Dict[Exponent, int] = {}
    for (ew, eu), c in p._terms.items():
        k = (ew, 0)
        out[k] = out.get(k, 0) + c * u_value ** eu
    return CoeffPoly._trusted({k: c for k, c in out.items() if c})


def _monomial(ew: int, eu: int) -> str:
    parts = []
    if ew:
        parts.append("w" if ew == 1 else f"w^{ew}")
    if eu:
        parts.append("u" if eu == 1 else f"u^{eu}")
    return "*".join(parts)


def format_poly(p: CoeffPoly) -> str:
    """Render as ``1 + 2*w + w^2``, terms ascending on ``(e_w, e_u)``."""
    items = p.items()
    if not items:
        return "0"
    out = []
    for i, ((ew, eu), c) in enumerate(items):
        mono = _monomial(ew, eu)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def parse_poly(text: str) -> CoeffPoly:
    """Inverse of :func:`format_poly` (accepts its output format only)."""
    s = text.replace(" ", "")
    if s == "0":
        return ZERO
    terms: Dict[Exponent, int] = {}
    i = 0
    chunks = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    for chunk in chunks:
        sign = -1 if chunk.startswith("-") else 1
        chunk = chunk.lstrip("+-")
        c = 1
        ew = eu = 0
        for factor in chunk.split("*"):
            if factor.startswith("w"):
                ew = int(factor[2:]) if "^" in factor else 1
            elif factor.startswith("u"):
                eu = int(factor[2:]) if "^" in factor else 1
            else:
                c = int(factor)
        terms[(ew, eu)] = terms.get((ew, eu), 0) + sign * c
    return CoeffPoly(terms)


@dataclass(frozen=True)
class CoeffMode:
    """Either exact polynomials, or ``w`` and ``u`` pinned to integers.

    In numeric mode series coefficients are plain ``int`` values.
    """

    numeric: bool = False
    w_value: int = 1
    u_value: int = 1

    @classmethod
    def polynomial(cls) -> "CoeffMode":
        return cls(numeric=False)

    @classmethod
    def at(cls, w_value: int = 1, u_value: int = 1) -> "CoeffMode":
        return cls(numeric=True, w_value=w_value, u_value=u_value)

    @property
    def name(self) -> str:
        return "numeric" if self.numeric else "poly"

    def zero(self):
        return 0 if self.numeric else ZERO

    def one(self):
        return 1 if self.numeric else ONE

    def lift(self, p: Union[CoeffPoly, int]):
        """Map a polynomial into this mode's coefficient type."""
        if self.numeric:
            if isinstance(p, int):
                return p
            return poly_eval(p, self.w_value, self.u_value)
        if isinstance(p, int):
            return CoeffPoly.const(p)
        return p

    def shift(self, k: int):
        """``(1 + w)**k`` as a coefficient of this mode."""
        if self.numeric:
            return _numeric_shift(self.w_value, k)
        return one_plus_w_pow(k)


_NUM_SHIFT_CACHE: Dict[Tuple[int, int], int] = {}


def _numeric_shift(w_value: int, k: int) -> int:
    key = (w_value, k)
    v = _NUM_SHIFT_CACHE.get(key)
    if v is None:
        v = (1 + w_value) ** k
        _NUM_SHIFT_CACHE[key] = v
    return v


POLYNOMIAL = CoeffMode.polynomial()
