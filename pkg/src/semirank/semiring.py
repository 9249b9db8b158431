"""Idempotent, cancellative semirings with exact arithmetic.

Four concrete instances are provided:

* ``B2``          -- the Boolean semiring ({0, 1}, or, and)
* ``MAXPLUS``     -- (Z with a bottom element, max, +)
* ``MAXTIMES_Q``  -- (nonnegative rationals, max, *)
* ``MAXTIMES_N``  -- (nonnegative integers, max, *)

A :class:`Semiring` works on bare payloads (ints, :class:`~fractions.Fraction`,
or :data:`NEG_INF`) so that matrix code can stay cheap.  User-facing code can
wrap payloads in :class:`SemiringValue`, which checks that both operands come
from the same instance.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from semirank.errors import (
    CapabilityError,
    DomainError,
    InstanceMismatchError,
    NotAUnitError,
    ResidualUndefinedError,
    ZeroArgumentError,
)


class SemiringId(enum.Enum):
    B2 = "b2"
    MaxPlusZ = "maxplus"
    MaxTimesQ = "maxtimes-q"
    MaxTimesN = "maxtimes-n"

    @property
    def tag(self) -> str:
        return self.value


class _Bottom:
    """The bottom element of the max-plus semiring (written ``-inf``)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __reduce__(self):
        return (_Bottom, ())


NEG_INF = _Bottom()


class Semiring:
    """Interface shared by the concrete instances.

    Subclasses operate on raw payloads.  ``totally_ordered`` and
    ``residuated`` are capability flags checked by the rank and semimodule
    algorithms before they start.
    """

    id: SemiringId
    zero: Any
    one: Any
    totally_ordered = True
    residuated = True
    finite = False

    @property
    def tag(self) -> str:
        return self.id.tag

    def __repr__(self):
        return f"<semiring {self.tag}>"

    def __reduce__(self):
        return (by_tag, (self.tag,))

    # -- arithmetic on payloads -------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        return self.add(a, b) == b

    def meet(self, a, b):
        """Minimum under the natural order."""
        return a if self.leq(a, b) else b

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def residual(self, a, b):
        """Greatest ``x`` with ``x * b <= a``; ``b`` must be nonzero."""
        raise NotImplementedError

    def divisor_pairs(self, a) -> list[tuple[Any, Any]]:
        raise NotImplementedError

    def exact_quotient(self, a, d):
        """Return ``q`` with ``d * q == a``, or ``None`` if no such ``q`` exists."""
        if self.is_zero(d):
            return self.zero if self.is_zero(a) else None
        q = self.residual(a, d)
        return q if self.mul(d, q) == a else None

    def sum(self, xs: Iterable):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def meet_all(self, xs: Iterable, default=None):
        it = iter(xs)
        try:
            acc = next(it)
        except StopIteration:
            return default
        for x in it:
            acc = self.meet(acc, x)
        return acc

    # -- payload domain and tokens -----------------------------------------
    def validate(self, payload):
        """Return the canonical payload, or raise :class:`DomainError`."""
        raise NotImplementedError

    def parse_token(self, token: str):
        raise NotImplementedError

    def format_token(self, payload) -> str:
        return str(payload)

    def sort_key(self, payload):
        """Key compatible with the natural order."""
        raise NotImplementedError

    def value(self, payload) -> "SemiringValue":
        return SemiringValue(self, self.validate(payload))

    def elements(self):
        raise CapabilityError(f"{self.tag} has an infinite carrier")

    def require_ordered(self, what: str = "this algorithm") -> None:
        if not (self.totally_ordered and self.residuated):
            raise CapabilityError(f"{what} needs a totally ordered, residuated semiring; {self.tag} is not")


class _B2(Semiring):
    id = SemiringId.B2
    zero = 0
    one = 1
    finite = True

    def add(self, a, b):
        return a | b

    def mul(self, a, b):
        return a & b

    def leq(self, a, b):
        return a <= b

    def is_unit(self, a):
        return a == 1

    def inv(self, a):
        if a != 1:
            raise NotAUnitError("0 is not a unit of b2")
        return 1

    def residual(self, a, b):
        if b == 0:
            raise ResidualUndefinedError("residual by zero is undefined")
        return a

    def divisor_pairs(self, a):
        if a == 0:
            raise ZeroArgumentError("divisor_pairs of zero")
        return [(1, 1)]

    def validate(self, payload):
        if isinstance(payload, bool):
            payload = int(payload)
        if payload not in (0, 1) or not isinstance(payload, int):
            raise DomainError(f"{payload!r} is not an element of b2")
        return int(payload)

    def parse_token(self, token):
        if token not in ("0", "1"):
            raise DomainError(f"b2 value must be 0 or 1, got {token!r}")
        return int(token)

    def sort_key(self, payload):
        return payload

    def elements(self):
        return [0, 1]


class _MaxPlus(Semiring):
    id = SemiringId.MaxPlusZ
    zero = NEG_INF
    one = 0

    def add(self, a, b):
        if a is NEG_INF:
            return b
        if b is NEG_INF:
            return a
        return a if a >= b else b

    def mul(self, a, b):
        if a is NEG_INF or b is NEG_INF:
            return NEG_INF
        return a + b

    def leq(self, a, b):
        if a is NEG_INF:
            return True
        if b is NEG_INF:
            return False
        return a <= b

    def is_zero(self, a):
        return a is NEG_INF

    def is_unit(self, a):
        return a is not NEG_INF

    def inv(self, a):
        if a is NEG_INF:
            raise NotAUnitError("-inf is not a unit of maxplus")
        return -a

    def residual(self, a, b):
        if b is NEG_INF:
            raise ResidualUndefinedError("residual by -inf is undefined")
        if a is NEG_INF:
            return NEG_INF
        return a - b

    def divisor_pairs(self, a):
        if a is NEG_INF:
            raise ZeroArgumentError("divisor_pairs of -inf")
        return [(a, 0)]

    def validate(self, payload):
        if payload is NEG_INF:
            return payload
        if isinstance(payload, bool) or not isinstance(payload, int):
            if isinstance(payload, float) and payload == float("-inf"):
                return NEG_INF
            raise DomainError(f"{payload!r} is not an element of maxplus")
        return payload

    def parse_token(self, token):
        if token == "-inf":
            return NEG_INF
        try:
            return int(token, 10)
        except ValueError:
            raise DomainError(f"maxplus value must be an integer or -inf, got {token!r}") from None

    def format_token(self, payload):
        return "-inf" if payload is NEG_INF else str(payload)

    def sort_key(self, payload):
        return (0, 0) if payload is NEG_INF else (1, payload)


class _MaxTimesQ(Semiring):
    id = SemiringId.MaxTimesQ
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        return a * b

    def leq(self, a, b):
        return a <= b

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnitError("0 is not a unit of maxtimes-q")
        return 1 / a

    def residual(self, a, b):
        if b == 0:
            raise ResidualUndefinedError("residual by zero is undefined")
        return a / b

    def divisor_pairs(self, a):
        if a == 0:
            raise ZeroArgumentError("divisor_pairs of zero")
        return [(a, self.one)]

    def validate(self, payload):
        if isinstance(payload, bool) or not isinstance(payload, (int, Fraction)):
            raise DomainError(f"{payload!r} is not an exact rational")
        payload = Fraction(payload)
        if payload < 0:
            raise DomainError(f"maxtimes-q values are nonnegative, got {payload}")
        return payload

    def parse_token(self, token):
        try:
            num, _, den = token.partition("/")
            if not _is_int_literal(num) or (den and not _is_int_literal(den)):
                raise ValueError
            value = Fraction(int(num), int(den)) if den else Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"maxtimes-q value must be p/q or an integer, got {token!r}") from None
        if value < 0:
            raise DomainError(f"maxtimes-q values are nonnegative, got {token!r}")
        return value

    def format_token(self, payload):
        if payload.denominator == 1:
            return str(payload.numerator)
        return f"{payload.numerator}/{payload.denominator}"

    def sort_key(self, payload):
        return payload


class _MaxTimesN(Semiring):
    id = SemiringId.MaxTimesN
    zero = 0
    one = 1

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        return a * b

    def leq(self, a, b):
        return a <= b

    def is_unit(self, a):
        return a == 1

    def inv(self, a):
        if a != 1:
            raise NotAUnitError(f"{a} is not a unit of maxtimes-n")
        return 1

    def residual(self, a, b):
        if b == 0:
            raise ResidualUndefinedError("residual by zero is undefined")
        return a // b

    def divisor_pairs(self, a):
        if a == 0:
            raise ZeroArgumentError("divisor_pairs of zero")
        return [(d, a // d) for d in range(1, a + 1) if a % d == 0]

    def validate(self, payload):
        if isinstance(payload, bool) or not isinstance(payload, int):
            raise DomainError(f"{payload!r} is not a natural number")
        if payload < 0:
            raise DomainError(f"maxtimes-n values are nonnegative, got {payload}")
        return payload

    def parse_token(self, token):
        if not token.isdigit():
            raise DomainError(f"maxtimes-n value must be a nonnegative integer, got {token!r}")
        return int(token)

    def sort_key(self, payload):
        return payload


def _is_int_literal(s: str) -> bool:
    body = s[1:] if s[:1] in "+-" else s
    return body.isdigit()


B2 = _B2()
MAXPLUS = _MaxPlus()
MAXTIMES_Q = _MaxTimesQ()
MAXTIMES_N = _MaxTimesN()

ALL_SEMIRINGS = (B2, MAXPLUS, MAXTIMES_Q, MAXTIMES_N)
_BY_TAG = {s.tag: s for s in ALL_SEMIRINGS}


def by_tag(tag: str) -> Semiring:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise ValueError(f"unknown semiring tag {tag!r}; expected one of {sorted(_BY_TAG)}") from None


def by_id(sid: SemiringId) -> Semiring:
    return _BY_TAG[sid.tag]


@dataclass(frozen=True)
class SemiringValue:
    """One element of a semiring instance."""

    semiring: Semiring = field(repr=False)
    payload: Any

    @property
    def id(self) -> SemiringId:
        return self.semiring.id

    def __str__(self):
        return self.semiring.format_token(self.payload)

    def __repr__(self):
        return f"SemiringValue({self.semiring.tag}, {self})"

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __le__(self, other):
        return leq(self, other)


def _same(a: SemiringValue, b: SemiringValue) -> Semiring:
    if a.semiring is not b.semiring:
        raise InstanceMismatchError(f"cannot combine {a.semiring.tag} and {b.semiring.tag} values")
    return a.semiring


def add(a: SemiringValue, b: SemiringValue) -> SemiringValue:
    s = _same(a, b)
    return SemiringValue(s, s.add(a.payload, b.payload))


def mul(a: SemiringValue, b: SemiringValue) -> SemiringValue:
    s = _same(a, b)
    return SemiringValue(s, s.mul(a.payload, b.payload))


def leq(a: SemiringValue, b: SemiringValue) -> bool:
    s = _same(a, b)
    return s.leq(a.payload, b.payload)


def is_unit(a: SemiringValue) -> bool:
    return a.semiring.is_unit(a.payload)


def inv(a: SemiringValue) -> SemiringValue:
    return SemiringValue(a.semiring, a.semiring.inv(a.payload))


def residual(a: SemiringValue, b: SemiringValue) -> SemiringValue:
    s = _same(a, b)
    return SemiringValue(s, s.residual(a.payload, b.payload))


def divisor_pairs(a: SemiringValue) -> list[tuple[SemiringValue, SemiringValue]]:
    s = a.semiring
    return [(SemiringValue(s, d), SemiringValue(s, q)) for d, q in s.divisor_pairs(a.payload)]


# -- axiom checking -----------------------------------------------------------

AXIOMS = (
    "additive_idempotency",
    "additive_commutativity",
    "additive_associativity",
    "additive_identity",
    "multiplicative_commutativity",
    "multiplicative_associativity",
    "multiplicative_identity",
    "distributivity",
    "zero_absorbing",
    "zerosumfree",
    "cancellativity",
    "unit_irreducibility",
    "total_order",
)


@dataclass
class AxiomReport:
    semiring: str
    sample_size: int
    results: dict[str, bool]
    counterexamples: dict[str, tuple]

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def lines(self) -> list[str]:
        out = []
        for name in AXIOMS:
            ok = self.results[name]
            line = f"{name}: {'pass' if ok else 'FAIL'}"
            if not ok:
                line += f" at {self.counterexamples[name]}"
            out.append(line)
        return out


def check_axioms(semiring: Semiring, sample: Iterable) -> AxiomReport:
    """Check the semiring axioms on every pair/triple drawn from ``sample``.

    ``sample`` holds payloads or :class:`SemiringValue` objects.  Zero and one
    are always added so identities and absorption are exercised.
    """
    s = semiring
    pts = []
    for x in sample:
        p = x.payload if isinstance(x, SemiringValue) else s.validate(x)
        if p not in pts:
            pts.append(p)
    if not pts:
        raise ValueError("sample must be nonempty")
    size = len(pts)
    for p in (s.zero, s.one):
        if p not in pts:
            pts.append(p)

    add, mul, z, one = s.add, s.mul, s.zero, s.one
    checks = {
        "additive_idempotency": (1, lambda a: add(a, a) == a),
        "additive_commutativity": (2, lambda a, b: add(a, b) == add(b, a)),
        "additive_associativity": (3, lambda a, b, c: add(add(a, b), c) == add(a, add(b, c))),
        "additive_identity": (1, lambda a: add(a, z) == a),
        "multiplicative_commutativity": (2, lambda a, b: mul(a, b) == mul(b, a)),
        "multiplicative_associativity": (3, lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c))),
        "multiplicative_identity": (1, lambda a: mul(a, one) == a),
        "distributivity": (
            3,
            lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            and mul(add(a, b), c) == add(mul(a, c), mul(b, c)),
        ),
        "zero_absorbing": (1, lambda a: mul(a, z) == z and mul(z, a) == z),
        "zerosumfree": (2, lambda a, b: add(a, b) != z or (s.is_zero(a) and s.is_zero(b))),
        "cancellativity": (
            3,
            lambda a, b, c: s.is_zero(a) or mul(b, a) != mul(c, a) or b == c,
        ),
        "unit_irreducibility": (
            2,
            lambda a, b: not s.is_unit(add(a, b)) or s.is_unit(a) or s.is_unit(b),
        ),
        "total_order": (
            2,
            lambda a, b: (s.leq(a, b) or s.leq(b, a))
            and add(a, b) == (b if s.leq(a, b) else a)
            and s.leq(a, b) == (add(a, b) == b),
        ),
    }
    results: dict[str, bool] = {}
    counterexamples: dict[str, tuple] = {}
    for name, (arity, pred) in checks.items():
        results[name] = True
        for args in itertools.product(pts, repeat=arity):
            if not pred(*args):
                results[name] = False
                counterexamples[name] = tuple(s.format_token(a) for a in args)
                break
    return AxiomReport(s.tag, size, results, counterexamples)
