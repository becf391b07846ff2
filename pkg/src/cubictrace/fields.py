"""Global invariants of a cyclic trace-one cubic: conductor, field
discriminant, the splitting-subgroup fingerprint in (Z/c)*, and the
field-isomorphism test."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .arith import euler_phi, is_perfect_square, factorize, primes, subgroup_closure
from .padic import InconsistencyError, SplittingType, splitting_type
from .poly import TraceOnePoly, discriminant, is_cyclic

DEFAULT_MAX_PRIME = 10**6


def _max_fingerprint_prime() -> int:
    return int(os.environ.get("CUBICTRACE_MAX_PRIME", DEFAULT_MAX_PRIME))


@dataclass(frozen=True)
class FieldClass:
    """Isomorphism class of a cyclic cubic field.

    Identified by the conductor c and the index-3 splitting subgroup of
    (Z/c)*; the field discriminant is c^2.
    """

    conductor: int
    subgroup: frozenset[int] = field(compare=True)

    @property
    def discriminant(self) -> int:
        return self.conductor**2

    @cached_property
    def canonical_poly(self) -> TraceOnePoly:
        """The minimal-height member; ties broken by smallest |b|, then b > 0."""
        from .enumeration import classified_polys_for_a

        a0 = (1 - self.conductor) // 3
        members = [f for f, k in classified_polys_for_a(a0) if k == self]
        if not members:
            raise InconsistencyError(
                f"no minimal-height polynomial for conductor {self.conductor}")
        return min(members, key=lambda f: (abs(f.b), f.b < 0))

    def __hash__(self):
        return hash((self.conductor, self.subgroup))

    def __str__(self) -> str:
        return f"K_{self.discriminant}"

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "discriminant": self.discriminant,
            "subgroup": sorted(self.subgroup),
            "canonical_poly": str(self.canonical_poly),
        }


_CLASS_CACHE: dict[tuple[int, frozenset[int]], FieldClass] = {}


def _intern(conductor: int, subgroup: frozenset[int]) -> FieldClass:
    key = (conductor, subgroup)
    if key not in _CLASS_CACHE:
        _CLASS_CACHE[key] = FieldClass(conductor, subgroup)
    return _CLASS_CACHE[key]


def splitting_subgroup(f: TraceOnePoly, conductor: int | None = None,
                       max_prime: int | None = None) -> set[int]:
    """Index-3 subgroup of (Z/c)* generated by residues of split primes.

    Iterates primes in increasing order (skipping p | c), classifies each by
    splitting_type, and accumulates split residues until their multiplicative
    closure has index exactly 3.  Inert residues must stay outside the
    subgroup; a closure of index < 3 is an inconsistency.
    """
    if conductor is None:
        conductor = conductor_of(f)
    c = conductor
    phi = euler_phi(c)
    if phi % 3 != 0:
        raise InconsistencyError(f"phi({c}) = {phi} is not divisible by 3")
    target = phi // 3
    bound = max_prime if max_prime is not None else _max_fingerprint_prime()
    gens: set[int] = set()
    closure = {1}
    inert_residues = []
    for p in primes():
        if p > bound:
            raise RuntimeError(
                f"prime bound {bound} exhausted fingerprinting {f} "
                f"(conductor {c}, subgroup size {len(closure)}/{target})")
        if c % p == 0:
            continue
        kind = splitting_type(f, p)
        if kind is SplittingType.RAMIFIED:
            raise InconsistencyError(f"{p} ramified but coprime to conductor {c}")
        if kind is SplittingType.INERT:
            if p % c in closure:
                raise InconsistencyError(
                    f"inert prime {p} lies in the split subgroup mod {c}")
            inert_residues.append(p % c)
            continue
        gens.add(p % c)
        closure = subgroup_closure(c, gens)
        if len(closure) > target:
            raise InconsistencyError(
                f"split residues of {f} generate index < 3 in (Z/{c})*")
        if len(closure) == target:
            break
    for r in inert_residues:
        if r in closure:
            raise InconsistencyError(
                f"inert residue {r} inside the splitting subgroup mod {c}")
    return closure


@lru_cache(maxsize=1 << 18)
def conductor_of(f: TraceOnePoly) -> int:
    """Conductor: product of the ramified primes (each exactly once)."""
    if not is_cyclic(f):
        raise ValueError(f"{f} is not cyclic")
    disc = discriminant(f)
    c = 1
    for p, _e in factorize(disc):
        if splitting_type(f, p) is SplittingType.RAMIFIED:
            if p == 3 or p % 3 != 1:
                raise InconsistencyError(
                    f"ramified prime {p} of {f} is not 1 mod 3 (wild or misclassified)")
            c *= p
    ok, _ = is_perfect_square(disc // (c * c)) if disc % (c * c) == 0 else (False, None)
    if not ok:
        raise InconsistencyError(f"disc(f)/c^2 is not a square index for {f}")
    return c


@lru_cache(maxsize=1 << 18)
def field_invariants(f: TraceOnePoly) -> FieldClass:
    """Full isomorphism-class descriptor of the root field of f."""
    c = conductor_of(f)
    subgroup = frozenset(splitting_subgroup(f, c))
    if (-1) % c not in subgroup:
        raise InconsistencyError(f"-1 mod {c} missing from splitting subgroup of {f}")
    return _intern(c, subgroup)


def is_isomorphic(f: TraceOnePoly, g: TraceOnePoly) -> bool:
    """Root fields isomorphic: same conductor and same splitting subgroup."""
    return field_invariants(f) == field_invariants(g)
