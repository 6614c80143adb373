"""Three-valued oracle for p-torsion sections on a configuration.

Three independent arguments feed the verdict:

* a sufficient divisibility criterion on the fiber indices (Yes);
* for p=2, a necessary parity bound, more than four odd indices rule a
  two-torsion section out (No);
* move existence: a p-torsion section forces a quotient surface with a
  valid configuration, so an empty move set rules the section out (No),
  while membership of the partition in a class table with a p-move proves
  existence (Yes).

The criteria are not jointly complete, so a genuine Unknown region remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import prod

from . import catalog
from .configs import FiberConfig, odd_index_count, partition_of
from .errors import NotPrime, TorsionContradiction, UnsupportedPrime
from .isogeny import _is_prime, _move_specs

SUPPORTED_PRIMES = (2, 3, 5)


class TorsionAnswer(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Provenance(Enum):
    SUFFICIENT_CRITERION = "SufficientCriterion"
    NECESSARY_CRITERION = "NecessaryCriterion"
    MOVE_NONEXISTENCE = "MoveNonexistence"
    CATALOG_TABLE = "CatalogTable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TorsionStatus:
    answer: TorsionAnswer
    provenances: tuple[Provenance, ...] = ()

    def __post_init__(self):
        if (self.answer is TorsionAnswer.UNKNOWN) != (not self.provenances):
            raise TorsionContradiction("Yes/No must carry a provenance, Unknown none")

    def __str__(self):
        if not self.provenances:
            return str(self.answer)
        return f"{self.answer} ({', '.join(str(p) for p in self.provenances)})"


def _few_nondivisible(indices, p) -> bool:
    """First sufficient condition: at most three indices not divisible by p."""
    return sum(1 for k in indices if k % p) <= 3


def _subset_criterion(indices, p) -> bool:
    """Second sufficient condition, quantified over all four-position subsets E
    containing every index not divisible by p.

    With k1..k4 the E-indices, n the fiber count and the rest running over
    the complement: for p=2 every remaining index must be divisible by 4 and
    (-1)^n k1k2k3k4 must differ from prod(k_i - 1) mod 8; for odd p the
    product k1k2k3k4 must be a quadratic non-residue mod p.
    """
    n = len(indices)
    nondivisible = [i for i, k in enumerate(indices) if k % p]
    if len(nondivisible) > 4 or n < 4:
        return False
    required = set(nondivisible)
    for subset in combinations(range(n), 4):
        if not required <= set(subset):
            continue
        head = prod(indices[i] for i in subset)
        rest = [indices[i] for i in range(n) if i not in subset]
        if p == 2:
            if any(k % 4 for k in rest):
                continue
            if ((-1) ** n * head) % 8 != prod(k - 1 for k in rest) % 8:
                return True
        else:
            if pow(head % p, (p - 1) // 2, p) == p - 1:
                return True
    return False


def sufficient_torsion_criterion(config: FiberConfig, p: int) -> bool:
    """True guarantees a p-torsion section exists; False is inconclusive."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return _few_nondivisible(config.indices, p) or _subset_criterion(config.indices, p)


def excludes_two_torsion(config: FiberConfig) -> bool:
    """More than four odd indices: no two-torsion section can exist."""
    return odd_index_count(config.indices) > 4


@lru_cache(maxsize=1)
def _table_move_partitions() -> frozenset[tuple[tuple[int, ...], int]]:
    """(partition, p) pairs for which the class tables attest a p-move."""
    attested = set()
    for cls in catalog.ALL_CLASSES:
        rows = set(cls)
        for row in cls:
            for p in SUPPORTED_PRIMES:
                for spec in _move_specs(row, p, catalog.EMBEDDED_ENTRIES):
                    if spec.target in rows:
                        attested.add((tuple(sorted(row, reverse=True)), p))
    return frozenset(attested)


def torsion_status(config: FiberConfig, p: int) -> TorsionStatus:
    """Combine all arguments into Yes/No/Unknown with provenances.

    Yes via the sufficient criterion, or via a class table containing a
    p-move from this partition.  No via the parity bound (p=2) or because
    no candidate move exists.  Both No provenances are reported when both
    arguments fire.
    """
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrime(f"p must be one of {SUPPORTED_PRIMES}, got {p}")
    yes = []
    if sufficient_torsion_criterion(config, p):
        yes.append(Provenance.SUFFICIENT_CRITERION)
    elif (partition_of(config), p) in _table_move_partitions():
        yes.append(Provenance.CATALOG_TABLE)
    no = []
    if p == 2 and excludes_two_torsion(config):
        no.append(Provenance.NECESSARY_CRITERION)
    if not _move_specs(config.indices, p, catalog.active_entries()):
        no.append(Provenance.MOVE_NONEXISTENCE)
    if yes and no:
        raise TorsionContradiction(
            f"{config.indices} p={p}: both {yes} and {no} fired")
    if yes:
        return TorsionStatus(TorsionAnswer.YES, tuple(yes))
    if no:
        return TorsionStatus(TorsionAnswer.NO, tuple(no))
    return TorsionStatus(TorsionAnswer.UNKNOWN)


__all__ = [
    "Provenance",
    "TorsionAnswer",
    "TorsionStatus",
    "excludes_two_torsion",
    "sufficient_torsion_criterion",
    "torsion_status",
]
