"""Value semigroups of plane branches."""

import logging
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

from planebranch.config import settings
from planebranch.kernel.algebra import UniSeries
from planebranch.kernel.branch import Branch, Parametrization
from planebranch.utils.errors import InvalidInput, PrecisionExhausted, SemigroupDisagreement

logger = logging.getLogger(__name__)


def _gcd_chain(generators: Sequence[int]) -> List[int]:
    chain = []
    acc = 0
    for v in generators:
        acc = gcd(acc, v)
        chain.append(acc)
    return chain


def _reachable(generators: Sequence[int], limit: int) -> List[bool]:
    """Membership table for 0..limit by dynamic programming"""
    table = [False] * (limit + 1)
    table[0] = True
    for x in range(1, limit + 1):
        table[x] = any(x >= v and table[x - v] for v in generators)
    return table


def _representation(generators: Sequence[int], value: int) -> Optional[List[int]]:
    """Some nonnegative combination of the generators equal to value"""
    if value < 0:
        return None
    parent: List[Optional[int]] = [None] * (value + 1)
    reachable = [False] * (value + 1)
    reachable[0] = True
    for x in range(1, value + 1):
        for idx, v in enumerate(generators):
            if x >= v and reachable[x - v]:
                reachable[x] = True
                parent[x] = idx
                break
    if not reachable[value]:
        return None
    rep = [0] * len(generators)
    x = value
    while x:
        idx = parent[x]
        rep[idx] += 1
        x -= generators[idx]
    return rep


@dataclass(frozen=True)
class ValueSemigroup:
    generators: Tuple[int, ...]

    def __post_init__(self):
        if not self.generators or any(v <= 0 for v in self.generators):
            raise InvalidInput("semigroup generators must be positive", {"generators": list(self.generators)})
        if _gcd_chain(self.generators)[-1] != 1:
            raise InvalidInput("semigroup generators must be coprime", {"generators": list(self.generators)})

    def __str__(self) -> str:
        return "⟨" + ",".join(str(v) for v in self.generators) + "⟩"

    @property
    def genus(self) -> int:
        return len(self.generators) - 1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @cached_property
    def e(self) -> List[int]:
        return _gcd_chain(self.generators)

    @cached_property
    def n(self) -> List[int]:
        """n_i = e_{i-1}/e_i for i >= 1; n_0 is reported as 1"""
        return [1] + [self.e[i - 1] // self.e[i] for i in range(1, len(self.generators))]

    @cached_property
    def conductor(self) -> int:
        v = self.generators
        return sum((self.n[i] - 1) * v[i] for i in range(1, len(v))) - v[0] + 1

    @cached_property
    def _table(self) -> List[bool]:
        return _reachable(self.generators, 2 * max(self.conductor, 1) + max(self.generators))

    def conductor_by_gaps(self) -> int:
        table = self._table
        last_gap = max((x for x, inside in enumerate(table) if not inside), default=-1)
        return last_gap + 1

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x < len(self._table):
            return self._table[x]
        return True

    def gaps(self) -> List[int]:
        return [x for x in range(self.conductor) if not self.contains(x)]

    def elements_upto(self, limit: int) -> List[int]:
        return [x for x in range(limit + 1) if self.contains(x)]

    def canonical_representation(self, x: int) -> Optional[Tuple[int, ...]]:
        """x = sum x_i v_i with 0 <= x_i < n_i for i >= 1; None if x is not in S"""
        return canonical_representation(self.generators, x)

    def is_tame(self, p: int) -> bool:
        return p == 0 or all(v % p for v in self.generators)

    def is_symmetric(self) -> bool:
        c = self.conductor
        return all(self.contains(z) != self.contains(c - 1 - z) for z in range(c))

    def is_strongly_increasing(self) -> bool:
        v = self.generators
        return all(v[i + 1] > self.n[i] * v[i] for i in range(1, len(v) - 1)) and all(
            a < b for a, b in zip(v, v[1:])
        )

    def is_nice(self) -> bool:
        v = self.generators
        for i in range(1, len(v)):
            prefix = v[:i]
            if _representation(prefix, self.n[i] * v[i]) is None:
                return False
        return True

    def is_minimal(self) -> bool:
        v = self.generators
        return all(_representation(v[:i], v[i]) is None for i in range(1, len(v)))

    def sweep_set(self) -> List[int]:
        c = self.conductor
        return [i if self.contains(i) else i + c - 1 for i in range(c)]

    def apery_set(self) -> List[int]:
        v0 = self.generators[0]
        result = []
        for r in range(v0):
            x = r
            while not self.contains(x):
                x += v0
            result.append(x)
        return sorted(result)


def canonical_representation(generators: Sequence[int], x: int) -> Optional[Tuple[int, ...]]:
    """Top-down solve of x = sum x_i v_i, valid for generators with the nice property"""
    if x < 0:
        return None
    e = _gcd_chain(generators)
    if x % e[-1]:
        return None
    rep = [0] * len(generators)
    w = x
    for i in range(len(generators) - 1, 0, -1):
        n_i = e[i - 1] // e[i]
        if n_i == 1:
            continue
        b = ((w // e[i]) * pow(generators[i] // e[i], -1, n_i)) % n_i
        rep[i] = b
        w -= b * generators[i]
    if w < 0 or w % generators[0]:
        return None
    rep[0] = w // generators[0]
    return tuple(rep)


def conductor(semigroup: ValueSemigroup) -> int:
    return semigroup.conductor


def is_tame(semigroup: ValueSemigroup, p: int) -> bool:
    return semigroup.is_tame(p)


def sweep_set(semigroup: ValueSemigroup) -> List[int]:
    return semigroup.sweep_set()


def apery_set(semigroup: ValueSemigroup) -> List[int]:
    return semigroup.apery_set()


def delta_from_multiplicities(seq: Sequence[int]) -> int:
    return sum(m * (m - 1) // 2 for m in seq)


def characteristic_exponents(seq: Sequence[int]) -> List[int]:
    """(n; beta_1, ..., beta_g) read off the runs of a multiplicity sequence by Euclid's algorithm"""
    runs = [[value, len(list(group))] for value, group in groupby(seq)]
    if not runs or runs[-1][0] != 1:
        raise InvalidInput("multiplicity sequence must end with 1", {"sequence": list(seq)})
    n = runs[0][0]
    exponents = [n]
    e = n
    idx = 0
    available = runs[0][1]
    beta = 0
    while e > 1:
        if idx + 1 >= len(runs):
            raise InvalidInput("multiplicity sequence ends inside a block", {"sequence": list(seq)})
        r1 = runs[idx + 1][0]
        beta += available * e + r1
        exponents.append(beta)
        a, b = e, r1
        idx += 1
        while True:
            q, r = divmod(a, b)
            count = runs[idx][1]
            if r == 0:
                if count < q:
                    raise InvalidInput("run too short for its Euclid quotient", {"sequence": list(seq)})
                available = count - q
                e = b
                break
            if count != q or idx + 1 >= len(runs) or runs[idx + 1][0] != r:
                raise InvalidInput("runs do not follow Euclid's algorithm", {"sequence": list(seq)})
            a, b = b, r
            idx += 1
    if available or idx != len(runs) - 1:
        raise InvalidInput("trailing multiplicities left over", {"sequence": list(seq)})
    return exponents


def semigroup_from_exponents(exponents: Sequence[int]) -> ValueSemigroup:
    n = exponents[0]
    betas = list(exponents[1:])
    if not betas:
        return ValueSemigroup((1,))
    values = [n, betas[0]]
    e_prev = gcd(n, betas[0])
    e_before = n
    for i in range(1, len(betas)):
        n_i = e_before // e_prev
        values.append(n_i * values[-1] + betas[i] - betas[i - 1])
        e_before, e_prev = e_prev, gcd(e_prev, betas[i])
    return ValueSemigroup(tuple(values))


def semigroup_from_multiplicities(seq: Sequence[int]) -> ValueSemigroup:
    if list(seq) == [1] or not seq or seq[0] == 1:
        return ValueSemigroup((1,))
    return semigroup_from_exponents(characteristic_exponents(seq))


def _monic(series: UniSeries) -> UniSeries:
    o = series.order()
    return series.scale(series.spec.inv(series.coeffs[o]))


def _product(gens: Sequence[UniSeries], rep: Sequence[int], precision: int) -> UniSeries:
    spec = gens[0].spec
    result = UniSeries.one(spec, precision)
    for g, k in zip(gens, rep):
        if k:
            result = result * g.pow(k)
    return result


def _subduce(h: UniSeries, gens: List[UniSeries], values: List[int]) -> Optional[UniSeries]:
    """Cancel leading terms against products of the generators; None if h vanishes to precision"""
    while True:
        w = h.order()
        if w is None:
            return None
        rep = _representation(values, w)
        if rep is None:
            return h
        m = _product(gens, rep, h.precision)
        h = h - m.scale(h.coeffs[w])


def _subduction(par: Parametrization) -> List[int]:
    first, second = sorted([par.x, par.y], key=lambda s: s.order() if s.order() is not None else s.precision)
    gens = [_monic(first)]
    values = [first.order()]
    h = _subduce(second, gens, values)
    while gcd(*values) > 1:
        if h is None:
            raise PrecisionExhausted("semigroup subduction", par.precision)
        h = _monic(h)
        gens.append(h)
        values.append(h.order())
        e = _gcd_chain(values)
        if e[-1] == 1:
            break
        n_k = e[-2] // e[-1]
        if n_k == 1:
            raise SemigroupDisagreement(values, [])
        rep = _representation(values[:-1], n_k * values[-1])
        if rep is None:
            raise SemigroupDisagreement(values, [])
        h = gens[-1].pow(n_k) - _product(gens[:-1], rep, par.precision)
        h = _subduce(h, gens, values)
        logger.debug("subduction values so far %s", values)
    return values


def semigroup_by_subduction(par: Parametrization) -> ValueSemigroup:
    return ValueSemigroup(tuple(_subduction(par)))


def semigroup_of(target: Union[Branch, Parametrization]) -> ValueSemigroup:
    """Value semigroup by subduction, checked against the multiplicity sequence"""
    branch = target if isinstance(target, Branch) else Branch.from_parametrization(target)
    values = None
    for attempt in range(settings.max_precision_doublings + 1):
        try:
            values = _subduction(branch.parametrization)
            break
        except PrecisionExhausted:
            if attempt == settings.max_precision_doublings:
                raise
            branch.refine(2 * branch.parametrization.precision)
    by_multiplicities = semigroup_from_multiplicities(branch.multiplicity_sequence())
    if tuple(values) != by_multiplicities.generators:
        raise SemigroupDisagreement(list(values), list(by_multiplicities.generators))
    return by_multiplicities


def random_branch_semigroup(rng: random.Random, genus: int, max_v0: int) -> ValueSemigroup:
    """Strongly increasing generators with a strictly decreasing gcd chain"""
    if genus == 0:
        return ValueSemigroup((1,))
    ns = [2] * genus
    v0 = 2**genus
    for i in rng.sample(range(genus), genus):
        bump = rng.choice([2, 3, 4, 5])
        if v0 // ns[i] * bump <= max_v0:
            v0 = v0 // ns[i] * bump
            ns[i] = bump
    e = [v0]
    for n_i in ns:
        e.append(e[-1] // n_i)
    values = [v0]
    prev_bound = v0
    for i in range(1, genus + 1):
        n_i = ns[i - 1]
        u = prev_bound // e[i] + 1 + rng.randint(0, 3)
        while gcd(u, n_i) != 1:
            u += 1
        values.append(u * e[i])
        prev_bound = n_i * values[-1]
    return ValueSemigroup(tuple(values))


__all__ = [
    "ValueSemigroup",
    "apery_set",
    "canonical_representation",
    "characteristic_exponents",
    "conductor",
    "delta_from_multiplicities",
    "is_tame",
    "random_branch_semigroup",
    "semigroup_by_subduction",
    "semigroup_from_exponents",
    "semigroup_from_multiplicities",
    "semigroup_of",
    "sweep_set",
]
