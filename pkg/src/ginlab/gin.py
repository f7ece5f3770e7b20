"""Generic initial ideals by random coordinate changes, and regularity."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from .errors import StabilizationFailure
from .groebner import Ideal, initial_ideal, leading_monomials_of_ideal
from .monideal import MonomialIdeal, is_borel_fixed, is_segment_ideal, regularity_borel
from .orders import RLEX, OrderSpec
from .polynomial import primitive_int_dict
from .ring import Ring
from .transform import TransformMatrix, substitute

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GinConfig:
    entry_bound: int = 1000
    agreement: int = 2
    max_trials: int = 8
    seed: int = 0
    chain: bool = True

    def __post_init__(self):
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be positive")
        if self.agreement < 2:
            raise ValueError("agreement must be at least 2")
        if self.max_trials < self.agreement:
            raise ValueError("max_trials must be at least agreement")


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    trials_used: int
    borel_verified: bool
    seed: int
    order: OrderSpec = RLEX


def random_transform(ring: Ring, rng: random.Random, entry_bound: int = 1000) -> TransformMatrix:
    """Dense integer matrix with entries in [-entry_bound, entry_bound], det != 0."""
    n = ring.n
    while True:
        rows = tuple(tuple(rng.randint(-entry_bound, entry_bound) for _ in range(n))
                     for _ in range(n))
        try:
            return TransformMatrix(rows)
        except ValueError:
            continue


def transformed_initial_ideal(ideal: Ideal, order: OrderSpec, g: TransformMatrix,
                              chain: bool = True) -> MonomialIdeal:
    """in_order(g(I)), staying in integer arithmetic throughout."""
    images = [{e: int(c) for e, c in form.items()} for form in g.images()]
    gens = []
    for f in ideal.generators:
        ints = primitive_int_dict(f._coeffs)
        gens.append(primitive_int_dict(substitute(ints, images)))
    lms = leading_monomials_of_ideal(ideal.ring, gens, order, chain)
    return MonomialIdeal(ideal.ring, lms)


def gin(ideal: Ideal, order: OrderSpec, config: GinConfig = GinConfig()) -> GinResult:
    """gin_order(I): the initial ideal shared by ``agreement`` consecutive
    independent random coordinate changes, required to be Borel-fixed."""
    rng = random.Random(config.seed)
    previous: Optional[MonomialIdeal] = None
    last_g = None
    streak = 0
    for trial in range(1, config.max_trials + 1):
        g = random_transform(ideal.ring, rng, config.entry_bound)
        while g == last_g:
            g = random_transform(ideal.ring, rng, config.entry_bound)
        last_g = g
        J = transformed_initial_ideal(ideal, order, g, config.chain)
        log.debug("gin trial %d under %s: %s", trial, order, J)
        streak = streak + 1 if J == previous else 1
        previous = J
        if streak >= config.agreement:
            if not is_borel_fixed(J):
                raise StabilizationFailure(
                    f"trials agreed on {J}, which is not Borel-fixed; "
                    f"increase entry_bound or change the seed"
                )
            return GinResult(J, trial, True, config.seed, order)
    raise StabilizationFailure(
        f"no {config.agreement} consecutive trials agreed within {config.max_trials} trials"
    )


def regularity(ideal: Ideal, config: GinConfig = GinConfig()) -> int:
    """reg(I), as the largest generator degree of gin_rlex(I)."""
    return regularity_borel(gin(ideal, RLEX, config).ideal)


def segment_shortcut(ideal: Ideal, order: OrderSpec) -> Optional[MonomialIdeal]:
    """in_order(I) when it is an order-segment ideal (then it equals the gin)."""
    J = initial_ideal(ideal, order)
    return J if is_segment_ideal(J, order) else None
