"""
Stable AR Components

Knits the stable Auslander-Reiten component of S_n(Gprj-Λ) attached to a
stable class, starting from ``[n,n,Ω⁻¹G]``. The translation sends
``[i,j,G]`` to ``[i+1,j+1,G]`` below the last row and ``[k,n,G]`` to
``[1,k,ΩG]``; irreducible maps complete the meshes.
"""

import logging
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from ..gp import StableClass, stable_classes, syzygy_step
from ..qalg import BoundQuiverAlgebra
from ..utils.errors import ValidationError
from .monomorphism import Interval
from .report import ComponentReport, DivisibilityReport

logger = logging.getLogger(__name__)


def tau(alg: BoundQuiverAlgebra, n: int, x: Interval) -> Interval:
    if x.j < n:
        return Interval(x.i + 1, x.j + 1, x.G)
    return Interval(1, x.i, syzygy_step(alg, x.G))


def tau_inverse(alg: BoundQuiverAlgebra, n: int, x: Interval) -> Interval:
    if x.i > 1:
        return Interval(x.i - 1, x.j - 1, x.G)
    return Interval(x.j, n, syzygy_step(alg, x.G, "inverse"))


def arrows_into(alg: BoundQuiverAlgebra, n: int, x: Interval) -> List[Interval]:
    """Sources of the irreducible maps ending at ``x``."""
    result = []
    if x.i < x.j:
        result.append(Interval(x.i + 1, x.j, x.G))
    if x.j < n:
        result.append(Interval(x.i, x.j + 1, x.G))
    if x.j == n and x.i >= 2:
        result.append(Interval(1, x.i - 1, syzygy_step(alg, x.G)))
    return result


def arrows_out(alg: BoundQuiverAlgebra, n: int, x: Interval) -> List[Interval]:
    """Targets of the irreducible maps starting at ``x``."""
    result = []
    if x.i > 1:
        result.append(Interval(x.i - 1, x.j, x.G))
    if x.j > x.i:
        result.append(Interval(x.i, x.j - 1, x.G))
    if x.i == 1 and x.j <= n - 1:
        result.append(Interval(x.j + 1, n, syzygy_step(alg, x.G, "inverse")))
    return result


@dataclass(frozen=True)
class StableComponent:
    """A knitted stable component.

    Attributes:
        stable_class: The class [G] it is attached to
        n: Length of the chains
        vertices: Non-projective intervals in discovery order
        arrows: Irreducible maps as (source, target) pairs
        tau: AR translation on the vertices
        exact: True when the construction is complete by theory (n ≤ 2)
        seed: Starting vertex ``[n,n,Ω⁻¹G]``
    """

    stable_class: StableClass
    n: int
    vertices: Tuple[Interval, ...]
    arrows: Tuple[Tuple[Interval, Interval], ...]
    tau: Tuple[Tuple[Interval, Interval], ...]
    exact: bool
    seed: Interval

    @property
    def size(self) -> int:
        return len(self.vertices)

    def tau_of(self, x: Interval) -> Interval:
        return dict(self.tau)[x]

    def mesh_middle(self, x: Interval) -> List[Interval]:
        """Middle terms of the mesh ending at ``x``."""
        return [s for s, t in self.arrows if t == x]


def knit_stable_component(alg: BoundQuiverAlgebra, n: int, cls: StableClass) -> StableComponent:
    """Breadth-first knitting from ``[n,n,Ω⁻¹G]`` over arrows and τ.

    Example:
        >>> knit_stable_component(kx2, 2, stable_classes(kx2)[0]).size
        3
    """
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    G = cls.representative
    seed = Interval(n, n, syzygy_step(alg, G, "inverse"))
    seen: Dict[Interval, None] = {seed: None}
    queue = deque([seed])
    arrows: List[Tuple[Interval, Interval]] = []
    while queue:
        x = queue.popleft()
        for source in arrows_into(alg, n, x):
            arrows.append((source, x))
        neighbours = arrows_into(alg, n, x) + arrows_out(alg, n, x)
        neighbours += [tau(alg, n, x), tau_inverse(alg, n, x)]
        for y in neighbours:
            if y not in seen:
                seen[y] = None
                queue.append(y)
    vertices = tuple(seen)
    translation = tuple((x, tau(alg, n, x)) for x in vertices)
    if n >= 3:
        logger.info(f"Component of [{G}] for n={n} knitted by mesh completion ({len(vertices)} vertices)")
    return StableComponent(cls, n, vertices, tuple(arrows), translation, n <= 2, seed)


def stable_components(alg: BoundQuiverAlgebra, n: int) -> List[StableComponent]:
    """One component per stable class."""
    return [knit_stable_component(alg, n, cls) for cls in stable_classes(alg)]


def tau_period(component: StableComponent, vertex: Interval) -> int:
    """Length of the τ-orbit of ``vertex``."""
    translation = dict(component.tau)
    if vertex not in translation:
        raise ValidationError(f"{vertex} is not a vertex of the component")
    steps, x = 1, translation[vertex]
    while x != vertex:
        x = translation[x]
        steps += 1
    return steps


def expected_seed_period(n: int, period: int) -> int:
    """(n+1)·l / gcd(l, 2)."""
    return (n + 1) * period // gcd(period, 2)


def divisibility_report(n: int, component: StableComponent) -> DivisibilityReport:
    """Check that n+1 (n even) or (n+1)/2 (n odd) divides the component size."""
    divisor = n + 1 if n % 2 == 0 else (n + 1) // 2
    return DivisibilityReport(
        size=component.size, n=n, divisor=divisor, passed=component.size % divisor == 0
    )


def component_report(component: StableComponent) -> ComponentReport:
    return ComponentReport(
        stable_class=component.stable_class.arrows(),
        n=component.n,
        size=component.size,
        exact=component.exact,
        seed=str(component.seed),
        seed_tau_period=tau_period(component, component.seed),
        vertices=[str(x) for x in component.vertices],
        arrows=[[str(s), str(t)] for s, t in component.arrows],
        tau={str(x): str(y) for x, y in component.tau},
        divisibility=divisibility_report(component.n, component),
    )
