import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

from tqdm import tqdm

from src.algebra.affine_weyl import (
    AffineContext,
    act,
    alcove_form,
    bfs_enumerate,
    element_from_word,
    gallery,
    hyperplane_crossings,
    kostant_context,
    length_from_point,
    orbit_contains,
    parity,
    random_word,
    reduced_word,
)
from src.algebra.geometry import lattice_basis
from src.algebra.root_data import build
from src.algebra.zperm import context_for

logger = logging.getLogger(__name__)

CONTEXTS = ("kostant", "permutation", "alt")


@dataclass
class OracleReport:
    context: str
    max_length: int
    points: int = 0
    checks: Dict[str, int] = field(default_factory=dict)
    discrepancies: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def count(self, name: str) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def build_context(type_tag: str, rank: int, context: str = "kostant") -> AffineContext:
    """kostant: M = c/2 on rho; permutation/alt: the contexts of the permutation representations"""
    if context == "kostant":
        return kostant_context(build(type_tag, rank))
    if context == "permutation":
        size = rank + 1 if type_tag.upper() == "A" else rank
        return context_for(type_tag.upper(), size)
    if context == "alt":
        if type_tag.upper() != "C":
            raise ValueError("the alternative representation exists for type C only")
        return context_for("C-alt", rank)
    raise ValueError(f"unknown context {context!r}, expected one of {', '.join(CONTEXTS)}")


class OracleWorkflow:
    """Cross-checks of the closed-form alcove formulas against breadth-first enumeration"""

    def __init__(self, ctx: AffineContext, show_progress: bool = False):
        self.ctx = ctx
        self.show_progress = show_progress

    def run(self, max_length: int, samples: int = 200, seed: int = 0) -> OracleReport:
        try:
            return self._run(max_length, samples, seed)
        except ValueError:
            raise
        except Exception as e:
            raise RuntimeError(f"Oracle run failed: {str(e)}") from e

    def _run(self, max_length: int, samples: int, seed: int) -> OracleReport:
        ctx = self.ctx
        report = OracleReport(context=str(ctx), max_length=max_length)
        found = bfs_enumerate(ctx, max_length, progress=self.show_progress)
        report.points = len(found)

        items = found.items()
        if self.show_progress:
            items = tqdm(items, desc=f"oracle {ctx}", unit="point")
        for point, (depth, word) in items:
            self._check_point(report, point, depth, word)

        if ctx.orbit_lattice is not None:
            self._check_orbit_box(report, found, max_length)

        rng = random.Random(seed)
        for _ in range(samples):
            word = random_word(ctx, rng.randint(0, 2 * max_length + 1), rng)
            w = element_from_word(ctx, word)
            mu = act(ctx, w, ctx.base)
            report.count("parity")
            if parity(ctx, w) != length_from_point(ctx, mu) % 2:
                report.discrepancies.append(f"parity differs for word {list(word)}")

        logger.info(
            "oracle %s: %d points, %d checks, %d discrepancies",
            ctx, report.points, sum(report.checks.values()), len(report.discrepancies),
        )
        return report

    def _check_point(self, report: OracleReport, point, depth: int, word) -> None:
        ctx = self.ctx
        label = ",".join(point.to_strings())

        report.count("length")
        if length_from_point(ctx, point) != depth:
            report.discrepancies.append(f"length of ({label}) differs from BFS depth {depth}")

        report.count("alcove")
        totals = {alpha: 0 for alpha in ctx.rs.positive_roots}
        path = gallery(ctx, word)
        for x, y in zip(path, path[1:]):
            for alpha, k in hyperplane_crossings(ctx, x, y).items():
                totals[alpha] += k
        form = alcove_form(ctx, point)
        if any(abs(form[alpha]) != totals[alpha] for alpha in totals):
            report.discrepancies.append(f"alcove form of ({label}) differs from hyperplane crossings")

        report.count("parity")
        if parity(ctx, element_from_word(ctx, word)) != depth % 2:
            report.discrepancies.append(f"parity of ({label}) differs from BFS depth {depth}")

        report.count("descent")
        if len(reduced_word(ctx, point)) != depth:
            report.discrepancies.append(f"descent walk from ({label}) has the wrong length")

    def _check_orbit_box(self, report: OracleReport, found, max_length: int) -> None:
        """orbit_contains against reachability on lattice neighbours of the ball"""
        ctx = self.ctx
        steps = []
        for b in lattice_basis(ctx.rs, ctx.orbit_lattice):
            steps.extend([b, -b])
        candidates = set(found)
        for point in found:
            for step in steps:
                candidates.add(point + step)
        for mu in candidates:
            report.count("orbit")
            inside = orbit_contains(ctx, ctx.base, ctx.orbit_lattice, mu)
            if mu in found:
                if not inside:
                    report.discrepancies.append(f"({','.join(mu.to_strings())}) reached but rejected")
            elif inside and length_from_point(ctx, mu) <= max_length:
                report.discrepancies.append(f"({','.join(mu.to_strings())}) accepted but not reached")
