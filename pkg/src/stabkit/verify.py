"""Machine-checkable reproductions of the non-monotonicity results."""
from __future__ import annotations

import hashlib
import json
import math
import operator
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import __version__
from .constructions import gen_matching_cex, gen_tree_cex, gen_tree_cex_9, gen_tri_cex, tri_stab_bound
from .geom_core import PointSet, is_general_position
from .geom_graph import stabbing_number
from .search import (
    double_factorial,
    min_stab_matching,
    min_stab_path,
    min_stab_tree,
    min_stab_triangulation,
    triangulations,
)
from .stab_lines import representative_partitions

SCHEMA = 1
TARGETS = ("lemma-3.2", "lemma-3.4", "lemma-4.1", "lemma-5.1", "corollary-2.2")

_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "==": operator.eq,
    "<=": operator.le,
    ">=": operator.ge,
}


class VerificationError(ValueError):
    pass


@dataclass
class Claim:
    name: str
    relation: str
    expected: float
    computed: float

    @property
    def passed(self) -> bool:
        return _RELATIONS[self.relation](self.computed, self.expected)


@dataclass
class VerificationReport:
    lemma: str
    claims: list[Claim] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seconds: float = 0.0
    version: str = __version__
    input_hashes: dict = field(default_factory=dict)
    schema: int = SCHEMA

    def claim(self, name: str, relation: str, expected, computed) -> Claim:
        c = Claim(name, relation, expected, computed)
        self.claims.append(c)
        return c

    @property
    def passed(self) -> bool:
        return bool(self.claims) and all(c.passed for c in self.claims)

    def to_dict(self) -> dict:
        d = asdict(self)
        for cd, c in zip(d["claims"], self.claims):
            cd["passed"] = c.passed
        d["passed"] = self.passed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema") != SCHEMA:
            raise VerificationError(f"unsupported report schema {d.get('schema')!r}")
        claims = [Claim(c["name"], c["relation"], c["expected"], c["computed"]) for c in d["claims"]]
        return cls(
            lemma=d["lemma"],
            claims=claims,
            counts=dict(d["counts"]),
            seconds=d["seconds"],
            version=d["version"],
            input_hashes=dict(d["input_hashes"]),
            schema=d["schema"],
        )

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.claims:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}: computed {c.computed} {c.relation} {c.expected}")
        lines.append(f"{self.lemma}: {'PASS' if self.passed else 'FAIL'} ({self.seconds:.2f}s)")
        return lines


def points_hash(P: PointSet) -> str:
    blob = json.dumps(P.coords(), separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def random_general_position(n: int, rng: random.Random, span: int = 1000) -> PointSet:
    """Uniform integer points in [-span, span]^2, resampled until in general position."""
    while True:
        P = PointSet((rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n))
        if is_general_position(P):
            return P


def verify_lemma_3_2(threads: int = 1) -> VerificationReport:
    rep = VerificationReport("lemma-3.2")
    b = gen_tree_cex_9()
    small, big = b.small, b.big
    rep.input_hashes = {"P1": points_hash(small), "P2": points_hash(big)}
    rep.claim("construction validates", "==", 1, int(b.validation.passed))
    H1, H2 = representative_partitions(small), representative_partitions(big)
    rep.claim("|H_P1|", "==", 36, len(H1))
    rep.claim("|H_P2|", "==", 45, len(H2))
    out = min_stab_tree(small, "exhaustive", threads=threads, H=H1)
    rep.claim("trees of P1 enumerated", "==", 9**7, out.explored)
    rep.claim("treestab(P1)", "==", 4, out.optimum)
    rep.claim("witness tree on P2 stabbing number", "==", 3, stabbing_number(b.witness, H2))
    rep.counts = {"partitions_P1": len(H1), "partitions_P2": len(H2), "explored_trees": out.explored}
    return rep


def verify_lemma_3_4(n_min: int = 9, n_max: int = 14, threads: int = 1) -> VerificationReport:
    if n_min < 9 or n_max < n_min:
        raise VerificationError("lemma-3.4 needs 9 <= n_min <= n_max")
    if n_max > 64:
        raise VerificationError("lemma-3.4 supports n <= 64")
    rep = VerificationReport("lemma-3.4")
    for n in range(n_min, n_max + 1):
        b = gen_tree_cex(n)
        rep.input_hashes[f"P1'(n={n})"] = points_hash(b.small)
        rep.claim(f"n={n}: construction validates", "==", 1, int(b.validation.passed))
        rep.claim(f"n={n}: witness tree on P2' stabbing number", "==", 3, stabbing_number(b.witness))
    if n_min == 9:
        b = gen_tree_cex(9)
        out = min_stab_tree(b.small, "exhaustive", threads=threads)
        rep.claim("n=9: trees enumerated", "==", 9**7, out.explored)
        rep.claim("n=9: treestab(P1')", "==", 4, out.optimum)
        rep.counts["explored_trees"] = out.explored
    rep.counts["instances"] = n_max - n_min + 1
    return rep


def verify_lemma_4_1(n_small: int = 4, n_witness: int = 8) -> VerificationReport:
    if n_small > 6:
        raise VerificationError("exhaustive triangulation check is limited to n <= 6 per chain")
    rep = VerificationReport("lemma-4.1")
    b = gen_tri_cex(n_small)
    P = b.small
    n = n_small
    rep.input_hashes[f"P(n={n})"] = points_hash(P)
    rep.claim(f"n={n}: construction validates", "==", 1, int(b.validation.passed))
    min_mid, count = None, 0
    for tri in triangulations(P):
        count += 1
        mid = sum(1 for u, v in tri if (u < n) != (v < n))
        min_mid = mid if min_mid is None else min(min_mid, mid)
    rep.claim(f"n={n}: min mid-partition cut over all triangulations of P", ">=", 2 * n - 1, min_mid)
    out = min_stab_triangulation(P)
    rep.claim(f"n={n}: tristab(P)", ">=", 2 * n - 1, out.optimum)
    rep.counts["triangulations_P"] = count

    bw = gen_tri_cex(n_witness)
    rep.input_hashes[f"P'(n={n_witness})"] = points_hash(bw.big)
    rep.claim(f"n={n_witness}: construction validates", "==", 1, int(bw.validation.passed))
    bound = math.floor(tri_stab_bound(n_witness))
    rep.claim(f"n={n_witness}: witness triangulation of P' stabbing number", "<=", bound, stabbing_number(bw.witness))
    return rep


def verify_lemma_5_1(k: int = 5) -> VerificationReport:
    if k > 7:
        raise VerificationError("exhaustive matching check is limited to k <= 7")
    rep = VerificationReport("lemma-5.1")
    b = gen_matching_cex(k)
    rep.input_hashes = {"P1": points_hash(b.small), "P2": points_hash(b.big)}
    rep.claim("construction validates", "==", 1, int(b.validation.passed))
    out = min_stab_matching(b.small)
    rep.claim("matchings of P1 enumerated", "==", double_factorial(2 * k - 1), out.explored)
    rep.claim("matstab(P1)", ">=", 3, out.optimum)
    rep.claim("partner matching on P2 stabbing number", "<=", 2, stabbing_number(b.witness))
    rep.counts["explored_matchings"] = out.explored
    return rep


def verify_corollary_2_2(trials: int = 200, seed: int = 0, n_max: int = 7) -> VerificationReport:
    if n_max > 9:
        raise VerificationError("exhaustive path search sweep is limited to n <= 9")
    rep = VerificationReport("corollary-2.2")
    rng = random.Random(seed)
    violations = 0
    removals = 0
    for _ in range(trials):
        n = rng.randint(3, n_max)
        P = random_general_position(n, rng)
        whole = min_stab_path(P).optimum
        for p in range(n):
            removals += 1
            if min_stab_path(P.without([p])).optimum > whole:
                violations += 1
    rep.claim("pathstab(P - p) > pathstab(P) occurrences", "==", 0, violations)
    rep.counts = {"trials": trials, "removals": removals, "seed": seed}
    return rep


def run(target: str, **kw) -> VerificationReport:
    t0 = time.perf_counter()
    fn = {
        "lemma-3.2": verify_lemma_3_2,
        "lemma-3.4": verify_lemma_3_4,
        "lemma-4.1": verify_lemma_4_1,
        "lemma-5.1": verify_lemma_5_1,
        "corollary-2.2": verify_corollary_2_2,
    }.get(target)
    if fn is None:
        raise VerificationError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    rep = fn(**kw)
    rep.seconds = time.perf_counter() - t0
    return rep
