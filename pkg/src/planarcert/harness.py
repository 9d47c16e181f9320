"""Exhaustive and randomized verification campaigns.

Each campaign replays one piece of the supporting theory over every small
graph (or a seeded random stream) and reports mismatches as (n, edge mask)
records, so a failure reproduces from the report alone.  Campaigns are
deterministic given their parameters and seed; the canonical key-value
serialization omits wall time so reports are byte-identical across runs.

Report counting conventions, per campaign:
  kuratowski / kuratowski_classes / menger_cubic -- every graph is decided,
      so planar_count + nonplanar_count == graphs_examined;
  lemma -- nonplanar_count tallies the graphs matching the obstruction
      characterization (those are K5/K3,3 copies); nothing else is decided;
  chartrand_harary -- planar_count tallies graphs realized with a covering
      face (their rotation is a planarity witness); nothing else is decided;
  lifting -- counts tally per-edge contraction outcomes: planar_count the
      planar contractions skipped, nonplanar_count the certificates lifted.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, contract_edge, from_edge_mask
from .lemmas import condition1, condition2, condition3
from .planarity import DEFAULT_CONFIG, DecisionConfig, decide, decide_via_minor
from .embedding import find_covering_planar_rotation, find_planar_rotation
from .subdivision import (
    Pattern,
    find_kuratowski,
    find_subdivision,
    lift_certificate,
    validate_subdivision,
)

Rng = random.Random

MAX_EXHAUSTIVE_N = 6
MAX_CLASS_N = 7


@dataclass(frozen=True)
class CampaignReport:
    campaign: str
    graphs_examined: int
    planar_count: int
    nonplanar_count: int
    mismatches: tuple[tuple[int, int], ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_kv(self) -> str:
        """Canonical machine-readable form; byte-identical across runs."""
        lines = [
            f"campaign {self.campaign}",
            f"graphs_examined {self.graphs_examined}",
            f"planar_count {self.planar_count}",
            f"nonplanar_count {self.nonplanar_count}",
            f"mismatch_count {len(self.mismatches)}",
        ]
        for n, mask in self.mismatches:
            lines.append(f"mismatch {n} {mask}")
        lines.append(f"passed {'true' if self.passed else 'false'}")
        return "\n".join(lines) + "\n"

    def render_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = (
            f"[{status}] {self.campaign}: {self.graphs_examined} examined, "
            f"{self.planar_count} planar, {self.nonplanar_count} non-planar, "
            f"{len(self.mismatches)} mismatches ({self.wall_time:.2f}s)"
        )
        body = "".join(
            f"\n  mismatch: n={n} mask={mask}" for n, mask in self.mismatches
        )
        return head + body


# ---------------------------------------------------------------------------
# Random generators
# ---------------------------------------------------------------------------


def make_rng(seed: int) -> Rng:
    return random.Random(seed)


def random_graph(n: int, p: float, rng: Rng) -> Graph:
    """Each vertex pair becomes an edge independently with probability p."""
    if not 0 <= p <= 1:
        raise ValueError("probability must lie in [0, 1]")
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_cubic_graph(n: int, rng: Rng, max_retries: int = 10_000) -> Graph:
    """Random connected 3-regular graph: three overlaid perfect matchings,
    rejecting overlaps (parallel edges) and disconnected unions."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even vertex count >= 4")
    for _ in range(max_retries):
        edges: set[tuple[int, int]] = set()
        ok = True
        for _ in range(3):
            perm = rng.sample(range(n), n)
            for i in range(n // 2):
                u, v = perm[2 * i], perm[2 * i + 1]
                e = (u, v) if u < v else (v, u)
                if e in edges:
                    ok = False
                    break
                edges.add(e)
            if not ok:
                break
        if not ok:
            continue
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected cubic graph found in {max_retries} tries")


# ---------------------------------------------------------------------------
# Canonical forms for isomorphism dedup
# ---------------------------------------------------------------------------


def _edge_index_permutations(n: int) -> list[tuple[int, ...]]:
    """For each vertex permutation, where each edge-mask bit position goes."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    out = []
    for perm in itertools.permutations(range(n)):
        out.append(
            tuple(
                index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs
            )
        )
    return out


def canonical_edge_mask(g: Graph) -> int:
    """Minimum edge bitmask over all vertex relabelings (n <= 7)."""
    if g.n > MAX_CLASS_N:
        raise CapacityError(f"canonical form supports n <= {MAX_CLASS_N}")
    mask = g.edge_mask()
    best = mask
    for emap in _edge_index_permutations(g.n):
        img = 0
        m = mask
        while m:
            bit = (m & -m).bit_length() - 1
            m &= m - 1
            img |= 1 << emap[bit]
        if img < best:
            best = img
    return best


def enumerate_graph_class_masks(n: int) -> list[int]:
    """One edge mask per isomorphism class of n-vertex graphs, ascending.

    Walks all 2^C(n,2) masks in order and marks each newly seen mask's
    whole relabeling orbit, so the representative kept for every class is
    its minimum mask -- the same canonical form canonical_edge_mask picks.
    """
    if n > MAX_CLASS_N:
        raise CapacityError(f"class enumeration supports n <= {MAX_CLASS_N}")
    emaps = _edge_index_permutations(n)
    bits = n * (n - 1) // 2
    seen = bytearray(1 << bits)
    reps = []
    for mask in range(1 << bits):
        if seen[mask]:
            continue
        reps.append(mask)
        for emap in emaps:
            img = 0
            m = mask
            while m:
                bit = (m & -m).bit_length() - 1
                m &= m - 1
                img |= 1 << emap[bit]
            seen[img] = 1
    return reps


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------


def _three_way_bits(g: Graph, config: DecisionConfig) -> tuple[bool, bool, bool]:
    sub = decide(g, config).planar
    minor = decide_via_minor(g, config).planar
    rho = find_planar_rotation(g, config.node_budget, config.edge_bound_prefilter)
    return sub, minor, rho is not None


def verify_kuratowski(
    max_n: int, config: DecisionConfig = DEFAULT_CONFIG
) -> CampaignReport:
    """Subdivision route, minor route, and raw embedding search must agree
    on every labeled graph with up to max_n vertices."""
    if max_n > MAX_EXHAUSTIVE_N:
        raise CapacityError(
            f"labeled exhaustive mode supports max_n <= {MAX_EXHAUSTIVE_N}; "
            "use verify_kuratowski_classes for n = 7"
        )
    t0 = time.perf_counter()
    examined = planar = nonplanar = 0
    mismatches = []
    for n in range(1, max_n + 1):
        bits = n * (n - 1) // 2
        for mask in range(1 << bits):
            g = from_edge_mask(n, mask)
            sub, minor, emb = _three_way_bits(g, config)
            examined += 1
            if sub:
                planar += 1
            else:
                nonplanar += 1
            if not (sub == minor == emb):
                mismatches.append((n, mask))
    return CampaignReport(
        "kuratowski",
        examined,
        planar,
        nonplanar,
        tuple(mismatches),
        time.perf_counter() - t0,
    )


def verify_kuratowski_classes(
    n: int = 7, config: DecisionConfig = DEFAULT_CONFIG
) -> CampaignReport:
    """Same agreement check over one representative per isomorphism class;
    the embedding search is consulted only when the edge bound allows a
    planar embedding at all (E <= 3V - 6)."""
    if n > MAX_CLASS_N:
        raise CapacityError(f"class mode supports n <= {MAX_CLASS_N}")
    t0 = time.perf_counter()
    examined = planar = nonplanar = 0
    mismatches = []
    oracle_cap = 3 * n - 6
    for mask in enumerate_graph_class_masks(n):
        g = from_edge_mask(n, mask)
        sub = decide(g, config).planar
        minor = decide_via_minor(g, config).planar
        agree = sub == minor
        if agree and len(g.edges) <= oracle_cap:
            rho = find_planar_rotation(
                g, config.node_budget, config.edge_bound_prefilter
            )
            agree = sub == (rho is not None)
        examined += 1
        if sub:
            planar += 1
        else:
            nonplanar += 1
        if not agree:
            mismatches.append((n, mask))
    return CampaignReport(
        "kuratowski_classes",
        examined,
        planar,
        nonplanar,
        tuple(mismatches),
        time.perf_counter() - t0,
    )


def verify_lemma_characterization(max_n: int) -> CampaignReport:
    """Check the obstruction characterization over all labeled graphs:
    the two edge-deletion conditions must hold exactly on the K5/K3,3
    copies among graphs with an edge and minimum degree >= 3, and the
    implication chain condition3 => condition2 => condition1 must hold
    everywhere."""
    if max_n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"supports max_n <= {MAX_EXHAUSTIVE_N}")
    t0 = time.perf_counter()
    examined = characterized = 0
    mismatches = []
    for n in range(1, max_n + 1):
        bits = n * (n - 1) // 2
        for mask in range(1 << bits):
            g = from_edge_mask(n, mask)
            examined += 1
            ok = True
            c2 = condition2(g)
            c3 = condition3(g)
            if c3 and not c2:
                ok = False
            if c2 and not condition1(g):
                ok = False
            if c2 and any(len(a) < 3 for a in g.adj):
                ok = False  # a cycle remainder at every edge forces degree >= 3
            if ok and g.edges and all(len(a) >= 3 for a in g.adj):
                c1 = condition1(g)
                if c1 != c3 or c2 != c3:
                    ok = False
                if c3:
                    characterized += 1
            if not ok:
                mismatches.append((n, mask))
    return CampaignReport(
        "lemma",
        examined,
        0,
        characterized,
        tuple(mismatches),
        time.perf_counter() - t0,
    )


def verify_chartrand_harary(max_n: int) -> CampaignReport:
    """Over every connected labeled graph: theta-free iff some genus-0
    rotation has a single face covering every edge."""
    if max_n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"supports max_n <= {MAX_EXHAUSTIVE_N}")
    t0 = time.perf_counter()
    examined = realizable = 0
    mismatches = []
    for n in range(1, max_n + 1):
        bits = n * (n - 1) // 2
        for mask in range(1 << bits):
            g = from_edge_mask(n, mask)
            if not g.is_connected():
                continue
            examined += 1
            theta_free = not find_subdivision(g, Pattern.THETA)
            covered = find_covering_planar_rotation(g) is not None
            if covered:
                realizable += 1
            if theta_free != covered:
                mismatches.append((n, mask))
    return CampaignReport(
        "chartrand_harary",
        examined,
        realizable,
        0,
        tuple(mismatches),
        time.perf_counter() - t0,
    )


def verify_menger_cubic(
    samples: int,
    seed: int,
    sizes: tuple[int, ...] = (8, 10, 12),
    config: DecisionConfig = DEFAULT_CONFIG,
) -> CampaignReport:
    """On random connected cubic graphs, planarity must coincide with the
    absence of a K3,3 subdivision, and no K5 subdivision may ever fit
    (branch vertices would need degree 4)."""
    t0 = time.perf_counter()
    rng = make_rng(seed)
    examined = planar = nonplanar = 0
    mismatches = []
    for i in range(samples):
        n = sizes[i % len(sizes)]
        g = random_cubic_graph(n, rng)
        verdict = decide_via_minor(g, config)
        k33 = find_subdivision(g, Pattern.K33)
        k5 = find_subdivision(g, Pattern.K5)
        examined += 1
        if verdict.planar:
            planar += 1
        else:
            nonplanar += 1
        if verdict.planar != (k33 is None) or k5 is not None:
            mismatches.append((n, g.edge_mask()))
    return CampaignReport(
        "menger_cubic",
        examined,
        planar,
        nonplanar,
        tuple(mismatches),
        time.perf_counter() - t0,
    )


def verify_lifting(
    samples: int,
    seed: int,
    ps: tuple[float, ...] = (0.3, 0.5, 0.7),
    max_n: int = 9,
) -> CampaignReport:
    """For every edge xy of every sampled graph: any obstruction found in
    G/xy must lift to a validating certificate in G under the pattern rule
    (K3,3 stays K3,3; K5 lifts to K5 or K3,3).  Planar contractions are
    skipped but counted."""
    t0 = time.perf_counter()
    rng = make_rng(seed)
    examined = planar_contractions = lifted_count = 0
    mismatches = []
    for i in range(samples):
        n = rng.randint(4, max_n)
        p = ps[i % len(ps)]
        g = random_graph(n, p, rng)
        examined += 1
        bad = False
        for x, y in g.sorted_edges():
            contracted, _, _ = contract_edge(g, (x, y))
            cert = find_kuratowski(contracted)
            if cert is None:
                planar_contractions += 1
                continue
            lifted_count += 1
            lifted = lift_certificate(g, x, y, cert)
            if not validate_subdivision(g, lifted):
                bad = True
            if cert.pattern is Pattern.K33 and lifted.pattern is not Pattern.K33:
                bad = True
            if cert.pattern is Pattern.K5 and lifted.pattern not in (
                Pattern.K5,
                Pattern.K33,
            ):
                bad = True
        if bad:
            mismatches.append((n, g.edge_mask()))
    return CampaignReport(
        "lifting",
        examined,
        planar_contractions,
        lifted_count,
        tuple(mismatches),
        time.perf_counter() - t0,
    )
