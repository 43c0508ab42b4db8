"""
Verification runner for ncgraph.

Runs the built-in claims behind the `verify` command:
- The equivalence sweep is analyzed first, one executor job per group,
  with results kept in catalog order regardless of completion order
- Each claim is a function of the VerificationRun returning a detail string
  (optionally with a table of records)
- ClaimFailed marks a failed check and ClaimSkipped a claim the current
  caps exclude; any other exception is logged and recorded as FAIL, and
  the remaining claims still run
"""
import asyncio
import logging
import random
import time
from dataclasses import asdict, dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from ncgraph.analysis import (
    PREDICATES,
    NcgContext,
    build_ncg,
    cc_quotient_omega_check,
    centralizer_partition,
    chi_graph,
    chi_group_check,
    commutativity_transitive,
    eq1_verify,
    exchange_extend,
    is_ac,
    is_cc,
    kregular_omega,
    maximal_noncommuting_set,
    omega_fast,
    pgroup_case,
    verify_centralizer_cover,
    verify_lazy_witness,
    verify_transitivity_witness,
)
from ncgraph.config import NcgraphConfig
from ncgraph.config.sweep_catalog import (
    A10_TRIPLE,
    CC_CASES,
    CC_QUATERNION_N,
    CLAIM_TITLES,
    CLIQUE_SEEDS_PER_TRIAL,
    DIHEDRAL_N,
    EQ1_INSTANCE,
    EXCHANGE_GRAPH_MAX_VERTICES,
    EXCHANGE_GRAPH_TRIALS,
    EXCHANGE_TRIALS,
    FULL_SWEEP_ORDER,
    HEREDITY_SUBGROUPS,
    KREGULAR_CASES,
    LAZY_PRODUCT_SAMPLES,
    LAZY_SAMPLE_SPECS,
    MATROID_GRAPH_MAX_VERTICES,
    MATROID_GRAPH_TRIALS,
    MIN_SWEEP_SIZE,
    NON_MATROID_SPECS,
    PGROUP_CASE_I_PRIMES,
    PGROUP_CASE_III,
    PRODUCT_BASE,
    QUATERNION_L,
    QUATERNION_ORACLE_MAX_L,
    QUATERNION_SEARCH_MAX_L,
    S4_TRIPLE,
    SWEEP_FAMILIES,
)
from ncgraph.errors import CapExceeded
from ncgraph.graphs import ORACLE_LIMIT, SimpleGraph, clique_number, oracle_clique_number
from ncgraph.groups import (
    ALTERNATING,
    FiniteGroup,
    LazyPermGroup,
    build_group,
    get_families,
    load_cayley_table,
    parity,
    parse_spec,
)
from ncgraph.groups.families import CATALOG_ORDER
from ncgraph.matroids import (
    CROSS_VALIDATE_LIMIT,
    cross_validate_matroid,
    extend_clique,
    from_graph,
    has_exchange_property,
    is_matroid_graph,
)

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


class ClaimFailed(Exception):
    """A claim's check did not hold."""
    pass


class ClaimSkipped(Exception):
    """A claim needs groups the current caps exclude."""
    pass


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise ClaimFailed(message)


@dataclass
class ClaimResult:
    number: int
    title: str
    status: str
    detail: str = ""
    records: Optional[List[Dict[str, Any]]] = None
    execution_time_ms: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class SweepEntry:
    """Verdicts for one sweep group; error is set when it could not be analyzed."""
    spec: str
    order: int = 0
    ctx: Optional[NcgContext] = None
    is_ac: Optional[bool] = None
    is_matroid: Optional[bool] = None
    transitive: Optional[bool] = None
    cross_validated: Optional[bool] = None
    fixture: bool = False
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


# =============================================================================
# Sweep
# =============================================================================

def sweep_specs(bound: int) -> List[str]:
    """Family instances then pairwise products, all of order <= bound."""
    families = get_families()
    specs = []
    for tag in CATALOG_ORDER:
        family = families.get(tag)
        if family is None:
            continue
        specs.extend(f"{tag}:{value}" for value in SWEEP_FAMILIES.get(tag, []) if family.order(value) <= bound)
    for i, left in enumerate(PRODUCT_BASE):
        for right in PRODUCT_BASE[i:]:
            text = f"{left}x{right}"
            if parse_spec(text).order <= bound:
                specs.append(text)
    return specs


def analyze_sweep_entry(source: str, max_order: int, fixture: bool = False) -> SweepEntry:
    """
    Build one sweep group and record its three matroid-equivalent verdicts.

    Errors are captured on the entry rather than raised.
    """
    entry = SweepEntry(spec=source, fixture=fixture)
    try:
        group = load_cayley_table(source) if fixture else build_group(source, max_order)
        if isinstance(group, LazyPermGroup):
            raise CapExceeded(group.order, max_order)
        ctx = build_ncg(group)
        entry.spec = group.spec
        entry.order = group.order
        entry.ctx = ctx
        entry.is_ac = is_ac(ctx)[0]
        entry.is_matroid = is_matroid_graph(ctx.graph)[0]
        entry.transitive = commutativity_transitive(ctx)[0]
        if ctx.graph.vertex_count <= CROSS_VALIDATE_LIMIT:
            entry.cross_validated = cross_validate_matroid(ctx.graph)
    except Exception as e:
        logger.error(f"Sweep analysis failed for {source}: {e}")
        entry.error = f"{type(e).__name__}: {e}"
    return entry


# =============================================================================
# Random graphs
# =============================================================================

def random_cluster_complement(rng: random.Random, max_vertices: int) -> Tuple[SimpleGraph, int]:
    """
    Complete multipartite graph on a random partition of 1..max_vertices vertices.

    Returns the graph and its number of parts, which is its clique number.
    """
    n = rng.randint(1, max_vertices)
    k = rng.randint(1, n)
    part = [rng.randrange(k) for _ in range(n)]
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return SimpleGraph.from_edges(n, edges), len(set(part))


def random_graph(rng: random.Random, max_vertices: int) -> SimpleGraph:
    n = rng.randint(1, max_vertices)
    p = rng.random()
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def random_noncommuting_set(ctx: NcgContext, rng: random.Random) -> List[int]:
    """A random pairwise non-commuting set, grown greedily in shuffled order."""
    rows = ctx.memo.get("commuting_rows")
    if rows is None:
        rows = ctx.memo["commuting_rows"] = ctx.group.commutation_matrix.tolist()
    order = list(ctx.non_central)
    rng.shuffle(order)
    target = rng.randint(1, len(order))
    chosen: List[int] = []
    for x in order:
        if not any(rows[x][c] for c in chosen):
            chosen.append(x)
            if len(chosen) == target:
                break
    return chosen


# =============================================================================
# Run state
# =============================================================================

class VerificationRun:
    """
    Shared state of one `verify` invocation.

    Args:
        config: Effective configuration
        fixtures: Cayley table files added to the equivalence sweep
    """

    def __init__(self, config: NcgraphConfig, fixtures: Sequence[str] = ()):
        self.config = config
        self.fixtures = list(fixtures)
        self.sweep: List[SweepEntry] = []

    @property
    def sweep_bound(self) -> int:
        return min(self.config.sweep_max_order, self.config.max_order)

    def rng(self, salt: int) -> random.Random:
        """Independent seeded stream per claim, so claims do not perturb each other."""
        return random.Random(self.config.seed * 1009 + salt)

    def build(self, text: str) -> FiniteGroup:
        """
        Materialize a spec for a claim.

        Raises:
            ClaimSkipped: If the group is over the order cap
        """
        try:
            group = build_group(text, self.config.max_order)
        except CapExceeded as e:
            raise ClaimSkipped(f"{text} exceeds the order cap {self.config.max_order}") from e
        if isinstance(group, LazyPermGroup):
            raise ClaimSkipped(f"{text} exceeds the order cap {self.config.max_order}")
        return group

    async def analyze_sweep(self) -> List[SweepEntry]:
        """Analyze every sweep group and fixture concurrently, keeping input order."""
        specs = sweep_specs(self.sweep_bound)
        sources = [(s, False) for s in specs] + [(path, True) for path in self.fixtures]
        loop = asyncio.get_running_loop()
        tasks = [
            loop.run_in_executor(None, analyze_sweep_entry, source, self.config.max_order, fixture)
            for source, fixture in sources
        ]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        entries = []
        for (source, fixture), result in zip(sources, results):
            if isinstance(result, Exception):
                logger.error(f"Sweep job for {source} crashed: {result}")
                entries.append(SweepEntry(spec=source, fixture=fixture, error=str(result)))
            else:
                entries.append(result)
        self.sweep = entries
        logger.info(f"Sweep analyzed {len(entries)} groups (order <= {self.sweep_bound})")
        return entries

    def ac_entries(self, non_abelian: bool = False) -> List[SweepEntry]:
        return [
            e for e in self.sweep
            if e.ok and e.is_ac and not (non_abelian and e.ctx.group.is_abelian())
        ]

    @cached_property
    def small_graphs(self) -> List[SimpleGraph]:
        """Seeded random graphs on at most 12 vertices; half of them matroids."""
        rng = self.rng(0)
        graphs = []
        for i in range(EXCHANGE_GRAPH_TRIALS):
            if i % 2:
                graphs.append(random_graph(rng, EXCHANGE_GRAPH_MAX_VERTICES))
            else:
                graphs.append(random_cluster_complement(rng, EXCHANGE_GRAPH_MAX_VERTICES)[0])
        return graphs


# =============================================================================
# Claims
# =============================================================================

ClaimOutcome = Union[str, Tuple[str, List[Dict[str, Any]]]]


def claim_presentations(run: VerificationRun) -> ClaimOutcome:
    families = get_families()
    checked = 0
    for tag in CATALOG_ORDER:
        family = families[tag]
        for value in SWEEP_FAMILIES[tag]:
            if family.order(value) > run.sweep_bound:
                continue
            violations = family.check_presentation(family.build(value), value)
            expect(not violations, f"{tag}:{value} violates {', '.join(violations)}")
            checked += 1

    rng = run.rng(0)
    sampled = []
    for text in LAZY_SAMPLE_SPECS:
        group = build_group(text, run.config.max_order)
        if not isinstance(group, LazyPermGroup):
            continue
        for _ in range(LAZY_PRODUCT_SAMPLES):
            product = group.compose(group.random_element(rng), group.random_element(rng))
            expect(sorted(product) == list(range(1, group.degree + 1)), f"{text}: {product} is not a permutation")
            expect(group.kind != ALTERNATING or parity(product) == 0, f"{text}: odd product {group.label(product)}")
        sampled.append(text)
    detail = f"{checked} family instances satisfy their defining relations"
    if sampled:
        detail += f"; {LAZY_PRODUCT_SAMPLES} sampled products closed in {', '.join(sampled)}"
    return detail


def claim_quaternion_omega(run: VerificationRun) -> ClaimOutcome:
    for l in QUATERNION_L:
        ctx = build_ncg(run.build(f"Q:{4 * l}"))
        omega = omega_fast(ctx)
        expect(omega == l + 1, f"omega_fast(Q:{4 * l}) = {omega}, expected {l + 1}")
        if l <= QUATERNION_SEARCH_MAX_L:
            searched = clique_number(ctx.graph, run.config.node_budget)[0]
            expect(searched == l + 1, f"clique search on Q:{4 * l} gives {searched}")
        if l <= QUATERNION_ORACLE_MAX_L:
            exhaustive = oracle_clique_number(ctx.graph)
            expect(exhaustive == l + 1, f"oracle on Q:{4 * l} gives {exhaustive}")
    return f"omega(Q_4l) = l+1 for l = {QUATERNION_L[0]}..{QUATERNION_L[-1]}"


def claim_cc_theorem(run: VerificationRun) -> ClaimOutcome:
    for n, m in CC_CASES:
        text = f"Q:{2 ** n}" + (f"xC:{m}" if m > 1 else "")
        expect(cc_quotient_omega_check(run.build(text)), f"omega({text}) != {2 ** (n - 2) + 1}")
    for n in CC_QUATERNION_N:
        expect(is_cc(build_ncg(run.build(f"Q:{2 ** n}"))), f"Q:{2 ** n} is not a CC-group")
    return f"omega = 2^(n-2)+1 on {len(CC_CASES)} cases; Q:2^n is CC for n in {CC_QUATERNION_N}"


def claim_pgroups(run: VerificationRun) -> ClaimOutcome:
    for p in PGROUP_CASE_I_PRIMES:
        ctx = build_ncg(run.build(f"H:{p}"))
        case = pgroup_case(ctx)
        expect(omega_fast(ctx) == p + 1, f"omega(H:{p}) = {omega_fast(ctx)}, expected {p + 1}")
        expect(case is not None and case["case"] == "i" and case["holds"], f"H:{p} classified as {case}")
    for text, expected in PGROUP_CASE_III.items():
        ctx = build_ncg(run.build(text))
        case = pgroup_case(ctx)
        expect(omega_fast(ctx) == expected, f"omega({text}) = {omega_fast(ctx)}, expected {expected}")
        expect(case is not None and case["case"] == "iii" and case["holds"], f"{text} classified as {case}")
    return "cases (i) and (iii) hold; case (ii) not exercised by built-ins"


def claim_equivalence(run: VerificationRun) -> ClaimOutcome:
    expect(bool(run.sweep), "the sweep is empty")
    broken = [e for e in run.sweep if not e.ok]
    if broken:
        raise ClaimFailed(f"{broken[0].spec}: {broken[0].error}")
    cross_checked = 0
    for e in run.sweep:
        expect(
            e.is_ac == e.is_matroid == e.transitive,
            f"{e.spec}: is_ac={e.is_ac}, is_matroid={e.is_matroid}, transitive={e.transitive}",
        )
        if e.cross_validated is not None:
            cross_checked += 1
            expect(e.cross_validated == e.is_matroid, f"{e.spec}: exchange property disagrees")
    built_in = [e for e in run.sweep if not e.fixture]
    if run.sweep_bound >= FULL_SWEEP_ORDER:
        expect(len(built_in) >= MIN_SWEEP_SIZE, f"only {len(built_in)} sweep groups")
    ac_count = sum(1 for e in run.sweep if e.is_ac)
    return f"{len(run.sweep)} groups agree ({ac_count} AC, {cross_checked} cross-validated)"


def claim_counting_identity(run: VerificationRun) -> ClaimOutcome:
    entries = run.ac_entries()
    for e in entries:
        holds, lhs, rhs = eq1_verify(e.ctx)
        expect(holds, f"{e.spec}: |G| = {lhs} but the identity gives {rhs}")

    ctx = build_ncg(run.build(EQ1_INSTANCE["spec"]))
    holds, lhs, rhs = eq1_verify(ctx)
    centralizer_sum = sum(len(c) for _, c in ctx.distinct_centralizers)
    expect(
        holds
        and lhs == EQ1_INSTANCE["order"]
        and omega_fast(ctx) == EQ1_INSTANCE["omega"]
        and len(ctx.center) == EQ1_INSTANCE["center"]
        and centralizer_sum == EQ1_INSTANCE["centralizer_sum"],
        f"{EQ1_INSTANCE['spec']}: lhs={lhs}, rhs={rhs}, sum={centralizer_sum}",
    )
    return f"identity holds on {len(entries)} AC groups; Q_8: 8 = (1-3)*2 + 12"


def claim_non_matroid(run: VerificationRun) -> ClaimOutcome:
    for text in NON_MATROID_SPECS:
        ctx = build_ncg(run.build(text))
        expect(not is_matroid_graph(ctx.graph)[0], f"{text}: graph passes the component criterion")
        expect(not is_ac(ctx)[0], f"{text}: reported as AC")
        expect(not commutativity_transitive(ctx)[0], f"{text}: commuting reported transitive")
        if ctx.graph.vertex_count <= CROSS_VALIDATE_LIMIT:
            expect(not cross_validate_matroid(ctx.graph), f"{text}: exchange property holds")

    s4 = run.build("S:4")
    x, y, z = (s4.index_of(label) for label in S4_TRIPLE)
    expect(verify_transitivity_witness(s4, x, y, z), f"S:4 triple {S4_TRIPLE} is not a violation")

    check = verify_lazy_witness(LazyPermGroup(10, ALTERNATING), A10_TRIPLE)
    expect(
        check.xy_commute and check.yz_commute and not check.xz_commute,
        f"A:10 triple record {check.to_dict()}",
    )
    return f"{', '.join(NON_MATROID_SPECS)} fail every matroid test; S_4 and A_10 witnesses confirmed"


def claim_dihedral(run: VerificationRun) -> ClaimOutcome:
    for n in DIHEDRAL_N:
        ctx = build_ncg(run.build(f"D:{n}"))
        expect(is_ac(ctx)[0] and is_matroid_graph(ctx.graph)[0], f"D:{n} is not a matroid AC-group")
        blocks = {block.as_set() for block in centralizer_partition(ctx)}
        components = {
            frozenset(ctx.element_of(v) for v in component)
            for component in ctx.graph.complement().components()
        }
        expect(components == blocks, f"D:{n}: complement components differ from centralizer blocks")
        rotations = frozenset(range(1, n)) - ctx.center.as_set()
        expect(rotations in blocks, f"D:{n}: <b> minus the center is not a block")
        reflection_blocks = n if n % 2 else n // 2
        expect(len(blocks) == 1 + reflection_blocks, f"D:{n}: {len(blocks)} blocks")
    return f"D:n is a matroid AC-group with the expected blocks for n = {DIHEDRAL_N[0]}..{DIHEDRAL_N[-1]}"


def claim_kregular(run: VerificationRun) -> ClaimOutcome:
    for text, expected in KREGULAR_CASES.items():
        ctx = build_ncg(run.build(text))
        value = kregular_omega(ctx)
        expect(value == expected, f"kregular_omega({text}) = {value}, expected {expected}")
        if expected is not None:
            expect(value == omega_fast(ctx), f"{text}: formula differs from omega_fast")
    return "k-regular formula matches omega_fast"


def claim_structural_lemmas(run: VerificationRun) -> ClaimOutcome:
    rng = run.rng(9)
    for trial in range(MATROID_GRAPH_TRIALS):
        graph, omega = random_cluster_complement(rng, MATROID_GRAPH_MAX_VERTICES)
        searched = clique_number(graph, run.config.node_budget)[0]
        expect(searched == omega, f"trial {trial}: clique number {searched}, expected {omega}")
        for v in range(graph.vertex_count):
            clique = extend_clique(graph, [v])
            expect(len(clique) == omega and graph.is_clique(clique), f"trial {trial}: extension from {v} gives {clique}")
            expect(graph.degree(v) >= omega - 1, f"trial {trial}: vertex {v} has degree {graph.degree(v)}")
        # One vertex from a random subset of the parts is a clique
        blocks = graph.complement().components()
        for _ in range(CLIQUE_SEEDS_PER_TRIAL):
            seed = [rng.choice(block) for block in blocks if rng.random() < 0.5]
            clique = extend_clique(graph, seed)
            expect(
                set(seed) <= set(clique) and len(clique) == omega,
                f"trial {trial}: extension from {seed} gives {clique}",
            )

    for i, graph in enumerate(run.small_graphs):
        exchange = has_exchange_property(from_graph(graph))[0]
        expect(exchange == is_matroid_graph(graph)[0], f"small graph {i}: criteria disagree on {graph!r}")
    return (
        f"{MATROID_GRAPH_TRIALS} matroid graphs extend to omega with degree >= omega-1; "
        f"{len(run.small_graphs)} small graphs agree"
    )


def claim_centralizer_cover(run: VerificationRun) -> ClaimOutcome:
    entries = run.ac_entries(non_abelian=True)
    for e in entries:
        maximal = maximal_noncommuting_set(e.ctx)
        expect(verify_centralizer_cover(e.ctx, maximal), f"{e.spec}: cover fails for {e.ctx.labels_of(maximal)}")
    return f"cover and minimality hold on {len(entries)} non-abelian AC groups"


def claim_clique_oracle(run: VerificationRun) -> ClaimOutcome:
    graphs = [(e.spec, e.ctx.graph) for e in run.sweep if e.ok and e.ctx.graph.vertex_count <= ORACLE_LIMIT]
    graphs += [(f"random graph {i}", g) for i, g in enumerate(run.small_graphs)]
    for name, graph in graphs:
        searched = clique_number(graph, run.config.node_budget)[0]
        exhaustive = oracle_clique_number(graph)
        expect(searched == exhaustive, f"{name}: search {searched}, oracle {exhaustive}")
    return f"search equals oracle on {len(graphs)} graphs"


def claim_chi(run: VerificationRun) -> ClaimOutcome:
    limit = run.config.chi_max_order
    records = []
    for e in run.sweep:
        if not e.ok or e.order > limit:
            continue
        group = e.ctx.group
        expect(chi_graph(group, "abelian", limit) == e.ctx.graph, f"{e.spec}: chi(abelian) graph differs")
        row: Dict[str, Any] = {"spec": e.spec}
        for name in PREDICATES:
            centralizers_ok, matroid = chi_group_check(group, name, limit)
            row[name] = {"centralizers": centralizers_ok, "matroid": matroid, "agree": centralizers_ok == matroid}
        records.append(row)
    disagreements = sum(1 for row in records for name in PREDICATES if not row[name]["agree"])
    detail = f"chi(abelian) equals the non-commuting graph on {len(records)} groups; {disagreements} disagreements recorded"
    return detail, records


def claim_heredity_and_exchange(run: VerificationRun) -> ClaimOutcome:
    rng = run.rng(13)
    for e in run.sweep:
        if e.ok:
            expect(e.is_ac or not is_cc(e.ctx), f"{e.spec} is CC but not AC")

    entries = run.ac_entries(non_abelian=True)
    for e in entries:
        group = e.ctx.group
        for _ in range(HEREDITY_SUBGROUPS):
            gens = [rng.randrange(group.order), rng.randrange(group.order)]
            sub = group.generated_subgroup(gens)
            expect(is_matroid_graph(build_ncg(sub).graph)[0], f"{e.spec}: {sub.spec} is not a matroid")

        non_central = e.ctx.non_central
        for _ in range(EXCHANGE_TRIALS):
            start = random_noncommuting_set(e.ctx, rng)
            g = rng.choice(non_central)
            result = list(exchange_extend(e.ctx, start, g))
            expect(len(result) >= len(start), f"{e.spec}: exchange shrank {start} to {result}")
            expect(
                all(not group.commutes(a, b) for a, b in combinations(result, 2)),
                f"{e.spec}: exchange result {result} has a commuting pair",
            )
    return f"{len(entries)} AC groups: subgroups stay matroids and {EXCHANGE_TRIALS} exchanges each succeed"


CLAIMS: List[Tuple[int, Callable[[VerificationRun], ClaimOutcome]]] = [
    (0, claim_presentations),
    (1, claim_quaternion_omega),
    (2, claim_cc_theorem),
    (3, claim_pgroups),
    (4, claim_equivalence),
    (5, claim_counting_identity),
    (6, claim_non_matroid),
    (7, claim_dihedral),
    (8, claim_kregular),
    (9, claim_structural_lemmas),
    (10, claim_centralizer_cover),
    (11, claim_clique_oracle),
    (12, claim_chi),
    (13, claim_heredity_and_exchange),
]


# =============================================================================
# Running
# =============================================================================

def run_claim(number: int, claim: Callable[[VerificationRun], ClaimOutcome], run: VerificationRun) -> ClaimResult:
    """
    Execute a single claim with error isolation.

    Returns:
        ClaimResult with PASS, FAIL or SKIPPED
    """
    title = CLAIM_TITLES[number]
    start_time = time.time()
    records = None
    try:
        outcome = claim(run)
        detail, records = outcome if isinstance(outcome, tuple) else (outcome, None)
        status = PASS
    except ClaimSkipped as e:
        logger.info(f"Claim {number} ({title}) skipped: {e}")
        status, detail = SKIPPED, str(e)
    except ClaimFailed as e:
        logger.warning(f"Claim {number} ({title}) failed: {e}")
        status, detail = FAIL, str(e)
    except Exception as e:
        logger.error(f"Claim {number} ({title}) raised: {e}", exc_info=True)
        status, detail = FAIL, f"{type(e).__name__}: {e}"

    result = ClaimResult(number=number, title=title, status=status, detail=detail, records=records)
    if run.config.report_timing:
        result.execution_time_ms = round((time.time() - start_time) * 1000, 2)
    return result


async def run_verification(config: NcgraphConfig, fixtures: Sequence[str] = ()) -> Dict[str, Any]:
    """
    Run the whole verification suite.

    Args:
        config: Effective configuration (caps, seed, budgets)
        fixtures: Extra Cayley table files for the equivalence sweep

    Returns:
        Summary dict: passed/failed/skipped counts, seed, max_order,
        sweep_size and the per-claim results
    """
    run = VerificationRun(config, fixtures)
    await run.analyze_sweep()

    claims = [run_claim(number, claim, run) for number, claim in CLAIMS]
    summary = {
        "passed": sum(1 for c in claims if c.status == PASS),
        "failed": sum(1 for c in claims if c.status == FAIL),
        "skipped": sum(1 for c in claims if c.status == SKIPPED),
        "seed": config.seed,
        "max_order": config.max_order,
        "sweep_size": len(run.sweep),
        "claims": [c.to_dict() for c in claims],
    }
    logger.info(
        f"Verification finished: {summary['passed']} passed, {summary['failed']} failed, "
        f"{summary['skipped']} skipped"
    )
    return summary
