"""Integrality classification of mixed Cayley graphs.

Three independent routes are computed for every input and must agree:
the set-theoretic characterization (symmetric part a union of atoms,
skew part a union of skew classes), the exact HS spectrum (every
eigenvalue a rational integer), and the exact adjacency spectrum (every
eigenvalue an Eisenstein integer).  Disagreement means a bug or a broken
theorem and is surfaced loudly, never papered over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .atoms import (
    AtomDecomposition,
    atom_of,
    atom_partition,
    eclass_of,
    in_boolean_algebra,
    in_skew_family,
)
from .cayley import (
    ConnectionSet,
    ExactSpectrum,
    exact_spectrum,
    make_connection_set,
)
from .cyclo import CycloNum, as_eisenstein, as_integer, reduce_root_counts
from .groups import Element, GroupSpec, make_group

_THIRD = Fraction(1, 3)


class ConsistencyError(RuntimeError):
    """An exact identity that must always hold failed; do not trust results."""


@dataclass(frozen=True)
class CertificateValues:
    """Exact certificate sums attached to one skew class and character.

    ``hs_sum`` is the sixth-root weighted sum over the skew class of x,
    ``atom_sum`` the plain character sum over the atom of x, and
    ``imbalance`` the i*sqrt(3)-weighted forward/backward difference over
    the skew class.  They satisfy 2*hs_sum = atom_sum + imbalance, all
    three are integers, 3 divides the imbalance, and atom_sum has the
    parity of imbalance/3.
    """

    x: Element
    alpha: Element
    hs_sum: CycloNum
    atom_sum: CycloNum
    imbalance: CycloNum
    imbalance_div3: int | None
    parity_ok: bool


def atom_character_sum(group: GroupSpec, x: Element, alpha: Element) -> CycloNum:
    """Character sum over the atom of x (an adjacency eigenvalue of that atom)."""
    n = group.root_order
    counts = [0] * n
    for s in atom_of(group, x):
        counts[group.character_exponent(alpha, s)] += 1
    return reduce_root_counts(n, counts)


def certificate(group: GroupSpec, x: Element, alpha: Element) -> CertificateValues:
    """Compute and validate the certificate sums for x and alpha.

    Raises ConsistencyError if any of the always-true integrality or
    divisibility facts fails, since that would falsify the machinery every
    verdict rests on.
    """
    m = group.order_of(x)
    if m % 3 != 0:
        raise ValueError(f"element {x} has order {m}, not divisible by 3")
    n = group.root_order
    q6 = n // 6
    hs_counts = [0] * n
    imb_counts = [0] * n
    for s in eclass_of(group, x):
        es = group.character_exponent(alpha, s)
        em = group.character_exponent(alpha, group.neg(s))
        hs_counts[(q6 + es) % n] += 1
        hs_counts[(5 * q6 + em) % n] += 1
        # i*sqrt(3) = w6 - w6^5 applied to psi(s) - psi(-s)
        imb_counts[(q6 + es) % n] += 1
        imb_counts[(5 * q6 + es) % n] -= 1
        imb_counts[(q6 + em) % n] -= 1
        imb_counts[(5 * q6 + em) % n] += 1
    hs_sum = reduce_root_counts(n, hs_counts)
    imbalance = reduce_root_counts(n, imb_counts)
    atom_sum = atom_character_sum(group, x, alpha)

    z = as_integer(hs_sum)
    c = as_integer(atom_sum)
    t = as_integer(imbalance)
    if z is None or c is None or t is None:
        raise ConsistencyError(
            f"certificate sums not all integral for x={x}, alpha={alpha}: "
            f"hs={hs_sum!r} atom={atom_sum!r} imbalance={imbalance!r}"
        )
    if 2 * z != c + t:
        raise ConsistencyError(
            f"certificate identity 2Z = C + T failed for x={x}, alpha={alpha}"
        )
    if not (2 * hs_sum - atom_sum - imbalance).is_zero():
        raise ConsistencyError(
            f"exact certificate identity failed for x={x}, alpha={alpha}"
        )
    if t % 3 != 0:
        raise ConsistencyError(
            f"imbalance {t} not divisible by 3 for x={x}, alpha={alpha}"
        )
    return CertificateValues(
        x=x,
        alpha=alpha,
        hs_sum=hs_sum,
        atom_sum=atom_sum,
        imbalance=imbalance,
        imbalance_div3=t // 3,
        parity_ok=(c - t // 3) % 2 == 0,
    )


def eisenstein_components(cs: ConnectionSet, alpha: Element) -> tuple[CycloNum, CycloNum]:
    """The real pair (f, g) whose integrality decides Eisenstein integrality.

    f is the symmetric-part character sum; g weights the skew part with
    (1 + w6^5)/3 forward and (1 + w6)/3 backward.  The adjacency
    eigenvalue equals f + g + w3*(g(alpha) - g(-alpha)).
    """
    g = cs.group
    n = g.root_order
    q6 = n // 6
    f_counts = [0] * n
    g_counts = [0] * n
    for s in cs.sym_part:
        f_counts[g.character_exponent(alpha, s)] += 1
    for s in cs.skew_part:
        es = g.character_exponent(alpha, s)
        em = g.character_exponent(alpha, g.neg(s))
        g_counts[es] += 1
        g_counts[(5 * q6 + es) % n] += 1
        g_counts[em] += 1
        g_counts[(q6 + em) % n] += 1
    f_val = reduce_root_counts(n, f_counts)
    g_val = (reduce_root_counts(n, g_counts) * _THIRD).reduce()
    return f_val, g_val


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts, decompositions and exact spectra for one connection set."""

    group: GroupSpec
    connection_set: ConnectionSet
    sym_decomposition: AtomDecomposition | None
    skew_decomposition: AtomDecomposition | None
    hs_verdict_characterization: bool
    hs_verdict_spectral: bool
    eisenstein_verdict_spectral: bool
    hs_spectrum: ExactSpectrum
    a_spectrum: ExactSpectrum
    consistency: bool


@dataclass(frozen=True)
class _SubsetFlags:
    hs_char: bool
    hs_spectral: bool
    eisenstein: bool
    sym_integral: bool
    skew_hs_integral: bool

    def consistent(self) -> bool:
        return self.hs_char == self.hs_spectral == self.eisenstein

    def split_consistent(self) -> bool:
        return self.hs_spectral == (self.sym_integral and self.skew_hs_integral)


def _subset_flags(
    cs: ConnectionSet,
    simple: ExactSpectrum,
    skew: ExactSpectrum,
    adjacency: ExactSpectrum,
) -> _SubsetFlags:
    g = cs.group
    sym_ok = in_boolean_algebra(g, cs.sym_part) is not None
    skew_ok = in_skew_family(g, cs.skew_part) is not None
    sym_integral = all(as_integer(v) is not None for v in simple.entries.values())
    skew_integral = all(as_integer(v) is not None for v in skew.entries.values())
    hs_spectral = all(
        as_integer(simple.entries[a] + skew.entries[a]) is not None
        for a in g.elements
    )
    eis = all(as_eisenstein(v) is not None for v in adjacency.entries.values())
    return _SubsetFlags(
        hs_char=sym_ok and skew_ok,
        hs_spectral=hs_spectral,
        eisenstein=eis,
        sym_integral=sym_integral,
        skew_hs_integral=skew_integral,
    )


def classify(group: GroupSpec, members) -> ClassificationReport:
    """Run all three integrality routes on one connection set."""
    cs = make_connection_set(group, members)
    simple = exact_spectrum(cs, "simple_part")
    skew = exact_spectrum(cs, "skew_part")
    adjacency = exact_spectrum(cs, "adjacency")
    hs = ExactSpectrum(
        kind="hs",
        entries={
            a: simple.entries[a] + skew.entries[a] for a in group.elements
        },
    )
    flags = _subset_flags(cs, simple, skew, adjacency)
    return ClassificationReport(
        group=group,
        connection_set=cs,
        sym_decomposition=in_boolean_algebra(group, cs.sym_part),
        skew_decomposition=in_skew_family(group, cs.skew_part),
        hs_verdict_characterization=flags.hs_char,
        hs_verdict_spectral=flags.hs_spectral,
        eisenstein_verdict_spectral=flags.eisenstein,
        hs_spectrum=hs,
        a_spectrum=adjacency,
        consistency=flags.consistent(),
    )


@dataclass(frozen=True)
class EnumerationStream:
    """Lazy stream of HS-integral connection sets with a truncation marker."""

    group: GroupSpec
    total: int
    truncated: bool
    sets: Iterator[ConnectionSet]


def _atom_choices(group: GroupSpec) -> list[list[frozenset[Element]]]:
    """Per-atom options: skip it, take it whole, or take one skew class."""
    choices: list[list[frozenset[Element]]] = []
    for atom in atom_partition(group):
        rep = min(atom)
        if rep == group.zero:
            continue
        if group.order_of(rep) % 3 == 0:
            choices.append(
                [
                    frozenset(),
                    atom,
                    eclass_of(group, rep),
                    eclass_of(group, group.neg(rep)),
                ]
            )
        else:
            choices.append([frozenset(), atom])
    return choices


def enumerate_hs_integral(
    group: GroupSpec, budget: int | None = None
) -> EnumerationStream:
    """Generate exactly the HS-integral connection sets, constructively.

    Every HS-integral set picks, within each atom, either nothing, the
    whole atom, or (when the atom order is divisible by 3) one of its two
    skew classes; the stream walks those choices in a fixed order, so runs
    are reproducible.  ``budget`` caps the number of emitted sets, with
    the overflow flagged rather than silently dropped.
    """
    choices = _atom_choices(group)
    total = 1
    for c in choices:
        total *= len(c)
    truncated = budget is not None and total > budget

    def generate() -> Iterator[ConnectionSet]:
        emitted = 0
        for picks in product(*choices):
            if truncated and emitted >= budget:
                return
            members: frozenset[Element] = frozenset().union(*picks) if picks else frozenset()
            emitted += 1
            yield make_connection_set(group, members)

    return EnumerationStream(
        group=group, total=total, truncated=truncated, sets=generate()
    )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive or sampled sweep over connection sets."""

    group: GroupSpec
    subsets_tested: int
    hs_integral_count: int
    counterexamples: tuple[dict, ...]
    seed: int
    exhaustive: bool


def _format_members(members) -> list[list[int]]:
    return [list(x) for x in sorted(members)]


def _subset_from_mask(nonzero: tuple[Element, ...], mask: int) -> frozenset[Element]:
    return frozenset(x for i, x in enumerate(nonzero) if mask >> i & 1)


def _check_masks(
    moduli: tuple[int, ...], masks: list[int]
) -> tuple[int, list[dict]]:
    """Worker: classify each masked subset, return HS count and failures."""
    group = make_group(moduli)
    nonzero = tuple(x for x in group.elements if x != group.zero)
    hs_count = 0
    bad: list[dict] = []
    for mask in masks:
        members = _subset_from_mask(nonzero, mask)
        cs = make_connection_set(group, members)
        flags = _subset_flags(
            cs,
            exact_spectrum(cs, "simple_part"),
            exact_spectrum(cs, "skew_part"),
            exact_spectrum(cs, "adjacency"),
        )
        if flags.hs_spectral:
            hs_count += 1
        if not (flags.consistent() and flags.split_consistent()):
            bad.append(
                {
                    "kind": "subset",
                    "set": _format_members(members),
                    "hs_characterization": flags.hs_char,
                    "hs_spectral": flags.hs_spectral,
                    "eisenstein_spectral": flags.eisenstein,
                    "sym_part_integral": flags.sym_integral,
                    "skew_part_hs_integral": flags.skew_hs_integral,
                }
            )
    return hs_count, bad


def _certificate_counterexamples(group: GroupSpec) -> list[dict]:
    bad: list[dict] = []
    for x in sorted(group.gamma3()):
        for alpha in group.elements:
            try:
                cert = certificate(group, x, alpha)
            except ConsistencyError as exc:
                bad.append(
                    {"kind": "certificate", "x": list(x), "alpha": list(alpha), "error": str(exc)}
                )
                continue
            if not cert.parity_ok:
                bad.append(
                    {
                        "kind": "certificate",
                        "x": list(x),
                        "alpha": list(alpha),
                        "error": "atom sum and imbalance/3 have different parity",
                    }
                )
    return bad


def verify_theorems(
    group: GroupSpec,
    budget: int | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> VerificationReport:
    """Sweep connection sets and check that all integrality routes agree.

    Checks per subset: characterization == HS spectral == Eisenstein
    spectral, and HS spectral == (symmetric part integral and skew part
    HS-integral).  On top of the sweep, every certificate identity is
    checked once per group.  Exhaustive when 2^(n-1) fits in the budget,
    otherwise a seeded uniform sample of ``budget`` subsets.
    """
    nonzero = tuple(x for x in group.elements if x != group.zero)
    total = 1 << len(nonzero)
    exhaustive = budget is None or total <= budget
    if exhaustive:
        masks = list(range(total))
    else:
        rng = random.Random(seed)
        seen: set[int] = set()
        masks = []
        while len(masks) < budget:
            m = rng.getrandbits(len(nonzero)) if nonzero else 0
            if m not in seen:
                seen.add(m)
                masks.append(m)

    if jobs > 1 and len(masks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunk = max(1, (len(masks) + jobs - 1) // jobs)
        chunks = [masks[i : i + chunk] for i in range(0, len(masks), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_check_masks, [group.moduli] * len(chunks), chunks)
            )
    else:
        results = [_check_masks(group.moduli, masks)]

    hs_count = sum(r[0] for r in results)
    counterexamples: list[dict] = []
    for _, bad in results:
        counterexamples.extend(bad)
    counterexamples.extend(_certificate_counterexamples(group))
    return VerificationReport(
        group=group,
        subsets_tested=len(masks),
        hs_integral_count=hs_count,
        counterexamples=tuple(counterexamples),
        seed=seed,
        exhaustive=exhaustive,
    )
