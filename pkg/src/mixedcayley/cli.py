"""Command-line front end: classify, spectrum, atoms, enumerate, verify.

Exit codes: 0 on success, 1 on malformed input, 2 when an exact
consistency check fails (a verdict disagreement or a sweep
counterexample), so CI can tell bad input from a falsified invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import IO

from .atoms import AtomDecomposition, atom_partition, eclass_of
from .cayley import ExactSpectrum, exact_spectrum, make_connection_set, to_dot
from .cyclo import CycloNum
from .groups import Element, GroupSpec, parse_group
from .integrality import (
    ClassificationReport,
    ConsistencyError,
    VerificationReport,
    classify,
    enumerate_hs_integral,
    verify_theorems,
)


class SetSpecError(ValueError):
    """Malformed connection-set string; carries the failing position."""

    def __init__(self, position: int, message: str):
        super().__init__(f"set spec error at position {position}: {message}")
        self.position = position


def parse_set(spec: str, group: GroupSpec, reduce_coords: bool = True) -> frozenset[Element]:
    """Parse "1,5" or "(0,1),(2,0)" into a reduced, deduplicated element set.

    Bare integers are accepted only for single-factor groups.  With
    ``reduce_coords`` off, out-of-range coordinates are rejected instead
    of being reduced.  The identity element is always rejected.
    """
    k = len(group.moduli)
    elements: set[Element] = set()
    i = 0
    n = len(spec)

    def skip_ws(j: int) -> int:
        while j < n and spec[j].isspace():
            j += 1
        return j

    def read_int(j: int) -> tuple[int, int]:
        j = skip_ws(j)
        start = j
        if j < n and spec[j] in "+-":
            j += 1
        while j < n and spec[j].isdigit():
            j += 1
        if j == start or not spec[start:j].lstrip("+-"):
            raise SetSpecError(start, "expected an integer")
        return int(spec[start:j]), j

    def make_element(coords: tuple[int, ...], at: int) -> Element:
        if len(coords) != k:
            raise SetSpecError(
                at, f"element has {len(coords)} coordinates, group needs {k}"
            )
        if not reduce_coords:
            for c, m in zip(coords, group.moduli):
                if not 0 <= c < m:
                    raise SetSpecError(at, f"coordinate {c} out of range [0, {m})")
        x = group.element(coords)
        if x == group.zero:
            raise SetSpecError(at, "the identity element cannot be a member")
        return x

    i = skip_ws(i)
    while i < n:
        start = i
        if spec[i] == "(":
            coords: list[int] = []
            i += 1
            while True:
                value, i = read_int(i)
                coords.append(value)
                i = skip_ws(i)
                if i < n and spec[i] == ",":
                    i += 1
                    continue
                if i < n and spec[i] == ")":
                    i += 1
                    break
                raise SetSpecError(i, "expected ',' or ')' inside element tuple")
            elements.add(make_element(tuple(coords), start))
        else:
            value, i = read_int(i)
            if k != 1:
                raise SetSpecError(
                    start, f"bare integers need a cyclic group, this one has {k} factors"
                )
            elements.add(make_element((value,), start))
        i = skip_ws(i)
        if i < n:
            if spec[i] != ",":
                raise SetSpecError(i, "expected ',' between elements")
            i += 1
            i = skip_ws(i)
            if i >= n:
                raise SetSpecError(i, "trailing comma")
    return frozenset(elements)


def format_element(x: Element, group: GroupSpec) -> str:
    if len(group.moduli) == 1:
        return str(x[0])
    return "(" + ",".join(str(c) for c in x) + ")"


def format_set(members, group: GroupSpec) -> str:
    return ",".join(format_element(x, group) for x in sorted(members))


def _rational_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def cyclo_to_json(z: CycloNum) -> dict:
    """Exact canonical coefficients plus a 12-place decimal approximation."""
    reduced = z.reduce()
    approx = reduced.to_complex()
    re = approx.real + 0.0
    im = approx.imag + 0.0
    return {
        "order": z.order,
        "coeffs": [_rational_str(c) for c in reduced.canonical_coeffs()],
        "approx": f"{re:.12f}{im:+.12f}i",
    }


def spectrum_to_json(spectrum: ExactSpectrum) -> list[dict]:
    return [
        {"alpha": list(alpha), "value": cyclo_to_json(value)}
        for alpha, value in spectrum.entries.items()
    ]


def decomposition_to_json(dec: AtomDecomposition | None) -> list[dict] | None:
    if dec is None:
        return None
    return [
        {"rep": list(rep), "members": [list(x) for x in sorted(cls)]}
        for rep, cls in zip(dec.representatives, dec.classes)
    ]


def classification_to_json(report: ClassificationReport) -> dict:
    g = report.group
    return {
        "group": g.spec_string(),
        "set": format_set(report.connection_set.members, g),
        "hs_integral": report.hs_verdict_spectral,
        "eisenstein_integral": report.eisenstein_verdict_spectral,
        "sym_atoms": decomposition_to_json(report.sym_decomposition),
        "skew_classes": decomposition_to_json(report.skew_decomposition),
        "hs_spectrum": spectrum_to_json(report.hs_spectrum),
        "a_spectrum": spectrum_to_json(report.a_spectrum),
        "consistent": report.consistency,
    }


def verification_to_json(report: VerificationReport) -> dict:
    return {
        "group": report.group.spec_string(),
        "subsets_tested": report.subsets_tested,
        "hs_integral_count": report.hs_integral_count,
        "counterexamples": list(report.counterexamples),
        "seed": report.seed,
    }


def _emit(text: str, out_path: str | None, stream: IO[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stream.write(text)


def _classification_text(report: ClassificationReport) -> str:
    g = report.group
    lines = [
        f"group {g.spec_string()}  set {{{format_set(report.connection_set.members, g)}}}",
        f"  symmetric part: {{{format_set(report.connection_set.sym_part, g)}}}",
        f"  skew part:      {{{format_set(report.connection_set.skew_part, g)}}}",
        f"  HS-integral (characterization): {report.hs_verdict_characterization}",
        f"  HS-integral (exact spectrum):   {report.hs_verdict_spectral}",
        f"  Eisenstein integral:            {report.eisenstein_verdict_spectral}",
        f"  consistent: {report.consistency}",
    ]
    return "\n".join(lines) + "\n"


def _run_classify(args, stdout: IO[str]) -> int:
    group = parse_group(args.group)
    members = parse_set(args.set or "", group, reduce_coords=not args.no_reduce)
    report = classify(group, members)
    if args.format == "dot":
        _emit(to_dot(report.connection_set), args.out, stdout)
    elif args.format == "text":
        _emit(_classification_text(report), args.out, stdout)
    else:
        _emit(
            json.dumps(classification_to_json(report), indent=2) + "\n",
            args.out,
            stdout,
        )
    return 0 if report.consistency else 2


def _run_spectrum(args, stdout: IO[str]) -> int:
    group = parse_group(args.group)
    members = parse_set(args.set or "", group, reduce_coords=not args.no_reduce)
    cs = make_connection_set(group, members)
    spectrum = exact_spectrum(cs, args.kind)
    if args.format == "text":
        lines = [
            f"{format_element(alpha, group)}  {cyclo_to_json(value)['approx']}"
            for alpha, value in spectrum.entries.items()
        ]
        _emit("\n".join(lines) + "\n", args.out, stdout)
    else:
        payload = {
            "group": group.spec_string(),
            "set": format_set(members, group),
            "kind": args.kind,
            "entries": spectrum_to_json(spectrum),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out, stdout)
    return 0


def _run_atoms(args, stdout: IO[str]) -> int:
    group = parse_group(args.group)
    listing = []
    for atom in atom_partition(group):
        rep = min(atom)
        entry = {
            "rep": list(rep),
            "members": [list(x) for x in sorted(atom)],
            "order": group.order_of(rep),
        }
        if rep != group.zero and group.order_of(rep) % 3 == 0:
            cls1 = eclass_of(group, rep)
            cls2 = eclass_of(group, group.neg(rep))
            entry["skew_classes"] = [
                {"rep": list(min(c)), "members": [list(x) for x in sorted(c)]}
                for c in sorted((cls1, cls2), key=min)
            ]
        listing.append(entry)
    payload = {"group": group.spec_string(), "atoms": listing}
    if args.format == "text":
        lines = []
        for entry in listing:
            members = ",".join(format_element(tuple(x), group) for x in entry["members"])
            lines.append(f"atom [{format_element(tuple(entry['rep']), group)}] = {{{members}}}")
            for cls in entry.get("skew_classes", []):
                cmembers = ",".join(format_element(tuple(x), group) for x in cls["members"])
                lines.append(f"  skew class <<{format_element(tuple(cls['rep']), group)}>> = {{{cmembers}}}")
        _emit("\n".join(lines) + "\n", args.out, stdout)
    else:
        _emit(json.dumps(payload, indent=2) + "\n", args.out, stdout)
    return 0


def _run_enumerate(args, stdout: IO[str]) -> int:
    group = parse_group(args.group)
    stream = enumerate_hs_integral(group, budget=args.budget)
    lines = []
    emitted = 0
    for cs in stream.sets:
        payload = {
            "spec": format_set(cs.members, group),
            "members": [list(x) for x in sorted(cs.members)],
        }
        lines.append(json.dumps(payload, separators=(",", ":")))
        emitted += 1
    if stream.truncated:
        lines.append(
            json.dumps(
                {"truncated": True, "emitted": emitted, "total": stream.total},
                separators=(",", ":"),
            )
        )
    _emit("\n".join(lines) + "\n", args.out, stdout)
    return 0


def _run_verify(args, stdout: IO[str]) -> int:
    group = parse_group(args.group)
    report = verify_theorems(group, budget=args.budget, seed=args.seed, jobs=args.jobs)
    _emit(json.dumps(verification_to_json(report), indent=2) + "\n", args.out, stdout)
    return 0 if not report.counterexamples else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedcayley",
        description="Exact spectra and integrality classification of mixed Cayley graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_set: bool):
        p.add_argument("--group", required=True, help="group spec, e.g. 12 or 3x3")
        if with_set:
            p.add_argument("--set", default="", help="connection set, e.g. '(0,1),(2,0)' or '1,5'")
            p.add_argument(
                "--no-reduce",
                action="store_true",
                help="reject out-of-range coordinates instead of reducing them",
            )
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")

    p = sub.add_parser("classify", help="run all integrality routes on one set")
    add_common(p, with_set=True)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")

    p = sub.add_parser("spectrum", help="exact eigenvalues of one matrix kind")
    add_common(p, with_set=True)
    p.add_argument(
        "--kind",
        choices=("hs", "adjacency", "simple_part", "skew_part"),
        default="hs",
    )
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("atoms", help="list atoms and skew classes of a group")
    add_common(p, with_set=False)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("enumerate", help="stream all HS-integral connection sets")
    add_common(p, with_set=False)
    p.add_argument("--budget", type=int, default=None, help="cap on emitted sets")

    p = sub.add_parser("verify", help="sweep subsets and check route agreement")
    add_common(p, with_set=False)
    p.add_argument("--budget", type=int, default=4096, help="max subsets to test")
    p.add_argument("--seed", type=int, default=0, help="sampling seed when not exhaustive")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")

    return parser


_HANDLERS = {
    "classify": _run_classify,
    "spectrum": _run_spectrum,
    "atoms": _run_atoms,
    "enumerate": _run_enumerate,
    "verify": _run_verify,
}


def run(argv=None, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args, stdout)
    except (ValueError, SetSpecError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except ConsistencyError as exc:
        stderr.write(f"consistency violation: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
