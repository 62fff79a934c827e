"""Command-line interface: one subcommand per verification task.

Every subcommand emits a machine-readable report (json, csv, or text) and
exits 0 when all claims checked out, 1 when a claim was falsified, 2 on
usage or input errors, and 3 when a search budget ran out before a proof.
Reports never contain wall-clock data, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable

from .core import (
    Matching,
    Parameters,
    all_edges,
    chi,
    make_edge,
    phi,
    star_family,
)
from .baranyai import (
    Permutation,
    all_permutations,
    baranyai_edge,
    cyclic_order,
    rooted_order,
    sample_permutations,
    shift,
    verify_goodness,
)
from .katona import q_bruteforce, q_formula, verify_double_count
from .ekr_search import (
    STATUS_PROVEN,
    SearchBudget,
    is_star,
    max_intersecting,
)
from .kneser import (
    HamPowerCertificate,
    certificate_from_json,
    ham_power_certificate,
    kneser_graph,
    verify_ham_power,
)
from .transposition_lab import (
    center_map,
    composition_identity,
    reflect_swap,
    transpose_adjacent,
)

__all__ = ["RunConfig", "dispatch", "emit_report", "main"]

EXIT_PASS = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_SEED = 1729
DEFAULT_LIMIT = 10
DEFAULT_MAX_NODES = 50_000_000
DEFAULT_MAX_SECONDS = 600.0
# auto sampling modes exhaust S_{2n} only up to this many points
EXHAUSTIVE_CUTOFF = 8

FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    """Parsed invocation: subcommand, instance sizes, limits, output options."""

    command: str
    n: int | None = None
    r: int | None = None
    sigma: str | None = None
    c: int | None = None
    j: int | None = None
    edge: str | None = None
    k: int | None = None
    pairs: str | None = None
    cert: str | None = None
    samples: int | None = None
    limit_perms: int = DEFAULT_LIMIT
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS
    enumerate_max: bool = False
    format: str = "json"
    out: str | None = None
    jobs: int = 1
    seed: int = DEFAULT_SEED

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        values = {k: v for k, v in vars(namespace).items() if k in known}
        return cls(**values)


@dataclass
class CommandResult:
    payload: dict[str, Any]
    checks: dict[str, bool]
    budget_exhausted: bool = False
    bare_payload: bool = False


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected an edge as 'a,b', got {text!r}")
    try:
        u, v = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"edge endpoints must be integers, got {text!r}") from None
    return make_edge(u, v)


def _parse_sigma(text: str, two_n: int) -> Permutation:
    try:
        images = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"sigma must be a comma-separated image list, got {text!r}") from None
    if len(images) != two_n:
        raise ValueError(f"sigma has {len(images)} images, expected 2n = {two_n}")
    return Permutation(images)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        parts = chunk.split(":")
        if len(parts) != 2:
            raise ValueError(f"expected 'n:r' pairs, got {chunk!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"pair entries must be integers, got {chunk!r}") from None
    if not pairs:
        raise ValueError("empty instance list")
    return pairs


def _require_n(config: RunConfig) -> int:
    if config.n is None:
        raise ValueError("this subcommand requires --n")
    if config.n < 1:
        raise ValueError(f"n must be a positive integer, got {config.n}")
    return config.n


def _sigma_or_identity(config: RunConfig, two_n: int) -> Permutation:
    if config.sigma is None:
        return Permutation.identity(two_n)
    return _parse_sigma(config.sigma, two_n)


def _instances(config: RunConfig) -> list[tuple[int, int]]:
    if config.pairs is not None:
        return _parse_pairs(config.pairs)
    if config.n is None or config.r is None:
        raise ValueError("this subcommand requires --n and --r (or --pairs)")
    return [(config.n, config.r)]


def _sigma_sample(config: RunConfig, two_n: int, auto_samples: int) -> tuple[list[Permutation], str]:
    """Permutations to sweep plus a label: a given sigma, all of S_{2n}, or a sample."""
    if config.sigma is not None:
        return [_parse_sigma(config.sigma, two_n)], "given"
    samples = config.samples
    if samples is None:
        samples = 0 if two_n <= EXHAUSTIVE_CUTOFF else auto_samples
    if samples == 0:
        if two_n > config.limit_perms:
            raise ValueError(
                f"exhaustive sweep with 2n = {two_n} exceeds --limit-perms {config.limit_perms}; "
                "pass --samples to sample instead"
            )
        return list(all_permutations(two_n)), "exhaustive"
    if samples < 0:
        raise ValueError(f"--samples must be nonnegative, got {samples}")
    return sample_permutations(two_n, samples, config.seed), "sampled"


def _edge_json(edge: tuple[int, int]) -> list[int]:
    return [edge[0], edge[1]]


def _matching_json(matching: Matching) -> list[list[int]]:
    return [_edge_json(e) for e in matching.edges]


def _family_json(members) -> list[list[list[int]]]:
    return [_matching_json(m) for m in members]


def _cmd_construct(config: RunConfig) -> CommandResult:
    n = _require_n(config)
    sigma = _sigma_or_identity(config, 2 * n)
    if config.c is not None:
        sigma = shift(sigma, config.c)
    order = rooted_order(sigma)
    psi = cyclic_order(sigma)
    covered = [e for part in order.parts for e in part]
    partitioned = len(set(covered)) == len(covered) == len(all_edges(n))
    payload = {
        "command": "construct",
        "n": n,
        "sigma": list(sigma.images),
        "root": order.root,
        "parts": [[_edge_json(e) for e in part] for part in order.parts],
        "cyclic_order": [_edge_json(e) for e in psi.sequence],
    }
    return CommandResult(payload, {"parts_partition_edge_set": partitioned})


def _cmd_verify_goodness(config: RunConfig) -> CommandResult:
    n = _require_n(config)
    sigmas, mode = _sigma_sample(config, 2 * n, auto_samples=1000)
    report = verify_goodness(n, sigmas, r=config.r)
    payload = {
        "command": "verify-goodness",
        "n": n,
        "r": report.r,
        "mode": mode,
        "seed": config.seed if mode == "sampled" else None,
        "permutations_checked": report.permutations_checked,
        "intervals_checked": report.intervals_checked,
        "counterexamples": [
            {"sigma": list(images), "position": position}
            for images, position in report.counterexamples
        ],
    }
    return CommandResult(payload, {"all_intervals_are_matchings": report.passed})


def _first_matching(r: int) -> Matching:
    return Matching.from_edges((2 * t + 1, 2 * t + 2) for t in range(r))


def _count_instance(n: int, r: int, config: RunConfig) -> tuple[dict[str, Any], dict[str, bool]]:
    params = Parameters(n, r)
    chi_value = chi(params)
    phi_value = phi(params)
    row: dict[str, Any] = {"n": n, "r": r, "chi": chi_value, "phi": phi_value}
    checks = {"phi_identity": phi_value * (n * (2 * n - 1)) == r * chi_value}
    if r <= n - 1:
        count = q_formula(params)
        row["q_formula"] = count.formula_value
        row["q_split"] = list(count.split)
        if 2 * n <= config.limit_perms:
            oracle = q_bruteforce(_first_matching(r), params, limit=config.limit_perms, jobs=config.jobs)
            row["q_oracle"] = oracle
            checks["q_formula_matches_oracle"] = oracle == count.formula_value
        else:
            row["q_oracle"] = None
    else:
        row["q_formula"] = None
        row["q_split"] = None
        row["q_oracle"] = None
    return row, checks


def _cmd_count(config: RunConfig) -> CommandResult:
    instances = _instances(config)
    if len(instances) == 1:
        n, r = instances[0]
        row, checks = _count_instance(n, r, config)
        return CommandResult({"command": "count", **row}, checks)
    rows = []
    checks: dict[str, bool] = {}
    for n, r in instances:
        row, row_checks = _count_instance(n, r, config)
        rows.append(row)
        for name, ok in row_checks.items():
            checks[f"{name}_n{n}_r{r}"] = ok
    return CommandResult({"command": "count", "instances": rows}, checks)


def _cmd_double_count(config: RunConfig) -> CommandResult:
    n = _require_n(config)
    if config.r is None:
        raise ValueError("this subcommand requires --r")
    params = Parameters(n, config.r)
    edge = _parse_edge(config.edge) if config.edge else (1, 2)
    family = star_family(params, edge)
    report = verify_double_count(
        family, params, sweep=2 * n <= config.limit_perms, limit=config.limit_perms
    )
    payload = {
        "command": "double-count",
        "n": n,
        "r": config.r,
        "edge": _edge_json(edge),
        "family_size": report.family_size,
        "q_value": report.q_value,
        "weighted_count": report.weighted_count,
        "bound": report.bound,
        "tight": report.tight,
        "sweep_total": report.sweep_total,
        "sweep_max_trace": report.sweep_max_trace,
    }
    checks = {"bound_holds": report.bound_holds}
    if report.sweep_total is not None:
        checks["sweep_sum_matches"] = bool(report.sweep_matches)
        checks["trace_sizes_bounded"] = bool(report.katona_bound_ok)
        checks["member_counts_match_formula"] = bool(report.member_counts_match)
    return CommandResult(payload, checks)


def _search_instance(
    n: int, r: int, budget: SearchBudget
) -> tuple[dict[str, Any], dict[str, bool], bool]:
    params = Parameters(n, r)
    report = max_intersecting(params, budget)
    row: dict[str, Any] = {
        "n": n,
        "r": r,
        "chi": chi(params),
        "phi": report.phi_value,
        "max": report.max_size,
        "status": report.status,
        "witness": _family_json(report.witnesses[0].members),
        "maximum_families": report.maximum_family_count,
        "all_stars": report.all_maximum_are_stars,
    }
    checks: dict[str, bool] = {}
    if report.max_size > report.phi_value:
        # a verified intersecting family beats the star bound: falsified
        checks["no_family_beats_star_bound"] = False
    if report.proven:
        checks["max_equals_phi"] = report.max_size == report.phi_value
    if report.maximum_family_count is not None:
        centers = [is_star(fam) for fam in report.witnesses]
        row["centers"] = sorted(_edge_json(c) for c in centers if c is not None)
        checks["all_maximum_are_stars"] = bool(report.all_maximum_are_stars)
        checks["one_maximum_family_per_edge"] = (
            report.maximum_family_count == report.expected_maximum_count
        )
    return row, checks, report.status != STATUS_PROVEN


def _cmd_ekr_search(config: RunConfig) -> CommandResult:
    budget = SearchBudget(
        max_nodes=config.max_nodes,
        max_seconds=config.max_seconds,
        enumerate_all_maximum=config.enumerate_max,
    )
    instances = _instances(config)
    exhausted = False
    if len(instances) == 1:
        n, r = instances[0]
        row, checks, ran_out = _search_instance(n, r, budget)
        return CommandResult({"command": "ekr-search", **row}, checks, budget_exhausted=ran_out)
    rows = []
    checks = {}
    for n, r in instances:
        row, row_checks, ran_out = _search_instance(n, r, budget)
        exhausted = exhausted or ran_out
        rows.append(row)
        for name, ok in row_checks.items():
            checks[f"{name}_n{n}_r{r}"] = ok
    return CommandResult(
        {"command": "ekr-search", "instances": rows}, checks, budget_exhausted=exhausted
    )


def _cmd_center_map(config: RunConfig) -> CommandResult:
    n = _require_n(config)
    if config.r is None:
        raise ValueError("this subcommand requires --r")
    params = Parameters(n, config.r)
    edge = _parse_edge(config.edge) if config.edge else (1, 2)
    family = star_family(params, edge)
    result = center_map(family, params, limit=config.limit_perms)
    payload = {
        "command": "center-map",
        "n": n,
        "r": config.r,
        "edge": _edge_json(edge),
        "permutations": result.total,
        "saturated": len(result.entries),
        "violation_count": result.violation_count,
        "center": _edge_json(result.constant_edge) if result.constant_edge else None,
        "violations": [
            {"sigma": list(v.images), "reason": v.reason, "trace_size": v.trace_size}
            for v in result.violations
        ],
    }
    checks = {
        "every_permutation_saturated": result.violation_count == 0,
        "center_map_constant": result.is_constant,
        "center_is_star_edge": result.constant_edge == edge,
    }
    return CommandResult(payload, checks)


def _cmd_lemma_identities(config: RunConfig) -> CommandResult:
    n = _require_n(config)
    two_n = 2 * n
    if n < 2:
        raise ValueError("swap identities need n >= 2")
    sigmas, mode = _sigma_sample(config, two_n, auto_samples=200)
    adjacent_range = range(1, two_n)
    reflect_range = range(1, n)
    composition_range = range(n + 1, 2 * n - 2)
    if config.j is not None:
        j = config.j
        in_any = j in adjacent_range or j in reflect_range or j in composition_range
        if not in_any:
            raise ValueError(f"--j {j} is outside every identity's index range for n={n}")
        adjacent_range = [j] if j in adjacent_range else []
        reflect_range = [j] if j in reflect_range else []
        composition_range = [j] if j in composition_range else []
    failures: list[dict[str, Any]] = []
    counts = {name: 0 for name in (
        "adjacent_involution",
        "reflection_involution",
        "boundary_coincidence",
        "last_part_preserved",
        "composition",
    )}

    def record(name: str, sigma: Permutation, j: int | None) -> None:
        if len(failures) < 10:
            failures.append({"identity": name, "sigma": list(sigma.images), "j": j})

    ok = {name: True for name in counts}
    for sigma in sigmas:
        for j in adjacent_range:
            counts["adjacent_involution"] += 1
            if transpose_adjacent(transpose_adjacent(sigma, j), j) != sigma:
                ok["adjacent_involution"] = False
                record("adjacent_involution", sigma, j)
        for j in reflect_range:
            counts["reflection_involution"] += 1
            if reflect_swap(reflect_swap(sigma, j), j) != sigma:
                ok["reflection_involution"] = False
                record("reflection_involution", sigma, j)
        if config.j is None or config.j == n - 1:
            counts["boundary_coincidence"] += 1
            if transpose_adjacent(sigma, n - 1) != reflect_swap(sigma, n - 1):
                ok["boundary_coincidence"] = False
                record("boundary_coincidence", sigma, n - 1)
        last = two_n - 1
        for j in reflect_range:
            counts["last_part_preserved"] += 1
            swapped = reflect_swap(sigma, j)
            for k in range(n):
                if baranyai_edge(swapped, last, k) != baranyai_edge(sigma, last, k):
                    ok["last_part_preserved"] = False
                    record("last_part_preserved", sigma, j)
                    break
        for j in composition_range:
            counts["composition"] += 1
            if not composition_identity(sigma, j):
                ok["composition"] = False
                record("composition", sigma, j)
    payload = {
        "command": "lemma-identities",
        "n": n,
        "mode": mode,
        "seed": config.seed if mode == "sampled" else None,
        "permutations_checked": len(sigmas),
        "checks_run": counts,
        "failures": failures,
    }
    checks = {name: ok[name] for name, ran in counts.items() if ran}
    return CommandResult(payload, checks)


def _certificate_for(config: RunConfig) -> HamPowerCertificate:
    n = _require_n(config)
    sigma = _sigma_or_identity(config, 2 * n) if config.sigma else None
    certificate = ham_power_certificate(n, sigma)
    if config.k is not None:
        certificate = HamPowerCertificate(m=certificate.m, k=config.k, order=certificate.order)
    return certificate


def _cmd_kneser_cert(config: RunConfig) -> CommandResult:
    certificate = _certificate_for(config)
    payload = {
        "m": certificate.m,
        "k": certificate.k,
        "order": [_edge_json(v) for v in certificate.order],
    }
    return CommandResult(payload, {}, bare_payload=True)


def _cmd_kneser_verify(config: RunConfig) -> CommandResult:
    if config.cert is not None:
        if config.cert == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(config.cert, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise ValueError(f"cannot read certificate {config.cert!r}: {exc}") from exc
        certificate = certificate_from_json(text)
    else:
        certificate = _certificate_for(config)
    graph = kneser_graph(certificate.m)
    valid = verify_ham_power(graph, certificate)
    payload = {
        "command": "kneser-verify",
        "m": certificate.m,
        "k": certificate.k,
        "vertices": len(certificate.order),
        "valid": valid,
    }
    return CommandResult(payload, {"power_certified": valid})


HANDLERS: dict[str, Callable[[RunConfig], CommandResult]] = {
    "construct": _cmd_construct,
    "verify-goodness": _cmd_verify_goodness,
    "count": _cmd_count,
    "double-count": _cmd_double_count,
    "ekr-search": _cmd_ekr_search,
    "center-map": _cmd_center_map,
    "lemma-identities": _cmd_lemma_identities,
    "kneser-cert": _cmd_kneser_cert,
    "kneser-verify": _cmd_kneser_verify,
}


def _flatten_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def _csv_text(payload: dict[str, Any]) -> str:
    rows = payload.get("instances")
    if not isinstance(rows, list):
        rows = [{k: v for k, v in payload.items() if k not in ("checks",)}]
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _flatten_cell(row.get(key)) for key in columns})
    return buffer.getvalue()


def _text_lines(payload: dict[str, Any]) -> list[str]:
    lines: list[str] = []

    def render(prefix: str, mapping: dict[str, Any]) -> None:
        for key, value in mapping.items():
            if key in ("checks", "passed"):
                continue
            if key == "instances" and isinstance(value, list):
                for row in value:
                    lines.append(f"instance n={row.get('n')} r={row.get('r')}")
                    render("  ", {k: v for k, v in row.items() if k not in ("n", "r")})
                continue
            if isinstance(value, (list, dict)):
                rendered = json.dumps(value, separators=(",", ":"))
                if len(rendered) > 120:
                    rendered = rendered[:117] + "..."
                lines.append(f"{prefix}{key} = {rendered}")
            else:
                lines.append(f"{prefix}{key} = {value}")

    render("", payload)
    for name, passed in payload.get("checks", {}).items():
        lines.append(f"{'PASS' if passed else 'FAIL'}: {name}")
    if "passed" in payload:
        lines.append(f"RESULT: {'PASS' if payload['passed'] else 'FAIL'}")
    return lines


def emit_report(payload: dict[str, Any], fmt: str, out: str | None) -> None:
    """Serialize a report deterministically and write it to out or stdout."""
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        text = _csv_text(payload)
    elif fmt == "text":
        text = "\n".join(_text_lines(payload)) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def dispatch(config: RunConfig) -> tuple[int, dict[str, Any]]:
    """Run one subcommand; returns (exit code, report payload)."""
    if config.format not in FORMATS:
        raise ValueError(f"unknown format {config.format!r}")
    handler = HANDLERS.get(config.command)
    if handler is None:
        raise ValueError(f"unknown subcommand {config.command!r}")
    result = handler(config)
    payload = result.payload
    if not result.bare_payload:
        payload["checks"] = result.checks
        payload["passed"] = all(result.checks.values())
    if result.checks and not all(result.checks.values()):
        code = EXIT_FALSIFIED
    elif result.budget_exhausted:
        code = EXIT_BUDGET
    else:
        code = EXIT_PASS
    return code, payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekr-matchings",
        description="Construct and verify intersecting families of matchings in K_{2n}.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_output(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--format", choices=FORMATS, default="json", help="report format")
        sub.add_argument("--out", default=None, help="write the report to this file")

    def add_instance(sub: argparse.ArgumentParser, with_r: bool = True) -> None:
        sub.add_argument("--n", type=int, default=None, help="half the number of vertices")
        if with_r:
            sub.add_argument("--r", type=int, default=None, help="edges per matching")

    sub = subparsers.add_parser("construct", help="rotational partition and cyclic edge order")
    add_instance(sub, with_r=False)
    sub.add_argument("--sigma", default=None, help="comma-separated images, default identity")
    sub.add_argument("--c", type=int, default=None, help="rotate the polygon positions by c first")
    add_output(sub)

    sub = subparsers.add_parser(
        "verify-goodness", help="check that short cyclic-order intervals are matchings"
    )
    add_instance(sub, with_r=False)
    sub.add_argument("--r", type=int, default=None, help="interval length, default n-1")
    sub.add_argument("--sigma", default=None, help="check a single permutation")
    sub.add_argument(
        "--samples",
        type=int,
        default=None,
        help="random permutations to check; 0 forces the exhaustive sweep (auto by size)",
    )
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    sub.add_argument("--limit-perms", type=int, default=DEFAULT_LIMIT, dest="limit_perms",
                     help="largest 2n allowed for exhaustive sweeps")
    add_output(sub)

    sub = subparsers.add_parser("count", help="matching counts and the compatibility constant")
    add_instance(sub)
    sub.add_argument("--pairs", default=None, help="sweep instances, e.g. '2:1,3:1,3:2'")
    sub.add_argument("--limit-perms", type=int, default=DEFAULT_LIMIT, dest="limit_perms",
                     help="largest 2n for the brute-force oracle")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes for the oracle sweep")
    add_output(sub)

    sub = subparsers.add_parser(
        "double-count", help="the counting bound for a star family, with exhaustive sweep"
    )
    add_instance(sub)
    sub.add_argument("--edge", default=None, help="star edge as 'a,b', default 1,2")
    sub.add_argument("--limit-perms", type=int, default=DEFAULT_LIMIT, dest="limit_perms",
                     help="largest 2n for the exhaustive sweep")
    add_output(sub)

    sub = subparsers.add_parser("ekr-search", help="exact maximum intersecting family search")
    add_instance(sub)
    sub.add_argument("--pairs", default=None, help="sweep instances, e.g. '2:1,3:1,3:2'")
    sub.add_argument("--enumerate-max", action="store_true", dest="enumerate_max",
                     help="enumerate every maximum family, not just one witness")
    sub.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, dest="max_nodes",
                     help="search node budget")
    sub.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS, dest="max_seconds",
                     help="search wall-clock budget")
    add_output(sub)

    sub = subparsers.add_parser(
        "center-map", help="trace every permutation against a star family"
    )
    add_instance(sub)
    sub.add_argument("--edge", default=None, help="star edge as 'a,b', default 1,2")
    sub.add_argument("--limit-perms", type=int, default=DEFAULT_LIMIT, dest="limit_perms",
                     help="largest 2n allowed for the sweep")
    add_output(sub)

    sub = subparsers.add_parser("lemma-identities", help="involution and composition identities")
    add_instance(sub, with_r=False)
    sub.add_argument("--sigma", default=None, help="check a single permutation")
    sub.add_argument("--j", type=int, default=None, help="restrict to one swap index")
    sub.add_argument(
        "--samples",
        type=int,
        default=None,
        help="random permutations to check; 0 forces the exhaustive sweep (auto by size)",
    )
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    sub.add_argument("--limit-perms", type=int, default=DEFAULT_LIMIT, dest="limit_perms",
                     help="largest 2n allowed for exhaustive sweeps")
    add_output(sub)

    sub = subparsers.add_parser("kneser-cert", help="emit a Hamiltonian-power certificate")
    add_instance(sub, with_r=False)
    sub.add_argument("--sigma", default=None, help="comma-separated images, default identity")
    sub.add_argument("--k", type=int, default=None, help="claimed power, default n-2")
    add_output(sub)

    sub = subparsers.add_parser("kneser-verify", help="verify a Hamiltonian-power certificate")
    add_instance(sub, with_r=False)
    sub.add_argument("--cert", default=None, help="certificate file, '-' for stdin")
    sub.add_argument("--sigma", default=None, help="generate from this permutation instead")
    sub.add_argument("--k", type=int, default=None, help="claimed power, default n-2")
    add_output(sub)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    namespace = parser.parse_args(argv)
    config = RunConfig.from_namespace(namespace)
    try:
        code, payload = dispatch(config)
        emit_report(payload, config.format, config.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code
