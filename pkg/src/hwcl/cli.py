"""Command-line interface.

Usage:
    hwcl classify --group uinf --weight "1;0"
    hwcl branch --weight "2,0"
    hwcl fixed-dim --weight "1,0,-1" --n 1
    hwcl dim --weight "3,2,2,1" --n 4
    hwcl realize check --weight "2,-1" --n 3
    hwcl cocycle-growth --weight "1,1;0" --coeff inv-sqrt --kmax 10000 --format csv
    hwcl schatten q --p 4
    hwcl schatten hoelder --p 4 --trials 200 --seed 7
    hwcl schatten norm --demo rank1

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 usage or parse error, 3 size cap exceeded, 4 numerical contract violation.
"""

from __future__ import annotations

import json
import math
import sys

import click
import numpy as np
from scipy.stats import unitary_group

from . import branching, oracles, schatten
from .classifier import classify, parse_group
from .cocycles import CocycleWitness, Coefficients, default_ks, growth_curve
from .errors import CapExceededError, ContractViolation, HwclError
from .tensor_rep import DEFAULT_CAPS, Caps, character, realize
from .weights import FiniteWeight, parse_tuple, parse_weight

__all__ = ["main", "cli"]

SCHEMA = "hwcl/1"
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_CONTRACT = 4


class CliError(click.ClickException):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class _Group(click.Group):
    """Maps library exceptions onto the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (CapExceededError, OverflowError) as exc:
            raise CliError(str(exc), EXIT_CAP) from exc
        except ContractViolation as exc:
            raise CliError(str(exc), EXIT_CONTRACT) from exc
        except (HwclError, ValueError) as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(command: str, result, out_path: str | None = None) -> None:
    doc = {"schema": SCHEMA, "command": command, "result": _jsonable(result)}
    text = json.dumps(doc, sort_keys=True, indent=2)
    _write(text + "\n", out_path)


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fmt(t) -> str:
    return ",".join(str(x) for x in t)


def _check(ctx, value: float, what: str) -> None:
    tol = ctx.obj["tolerance"]
    if not value <= tol:
        raise ContractViolation(f"{what} = {value:.3g} exceeds tolerance {tol:g}")


@click.group(cls=_Group)
@click.option("--tolerance", default=1e-9, show_default=True, type=float,
              help="Numerical tolerance for contract checks.")
@click.option("--seed", default=0, show_default=True, type=int,
              help="Seed for every random sample.")
@click.option("--max-boxes", default=DEFAULT_CAPS.max_boxes, show_default=True, type=int,
              help="Cap on |lambda| for tableau enumeration.")
@click.option("--max-matrix-dim", default=DEFAULT_CAPS.max_matrix_dim, show_default=True,
              type=int, help="Cap on explicit matrix sizes.")
@click.version_option(package_name="artifact")
@click.pass_context
def cli(ctx, tolerance, seed, max_boxes, max_matrix_dim):
    """Cohomology of unitary highest-weight representations."""
    if not tolerance > 0:
        raise click.BadParameter("must be positive", param_hint="--tolerance")
    ctx.ensure_object(dict)
    ctx.obj.update(tolerance=tolerance, seed=seed,
                   caps=Caps(max_boxes=max_boxes, max_matrix_dim=max_matrix_dim))


@cli.command("classify")
@click.option("--group", "group_text", required=True,
              help="uinf | up:<p> | uinfty-compact | full")
@click.option("--weight", "weight_text", required=True, help='Weight "a,b,c;tail".')
def classify_cmd(group_text, weight_text):
    """Decide whether H^1 vanishes."""
    verdict = classify(parse_weight(weight_text), parse_group(group_text))
    _emit("classify", verdict.to_dict())


@cli.command("branch")
@click.option("--weight", "weight_text", required=True, help='Finite tuple "a,b,c".')
def branch_cmd(weight_text):
    """Restriction of a U(n) irreducible to U(n-1)."""
    lam = parse_tuple(weight_text)
    if not lam:
        raise click.BadParameter("need at least one entry", param_hint="--weight")
    _emit("branch", [_fmt(eta) for eta in branching.branch(lam)])


@cli.command("fixed-dim")
@click.option("--weight", "weight_text", required=True)
@click.option("--n", "n", required=True, type=int)
def fixed_dim_cmd(weight_text, n):
    """Dimension of the U(n)-fixed vectors."""
    lam = parse_tuple(weight_text)
    _emit("fixed-dim", {
        "dim": branching.fixed_space_dim(lam, n),
        "has_fixed_vector": branching.has_fixed_vector(lam, n),
    })


@cli.command("dim")
@click.option("--weight", "weight_text", required=True)
@click.option("--n", "n", type=int, default=None, help="Rank (default: tuple length).")
def dim_cmd(weight_text, n):
    """Weyl dimension of a U(n) irreducible."""
    raw = parse_tuple(weight_text)
    if n is None:
        n = len(raw)
    hw = FiniteWeight.make(raw).highest_weight(n)
    _emit("dim", {"highest_weight": list(hw), "dim": oracles.weyl_dim(hw)})


@cli.group("realize")
def realize_grp():
    """Explicit matrix models."""


@realize_grp.command("check")
@click.option("--weight", "weight_text", required=True)
@click.option("--n", "n", required=True, type=int)
@click.option("--trials", default=20, show_default=True, type=int)
@click.pass_context
def realize_check(ctx, weight_text, n, trials):
    """Homomorphism, unitarity and character defects of the matrix model."""
    w = FiniteWeight.make(parse_tuple(weight_text))
    caps = ctx.obj["caps"]
    rng = np.random.default_rng(ctx.obj["seed"])
    hw = w.highest_weight(n)
    hom = uni = chi = 0.0
    dim = None
    for _ in range(trials):
        g, h = (unitary_group.rvs(n, random_state=rng) if n > 1
                else np.exp(2j * np.pi * rng.random((1, 1))) for _ in range(2))
        rg, rh, rgh = (realize(w, n, x, caps) for x in (g, h, g @ h))
        dim = rg.shape[0]
        hom = max(hom, float(np.linalg.norm(rg @ rh - rgh, 2)))
        uni = max(uni, float(np.linalg.norm(rg.conj().T @ rg - np.eye(dim), 2)))
        x = oracles.random_circle_point(n, rng)
        ref = oracles.schur_eval(hw, x)
        chi = max(chi, abs(character(w, n, x, caps) - ref) / max(1.0, abs(ref)))
    result = {"weight": _fmt(w.entries), "n": n, "dim": dim,
              "weyl_dim": oracles.weyl_dim(hw), "trials": trials,
              "homomorphism_defect": hom, "unitarity_defect": uni,
              "character_defect": chi}
    _emit("realize-check", result)
    if dim is not None and dim != result["weyl_dim"]:
        raise ContractViolation(f"realized dimension {dim} != weyl_dim {result['weyl_dim']}")
    _check(ctx, hom, "homomorphism defect")
    _check(ctx, uni, "unitarity defect")
    _check(ctx, chi, "character defect")


@cli.command("cocycle-growth")
@click.option("--weight", "weight_text", required=True, help='Finite weight, e.g. "1,1;0".')
@click.option("--coeff", type=click.Choice(["inv-sqrt", "inv", "alternating"]),
              default="inv-sqrt", show_default=True)
@click.option("--theta", type=float, default=math.pi / 2, show_default=True)
@click.option("--pattern", type=click.Choice(["constant", "alternating"]), default=None,
              help="Phase pattern (default: constant, alternating for balanced weights).")
@click.option("--kmax", type=int, default=10_000, show_default=True)
@click.option("--points", type=int, default=25, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="json", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
def cocycle_growth(weight_text, coeff, theta, pattern, kmax, points, fmt, out_path):
    """Growth of ||beta(g_k)|| for the explicit witness cocycle."""
    w = parse_weight(weight_text)
    if not w.finitely_supported:
        raise click.BadParameter("witness weights must have tail 0", param_hint="--weight")
    if kmax < 2:
        raise click.BadParameter("must be at least 2", param_hint="--kmax")
    witness = CocycleWitness(w.to_finite(), Coefficients(coeff))
    if pattern is None:
        pattern = "alternating" if witness.plus.size == witness.minus.size else "constant"
    report = growth_curve(witness, theta, pattern, default_ks(kmax, points))
    if fmt == "csv":
        _write(report.to_csv(), out_path)
    elif fmt == "text":
        lines = [f"# weight={w} coeff={coeff} theta={theta!r} pattern={pattern}",
                 f"{'k':>10} {'norm_sq':>22} {'reference':>22}"]
        for row in report.rows():
            ref = "" if row["reference"] is None else repr(row["reference"])
            lines.append(f"{row['k']:>10} {row['norm_sq']!r:>22} {ref:>22}")
        lines.append(f"verdict: {report.verdict} (slope {report.slope:.6g}, "
                     f"threshold {report.threshold:.6g})")
        _write("\n".join(lines) + "\n", out_path)
    else:
        body = report.to_dict()
        body.update(weight=str(w), coeff=coeff, theta=theta, pattern=pattern)
        _emit("cocycle-growth", body, out_path)


@cli.group("schatten")
def schatten_grp():
    """Schatten norms and Hoelder's inequality."""


@schatten_grp.command("q")
@click.option("--p", "p", required=True, type=float)
def schatten_q(p):
    """Conjugate exponent q = 2p/(p-2) (inf for p <= 2)."""
    _emit("schatten-q", {"p": p, "q": schatten.q_exponent(p)})


def _random_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


@schatten_grp.command("hoelder")
@click.option("--p", "p", required=True, type=float, help="s = p, t = q(p), r = 2.")
@click.option("--trials", default=200, show_default=True, type=int)
@click.option("--size", default=4, show_default=True, type=int)
@click.option("--seed", default=None, type=int, help="Overrides the global seed.")
@click.pass_context
def schatten_hoelder(ctx, p, trials, size, seed):
    """Minimum margin of ||BC||_2 <= ||B||_p ||C||_q over random pairs."""
    rng = np.random.default_rng(ctx.obj["seed"] if seed is None else seed)
    q = schatten.q_exponent(p)
    worst = math.inf
    for _ in range(trials):
        b, c = _random_matrix(rng, size), _random_matrix(rng, size)
        scale = schatten.schatten_norm(b, p) * schatten.schatten_norm(c, q)
        worst = min(worst, schatten.hoelder_check(b, c, 2.0, p, q) / scale)
    _emit("schatten-hoelder", {"r": 2.0, "s": p, "t": q, "trials": trials,
                               "min_relative_margin": worst})
    if worst < -ctx.obj["tolerance"]:
        raise ContractViolation(f"Hoelder margin {worst:.3g} is negative")


@schatten_grp.command("norm")
@click.option("--demo", type=click.Choice(["rank1"]), default=None,
              help="rank1: ||w u*||_p = ||w|| ||u|| for several p.")
@click.option("--diag", "diag_text", default=None, help='Diagonal matrix "3,4".')
@click.option("--p", "p", type=float, default=2.0, show_default=True)
@click.option("--size", default=5, show_default=True, type=int)
@click.pass_context
def schatten_norm_cmd(ctx, demo, diag_text, p, size):
    """Schatten norm of a demo or diagonal matrix."""
    if (demo is None) == (diag_text is None):
        raise click.UsageError("give exactly one of --demo or --diag")
    if diag_text is not None:
        d = np.diag([float(x) for x in parse_tuple(diag_text)])
        _emit("schatten-norm", {"p": p, "norm": schatten.schatten_norm(d, p)})
        return
    rng = np.random.default_rng(ctx.obj["seed"])
    w = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    u = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    expected = float(np.linalg.norm(w) * np.linalg.norm(u))
    a = np.outer(w, u.conj())
    rows = []
    for pp in (1.0, 2.0, 4.0, math.inf):
        val = schatten.schatten_norm(a, pp)
        rows.append({"p": pp, "norm": val, "deviation": abs(val - expected) / expected})
    worst = max(r["deviation"] for r in rows)
    _emit("schatten-norm", {"demo": "rank1", "expected": expected, "norms": rows,
                            "max_relative_deviation": worst})
    _check(ctx, worst, "rank-1 norm deviation")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="hwcl", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
