"""Command line front end.

    thickenings length --m 3 --t 3            one local cohomology length
    thickenings table --m-min 3 --m-max 5 --t-min 1 --t-max 10
    thickenings decompose --m 3 --t 3         weight-by-weight layer listing
    thickenings verify --suite all            brute-force checks, exit 1 on failure

All integers are emitted as decimal strings in JSON output; the lengths
outgrow 64-bit integers quickly.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile

import click

from . import verify as verify_suites
from .closed_forms import cumulative_length, layer_length_closed
from .cohomology import local_cohomology_length
from .filtration import ThickeningInstance, layer_summands


def _instance(m: int, t: int) -> ThickeningInstance:
    try:
        return ThickeningInstance(m=m, t=t)
    except ValueError as exc:
        raise click.BadParameter(str(exc))


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".thickenings-")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _fmt_weight(weight) -> str:
    return "(" + ", ".join(str(e) for e in weight) + ")"


@click.group()
def main():
    """Exact lengths of local cohomology of determinantal thickenings.

    R is the polynomial ring on a 2 x m matrix of variables, I the ideal of
    its 2 x 2 minors. The commands compute lengths of H^j_m(R/I^t) and
    cross-check every closed form against brute-force enumeration.
    """


@main.command()
@click.option("--m", "m", type=int, required=True, help="Number of matrix columns, at least 3.")
@click.option("--t", "t", type=int, required=True, help="Power of the ideal, at least 1.")
@click.option("--j", "j", type=int, default=3, show_default=True, help="Cohomological index.")
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON form instead of text.")
def length(m: int, t: int, j: int, as_json: bool):
    """Length of H^j_m(R/I^t): zero, finite, or infinite."""
    inst = _instance(m, t)
    if not 0 <= j <= inst.ambient_dim:
        raise click.BadParameter(f"j must lie in 0..{inst.ambient_dim}")
    value = local_cohomology_length(m, t, j)
    if as_json:
        click.echo(json.dumps(value.to_json()))
    elif value.is_finite:
        click.echo(f"finite {value.value}")
    else:
        click.echo(value.kind)


@main.command()
@click.option("--m-min", type=int, required=True)
@click.option("--m-max", type=int, required=True)
@click.option("--t-min", type=int, required=True)
@click.option("--t-max", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write atomically to a file instead of stdout.")
def table(m_min: int, m_max: int, t_min: int, t_max: int, fmt: str, out: str | None):
    """Layer and cumulative lengths over an (m, t) grid, m ascending then t."""
    if m_min > m_max or t_min > t_max:
        raise click.BadParameter("empty range")
    if m_min < 3:
        raise click.BadParameter("m must be at least 3")
    if t_min < 1:
        raise click.BadParameter("t must be at least 1")
    rows = []
    for m in range(m_min, m_max + 1):
        for t in range(t_min, t_max + 1):
            rows.append(
                {
                    "m": m,
                    "t": t,
                    "layer": str(layer_length_closed(m, t)),
                    "cumulative": str(cumulative_length(m, t)),
                }
            )
    if fmt == "csv":
        lines = ["m,t,layer,cumulative"]
        lines.extend(f"{r['m']},{r['t']},{r['layer']},{r['cumulative']}" for r in rows)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(rows, indent=2) + "\n"
    if out is not None:
        _write_atomic(out, text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the summand list as JSON.")
def decompose(m: int, t: int, as_json: bool):
    """List the weight summands of the layer new at power t.

    Prints one line per summand and a final line comparing the summand
    total with the closed form; exits 1 on a mismatch.
    """
    _instance(m, t)
    summands = layer_summands(m, t)
    total = sum(s.dim for s in summands)
    closed = layer_length_closed(m, t)
    if as_json:
        payload = {
            "m": m,
            "t": t,
            "summands": [s.to_json() for s in summands],
            "total": str(total),
            "closed_form": str(closed),
            "match": total == closed,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        for s in summands:
            click.echo(
                f"epsilon={s.epsilon}  lambda={_fmt_weight(s.gl2_weight)}  "
                f"lambda_s={_fmt_weight(s.glm_weight)}  dim={s.dim}"
            )
        marker = "match" if total == closed else "MISMATCH"
        click.echo(f"total={total}  closed_form={closed}  [{marker}]")
    if total != closed:
        sys.exit(1)


@main.command()
@click.option(
    "--suite",
    type=click.Choice(list(verify_suites.SUITE_NAMES) + ["all"]),
    required=True,
)
@click.option("--max-m", type=int, default=None, help="Upper m bound where a suite sweeps m.")
@click.option("--max-t", type=int, default=None, help="Upper t bound where a suite sweeps t.")
@click.option("--max-b", type=int, default=None, help="Upper b bound for the identity grid.")
def verify(suite: str, max_m: int | None, max_t: int | None, max_b: int | None):
    """Run brute-force verification suites; exit 0 only if every case passes."""
    results = verify_suites.run(suite, max_m=max_m, max_t=max_t, max_b=max_b)
    failed = False
    for result in results:
        click.echo(result.summary())
        for detail in result.failures[:5]:
            click.echo(f"  {detail}")
        if len(result.failures) > 5:
            click.echo(f"  ... and {len(result.failures) - 5} more")
        failed = failed or not result.passed
    if failed:
        sys.exit(1)
    click.echo("all checks passed")


if __name__ == "__main__":
    main()
