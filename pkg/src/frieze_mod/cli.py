"""Command line front end.

Subcommands: size, classify, oplus, witness, verify, survey. Exit codes:
0 on success, 1 on verification failure or unwritable output, 2 on usage
errors. All stdout output ends with exactly one trailing newline.

The classify/witness/survey commands keep a small JSON result cache,
keyed by (schema version, n, k). It is purely an accelerator: runs with
and without it produce identical output. Its location is
$FRIEZE_MOD_CACHE_DIR when set, else the user cache directory.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional

import click

from .cycles import Cycle
from .cycles import oplus as cycle_oplus
from .monomial import minimal_monomial_size
from .reduce import MonomialVerdict, ReductionWitness, is_irreducible_monomial
from .verify import VERIFIERS, run_all, run_verifier, survey_row

SCHEMA_VERSION = 1

# Witness searches above this modulus need --force. They are still fast,
# but the guard keeps accidental huge sweeps from running unannounced.
FORCE_LIMIT = 2000

_KINDS = {"irreducible", "reducible", "zero-convention"}


def _check_modulus(n: int) -> None:
    if n < 2:
        raise click.UsageError(f"modulus must be >= 2, got {n}")


def _check_force(n: int, force: bool) -> None:
    if n > FORCE_LIMIT and not force:
        raise click.UsageError(
            f"witness search at modulus {n} exceeds {FORCE_LIMIT}; "
            f"pass --force to run it")


def _cache_path() -> Path:
    root = os.environ.get("FRIEZE_MOD_CACHE_DIR")
    if root:
        return Path(root) / "classify-cache.json"
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "frieze-mod" / "classify-cache.json"


class _Cache:
    """On-disk verdict memo. Advisory only: any read or write problem
    degrades to recomputing, never to failing the command."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.path = _cache_path()
        self.data: dict = {}
        self.dirty = False
        if enabled:
            try:
                self.data = json.loads(self.path.read_text())
            except (OSError, ValueError):
                self.data = {}
            if not isinstance(self.data, dict):
                self.data = {}

    def get(self, n: int, k: int) -> Optional[MonomialVerdict]:
        if not self.enabled:
            return None
        entry = self.data.get(f"{SCHEMA_VERSION}:{n}:{k}")
        if not isinstance(entry, dict):
            return None
        try:
            w = entry["witness"]
            wit = None if w is None else ReductionWitness(
                n, k, int(w[0]), int(w[1]), int(w[2]), int(w[3]))
            kind = str(entry["kind"])
            if kind not in _KINDS:
                return None
            return MonomialVerdict(n, k, int(entry["size"]),
                                   int(entry["sign"]), kind, wit)
        except (KeyError, IndexError, TypeError, ValueError):
            return None

    def put(self, n: int, k: int, v: MonomialVerdict) -> None:
        if not self.enabled:
            return
        w = v.witness
        self.data[f"{SCHEMA_VERSION}:{n}:{k}"] = {
            "size": v.size, "sign": v.sign, "kind": v.kind,
            "witness": None if w is None else [w.size, w.x, w.y, w.sign],
        }
        self.dirty = True

    def save(self) -> None:
        if not (self.enabled and self.dirty):
            return
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=str(self.path.parent),
                                       prefix=".cache-")
            with os.fdopen(fd, "w") as fh:
                json.dump(self.data, fh)
            os.replace(tmp, self.path)
        except OSError:
            pass


def _classified(n: int, k: int, cache: _Cache) -> MonomialVerdict:
    k %= n
    hit = cache.get(n, k)
    if hit is not None:
        return hit
    v = is_irreducible_monomial(n, k)
    cache.put(n, k, v)
    return v


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text)
        return
    try:
        Path(out).write_text(text + "\n")
    except OSError as e:
        click.echo(f"cannot write {out}: {e}", err=True)
        sys.exit(1)


@click.group()
def cli():
    """Minimal constant solutions of the 2x2 plus/minus identity congruence."""


@cli.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
def size(n: int, k: int):
    """Minimal constant-solution size for K mod N.

    Prints the size alone when the product is the identity, and with an
    ", -Id" suffix when it is the negated identity.
    """
    _check_modulus(n)
    s, sign = minimal_monomial_size(n, k)
    click.echo(f"{s}, -Id" if sign < 0 else str(s))


def _verdict_line(v: MonomialVerdict) -> str:
    if v.kind == "reducible":
        w = v.witness
        return f"reducible; witness size {w.size}: ({w.cycle()})"
    if v.kind == "irreducible":
        return f"irreducible; size {v.size}"
    return f"zero-convention; size {v.size}: (0,0)"


@cli.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--no-cache", is_flag=True, help="Bypass the result cache.")
@click.option("--force", is_flag=True,
              help=f"Allow witness searches above modulus {FORCE_LIMIT}.")
def classify(n: int, k: int, no_cache: bool, force: bool):
    """Verdict for the minimal constant-K solution mod N."""
    _check_modulus(n)
    _check_force(n, force)
    cache = _Cache(not no_cache)
    try:
        v = _classified(n, k, cache)
    finally:
        cache.save()
    click.echo(_verdict_line(v))


@cli.command()
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--no-cache", is_flag=True, help="Bypass the result cache.")
@click.option("--force", is_flag=True,
              help=f"Allow witness searches above modulus {FORCE_LIMIT}.")
def witness(n: int, k: int, no_cache: bool, force: bool):
    """Smallest reduction witness for K mod N as a bare entry list.

    Prints "none" when the minimal solution has no witness (it is
    irreducible or the zero pair).
    """
    _check_modulus(n)
    _check_force(n, force)
    cache = _Cache(not no_cache)
    try:
        v = _classified(n, k, cache)
    finally:
        cache.save()
    click.echo(str(v.witness.cycle()) if v.witness else "none")


# entry lists may start with a negative number; keep click from reading
# them as options
@cli.command(name="oplus", context_settings={"ignore_unknown_options": True})
@click.argument("n", type=int)
@click.argument("a")
@click.argument("b")
def oplus_cmd(n: int, a: str, b: str):
    """Endpoint-merging sum of two entry lists mod N.

    Entry lists are comma separated, e.g. "1,1,3". Both need size >= 2.
    """
    _check_modulus(n)
    try:
        out = cycle_oplus(Cycle.parse(a, n), Cycle.parse(b, n))
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    click.echo(str(out))


@cli.command()
@click.argument("theorem_id")
@click.option("--min", "lo", type=int, default=2, show_default=True,
              help="Smallest modulus in the sweep.")
@click.option("--max", "hi", type=int, default=150, show_default=True,
              help="Largest modulus in the sweep.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report to this file instead of stdout.")
def verify(theorem_id: str, lo: int, hi: int, out: Optional[str]):
    """Replay one structural law (or "all") over a modulus range.

    Emits a JSON report per verifier; exits 1 if any run fails.
    """
    if lo < 2:
        raise click.UsageError(f"--min must be >= 2, got {lo}")
    if hi < lo:
        raise click.UsageError(f"--max ({hi}) is below --min ({lo})")
    if theorem_id == "all":
        reports = run_all(lo, hi)
    else:
        try:
            reports = [run_verifier(theorem_id, lo, hi)]
        except KeyError as e:
            raise click.UsageError(e.args[0]) from None
    payload = [r.to_dict() for r in reports]
    text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    _emit(text, out)
    if any(r.status == "fail" for r in reports):
        sys.exit(1)


_CSV_HEADER = "N,k,size,sign,verdict,witness_size,witness_x,witness_y"


def _blank(v) -> str:
    return "" if v is None else str(v)


@cli.command()
@click.option("--min", "lo", type=int, default=2, show_default=True,
              help="Smallest modulus surveyed.")
@click.option("--max", "hi", type=int, required=True,
              help="Largest modulus surveyed.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the table to this file instead of stdout.")
@click.option("--no-cache", is_flag=True, help="Bypass the result cache.")
@click.option("--force", is_flag=True,
              help=f"Allow witness searches above modulus {FORCE_LIMIT}.")
def survey(lo: int, hi: int, fmt: str, out: Optional[str],
           no_cache: bool, force: bool):
    """Classification table for every k over a range of moduli.

    CSV has a fixed header and no quoting (all fields numeric or bare
    words); JSON is one object per line with the same field names. An
    empty range produces just the header (or nothing for JSON).
    """
    if lo < 2:
        raise click.UsageError(f"--min must be >= 2, got {lo}")
    _check_force(hi, force)
    cache = _Cache(not no_cache)
    rows = []
    try:
        for n in range(lo, hi + 1):
            for k in range(n):
                rows.append(survey_row(_classified(n, k, cache)))
    finally:
        cache.save()
    if fmt == "csv":
        lines = [_CSV_HEADER]
        lines += [
            f"{r.n_modulus},{r.k},{r.size},{r.sign},{r.verdict},"
            f"{_blank(r.witness_size)},{_blank(r.witness_x)},{_blank(r.witness_y)}"
            for r in rows]
        text = "\n".join(lines)
    else:
        text = "\n".join(json.dumps({
            "N": r.n_modulus, "k": r.k, "size": r.size, "sign": r.sign,
            "verdict": r.verdict, "witness_size": r.witness_size,
            "witness_x": r.witness_x, "witness_y": r.witness_y,
        }) for r in rows)
    _emit(text, out)


def main():
    cli(prog_name="frieze-mod")


if __name__ == "__main__":
    main()
