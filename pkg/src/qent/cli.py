"""Command-line surface: state generation, Q computation, sequence
verification, and protocol simulation.

Exit codes: 0 success, 1 validation or verification failure, 2 I/O error or
malformed input.  Reports are JSON by default; pass --human for a readable
rendering.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import click
import numpy as np

from . import measures, protocol, pulses, states

VERIFY_TOL = 1e-9


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _write_text(text: str, out: str | None):
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        _fail(2, f"cannot write {out}: {exc}")


def _emit(doc: dict, human_lines: list[str], as_json: bool, out: str | None):
    _write_text(json.dumps(doc, indent=2) + "\n" if as_json else "\n".join(human_lines) + "\n", out)


def _load_state(path: str) -> states.PureState:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(2, f"cannot read {path}: {exc}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(2, f"malformed state file {path}: {exc}")
    try:
        n = int(doc["n_qubits"])
        amps = np.array([complex(re, im) for re, im in doc["amplitudes"]])
    except (KeyError, TypeError, ValueError) as exc:
        _fail(2, f"malformed state file {path}: {exc}")
    try:
        return states.PureState(n, amps)
    except ValueError as exc:
        _fail(1, f"invalid state in {path}: {exc}")


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        _fail(1, f"cannot parse subset {text!r}; expected comma-separated integers")


@click.group()
def main():
    """Global entanglement Q: generation, measurement, and protocol tools."""


@main.command()
@click.argument("kind", type=click.Choice(["ghz", "w", "cluster", "product", "random"]))
@click.option("--n", type=int, required=True, help="Number of qubits.")
@click.option("--seed", type=int, default=None, help="RNG seed (product/random kinds).")
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
def gen(kind: str, n: int, seed: int | None, out: str | None):
    """Write a state file for a named state family."""
    try:
        if kind == "ghz":
            state = states.ghz_state(n)
        elif kind == "w":
            state = states.w_state(n)
        elif kind == "cluster":
            state = states.cluster_state(n)
        elif kind == "product":
            if n < 1:
                raise ValueError(f"product state needs n >= 1 qubits, got {n}")
            if seed is None:
                state = states.product_state([(1, 0)] * n)
            else:
                state = states.random_product_state(n, seed)
        else:
            state = states.random_state(n, seed)
    except ValueError as exc:
        _fail(1, str(exc))
    _write_text(json.dumps(states.state_to_dict(state)) + "\n", out)


@main.command()
@click.argument("statefile", type=str)
@click.option(
    "--route",
    type=click.Choice(["direct", "purity", "protocol", "all"]),
    default="all",
    show_default=True,
)
@click.option("--json/--human", "as_json", default=True, help="Report format.")
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
def q(statefile: str, route: str, as_json: bool, out: str | None):
    """Compute Q for a state file by one or all routes."""
    state = _load_state(statefile)
    fns = {
        "direct": measures.q_direct,
        "purity": measures.q_purity,
        "protocol": protocol.q_protocol_exact,
    }
    wanted = list(fns) if route == "all" else [route]
    try:
        values = {name: fns[name](state) for name in wanted}
    except ValueError as exc:
        _fail(1, str(exc))
    doc = {"state": statefile, "n_qubits": state.n_qubits, "q": values}
    lines = [f"Q({name}) = {val:.15g}" for name, val in values.items()]
    if route == "all":
        vals = list(values.values())
        spread = max(abs(a - b) for a in vals for b in vals)
        doc["max_pairwise_deviation"] = spread
        lines.append(f"max pairwise deviation = {spread:.3e}")
    _emit(doc, lines, as_json, out)


@main.command()
@click.argument("target", type=click.Choice(["swap", "threebody", "cswap"]))
@click.option("--phi", type=float, default=None, help="Three-body angle (radians).")
@click.option("--g", type=float, default=1.0, show_default=True, help="Coupling strength.")
@click.option("--sign-tunable", is_flag=True, help="Allow both signs of the coupling.")
@click.option("--sequence", "sequence_file", type=str, default=None,
              help="Verify a pulse sequence loaded from this JSON file instead of building one.")
@click.option("--tol", type=float, default=VERIFY_TOL, show_default=True)
@click.option("--json/--human", "as_json", default=True, help="Report format.")
@click.option("--out", type=str, default=None,
              help="Also export the verified sequence as JSON to this path.")
def verify(target, phi, g, sign_tunable, sequence_file, tol, as_json, out):
    """Check a pulse sequence against its canonical gate, up to global phase."""
    if target == "threebody" and phi is None:
        _fail(1, "--phi is required for the threebody target")
    if target != "threebody" and phi is not None:
        _fail(1, "--phi only applies to the threebody target")
    if target == "swap":
        seq = pulses.swap_sequence(0, 1)
        canonical = pulses.canonical_swap(0, 1, seq.register_size)
    elif target == "threebody":
        seq = pulses.three_body_sequence(phi, 0, 1, 2)
        canonical = pulses.zzz_unitary(phi, 0, 1, 2, seq.register_size)
    else:
        seq = pulses.cswap_sequence(0, 1, 2)
        canonical = pulses.canonical_cswap(0, 1, 2, seq.register_size)
    if sequence_file is not None:
        try:
            seq = pulses.load_sequence(sequence_file)
        except OSError as exc:
            _fail(2, f"cannot read {sequence_file}: {exc}")
        except ValueError as exc:
            _fail(2, str(exc))
        if seq.register_size != int(math.log2(canonical.shape[0])):
            _fail(1, f"sequence register size {seq.register_size} does not match target")
    try:
        deviation = pulses.phase_aligned_deviation(canonical, pulses.sequence_unitary(seq))
        time = pulses.interaction_time(seq, pulses.CouplingModel(g, sign_tunable))
    except ValueError as exc:
        _fail(1, str(exc))
    ok = deviation < tol
    doc = {
        "target": target,
        "phi": phi,
        "g": g,
        "sign_tunable": sign_tunable,
        "deviation": deviation,
        "interaction_time": time,
        "tolerance": tol,
        "ok": ok,
    }
    lines = [
        f"target {target}: phase-aligned max deviation = {deviation:.3e} "
        f"({'ok' if ok else 'FAIL'} at tol {tol:g})",
        f"interaction time = {time:.15g} (g = {g:g}, "
        f"{'sign-tunable' if sign_tunable else 'fixed sign'})",
    ]
    if out is not None:
        try:
            pulses.save_sequence(seq, out)
        except OSError as exc:
            _fail(2, f"cannot write {out}: {exc}")
    _emit(doc, lines, as_json, None)
    if not ok:
        sys.exit(1)


@main.command("protocol")
@click.argument("statefile", type=str)
@click.option("--trials", type=int, default=None, help="Number of sampled trials.")
@click.option("--seed", type=int, default=0, show_default=True, help="RNG seed.")
@click.option("--mode", type=click.Choice(["exact", "joint"]), default="exact",
              show_default=True, help="exact per-qubit marginals or full-joint simulation.")
@click.option("--subset", type=str, default=None,
              help="Comma-separated qubit subset: run the subset-purity protocol instead.")
@click.option("--sweep", type=str, default=None,
              help="Comma-separated ascending trial counts: emit a convergence CSV instead.")
@click.option("--json/--human", "as_json", default=True, help="Report format.")
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
def protocol_cmd(statefile, trials, seed, mode, subset, sweep, as_json, out):
    """Sample the measurement protocol, or run subset-purity / convergence runs."""
    state = _load_state(statefile)
    if subset is not None:
        indices = _parse_subset(subset)
        try:
            direct = protocol.subset_purity_direct(state, indices)
            feasible = len(indices) + 2 * state.n_qubits <= protocol.FULL_JOINT_MAX_QUBITS
            circuit = protocol.subset_purity_circuit(state, indices) if feasible else None
        except ValueError as exc:
            _fail(1, str(exc))
        doc = {
            "state": statefile,
            "subset": indices,
            "purity": direct,
            "purity_circuit": circuit,
            "p_plus": (1.0 + direct) / 2.0,
        }
        lines = [f"purity of subset {indices} = {direct:.15g}"]
        if circuit is not None:
            lines.append(f"circuit route = {circuit:.15g}")
        _emit(doc, lines, as_json, out)
        return
    if sweep is not None:
        counts = _parse_subset(sweep)
        try:
            rows = protocol.convergence_sweep(state, counts, seed)
        except ValueError as exc:
            _fail(1, str(exc))
        _write_text(protocol.sweep_csv(rows), out)
        return
    if trials is None or trials < 1:
        _fail(1, f"--trials must be a positive integer, got {trials}")
    mode_name = protocol.MODE_EXACT_MARGINAL if mode == "exact" else protocol.MODE_FULL_JOINT
    try:
        run = protocol.ProtocolRun(state, trials, seed, mode_name)
        doc = protocol.run_report(run, state_ref=statefile)
    except ValueError as exc:
        _fail(1, str(exc))
    lines = [
        f"Q estimate = {doc['q_estimate']:.15g} +- {doc['std_error']:.3g} "
        f"({trials} trials, {mode_name})",
        "p(-) per qubit: " + ", ".join(f"{p:.6g}" for p in doc["p_minus_per_qubit"]),
    ]
    _emit(doc, lines, as_json, out)


if __name__ == "__main__":
    main()
