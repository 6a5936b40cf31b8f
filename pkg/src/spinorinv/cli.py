"""Command-line front end: verification suites and claimed-vs-computed
reports.

``reproduce`` runs the verification suites and renders a report whose rows
place the published reference values side by side with freshly computed
ones; ``enumerate`` and ``evaluate`` expose the combinatorial and numerical
building blocks directly.  Every report echoes the seed, state counts and
tolerances that produced it, so any row can be regenerated exactly.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
input error.
"""
from __future__ import annotations

import io
import json
import os
from csv import writer as csv_writer
from dataclasses import dataclass

import click
import numpy as np

from . import analysis, examples, oracles
from .contraction import (InvariantDescriptor, builtin_catalog, evaluate,
                          evaluate_batch, find_descriptor)
from .enumeration import (assignment_orbits, enumerate_pairings, total_count)
from .rng import RNG_ALGORITHM, make_rng
from .states import (MultiSpinorState, apply_local, embed_chiral,
                     embed_qubit_state, load_state)
from .clifford import discrete_transform

REPORT_IDS = ("three_spinor", "four_spinor", "weyl", "dependence",
              "invariance")


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int = 0
    n_states: int = 100
    rank_threshold: float = 1e-8
    tol: float = 1e-9
    out: str | None = None
    fmt: str = "text"
    figures: bool = True

    def header(self) -> dict:
        return {
            "command": self.command, "seed": self.seed,
            "n_states": self.n_states,
            "rank_threshold": self.rank_threshold, "tol": self.tol,
            "rng_algorithm": RNG_ALGORITHM,
        }


def _row(section: str, name: str, claimed, computed, metric: float,
         passed: bool, detail: str = "") -> dict:
    return {"section": section, "name": name, "claimed": str(claimed),
            "computed": str(computed), "metric": float(metric),
            "status": "PASS" if passed else "FAIL", "detail": detail}


# ---------------------------------------------------------------------------
# three-spinor report: combinatorics, rank table, example values
PARITY_CLASS_GROUPS = {
    "+++": tuple(range(2, 10)), "+-+": (10, 16, 17, 18),
    "++-": (19, 20, 21, 22), "-++": (23, 24, 25, 26),
    "-+-": (27, 28, 29, 30), "--+": (31, 32, 33, 34),
    "+--": (35, 36, 37, 38), "---": (11, 12, 14, 15),
}

#: published rank table for the three-spinor degree-4 catalog
CLAIMED_RANKS3 = {"full": 67, "+++": 23, "+-+": 8, "++-": 8, "-++": 8,
                  "-+-": 5, "--+": 5, "+--": 5, "---": 5}

_RANK_NOTE = ("seed-stable; equals 32 minus the 12 independent printed "
              "relations (9 single-group + 3 of the 12 cross-group ones); "
              "the published count misses the latter 3")
_RANK_NOTE_FULL = ("seed-stable; the published 67 inherits the +++ "
                   "overcount (67 = 64 + 3)")


def parity_class_names(label: str):
    return tuple(f"I_{k}{s}" for k in PARITY_CLASS_GROUPS[label]
                 for s in "abcd")


def _rank_row(section, label, names, claimed, cfg, detail=""):
    ranks = [analysis.rank_of_span(names, seed=cfg.seed + i,
                                   threshold=cfg.rank_threshold).rank
             for i in range(3)]
    stable = len(set(ranks)) == 1
    computed = ranks[0] if stable else ranks
    return _row(section, label, claimed, computed,
                abs(ranks[0] - claimed), stable and ranks[0] == claimed,
                detail)


def _count_rows(section, n, degree, claimed_patterns, claimed_per_pattern,
                claimed_total):
    pats = enumerate_pairings(n, degree)
    per = [len(assignment_orbits(p)) for p in pats]
    total = sum(per)
    rows = [_row(section, f"({n},{degree}) patterns", claimed_patterns,
                 len(pats), abs(len(pats) - claimed_patterns),
                 len(pats) == claimed_patterns)]
    if claimed_per_pattern is not None:
        ok = all(c == claimed_per_pattern for c in per)
        rows.append(_row(section, f"({n},{degree}) per-pattern assignments",
                         claimed_per_pattern,
                         per[0] if ok else per, 0.0 if ok else 1.0, ok))
    rows.append(_row(section, f"({n},{degree}) total", claimed_total, total,
                     abs(total - claimed_total), total == claimed_total))
    return rows


def _example_rows(section, n_parties, cfg):
    rows = []
    for spec in examples.EXAMPLES:
        if spec.n_parties != n_parties:
            continue
        rep = examples.verify_example(spec.name, atol=1e-10, zero_tol=1e-12)
        metric = max(rep.max_nonzero_error, rep.max_zero_magnitude)
        rows.append(_row(section, spec.name,
                         f"{len(spec.expected)} nonzero, rest 0",
                         "match" if rep.passed else rep.to_dict(),
                         metric, rep.passed, spec.note))
    return rows


def report_three_spinor(cfg: RunConfig) -> dict:
    rows = _count_rows("combinatorics", 3, 4, 4, 36, 144)
    cat = builtin_catalog("ThreeSpinorDeg4")
    rows.append(_rank_row("ranks", "full catalog", cat.names,
                          CLAIMED_RANKS3["full"], cfg, _RANK_NOTE_FULL))
    for label in PARITY_CLASS_GROUPS:
        detail = _RANK_NOTE if label == "+++" else ""
        rows.append(_rank_row("ranks", f"class {label}",
                              parity_class_names(label),
                              CLAIMED_RANKS3[label], cfg, detail))
    rows += _example_rows("examples", 3, cfg)
    return {"rows": rows, "passed": all(r["status"] == "PASS" for r in rows)}


# ---------------------------------------------------------------------------
# four-spinor report: combinatorics, ranks, example values
def report_four_spinor(cfg: RunConfig) -> dict:
    rows = _count_rows("combinatorics", 4, 4, 13, 136, 1768)
    rows += _count_rows("combinatorics", 4, 2, 1, None, 16)
    rows += _count_rows("combinatorics", 5, 4, 40, 528, 21120)
    rows += _count_rows("combinatorics", 6, 2, 1, None, 64)
    deg2 = builtin_catalog("FourSpinorDeg2")
    rows.append(_rank_row("ranks", "degree-2 catalog", deg2.names, 16, cfg))
    ty_h2 = (list(builtin_catalog("FourSpinorDeg4_T").names)
             + list(builtin_catalog("FourSpinorDeg4_Y").names)
             + [(n, 2) for n in deg2.names])
    rows.append(_rank_row("ranks", "degree-4 T+Y with degree-2 squares",
                          ty_h2, 41, cfg))
    rows += _example_rows("examples", 4, cfg)
    return {"rows": rows, "passed": all(r["status"] == "PASS" for r in rows)}


# ---------------------------------------------------------------------------
# chiral-sector (Weyl) reduction report
def _all_tags(n):
    out = [()]
    for _ in range(n):
        out = [t + (c,) for t in out for c in ("R", "L")]
    return out


def _reduction_row(section, label, descs, states_targets, tol):
    """Check value = sign * target per descriptor, sign constant.

    ``states_targets``: list of (state, target) pairs; target may vary per
    state.  Returns one report row aggregating all descriptors.
    """
    worst = 0.0
    signs = []
    ok = True
    for desc in descs:
        sign = None
        for state, target in states_targets:
            val = evaluate(desc, state)
            if abs(target) < 1e-12:
                continue
            s = round((val / target).real)
            dev = abs(val - s * target) / abs(target)
            worst = max(worst, dev)
            if s not in (-1, 1) or dev > tol:
                ok = False
            if sign is None:
                sign = s
            elif s != sign:
                ok = False
        signs.append(f"{desc.name}:{sign:+d}" if sign in (-1, 1)
                     else f"{desc.name}:?")
    return _row(section, label, "|ratio| = 1, fixed sign",
                " ".join(signs), worst, ok)


def _zero_row(section, label, descs, states, tol):
    worst = 0.0
    for desc in descs:
        for state in states:
            worst = max(worst, abs(evaluate(desc, state)))
    return _row(section, label, "0", f"max |value| = {worst:.3e}", worst,
                worst < tol)


def report_weyl(cfg: RunConfig) -> dict:
    rows = []
    rng = make_rng(cfg.seed)
    n_q = 20
    tol = max(cfg.tol, 1e-9)

    def rand_q(shape):
        q = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return q / np.linalg.norm(q)

    # degree-4 three-spinor a/b/c entries against 128 * (3-tangle)
    tau_descs = [find_descriptor(n) for n in ("I_2a", "I_2b", "I_2c",
                                              "I_3a", "I_23b", "I_35c")]
    for tags in _all_tags(3):
        pairs = []
        for _ in range(n_q):
            q = rand_q((2, 2, 2))
            pairs.append((embed_qubit_state(q, tags),
                          128 * oracles.three_tangle(q)))
        rows.append(_reduction_row("tangle3", "".join(tags), tau_descs,
                                   pairs, tol))

    # qualifying d entries against 64 * V on 2x2x4 embeddings
    v_descs = [find_descriptor(n) for n in ("I_2d", "I_3d", "I_10d",
                                            "I_23d", "I_31d")]
    z_descs = [find_descriptor(n) for n in ("I_11d", "I_19d", "I_27d",
                                            "I_35d")]
    for ta in ("R", "L"):
        for tb in ("R", "L"):
            pairs, states = [], []
            for _ in range(n_q // 2):
                q = rand_q((2, 2, 4))
                st = embed_chiral(q, (ta, tb, None))
                pairs.append((st, 64 * oracles.tangle_224(st)))
                states.append(st)
            rows.append(_reduction_row("tangle224", f"{ta}{tb}*", v_descs,
                                       pairs, tol))
            rows.append(_zero_row("tangle224", f"{ta}{tb}* non-qualifying",
                                  z_descs, states, 1e-9))
    rows.append(_zero_row(
        "tangle224", "all-chiral d entries",
        [find_descriptor("I_2d"), find_descriptor("I_23d")],
        [embed_qubit_state(rand_q((2, 2, 2)), t) for t in _all_tags(3)],
        1e-9))

    # four-spinor degree 2 against 16 * H
    h_descs = list(builtin_catalog("FourSpinorDeg2").descriptors)
    for tags in _all_tags(4):
        pairs = []
        for _ in range(n_q // 2):
            q = rand_q((2,) * 4)
            h, _l, _m = oracles.four_qubit_invariants(q)
            pairs.append((embed_qubit_state(q, tags), 16 * h))
        rows.append(_reduction_row("degree2", "".join(tags), h_descs, pairs,
                                   tol))

    # T and Y families against the printed H^2/L/M combinations
    ty_descs = [find_descriptor(f"{f}_{s}") for f in "TY"
                for s in "abcdefghijklm"]
    for tags in _all_tags(4):
        states = [rand_q((2,) * 4) for _ in range(n_q // 2)]
        pairs_by_suffix = {}
        embedded = [embed_qubit_state(q, tags) for q in states]
        hlm = [oracles.four_qubit_invariants(q) for q in states]
        worst = 0.0
        ok = True
        for desc in ty_descs:
            suffix = desc.name[-1]
            sign = None
            for st, (h, lv, mv) in zip(embedded, hlm):
                target = oracles.ty_reduction_target(suffix, h, lv, mv)
                if abs(target) < 1e-12:
                    continue
                val = evaluate(desc, st)
                s = round((val / target).real)
                dev = abs(val - s * target) / abs(target)
                worst = max(worst, dev)
                if s not in (-1, 1) or dev > tol:
                    ok = False
                if sign is None:
                    sign = s
                elif sign != s:
                    ok = False
        rows.append(_row("degree4_TY", "".join(tags),
                         "matches printed H^2/L/M combinations",
                         f"max rel dev {worst:.3e}", worst, ok))

    # even-N degree 2 against 2^N * N-tangle
    for n, n_combos in ((4, 16), (6, 8)):
        combos = _all_tags(n) if n == 4 else [
            tuple(rng.choice(["R", "L"], size=n)) for _ in range(n_combos)]
        descs = builtin_catalog(f"EvenNDeg2({n})").descriptors
        for tags in combos:
            pairs = []
            for _ in range(5):
                q = rand_q((2,) * n)
                pairs.append((embed_qubit_state(q, tags),
                              (2 ** n) * oracles.n_tangle(q)))
            rows.append(_reduction_row(f"evenN({n})", "".join(tags), descs,
                                      pairs, tol))
    return {"rows": rows, "passed": all(r["status"] == "PASS" for r in rows)}


# ---------------------------------------------------------------------------
def report_dependence(cfg: RunConfig) -> dict:
    rows = []
    for label, rel in analysis.BUILTIN_RELATIONS:
        res = analysis.check_dependence(rel, n_states=cfg.n_states,
                                        seed=cfg.seed)
        rows.append(_row("relations", label, f"residual < {cfg.tol:g}",
                         f"{res:.3e}", res, res < cfg.tol))
    return {"rows": rows, "passed": all(r["status"] == "PASS" for r in rows)}


# ---------------------------------------------------------------------------
#: (entry, group, party) whose values stay fixed under sampled elements
VALUE_INVARIANT_CASES = [
    ("I_2a", "LorentzProper", 0), ("I_2a", "LorentzProper", 1),
    ("I_3b", "LorentzProper", 2), ("H_a", "LorentzProper", 3),
    ("I_23c", "LorentzProper", 0),
]

#: (entry, group, party) whose magnitudes stay fixed
MAGNITUDE_INVARIANT_CASES = [
    ("I_2a", "GC5", 0), ("I_2a", "GC5", 1), ("I_2a", "GC5_U", 2),
    ("I_3a", "GC", 0), ("I_3a", "GC", 2), ("I_3a", "GC_U", 1),
    ("I_2a", "Intersection", 0), ("I_3a", "Intersection_U", 1),
    ("H_a", "GC", 0), ("H_b", "GC5", 3),
]

#: designated negative controls: deviation must exceed 1e-3
NEGATIVE_CONTROLS = [
    ("I_2a", "GC", 0), ("I_3a", "GC5", 1), ("I_2a", "SL4", 0),
    ("H_a", "GC5", 2), ("H_b", "GC", 1),
]

#: one representative entry per parity class
PARITY_REPRESENTATIVES = {
    "I_2a": (1, 1, 1), "I_10b": (1, -1, 1), "I_19c": (1, 1, -1),
    "I_23a": (-1, 1, 1), "I_27d": (-1, 1, -1), "I_31a": (-1, -1, 1),
    "I_35b": (1, -1, -1), "I_11a": (-1, -1, -1),
}


def report_invariance(cfg: RunConfig) -> dict:
    rows = []
    tol = cfg.tol
    for entry, gid, party in VALUE_INVARIANT_CASES:
        r = analysis.check_invariance(entry, gid, party, n_trials=50,
                                      seed=cfg.seed)
        rows.append(_row("value_invariant", f"{entry} / {gid} @ {party}",
                         f"value dev < {tol:g}",
                         f"{r.max_value_deviation:.3e}",
                         r.max_value_deviation,
                         r.max_value_deviation < tol))
    for entry, gid, party in MAGNITUDE_INVARIANT_CASES:
        r = analysis.check_invariance(entry, gid, party, n_trials=50,
                                      seed=cfg.seed)
        rows.append(_row("magnitude_invariant", f"{entry} / {gid} @ {party}",
                         f"magnitude dev < {tol:g}",
                         f"{r.max_magnitude_deviation:.3e}",
                         r.max_magnitude_deviation,
                         r.max_magnitude_deviation < tol))
    for party, combos in analysis.U1SL4_COMBOS.items():
        worst = 0.0
        for combo in combos:
            r = analysis.check_invariance(combo, "U1SL4", party,
                                          n_trials=10, seed=cfg.seed)
            worst = max(worst, r.max_magnitude_deviation)
        rows.append(_row("magnitude_invariant",
                         f"{len(combos)} single-lab combos / U1SL4 @ {party}",
                         f"magnitude dev < {tol:g}", f"{worst:.3e}", worst,
                         worst < tol))
    for combo in analysis.U1SL4_FOUR_SPINOR:
        worst = 0.0
        for party in range(4):
            r = analysis.check_invariance(combo, "U1SL4", party,
                                          n_trials=10, seed=cfg.seed)
            worst = max(worst, r.max_magnitude_deviation)
        label = combo[0][1] if isinstance(combo[0][1], str) else "combo"
        rows.append(_row("magnitude_invariant",
                         f"{label}^2 + degree-4 combo / U1SL4 all parties",
                         f"magnitude dev < {tol:g}", f"{worst:.3e}", worst,
                         worst < tol))
    for entry, gid, party in NEGATIVE_CONTROLS:
        r = analysis.check_invariance(entry, gid, party, n_trials=50,
                                      seed=cfg.seed)
        rows.append(_row("negative_control", f"{entry} / {gid} @ {party}",
                         "magnitude dev > 1e-3",
                         f"{r.max_magnitude_deviation:.3e}",
                         r.max_magnitude_deviation,
                         r.max_magnitude_deviation > 1e-3))
    for entry, expected in PARITY_REPRESENTATIVES.items():
        got = analysis.classify_parity(entry, seed=cfg.seed)
        rows.append(_row("parity", entry, expected, got,
                         0.0 if got == expected else 1.0, got == expected))
    rows.append(_cpt_row(cfg))
    return {"rows": rows, "passed": all(r["status"] == "PASS" for r in rows)}


def _cpt_row(cfg: RunConfig) -> dict:
    """Magnitude invariance of every catalog entry under per-party CPT."""
    from .states import random_state
    cpt = discrete_transform("CPT")
    worst = 0.0
    for family in ("ThreeSpinorDeg4", "FourSpinorDeg2", "FourSpinorDeg4_T",
                   "FourSpinorDeg4_Y"):
        cat = builtin_catalog(family)
        descs = list(cat.descriptors)
        n = descs[0].n_parties
        states = [random_state(n, make_rng(cfg.seed + k)) for k in range(5)]
        base = np.abs(evaluate_batch(descs, states))
        for party in range(n):
            moved = [apply_local(s, party, cpt) for s in states]
            vals = np.abs(evaluate_batch(descs, moved))
            scale = np.maximum(base, 1e-12)
            worst = max(worst, float(np.max(np.abs(vals - base) / scale)))
    return _row("discrete", "CPT magnitude invariance, all catalogs",
                f"magnitude dev < {cfg.tol:g}", f"{worst:.3e}", worst,
                worst < cfg.tol)


REPORT_BUILDERS = {
    "three_spinor": report_three_spinor,
    "four_spinor": report_four_spinor,
    "weyl": report_weyl,
    "dependence": report_dependence,
    "invariance": report_invariance,
}


def build_report(report_id: str, cfg: RunConfig) -> dict:
    ids = REPORT_IDS if report_id == "all" else (report_id,)
    header = dict(cfg.header())
    header["report"] = report_id
    reports = {rid: REPORT_BUILDERS[rid](cfg) for rid in ids}
    return {"header": header, "reports": reports,
            "passed": all(r["passed"] for r in reports.values())}


# ---------------------------------------------------------------------------
# rendering
def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_csv(report: dict) -> str:
    buf = io.StringIO(newline="")
    w = csv_writer(buf, lineterminator="\n")
    h = report["header"]
    w.writerow(["# " + " ".join(f"{k}={h[k]}" for k in sorted(h))])
    w.writerow(["report", "section", "name", "claimed", "computed",
                "metric", "status", "detail"])
    for rid, sub in report["reports"].items():
        for r in sub["rows"]:
            w.writerow([rid, r["section"], r["name"], r["claimed"],
                        r["computed"], repr(r["metric"]), r["status"],
                        r["detail"]])
    w.writerow(["overall", "", "", "", "", "",
                "PASS" if report["passed"] else "FAIL", ""])
    return buf.getvalue()


def render_text(report: dict) -> str:
    h = report["header"]
    lines = ["# " + " ".join(f"{k}={h[k]}" for k in sorted(h))]
    for rid, sub in report["reports"].items():
        lines.append(f"== {rid} ==")
        for r in sub["rows"]:
            lines.append(
                f"  [{r['status']}] {r['section']:<20} {r['name']:<40} "
                f"claimed: {r['claimed']}  computed: {r['computed']}"
                + (f"  ({r['detail']})" if r["detail"] else ""))
        lines.append(f"  {rid}: "
                     + ("PASS" if sub["passed"] else "FAIL"))
    lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def render_figures(report: dict, outdir: str, stem: str):
    """One log-scale metric chart per sub-report, written next to --out."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []
    for rid, sub in report["reports"].items():
        rows = sub["rows"]
        metrics = [max(r["metric"], 1e-18) for r in rows]
        colors = ["tab:green" if r["status"] == "PASS" else "tab:red"
                  for r in rows]
        fig, ax = plt.subplots(
            figsize=(max(6.0, 0.22 * len(rows)), 4.0))
        ax.bar(range(len(rows)), metrics, color=colors)
        ax.set_yscale("log")
        ax.set_ylabel("check metric (deviation / residual)")
        ax.set_title(f"{rid}: "
                     + ("all checks pass" if sub["passed"]
                        else "some checks FAIL"))
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels([r["name"] for r in rows], rotation=90,
                           fontsize=5)
        fig.tight_layout()
        path = os.path.join(outdir, f"{stem}_{rid}.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# click wiring
@click.group()
def main():
    """Invariant-polynomial toolkit for multi-spinor states."""


def _emit(rendered: str, out: str | None):
    if out:
        with open(out, "w", newline="") as f:
            f.write(rendered)
    click.echo(rendered, nl=False)


@main.command("enumerate")
@click.option("--parties", type=int, required=True,
              help="Number of parties n.")
@click.option("--degree", type=int, default=4, show_default=True,
              help="Polynomial degree (even).")
@click.option("--counts-only", is_flag=True,
              help="Print only pattern and assignment totals.")
@click.option("--include-disconnected", is_flag=True,
              help="Keep patterns whose copy graph is disconnected.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="text", show_default=True)
def cmd_enumerate(parties, degree, counts_only, include_disconnected, out,
                  fmt):
    """List pairing patterns and inequivalent C/C5 assignments."""
    if parties < 1:
        raise click.UsageError("--parties must be >= 1")
    if degree < 2 or degree % 2:
        raise click.UsageError("--degree must be a positive even integer")
    pats = enumerate_pairings(parties, degree,
                              connected_only=not include_disconnected)
    zero = degree == 2 and parties % 2 == 1
    per = [len(assignment_orbits(p)) for p in pats]
    payload = {
        "command": "enumerate", "parties": parties, "degree": degree,
        "connected_only": not include_disconnected,
        "n_patterns": len(pats), "total_assignments": sum(per),
        "identically_zero": zero,
    }
    if not counts_only:
        payload["patterns"] = [
            {"index": i, "matchings": [list(map(list, m))
                                       for m in p.matchings],
             "assignments": c, "identically_zero": zero}
            for i, (p, c) in enumerate(zip(pats, per))]
    if fmt == "json":
        rendered = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO(newline="")
        w = csv_writer(buf, lineterminator="\n")
        w.writerow(["index", "matchings", "assignments",
                    "identically_zero"])
        if counts_only:
            w.writerow(["total", "", sum(per), zero])
        else:
            for i, (p, c) in enumerate(zip(pats, per)):
                w.writerow([i, str(p.matchings), c, zero])
            w.writerow(["total", "", sum(per), zero])
        rendered = buf.getvalue()
    else:
        lines = [f"({parties}, {degree}): {len(pats)} patterns, "
                 f"{sum(per)} inequivalent assignments"
                 + (" [identically zero by antisymmetry]" if zero else "")]
        if not counts_only:
            for i, (p, c) in enumerate(zip(pats, per)):
                lines.append(f"  pattern {i}: {p.matchings}  "
                             f"assignments: {c}"
                             + (" [identically zero]" if zero else ""))
        rendered = "\n".join(lines) + "\n"
    _emit(rendered, out)


@main.command("evaluate")
@click.argument("target")
@click.option("--state", "state_path", type=click.Path(dir_okay=False),
              default=None, help="State file (JSON).")
@click.option("--example", "example_name", default=None,
              help="Name of a packaged example state.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="text", show_default=True)
def cmd_evaluate(target, state_path, example_name, out, fmt):
    """Evaluate a catalog polynomial (or descriptor file) on a state.

    TARGET is a catalog name such as I_3a or H_b, or the path of a
    descriptor JSON file.
    """
    if (state_path is None) == (example_name is None):
        raise click.UsageError("provide exactly one of --state/--example")
    if os.path.exists(target):
        try:
            with open(target) as f:
                desc = InvariantDescriptor.from_dict(json.load(f))
        except (ValueError, KeyError, TypeError,
                json.JSONDecodeError) as exc:
            raise click.UsageError(
                f"cannot parse descriptor file {target}: {exc}")
    else:
        try:
            desc = find_descriptor(target)
        except KeyError:
            raise click.UsageError(f"unknown catalog polynomial {target!r}")
    try:
        state = (load_state(state_path) if state_path
                 else examples.load_example(example_name))
    except (ValueError, KeyError, TypeError, OSError,
            json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot load state: {exc}")
    if state.n_parties != desc.n_parties:
        raise click.UsageError(
            f"state has {state.n_parties} parties, polynomial needs "
            f"{desc.n_parties}")
    value = evaluate(desc, state)
    payload = {"command": "evaluate", "polynomial": desc.name or "custom",
               "state": state_path or f"example:{example_name}",
               "re": value.real, "im": value.imag,
               "magnitude": abs(value)}
    if fmt == "json":
        rendered = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO(newline="")
        w = csv_writer(buf, lineterminator="\n")
        w.writerow(sorted(payload))
        w.writerow([payload[k] for k in sorted(payload)])
        rendered = buf.getvalue()
    else:
        rendered = (f"{payload['polynomial']} on {payload['state']}: "
                    f"{value.real:+.12g}{value.imag:+.12g}j  "
                    f"|value| = {abs(value):.12g}\n")
    _emit(rendered, out)


@main.command("reproduce")
@click.argument("report_id",
                type=click.Choice(REPORT_IDS + ("all",)))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--states", "n_states", type=int, default=100,
              show_default=True, help="Random states per residual check.")
@click.option("--rank-threshold", type=float, default=1e-8,
              show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="text", show_default=True)
@click.option("--no-figures", is_flag=True,
              help="Skip rendering the metric charts.")
@click.pass_context
def cmd_reproduce(ctx, report_id, seed, n_states, rank_threshold, tol, out,
                  fmt, no_figures):
    """Run a verification suite and print claimed-vs-computed rows."""
    if n_states < 1:
        raise click.UsageError("--states must be positive")
    if rank_threshold <= 0 or tol <= 0:
        raise click.UsageError("thresholds must be positive")
    cfg = RunConfig(command="reproduce", seed=seed, n_states=n_states,
                    rank_threshold=rank_threshold, tol=tol, out=out,
                    fmt=fmt, figures=not no_figures)
    report = build_report(report_id, cfg)
    _emit(RENDERERS[fmt](report), out)
    if cfg.figures:
        outdir = os.path.dirname(os.path.abspath(out)) if out else "."
        stem = (os.path.splitext(os.path.basename(out))[0] if out
                else f"reproduce_{report_id}")
        for p in render_figures(report, outdir, stem):
            click.echo(f"figure: {p}", err=True)
    ctx.exit(0 if report["passed"] else 1)


if __name__ == "__main__":
    main()
