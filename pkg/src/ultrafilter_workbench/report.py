from __future__ import annotations

from pathlib import Path
from typing import List, Sequence

import pandas as pd

from .propositions import CheckOutcome, run_suite
from .semigroup import curated
from .storage import REPORTS_DIR, dump_json

PROPOSITION_CHECKS = [
    "fvg-extension",
    "fvw-ultrafilters",
    "ultrafilter-lifting",
    "shift-keeps-additive",
    "fvv-keeps-additive",
    "idempotent-vs-additive",
    "fil-cl",
]

# (checks, semigroups) pairs; pseudo-sum sweeps stay on small grounds
SWEEP_PLAN: list[tuple[list[str], list[str]]] = [
    (["additivity-equivalence"], ["Z4", "Z5", "Z6", "LZ4", "RZ4", "T2"]),
    (["pseudo-sum-oracle"], ["Z4", "Z5", "LZ4", "RZ4", "T2", "meet2"]),
    (["pseudo-sum-associativity"], ["Z4", "LZ4", "RZ4", "T2", "meet2"]),
    (["theta-extension", "maximal-additive"], ["Z4", "Z5", "Z6", "LZ4", "RZ4", "T2", "meet2"]),
    (PROPOSITION_CHECKS, ["Z4", "Z6"]),
]


def run_sweep(plan: Sequence[tuple[list[str], list[str]]] = SWEEP_PLAN) -> List[CheckOutcome]:
    outcomes: List[CheckOutcome] = []
    for checks, names in plan:
        outcomes.extend(run_suite(curated(names), checks))
    return outcomes


def sweep_frame(outcomes: Sequence[CheckOutcome]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"check": o.check, "semigroup": o.semigroup, "cases": o.cases, "violations": len(o.violations)}
            for o in outcomes
        ],
        columns=["check", "semigroup", "cases", "violations"],
    )


def _cell(cases: float, violations: float) -> str:
    if pd.isna(cases):
        return "-"
    status = "ok" if violations == 0 else f"{int(violations)} violations"
    return f"{status} ({int(cases)})"


def render_sweep(df: pd.DataFrame) -> str:
    lines: List[str] = []
    lines.append("# Filter algebra sweep")
    lines.append("")
    if df.empty:
        lines.append("No checks were run.")
        return "\n".join(lines) + "\n"

    cases = df.pivot_table(index="check", columns="semigroup", values="cases", aggfunc="sum", sort=False)
    violations = df.pivot_table(index="check", columns="semigroup", values="violations", aggfunc="sum", sort=False)
    semigroups = list(cases.columns)
    lines.append("| Check | " + " | ".join(semigroups) + " |")
    lines.append("| --- | " + " | ".join(["---"] * len(semigroups)) + " |")
    for check in cases.index:
        row = [check] + [_cell(cases.at[check, s], violations.at[check, s]) for s in semigroups]
        lines.append("| " + " | ".join(row) + " |")

    totals = df.groupby("check", sort=False)[["cases", "violations"]].sum()
    lines.append("")
    lines.append("## Totals")
    lines.append("")
    lines.append("| Check | Cases | Violations |")
    lines.append("| --- | --- | --- |")
    for check, row in totals.iterrows():
        lines.append(f"| {check} | {int(row['cases'])} | {int(row['violations'])} |")
    lines.append("")
    lines.append(f"Total: {int(df['cases'].sum())} cases, {int(df['violations'].sum())} violations")
    return "\n".join(lines) + "\n"


def save_sweep(outcomes: Sequence[CheckOutcome], out_dir: Path = REPORTS_DIR) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    md_path = out_dir / "sweep.md"
    md_path.write_text(render_sweep(sweep_frame(outcomes)), encoding="utf-8")
    dump_json(out_dir / "sweep.json", [o.to_dict() for o in outcomes])
    return md_path
