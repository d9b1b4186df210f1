"""Command line front end.

Exit codes: ``check-wlp`` returns 0 when a witness certifies the property,
2 when every trial failed and 1 on errors.  ``verify`` and ``experiment``
return 3 if any check reports a VIOLATION, 1 on errors and 0 otherwise.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import gf
from .algebra import stanley_reisner_ideal
from .complexes import SimplicialComplex
from .corpus import CORPUS, generate, load_input, resolve_complex
from .errors import BadParameters, BadSpec, LabError, NotArtinian
from .lefschetz import artinian_reduction, has_slp, has_wlp, has_wlp_gorenstein_shortcut
from .stellar import (
    CHECKS,
    VIOLATION,
    build_artinian_seed,
    build_section5,
    check_iff,
    check_theorem_down,
    compare_Pa_Pb_Pc,
    derive_seed,
    has_violation,
    probe_conjecture_G,
    run_checks,
    scse_ideal,
    StellarInstance,
)

EXIT_OK, EXIT_ERROR, EXIT_ABSENT, EXIT_VIOLATION = 0, 1, 2, 3
SEED_ENV = "LEFSCHETZ_LAB_SEED"

CHECK_FLAGS = {
    "hf_identity": "hf_stellar_identity",
    "c_decomposition": "C_decomposition",
    "g_properties": "G_properties",
    "initial_ideal": "initial_ideal",
    "iq": "IQ_hf",
    "theorem": "theorem_stellar",
    "lemmas": "lemmas",
    "down": "theorem_down",
    "iff": "iff",
    "section5": "section5",
    "triple": "triple_equality",
    "conjecture_g": "conjecture_G",
}


@dataclass
class RunConfig:
    prime: int = gf.DEFAULT_PRIME
    trials: int = 3
    seed: int = 0
    m_max: int | None = None
    output: str = "json"
    jobs: int = 1

    def __post_init__(self):
        gf.check_prime(self.prime)
        if self.trials < 1:
            raise BadParameters("trials must be at least 1")
        if self.jobs < 1:
            raise BadParameters("jobs must be at least 1")


def _config(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = int(env) if env else 0
        except ValueError as exc:
            raise BadParameters(f"{SEED_ENV} must be an integer") from exc
    return RunConfig(args.prime, args.trials, seed, args.max_degree, args.output, args.jobs)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return v


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    for r in rows[1:]:
        cols += [c for c in r if c not in cols]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def _emit(doc: dict, rows: list[dict], cfg: RunConfig, out):
    out.write(_dump(doc) if cfg.output == "json" else _csv(rows))


def _pmap(fn, tasks, jobs: int):
    """Ordered map, in worker processes when ``jobs > 1``."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks))


def _parse_face(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise BadSpec(f"bad face {text!r}") from exc


# -- gen -------------------------------------------------------------------------


def cmd_gen(args, out) -> int:
    D = generate(args.kind, args.args)
    out.write(json.dumps(D.to_dict(), sort_keys=True) + "\n")
    return EXIT_OK


# -- check-wlp ---------------------------------------------------------------------


def cmd_check_wlp(args, out) -> int:
    cfg = _config(args)
    kind, obj = load_input(args.input, cfg.prime)
    if kind == "complex":
        J = stanley_reisner_ideal(obj, cfg.prime)
        num = obj.dim + 1 if args.forms is None else args.forms
    else:
        J = obj
        num = 0 if args.forms is None else args.forms
    F = artinian_reduction(J, num, derive_seed(cfg.seed, "check-wlp-forms"))
    s = derive_seed(cfg.seed, "check-wlp")
    if args.property == "slp":
        v = has_slp(F, cfg.trials, s)
    elif args.property == "shortcut":
        v = has_wlp_gorenstein_shortcut(F, trials=cfg.trials, rng=s)
    else:
        v = has_wlp(F, cfg.trials, s)
    doc = dict(v.to_dict(), input=args.input, forms=num, config=asdict(cfg))
    _emit(doc, [{k: doc[k] for k in ("input", "property", "outcome", "prime", "seed", "trials", "hf")}], cfg, out)
    return EXIT_OK if v.certified else EXIT_ABSENT


# -- verify ---------------------------------------------------------------------------


def _verify_task(task) -> dict:
    D_dict, sigma, cfg, names = task
    D = SimplicialComplex.from_dict(D_dict)
    inst = StellarInstance(D, sigma, cfg["prime"], derive_seed(cfg["seed"], "instance", *sigma))
    return run_checks(inst, names, cfg["trials"], cfg["m_max"])


def _faces_for(D: SimplicialComplex, spec: str) -> list[tuple[int, ...]]:
    if spec == "all":
        return [f for f in D.faces if 2 <= len(f) <= 4]
    return [_parse_face(spec)]


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    name, D = resolve_complex(args.complex)
    names = list(CHECKS) if args.all else [CHECK_FLAGS[k] for k in CHECK_FLAGS if getattr(args, k)]
    if not names:
        raise BadParameters("select checks with --all or individual flags")
    faces = [f for s in args.sigma for f in _faces_for(D, s)]
    tasks = [(D.to_dict(), f, asdict(cfg), names) for f in faces]
    reports = _pmap(_verify_task, tasks, cfg.jobs)
    doc = {"complex": name, "config": asdict(cfg), "reports": reports}
    rows = []
    for rep in reports:
        for c in rep["checks"]:
            rows.append({"sigma": rep["instance"]["sigma"], "seed": rep["instance"]["seed"],
                         "check": c["name"], "status": c["status"], "data": c["data"]})
    _emit(doc, rows, cfg, out)
    return EXIT_VIOLATION if any(has_violation(r) for r in reports) else EXIT_OK


# -- experiments -------------------------------------------------------------------------


def _pa_pb_task(task) -> dict:
    sigma, cfg = task
    D = generate("cyclic", (10, 6))
    seed = derive_seed(cfg["seed"], "c10-6", *sigma)
    inst = StellarInstance(D, sigma, cfg["prime"], seed)
    r = compare_Pa_Pb_Pc(build_section5(inst), cfg["m_max"])
    return {
        "sigma": list(sigma),
        "seed": seed,
        "m_max": r.data["m_max"],
        "hf_Pa_equals_hf_Pb": r.data["hf_a_equals_hf_b"],
        "Pa_equals_Pb": r.data["P_a_equals_P_b"],
        "Pc_strictly_inside_Pa_cap_Pb": r.data["P_c_strictly_inside_intersection"],
        "Pb_equals_Pc_up_to_p1_minus_q": r.data["P_b_equals_P_c_up_to_p1_minus_q"],
        "hf_Pa": [d["hf_a"] for d in r.data["degrees"]],
        "hf_Pb": [d["hf_b"] for d in r.data["degrees"]],
        "hf_Pc": [d["hf_c"] for d in r.data["degrees"]],
        "status": r.status,
    }


def exp_c10_6(cfg: RunConfig, limit: int | None = None) -> list[dict]:
    edges = generate("cyclic", (10, 6)).faces_of_dim(1)
    if limit is not None:
        edges = edges[:limit]
    return _pmap(_pa_pb_task, [(e, asdict(cfg)) for e in edges], cfg.jobs)


def exp_scse(cfg: RunConfig) -> list[dict]:
    I, xs = scse_ideal(cfg.prime)
    seed_obj = build_artinian_seed(I, xs, 1)
    rows = []
    for key, label in (("I", "I"), ("C", "(I, T^2, T*I_L)"), ("G", "(I, T^2 - x1*x2, T*I_L)")):
        v = seed_obj.wlp(key, cfg.trials, cfg.seed)
        rows.append({"ideal": label, "outcome": v.outcome, "hf": v.hf, "seed": v.seed,
                     "trials": v.trials, "prime": v.prime, "first_failing_degree": v.first_failing_degree})
    return rows


def _conj_task(task) -> dict:
    name, sigma, cfg = task
    _, D = resolve_complex(name)
    seed = derive_seed(cfg["seed"], "conjecture-G", name, *sigma)
    inst = StellarInstance(D, sigma, cfg["prime"], seed)
    r = probe_conjecture_G(inst, cfg["trials"])
    return {"complex": name, "sigma": list(sigma), "seed": seed, "trials": cfg["trials"],
            "hf_G": r.data["hf_G"], "delta_plus": r.data["delta_plus"], "equal_count": r.data["equal_count"]}


def exp_conjecture_g(cfg: RunConfig) -> list[dict]:
    tasks = []
    for e in CORPUS:
        D = e.build()
        for q in (1, 2, 3):
            fs = D.faces_of_dim(q)
            if fs and q < D.dim + 1:
                tasks.append((e.name, fs[0], asdict(cfg)))
    return _pmap(_conj_task, tasks, cfg.jobs)


def _iff_task(task) -> dict:
    name, sigma, cfg = task
    _, D = resolve_complex(name)
    seed = derive_seed(cfg["seed"], "iff-sweep", name, *sigma)
    inst = StellarInstance(D, sigma, cfg["prime"], seed)
    a, b = check_iff(inst, cfg["trials"]), check_theorem_down(inst, cfg["trials"])
    return {"complex": name, "sigma": list(sigma), "q": inst.q, "d": inst.d, "seed": seed,
            "iff": a.status, "theorem_down": b.status,
            "wlp_D": a.data["wlp_D"]["outcome"], "wlp_D_sigma": a.data["wlp_D_sigma"]["outcome"]}


def exp_iff_sweep(cfg: RunConfig) -> list[dict]:
    tasks = []
    for e in CORPUS:
        D = e.build()
        for f in D.faces:
            q = len(f) - 1
            if q >= 1 and 2 * q > D.dim + 1:
                tasks.append((e.name, f, asdict(cfg)))
    return _pmap(_iff_task, tasks, cfg.jobs)


EXPERIMENTS = {
    "c10-6-pa-pb": exp_c10_6,
    "scse": exp_scse,
    "conjecture-G": exp_conjecture_g,
    "iff-sweep": exp_iff_sweep,
}


def cmd_experiment(args, out) -> int:
    cfg = _config(args)
    if args.name not in EXPERIMENTS:
        raise BadSpec(f"unknown experiment {args.name!r}; choose from {sorted(EXPERIMENTS)}")
    fn = EXPERIMENTS[args.name]
    rows = fn(cfg, args.limit) if args.name == "c10-6-pa-pb" else fn(cfg)
    doc = {"experiment": args.name, "config": asdict(cfg), "rows": rows}
    _emit(doc, rows, cfg, out)
    bad = any(r.get("status") == VIOLATION or VIOLATION in (r.get("iff"), r.get("theorem_down")) for r in rows)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_corpus(args, out) -> int:
    for e in CORPUS:
        out.write(f"{e.name}\t{e.kind} {' '.join(map(str, e.args))}\t{e.label}\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser):
    p.add_argument("--prime", type=int, default=gf.DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=None, help=f"falls back to ${SEED_ENV}, then 0")
    p.add_argument("--max-degree", type=int, default=None, help="degree bound (default d+q+2)")
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lefschetz-lab", description="Lefschetz properties and stellar subdivisions")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print a generated complex as JSON")
    g.add_argument("kind", choices=("simplex-boundary", "cross", "cyclic"))
    g.add_argument("args", nargs="+")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check-wlp", help="randomized WLP/SLP test")
    c.add_argument("input", help="corpus name, kind:args spec, complex JSON or ideal JSON")
    c.add_argument("--forms", type=int, default=None,
                   help="number of random linear forms (default: dimension for complexes, 0 for ideals)")
    c.add_argument("--property", choices=("wlp", "slp", "shortcut"), default="wlp")
    _common(c)
    c.set_defaults(func=cmd_check_wlp)

    v = sub.add_parser("verify", help="run stellar-subdivision checks on (complex, face)")
    v.add_argument("complex")
    v.add_argument("--sigma", action="append", required=True,
                   help="comma separated face, or 'all' for every face of dimension 1..3; repeatable")
    v.add_argument("--all", action="store_true")
    for k in CHECK_FLAGS:
        v.add_argument("--" + k.replace("_", "-"), dest=k, action="store_true")
    _common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="run a registered experiment")
    e.add_argument("name", choices=sorted(EXPERIMENTS))
    e.add_argument("--limit", type=int, default=None, help="c10-6-pa-pb: number of edges")
    _common(e)
    e.set_defaults(func=cmd_experiment)

    k = sub.add_parser("corpus", help="list the named complexes")
    k.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors share the generic error code; 2 means "witness absent"
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        return args.func(args, out)
    except (LabError, NotArtinian, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
