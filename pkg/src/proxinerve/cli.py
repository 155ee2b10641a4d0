"""proxinerve command line: generate sites, analyze meshes, render SVG, check axioms.

Exit status is 0 when every requested verification passes, 1 when a
theorem or axiom check fails, and 2 for bad input or configuration.
Setting PROXINERVE_EPS overrides the geometric tolerance (discouraged).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import axioms
from . import report_schema as rs
from .description import SIDE_COUNT, DescriptorSpec
from .errors import ConfigError, ProxinerveError, SitesParseError
from .pipeline import analyze
from .render import render_svg
from .voronoi import make_bbox

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def parse_bbox(text: str) -> tuple:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"bbox must be x0,y0,x1,y1: {text!r}") from None
    make_bbox(vals)  # validates arity and degeneracy
    return vals


def read_sites(path) -> np.ndarray:
    """Sites from ``.json`` (array of [x, y]) or CSV ``x,y`` with an optional header."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SitesParseError(e.msg, e.lineno) from None
        if not isinstance(data, list):
            raise SitesParseError("expected a JSON array of [x, y] pairs", 1)
        rows = []
        for k, item in enumerate(data):
            if not (isinstance(item, list) and len(item) == 2
                    and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)):
                raise SitesParseError(f"element {k} is not an [x, y] pair")
            rows.append(item)
    else:
        rows, header_allowed = [], True
        for lineno, rec in enumerate(csv.reader(io.StringIO(text)), start=1):
            if not rec or all(not f.strip() for f in rec):
                continue
            if len(rec) != 2:
                raise SitesParseError(f"expected 2 fields, got {len(rec)}", lineno)
            try:
                rows.append([float(rec[0]), float(rec[1])])
            except ValueError:
                if not header_allowed:
                    raise SitesParseError(f"not a number: {','.join(rec)!r}", lineno) from None
            header_allowed = False  # only the first record may be a header
    if not rows:
        raise SitesParseError("no sites in file", 1)
    arr = np.asarray(rows, dtype=float)
    if not np.isfinite(arr).all():
        raise SitesParseError("non-finite coordinate")
    return arr


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _spec(text) -> DescriptorSpec:
    return DescriptorSpec.parse(text) if text else SIDE_COUNT


def generate_sites(seed: int, count: int, bbox) -> np.ndarray:
    if count < 1:
        raise ConfigError("count must be >= 1")
    x0, y0, x1, y1 = bbox
    rng = np.random.default_rng(seed)
    pts = np.empty((0, 2))
    while len(pts) < count:
        draw = rng.uniform((x0, y0), (x1, y1), (count - len(pts), 2))
        pts = np.unique(np.vstack([pts, draw]), axis=0) if len(pts) else np.unique(draw, axis=0)
    # np.unique sorts; re-shuffle deterministically so ids are not coordinate-ordered
    return pts[rng.permutation(len(pts))][:count]


def cmd_generate(args) -> int:
    bbox = parse_bbox(args.bbox)
    pts = generate_sites(args.seed, args.count, bbox)
    lines = ["x,y"] + ["%.17g,%.17g" % (x, y) for x, y in pts]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _analysis(args):
    sites = read_sites(args.sites)
    bbox = parse_bbox(args.bbox) if args.bbox else None
    return analyze(sites, bbox, _spec(args.spec))


def cmd_analyze(args) -> int:
    a = _analysis(args)
    if args.format == "svg":
        _write(render_svg(a.tessellation, a.mncs), args.out)
    else:
        _write(rs.emit(a.to_report()), args.out)
    return EXIT_OK if a.passed else EXIT_FAIL


def cmd_render(args) -> int:
    a = _analysis(args)
    _write(render_svg(a.tessellation, a.mncs), args.out)
    return EXIT_OK


def cmd_check_axioms(args) -> int:
    if args.replay:
        report = rs.parse(Path(args.replay).read_text(encoding="utf-8"))
        reports = []
        for r in report.get("reports", []):
            configs = [axioms.Configuration.from_dict(f["configuration"])
                       for f in r.get("failures", []) if "configuration" in f]
            if configs and r["axiom"] in axioms.AXIOM_IDS:
                reports.append(axioms.check_axiom(r["axiom"], configs))
        out = rs.axiom_reports_to_dict(reports, report.get("seed", args.seed), len(reports))
        out["kind"] = "axiom_replay"
    else:
        if args.trials < 1:
            raise ConfigError("trials must be >= 1")
        reports = axioms.run_full_suite(args.seed, args.trials)
        out = rs.axiom_reports_to_dict(reports, args.seed, args.trials)
    _write(rs.emit(out), args.out)
    return EXIT_OK if out["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="proxinerve", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write uniform random sites as CSV")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=50)
    g.add_argument("--bbox", default="0,0,1,1")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    for name, func, helptext in (("analyze", cmd_analyze, "tessellate and verify every MNC nerve"),
                                 ("render", cmd_render, "draw cells, MNCs and spokes as SVG")):
        a = sub.add_parser(name, help=helptext)
        a.add_argument("sites_path", nargs="?", help="sites file (same as --sites)")
        a.add_argument("--sites", help="CSV x,y or JSON array of [x, y]")
        a.add_argument("--bbox", help="x0,y0,x1,y1 (default: site extent padded by 10%%)")
        a.add_argument("--spec", help="descriptor spec, e.g. side_count,area:0.01")
        a.add_argument("--seed", type=int, default=0, help="unused by the deterministic pipeline")
        a.add_argument("--out")
        if name == "analyze":
            a.add_argument("--format", choices=("json", "svg"), default="json")
        a.set_defaults(func=func)

    c = sub.add_parser("check-axioms", help="randomized axiom and proposition suite")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--replay", help="re-run the counterexamples stored in a previous report")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check_axioms)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "sites_path", None) and not args.sites:
        args.sites = args.sites_path
    if args.command in ("analyze", "render") and not args.sites:
        print("proxinerve: error: a sites file is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (ProxinerveError, ValueError) as e:
        print(f"proxinerve: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"proxinerve: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
