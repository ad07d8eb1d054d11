"""Command-line front end.

Every verification prints the claim it checks and the computed verdict; the
exit status is 0 exactly when all requested verifications pass.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import __version__, branchrules, charcalc, config, embeddings, mfsgate, polystruct, tableaux, wells
from .config import RunConfig, set_size_limit
from .errors import MFSError
from .rootdata import RootDatum, build_datum, parse_datum


# ---------------------------------------------------------------- helpers
def _fmt(x) -> str:
    return str(Fraction(x))


def _vec(v) -> str:
    return "(" + ",".join(_fmt(x) for x in v) + ")"


def _parse_vec(text: str) -> list[Fraction]:
    return [Fraction(t.strip()) for t in text.split(",") if t.strip()]


def _weight_fw(d: RootDatum, text: str, eps: bool) -> tuple[int, ...]:
    vals = _parse_vec(text)
    if eps:
        return d.eps_to_fw(vals)
    if any(v.denominator != 1 for v in vals) or len(vals) != d.nfw:
        raise MFSError(f"expected {d.nfw} integer fw-coordinates, got {text!r}")
    return tuple(int(v) for v in vals)


class Out:
    """Collects text lines or structured records and prints them once."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}
        self.ok = True

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def claim(self, tag: str, verdict: bool, detail: str = "") -> None:
        self.ok &= bool(verdict)
        status = "OK" if verdict else "FAIL"
        self.text(f"[{tag}] {detail + ': ' if detail else ''}{status}")
        self.data.setdefault("checks", []).append({"claim": tag, "detail": detail, "ok": bool(verdict)})

    def emit(self, csv_rows: list[list] | None = None) -> None:
        if self.fmt == "json":
            print(json.dumps(self.data, sort_keys=True, indent=1))
        elif self.fmt == "csv" and csv_rows is not None:
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(csv_rows)
            sys.stdout.write(buf.getvalue())
        else:
            print("\n".join(self.lines))


# ------------------------------------------------------------------ roots
def cmd_roots(args, cfg: RunConfig) -> int:
    d = parse_datum(args.spec)
    out = Out(cfg.output)
    pos = [r.eps for r in d.pos_roots]
    out.data = {"label": d.label, "rank": d.rank, "dim": d.group_dim, "num_pos_roots": len(pos),
                "components": [f"{f}{n}" for f, n in d.components],
                "eps_blocks": [list(b) for b in d.eps_blocks] if d.eps_blocks else [],
                "pos_roots": [[_fmt(x) for x in r] for r in pos],
                "fund_weights": [[_fmt(x) for x in w.eps] for w in d.fund_weights],
                "rho": [_fmt(x) for x in d.rho.eps]}
    out.text(f"{d.label}: rank {d.rank}, dim {d.group_dim}, {len(pos)} positive roots")
    if len(d.components) > 1:
        for (f, n), sl in zip(d.components, d.component_fw_slices):
            out.text(f"  block {f}{n}: fw-coordinates {sl.start}..{sl.stop - 1}")
    out.text("positive roots (epsilon):")
    for r in pos:
        out.text("  " + _vec(r))
    out.text("fundamental weights (epsilon):")
    for i, w in enumerate(d.fund_weights):
        out.text(f"  w{i + 1} = {_vec(w.eps)}")
    out.text(f"rho = {_vec(d.rho.eps)}")
    rows = [["root"]] + [[_vec(r)] for r in pos]
    out.emit(rows)
    return 0


# ----------------------------------------------------------------- branch
def _pair_maps(pair: str, variant: str):
    """(family for interlacing or None, embedding)."""
    src, _, dst = pair.upper().partition(":")
    if not src or not dst or src[0] not in "BD" or dst[0] not in "BD":
        raise MFSError(f"unsupported pair {pair!r}; use Bn:Dn or Dn:B(n-1)")
    n, m = int(src[1:]), int(dst[1:])
    if src[0] == "B" and dst[0] == "D" and n == m:
        return branchrules.B_TO_D, embeddings.b_to_d(n)
    if src[0] == "D" and dst[0] == "B" and m == n - 1:
        if variant and n == 4:
            return branchrules.D_TO_B, embeddings.d4_to_b3_twisted(variant)
        return branchrules.D_TO_B, embeddings.d_to_b(n)
    raise MFSError(f"unsupported pair {pair!r}")


def cmd_branch(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    fam, emb = _pair_maps(args.pair, args.variant if args.rule == "tau" else "")
    g, h = emb.target, emb.source
    lam = _weight_fw(g, args.weight, args.eps)
    eps = g.fw_to_eps(lam)
    out.data = {"pair": args.pair, "rule": args.rule, "weight_fw": list(lam),
                "weight_eps": [_fmt(x) for x in eps]}
    out.text(f"{g.label} -> {h.label}, lambda = {_vec(eps)} (fw {lam}), rule {args.rule}")
    rows = [["constituent_eps", "constituent_fw", "multiplicity"]]
    if args.rule == "tau":
        if g.label != "D4":
            raise MFSError("the tau rule is only defined for D4:B3")
        if args.mu_k is None:
            raise MFSError("--mu-k is required for the tau rule")
        got = branchrules.twisted_d4_to_b3_contains(eps, args.mu_k)
        out.data["contains"] = got
        out.text(f"Spin7 restriction contains {args.mu_k}*eps_1: {str(got).lower()}")
        rows.append([f"{args.mu_k}*eps_1", "", int(got)])
        if args.verify:
            mult = charcalc.restriction_multiplicity(emb, lam, (args.mu_k, 0, 0))
            out.claim("twisted rule == oracle", got == (mult == 1), f"oracle multiplicity {mult}")
        out.emit(rows)
        return 0 if out.ok else 1
    if args.rule == "interlace":
        parts = branchrules.interlace_branch(fam, eps)
        res = {h.eps_to_fw(p): 1 for p in parts}
    else:
        res = charcalc.branch(emb, lam)
    items = sorted(res.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    out.data["constituents"] = [{"fw": list(k), "eps": [_fmt(x) for x in h.fw_to_eps(k)], "mult": v}
                                for k, v in items]
    for k, v in items:
        out.text(f"  {_vec(h.fw_to_eps(k))}  fw {k}  x{v}")
        rows.append([_vec(h.fw_to_eps(k)), ",".join(map(str, k)), v])
    out.text(f"{len(items)} constituents")
    if args.mu_k is not None:
        mu = (args.mu_k,) + (0,) * (h.nfw - 1)
        out.text(f"contains {mu}: {str(res.get(mu, 0) > 0).lower()}")
    if args.verify:
        other = charcalc.branch(emb, lam) if args.rule == "interlace" else \
            {h.eps_to_fw(p): 1 for p in branchrules.interlace_branch(fam, eps)}
        out.claim("interlacing rule == oracle branching", other == res)
    out.emit(rows)
    return 0 if out.ok else 1


# ------------------------------------------------------------------- well
def _pair_from_args(args) -> wells.MFPair:
    key = args.pair.lower()
    if key == "so9-spin7":
        return wells.so9_spin7_pair()
    if key == "sln-diag":
        return wells.sln_diag_pair(args.n or 2)
    if key == "spsp":
        return wells.spsp_pair(args.m or 2, args.n or 2)
    raise MFSError(f"unknown pair {args.pair!r}")


def _mu_from_args(pair: wells.MFPair, args) -> tuple[int, ...]:
    k = args.ell if args.ell is not None else args.k
    return pair.mu(k or 0)


def cmd_well(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    pair = _pair_from_args(args)
    mu = _mu_from_args(pair, args)
    out.data = {"pair": pair.label, "mu": list(mu), "cutoff": cfg.cutoff}
    out.text(f"{pair.label}, mu = {mu}, cutoff {cfg.cutoff}")
    if args.bottom:
        bots = wells.bottom(pair, mu)
        pts = [wells.lambda_of(pair, mu, (0,) * len(pair.spherical_gens), b) for b in bots]
        out.data["bottom"] = [list(p) for p in pts]
        out.text(f"bottom: {len(pts)} elements")
        for p in pts:
            out.text(f"  {p}")
        out.emit([["lambda"]] + [[",".join(map(str, p))] for p in pts])
        return 0
    closed = wells.closed_form_slice(pair, mu, cfg.cutoff)
    w = wells.build_well(pair, mu, cfg.cutoff, oracle=False)
    out.data["elements"] = [{"lambda": list(l), "degree": w.degree[l], "tag": w.order_tag[l]}
                            for l in w.elements]
    for l in w.elements:
        out.text(f"  {l}  degree {w.degree[l]}  tag {w.order_tag[l]}")
    out.text(f"{len(closed)} elements")
    if args.verify:
        oracle = wells.enumerate_well(pair, mu, cfg.cutoff, workers=args.workers)
        out.claim("closed form ≡ oracle", sorted(oracle) == sorted(closed),
                  f"{len(oracle)} oracle elements")
    rows = [["lambda", "degree", "tag"]] + [[",".join(map(str, l)), w.degree[l], w.order_tag[l]]
                                           for l in w.elements]
    out.emit(rows)
    return 0 if out.ok else 1


# ------------------------------------------------------------- gate/audit
def cmd_gate(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    entry = mfsgate.get_entry(args.table, args.row)
    row = mfsgate.audit_entry(entry)
    h = entry.h_spec.datum()
    out.data = {"row": entry.key, "G": entry.g_spec.label, "H": entry.h_spec.label,
                "Hstar": entry.hstar_spec.label, "pos_roots_G": row.pos_roots_G,
                "c": row.c, "r": row.r, "maximal_parabolic_dims": {f"a{i + 1}": v for i, v in row.maximal.items()},
                "listed": [{"jc": j, "dim": dp, "passes": p} for j, dp, p in row.listed],
                "verdict": row.verdict, "note": row.note}
    out.text(f"{entry.key}: G = {entry.g_spec.label}, H = {entry.h_spec.label}, "
             f"H* = {entry.hstar_spec.label}, params {entry.params}")
    out.text(f"|R+_G| = {row.pos_roots_G}, dim H = {row.dimH}, c = {row.c}, r = {row.r}")
    for i, v in row.maximal.items():
        verdict = "PASS (NECESSARY-ONLY)" if v >= row.pos_roots_G else "FAIL"
        out.text(f"  maximal parabolic {{a{i + 1}}}^c of {h.label}: dim {v} -> {verdict}")
    for j, dp, p in row.listed:
        out.text(f"  listed J^c = {j}: dim {dp} -> {'PASS (NECESSARY-ONLY)' if p else 'FAIL'}")
    out.text(f"verdict: {row.verdict}")
    if row.note:
        out.text(f"note: {row.note}")
    out.claim("complexity c = 0 and listed parabolics pass dim P >= |R+_G|", row.ok)
    out.emit([mfsgate.CSV_HEADER, row.as_csv_row()])
    return 0 if out.ok else 1


def cmd_audit(args, cfg: RunConfig) -> int:
    rows = mfsgate.audit_tables()
    ok = all(r.ok for r in rows)
    if cfg.output == "json":
        print(json.dumps([dict(zip(mfsgate.CSV_HEADER, r.as_csv_row())) for r in rows],
                         sort_keys=True, indent=1))
    else:
        sys.stdout.write(mfsgate.audit_csv(rows))
        anomalies = sum(1 for r in rows if r.c != 0)
        print(f"# c-anomalies: {anomalies}; all rows consistent: {'OK' if ok else 'FAIL'}",
              file=sys.stderr)
    return 0 if ok else 1


# ------------------------------------------------------------- recurrence
def cmd_recurrence(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    pair = _pair_from_args(args)
    mu = _mu_from_args(pair, args)
    i = args.i
    rows = [["lambda_prime", "weight_compatible"]]
    if args.leading:
        d = tuple(int(x) for x in args.d.split(","))
        reps = polystruct.leading_structure(pair, mu, d, i)
        lead = tuple(x + (j == i) for j, x in enumerate(d))
        out.data = {"pair": pair.label, "mu": list(mu), "reports": [json.loads(r.to_json()) for r in reps]}
        for r in reps:
            out.text(f"d' = {r.d_prime}: diagonal_full {r.diagonal_full}, "
                     f"block_upper {r.block_upper}, strictly_upper {r.strictly_upper}")
            for line in r.pattern:
                out.text("   " + " ".join(map(str, line)))
        full = [r for r in reps if r.d_prime == lead]
        out.claim("leading block A_{i,d+delta_i} has full diagonal", all(r.diagonal_full for r in full))
        out.emit([["d_prime", "diagonal_full", "block_upper", "strictly_upper"]]
                 + [[",".join(map(str, r.d_prime)), r.diagonal_full, r.block_upper, r.strictly_upper]
                    for r in reps])
        return 0 if out.ok else 1
    lam = _weight_fw(pair.g, args.lam, args.eps)
    out.data = {"pair": pair.label, "mu": list(mu), "lambda": list(lam)}
    if args.schur:
        c = polystruct.schur_constant(pair, mu, lam)
        out.data["schur_constant"] = _fmt(c)
        out.text(f"c_lambda = dim(mu)^2/dim(lambda) = {c}")
        rows = [["schur_constant"], [_fmt(c)]]
    else:
        rep = polystruct.support_report(pair, mu, lam, i)
        wc = set(rep.weight_compatible)
        out.data.update(json.loads(rep.to_json()))
        out.text(f"phi_{i} Phi_{lam}: {len(rep.admissible)} admissible, {len(wc)} weight-compatible")
        for lp in rep.admissible:
            out.text(f"  {lp}{'  *' if lp in wc else ''}")
            rows.append([",".join(map(str, lp)), lp in wc])
        out.text(f"guaranteed nonzero: {rep.guaranteed}")
        out.claim("support within one degree of lambda", polystruct.support_degree_bound(pair, mu, lam, i))
    out.emit(rows)
    return 0 if out.ok else 1


# ----------------------------------------------------------------- tableaux
def cmd_lr(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    if args.chain:
        ks = [int(x) for x in args.chain.split(",")]
        fill = tableaux.proof_filling(args.k, ks)
        lam, mu, nu = tableaux.proof_shapes(args.k, ks)
        out.data = {"lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts),
                    "filling": [list(r) for r in fill.entries], "lr_valid": fill.is_lr()}
        out.text(f"shape {lam.parts}/{mu.parts}, content {nu.parts}")
        out.text(fill.ascii())
        out.claim("explicit filling is an LR tableau with content nu",
                  fill.is_lr() and fill.content() == nu)
        for msg in tableaux.proof_count_discrepancies(args.k, ks):
            out.text("note: " + msg)
        out.emit([["row", "entries"]] + [[r, " ".join(map(str, e))] for r, e in enumerate(fill.entries)])
        return 0 if out.ok else 1
    lam = tableaux.as_partition(int(x) for x in args.lam.split(",") if x.strip())
    mu = tableaux.as_partition(int(x) for x in args.mu.split(",") if x.strip())
    res = tableaux.tensor_via_lr(args.n, lam, mu)
    out.data = {"n": args.n, "products": [{"partition": list(p.parts), "mult": c} for p, c in res.items()]}
    for p, c in res.items():
        out.text(f"  {p.parts or '()'}  x{c}")
    if args.verify:
        d = build_datum((("A", args.n),))
        bk = charcalc.tensor_decompose(d, tableaux.partition_to_fw(lam, args.n),
                                       tableaux.partition_to_fw(mu, args.n))
        via = {tableaux.partition_to_fw(p, args.n): c for p, c in res.items()}
        out.claim("Littlewood-Richardson ≡ Brauer-Klimyk", via == bk)
    out.emit([["partition", "mult"]] + [[",".join(map(str, p.parts)), c] for p, c in res.items()])
    return 0 if out.ok else 1


# ---------------------------------------------------------------- monotone
def cmd_monotone(args, cfg: RunConfig) -> int:
    out = Out(cfg.output)
    pair = _pair_from_args(args)
    rng = random.Random(cfg.seed)
    records = wells.sample_monotonicity(pair, args.samples, args.kmax, rng, min(cfg.cutoff, 4))
    for rep in records:
        out.text(f"  lambda {rep.lam} sigma {rep.sigma} mu {rep.mu}: {rep.mults}")
    out.data = {"samples": [{"lambda": list(r.lam), "sigma": list(r.sigma), "mu": list(r.mu),
                             "mults": r.mults} for r in records]}
    out.claim("m(lambda + k sigma) nondecreasing in k", all(r.monotone for r in records),
              f"{len(records)} samples")
    out.emit([["lambda", "sigma", "mu", "mults"]]
             + [[",".join(map(str, r.lam)), ",".join(map(str, r.sigma)), ",".join(map(str, r.mu)),
                 " ".join(map(str, r.mults))] for r in records])
    return 0 if out.ok else 1


# ------------------------------------------------------------------ parser
def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pair", required=True, choices=["so9-spin7", "sln-diag", "spsp"])
    p.add_argument("--k", type=int, help="parameter of mu (so9-spin7, sln-diag)")
    p.add_argument("--ell", type=int, help="parameter of mu (spsp)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="mfspectra", description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cutoff", type=int, default=None)
    common.add_argument("--size-limit", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("roots", parents=[common], help="root data of a group such as B4 or A2xA2")
    p.add_argument("spec")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("branch", parents=[common], help="B/D branching by interlacing, twist or oracle")
    p.add_argument("--pair", required=True, help="Bn:Dn or Dn:B(n-1)")
    p.add_argument("--rule", choices=["interlace", "tau", "oracle"], default="interlace")
    p.add_argument("-w", "--weight", required=True)
    p.add_argument("--eps", action="store_true", help="weight given in epsilon-coordinates (p/q allowed)")
    p.add_argument("--mu-k", type=int, default=None)
    p.add_argument("--variant", default="tau", choices=sorted(embeddings.twist_variants()))
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("well", parents=[common], help="slice or bottom of a mu-well")
    _add_pair_args(p)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--bottom", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_well)

    p = sub.add_parser("gate", parents=[common], help="dimension gate for one table row")
    p.add_argument("--table", type=int, required=True, choices=[1, 2])
    p.add_argument("--row", required=True)
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("audit", parents=[common], help="audit both classification tables (CSV)")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("recurrence", parents=[common], help="support of phi_i Phi_lambda")
    _add_pair_args(p)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--eps", action="store_true")
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--leading", action="store_true")
    p.add_argument("--d", default="0", help="multi-index for --leading, comma separated")
    p.add_argument("--schur", action="store_true")
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("lr", parents=[common], help="SL(n+1) tensor products via LR fillings")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--lam", default="")
    p.add_argument("--mu", default="")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--k", type=int, default=1, help="with --chain: show the explicit bottom filling")
    p.add_argument("--chain", default=None)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("monotone", parents=[common], help="sample m(lambda + k sigma) sequences")
    _add_pair_args(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(func=cmd_monotone)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    previous = config._size_limit
    try:
        cfg = RunConfig(cutoff=8 if args.cutoff is None else args.cutoff,
                        size_limit=args.size_limit if args.size_limit is not None else config.size_limit(),
                        output=args.output, seed=args.seed)
        set_size_limit(cfg.size_limit)
        if args.cmd == "recurrence" and not args.leading and args.lam is None:
            raise MFSError("--lambda is required unless --leading is given")
        return args.func(args, cfg)
    except (MFSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        config._size_limit = previous


if __name__ == "__main__":
    sys.exit(main())
