"""Command-line front end.

Every command prints a JSON-lines report: one record per check, then a
summary record. Exit status is 0 when everything passed, 1 on a verification
or membership failure, 2 on bad input or configuration.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from . import __version__
from .errors import BudgetExceeded, HBSiegelError, InputError, MembershipError
from .io import (dumps, field_from_json, hbmatrix_from_json, hbmatrix_to_json,
                 hbpoint_from_json, hbpoint_to_json, hbtorsion_from_json, hbtorsion_to_json,
                 matrix_to_json, read_json, siegel_to_json, torsion_to_json, vec_to_json)
from .linalg import RatMatrix, format_fraction
from .modembed import (check_equivariance, compute_embedding_data, imat_contains,
                       imat_max_width, iota_bar, iota_bar_matrix, iota_point)
from .numfield import NumberField
from .sampling import (random_g_prime, random_hb_point, random_hb_torsion, random_sl_dmo,
                       trial_rng)
from .symplectic import (gamma_n_check, gamma_prime_n_check, gsp_check, sl_dm_o_check,
                         standard_form, trace_form_gram)
from .torsion import (check_cartesian_transport, enumerate_hb_torsion, hb_order,
                      lattice_equivariance, transport)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_BUDGET = 100_000


@dataclass
class RunConfig:
    field: dict
    level: int = 3
    precision: int = 64
    seed: int = 0
    trials: int = 100
    budget: int = DEFAULT_BUDGET
    extra: dict = field(default_factory=dict)

    def validate(self, min_level: int = 3) -> None:
        if self.level < min_level:
            raise InputError(f"level must be >= {min_level}")
        if self.precision < 1:
            raise InputError("precision must be >= 1")
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError("seed must be an unsigned 64-bit integer")

    def echo(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k != "extra"} | self.extra


@dataclass
class Report:
    command: str
    config: dict
    records: list = field(default_factory=list)
    version: str = __version__

    def check(self, name: str, ok: bool, witness=None, **extra) -> bool:
        rec = {"type": "check", "name": name, "status": "pass" if ok else "fail"}
        if witness is not None:
            rec["witness"] = witness
        rec.update(extra)
        self.records.append(rec)
        return ok

    def add(self, record: dict) -> None:
        self.records.append(record)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if r.get("status") == "fail")

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.get("status") == "pass")

    def summary(self) -> dict:
        return {"type": "summary", "command": self.command, "passed": self.passed,
                "failed": self.failed, "config": self.config, "version": self.version}

    def lines(self) -> list[str]:
        return [dumps(r) for r in self.records] + [dumps(self.summary())]

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.failed else EXIT_OK


def _trials(report: Report, name: str, n: int, seed: int, body: Callable) -> None:
    """Run ``body(rng)`` n times; it returns None on success or a witness dict."""
    for i in range(n):
        witness = body(trial_rng(seed, name, i))
        if witness is not None:
            report.check(name, False, witness | {"trial": i}, trials=n)
            return
    report.check(name, True, trials=n)


# --- commands ------------------------------------------------------------------------

def cmd_field_info(cfg: RunConfig) -> Report:
    cfg.validate(min_level=1)
    nf = field_from_json(cfg.field)
    rep = Report("field-info", cfg.echo())
    emb = nf.real_embeddings(cfg.precision)
    rep.check("field_info", True, {
        "degree": nf.degree,
        "gram": matrix_to_json(nf.gram),
        "discriminant": format_fraction(nf.discriminant),
        "dual_basis": [vec_to_json(e.coords) for e in nf.dual_basis],
        "embeddings": [[format_fraction(iv.lo), format_fraction(iv.hi)] for iv in emb.intervals],
    })
    return rep


def _duality_ok(nf: NumberField) -> bool:
    return all((es * e).trace() == (1 if j == k else 0)
               for j, es in enumerate(nf.dual_basis) for k, e in enumerate(nf.basis))


def cmd_verify_embedding(cfg: RunConfig) -> Report:
    cfg.validate()
    nf = field_from_json(cfg.field)
    n, seed, trials = cfg.level, cfg.seed, cfg.trials
    rep = Report("verify-embedding", cfg.echo())

    rep.check("dual_basis_duality", _duality_ok(nf))
    tf = trace_form_gram(nf)
    rep.check("trace_form_is_standard", tf == standard_form(nf.degree),
              None if tf == standard_form(nf.degree) else {"gram": matrix_to_json(tf)})

    def homomorphism(rng):
        h1 = random_g_prime(nf, rng, positive=False)
        h2 = random_g_prime(nf, rng, positive=False)
        m1, m2, m12 = iota_bar_matrix(h1), iota_bar_matrix(h2), iota_bar_matrix(h1 @ h2)
        nu = gsp_check(m1)
        if m12 != m1 @ m2 or nu is None or nu != h1.det().as_rational():
            return {"h1": hbmatrix_to_json(h1), "h2": hbmatrix_to_json(h2)}
        return None

    def sl_to_sp(rng):
        h = random_sl_dmo(nf, rng)
        m = iota_bar_matrix(h)
        if not (sl_dm_o_check(h) and m.is_integral() and gsp_check(m) == 1):
            return {"h": hbmatrix_to_json(h), "image": matrix_to_json(m)}
        return None

    def gamma_prime_to_gamma(rng):
        h = random_sl_dmo(nf, rng, level=n)
        if not (gamma_prime_n_check(h, n) and gamma_n_check(iota_bar_matrix(h), n)):
            return {"h": hbmatrix_to_json(h)}
        return None

    def equivariance(rng):
        h = random_sl_dmo(nf, rng) if rng.random() < 0.5 else random_g_prime(nf, rng)
        tau = random_hb_point(nf, rng)
        if not check_equivariance(h, tau):
            return {"h": hbmatrix_to_json(h), "tau": hbpoint_to_json(tau)}
        return None

    _trials(rep, "iota_bar_homomorphism", trials, seed, homomorphism)
    _trials(rep, "sl_to_sp2g_z", trials, seed, sl_to_sp)
    _trials(rep, "gamma_prime_to_gamma", trials, seed, gamma_prime_to_gamma)
    _trials(rep, "equivariance", trials, seed, equivariance)

    data = compute_embedding_data(nf, cfg.precision)
    enc = data.identity_enclosure()
    rep.check("interval_identity_enclosure", imat_contains(enc, RatMatrix.identity(nf.degree)),
              {"precision": data.precision,
               "max_offdiag_width": format_fraction(imat_max_width(enc, offdiag_only=True))})

    h = random_sl_dmo(nf, trial_rng(seed, "interval_conjugation", 0))
    rep.check("interval_conjugation_formula",
              imat_contains(data.iota_bar_enclosure(h), iota_bar_matrix(h)))
    return rep


def cmd_map(cfg: RunConfig, kind: str, obj: dict) -> Report:
    cfg.validate(min_level=1)
    nf = field_from_json(cfg.field)
    rep = Report("map", cfg.echo() | {"kind": kind})
    try:
        if kind == "matrix":
            h = hbmatrix_from_json(nf, obj)
            img = iota_bar(h)
            rep.check("map_matrix", True, {"iota_bar": matrix_to_json(img.m),
                                           "nu": format_fraction(img.nu)})
        elif kind == "point":
            tau = hbpoint_from_json(nf, obj)
            rep.check("map_point", True, siegel_to_json(iota_point(tau)))
        elif kind == "torsion":
            t = hbtorsion_from_json(nf, obj)
            v = transport(t)
            rep.check("map_torsion", True, {"input": hbtorsion_to_json(t),
                                            "output": torsion_to_json(v), "order": v.order})
        else:
            raise InputError(f"unknown object kind {kind!r}")
    except MembershipError as exc:
        rep.check(f"map_{kind}", False, {"reason": type(exc).__name__, "message": str(exc)})
    except KeyError as exc:
        raise InputError(f"object is missing key {exc}") from None
    return rep


def cmd_torsion_suite(cfg: RunConfig) -> Report:
    cfg.validate(min_level=1)
    nf = field_from_json(cfg.field)
    n, g, seed = cfg.level, nf.degree, cfg.seed
    total = n ** (2 * g)
    if total > cfg.budget:
        raise BudgetExceeded(f"{total} torsion points exceed the budget {cfg.budget}")
    rep = Report("torsion-suite", cfg.echo())

    points = list(enumerate_hb_torsion(nf, n))
    images = []
    order_bad = None
    for t in points:
        v = transport(t)
        images.append(v)
        if order_bad is None and hb_order(t) != v.order:
            order_bad = hbtorsion_to_json(t)
        rep.add({"type": "transport", "input": hbtorsion_to_json(t),
                 "output": torsion_to_json(v), "order": v.order})

    rep.check("transport_bijective", len(set(images)) == total == len(points),
              {"points": total, "distinct_images": len(set(images))})
    rep.check("transport_order_preserving", order_bad is None, order_bad)

    def additive(rng):
        s, t = random_hb_torsion(nf, rng, n), random_hb_torsion(nf, rng, n)
        if transport(s + t) != transport(s) + transport(t):
            return {"s": hbtorsion_to_json(s), "t": hbtorsion_to_json(t)}
        return None

    _trials(rep, "transport_additive", cfg.trials, seed, additive)

    cart_bad = None
    for i, t in enumerate(points):
        rng = trial_rng(seed, "cartesian", i)
        for _ in range(5):
            tau = random_hb_point(nf, rng)
            if not check_cartesian_transport(t, tau):
                cart_bad = {"t": hbtorsion_to_json(t), "tau": hbpoint_to_json(tau)}
                break
        if cart_bad:
            break
    rep.check("cartesian_transport", cart_bad is None, cart_bad, points=total, taus_per_point=5)

    def equivariant(rng):
        t, h = random_hb_torsion(nf, rng, n), random_sl_dmo(nf, rng)
        if not lattice_equivariance(t, h):
            return {"t": hbtorsion_to_json(t), "h": hbmatrix_to_json(h)}
        return None

    _trials(rep, "lattice_equivariance", cfg.trials, seed, equivariant)
    return rep


# --- argument parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbsiegel",
        description="Exact checks of the Hilbert-Blumenthal to Siegel modular embedding.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", required=True, help="field description JSON")
        p.add_argument("--level", type=int, default=3, help="level n (default 3)")
        p.add_argument("--precision", type=int, default=64, help="interval precision in bits")
        p.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")
        p.add_argument("--trials", type=int, default=100, help="random trials per suite")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum number of torsion points to enumerate")
        p.add_argument("--json", dest="json_out", help="also write the report to this path")

    common(sub.add_parser("field-info", help="degree, gram, discriminant, dual basis, embeddings"))
    common(sub.add_parser("verify-embedding", help="run the embedding verification suites"))
    p_map = sub.add_parser("map", help="apply iota_bar, iota or torsion transport")
    p_map.add_argument("kind", choices=["matrix", "point", "torsion"])
    p_map.add_argument("--object", required=True, help="object JSON")
    common(p_map)
    common(sub.add_parser("torsion-suite", help="enumerate and transport n-torsion"))
    return parser


def _emit(lines: Iterable[str], json_out: str | None, stream) -> None:
    text = "\n".join(lines) + "\n"
    stream.write(text)
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(text)


def main(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(field=read_json(args.field), level=args.level, precision=args.precision,
                        seed=args.seed, trials=args.trials, budget=args.budget)
        if args.command == "field-info":
            rep = cmd_field_info(cfg)
        elif args.command == "verify-embedding":
            rep = cmd_verify_embedding(cfg)
        elif args.command == "map":
            rep = cmd_map(cfg, args.kind, read_json(args.object))
        else:
            rep = cmd_torsion_suite(cfg)
    except (InputError, ValueError, TypeError) as exc:
        _emit([dumps({"type": "error", "error": type(exc).__name__, "message": str(exc)})],
              args.json_out, stream)
        return EXIT_INPUT
    except HBSiegelError as exc:
        _emit([dumps({"type": "error", "error": type(exc).__name__, "message": str(exc)})],
              args.json_out, stream)
        return EXIT_FAIL
    _emit(rep.lines(), args.json_out, stream)
    return rep.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
