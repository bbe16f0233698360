"""
Command Handlers

One handler per subcommand. Each takes the parsed arguments and the
resolved Config and returns the text for stdout together with an exit code.
"""

import json
import logging
import re
from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional

from pydantic import BaseModel

from ..dynkin import DynkinReport, cm_classification, positive_roots
from ..dynkin.diagrams import DynkinType
from ..gp import (
    AnalysisReport,
    GpIndec,
    SingularityDescriptor,
    T2Descriptor,
    analyze,
    class_of,
    gp_indecomposables,
    relation_quiver,
    singularity_descriptor,
    t2_singularity_descriptor,
)
from ..oracle import realize_indec, realize_module
from ..qalg import BoundQuiverAlgebra, load_algebra
from ..repcat import (
    AlgebraVerification,
    ComponentList,
    DensityReport,
    GpRep,
    GpRepVerification,
    Interval,
    LiftCheck,
    ProjInterval,
    QuiverDocument,
    SequenceList,
    SnObject,
    SnReport,
    StableRepFile,
    all_almost_split_sn,
    almost_split_sn,
    check_almost_split_sequence,
    component_report,
    density_suite,
    export_quiver,
    knit_stable_component,
    lift,
    load_stable_rep,
    psi,
    resolve_quiver,
    sequence_report,
    sn_report,
    stable_components,
    stable_isomorphic,
    verify_algebra,
    verify_gp_rep,
)
from ..repcat.components import expected_seed_period
from ..utils.data_manager import MatrixDumper
from ..utils.errors import UnsupportedFormat, ValidationError
from .config import Config

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    output: str
    exit_code: int = 0


Handler = Callable[[Namespace, Config], CommandResult]

SCHEMAS: Dict[str, type] = {
    "analysis": AnalysisReport,
    "singularity": SingularityDescriptor,
    "t2": T2Descriptor,
    "sn": SnReport,
    "sequence": SequenceList,
    "component": ComponentList,
    "dynkin": DynkinReport,
    "gprep": LiftCheck,
    "verification": GpRepVerification,
    "suite": AlgebraVerification,
    "density": DensityReport,
    "quiver": QuiverDocument,
    "stable-rep": StableRepFile,
}

_OBJECT = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*,\s*([^\],\s]+)\s*\]$")


def _json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2, by_alias=True)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _no_dot(command: str) -> NoReturn:
    raise UnsupportedFormat(f"'{command}' has no DOT output; use --format text or json")


def _dumper(config: Config) -> Optional[MatrixDumper]:
    return MatrixDumper(config.dump_matrices) if config.dump_matrices else None


def _dump_rep(dumper: MatrixDumper, alg: BoundQuiverAlgebra, rep: GpRep, p: int):
    for v, module in rep.vertices.items():
        if module.summands:
            dumper.dump_module(f"vertex_{v}", realize_module(alg, module, p))


def parse_indec(alg: BoundQuiverAlgebra, text: str) -> GpIndec:
    """``e_1`` / ``e_1Λ`` for a vertex projective, ``x`` / ``xΛ`` for an arrow ideal."""
    label = text[:-1] if text.endswith("Λ") else text
    if label.startswith("e_") and alg.quiver.has_vertex(label[2:]):
        return GpIndec.projective(label[2:])
    alg.quiver.arrow(label)
    return GpIndec.arrow_ideal(label)


def parse_sn_object(alg: BoundQuiverAlgebra, text: str) -> SnObject:
    """Read ``[i,j,x]`` or ``[i,j,e_v]`` as an S_n object.

    Raises:
        ValidationError: malformed text or unknown label
    """
    match = _OBJECT.match(text.strip())
    if not match:
        raise ValidationError(f"Cannot read object {text!r}; expected [i,j,x] or [j,j,e_v]")
    i, j = int(match.group(1)), int(match.group(2))
    G = parse_indec(alg, match.group(3))
    if G.is_projective:
        return ProjInterval(i, j, G).normalized()
    class_of(alg, G)
    return Interval(i, j, G)


# ----------------------------------------------------------------------
# analyze / sing
# ----------------------------------------------------------------------

def cmd_analyze(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    report = analyze(alg)
    dumper = _dumper(config)
    if dumper:
        p = config.prime_for(alg)
        for G in gp_indecomposables(alg):
            dumper.dump_module(str(G).replace("Λ", ""), realize_indec(alg, G, p))
    if config.output_format == "json":
        return CommandResult(_json(report))
    if config.output_format == "dot":
        return CommandResult(export_quiver(relation_quiver(alg), "dot"))
    return CommandResult(report.render() + "\n")


def cmd_sing(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    report = t2_singularity_descriptor(alg) if args.t2 else singularity_descriptor(alg)
    if config.output_format == "json":
        return CommandResult(_json(report))
    if config.output_format == "dot":
        _no_dot("sing")
    values = report.cycle_lengths if args.t2 else report.periods
    multiset = "{" + ",".join(str(v) for v in values) + "}"
    return CommandResult(f"{multiset}\n{report.text}\n")


# ----------------------------------------------------------------------
# sn / ars / component
# ----------------------------------------------------------------------

def cmd_sn(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    report = sn_report(alg, args.n)
    if config.output_format == "json":
        return CommandResult(_json(report))
    if config.output_format == "dot":
        _no_dot("sn")
    if args.mode == "count":
        return CommandResult(f"{report.total}\n")
    lines = [
        f"S_{report.n}(Gprj-Λ) over {report.algebra or '<unnamed>'}: {report.total} "
        f"indecomposables ({report.non_projective} non-projective)"
    ]
    width = max((len(o.name) for o in report.objects), default=0)
    for obj in report.objects:
        tag = "  (projective)" if obj.projective else ""
        lines.append(f"  {obj.name.ljust(width)}  {obj.shape}{tag}")
    return CommandResult("\n".join(lines) + "\n")


def _render_sequence(seq_model) -> List[str]:
    middle = " ⊕ ".join(seq_model.middles)
    lines = [f"0 -> {seq_model.left} -> {middle} -> {seq_model.right} -> 0  ({seq_model.family})"]
    for k, (f, g) in enumerate(zip(seq_model.f, seq_model.g), start=1):
        lines.append(f"  vertex {k}: f = {f}  g = {g}")
    check = seq_model.check
    if check is not None:
        lines.append(
            f"  exact: {_yes(check.exact)}, commutes: {_yes(check.commutes)}, "
            f"additive: {_yes(check.additive)}"
        )
    return lines


def cmd_ars(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    if args.at:
        sequences = [almost_split_sn(alg, args.n, parse_sn_object(alg, args.at))]
    else:
        sequences = all_almost_split_sn(alg, args.n)
    if config.output_format == "dot":
        return CommandResult(export_quiver(sequences, "dot"))
    p = config.prime_for(alg)
    models = []
    failed = False
    for seq in sequences:
        check = check_almost_split_sequence(alg, seq, p) if args.check else None
        failed |= check is not None and not check.passed
        models.append(sequence_report(alg, seq, check))
    code = 1 if failed else 0
    if config.output_format == "json":
        return CommandResult(_json(SequenceList(algebra=alg.name, n=args.n, sequences=models)), code)
    lines: List[str] = []
    for model in models:
        lines.extend(_render_sequence(model))
    if not models:
        lines.append("No almost split sequences (no non-projective Gorenstein projectives)")
    return CommandResult("\n".join(lines) + "\n", code)


def cmd_component(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    if args.stable_class:
        classes = [class_of(alg, parse_indec(alg, args.stable_class))]
        components = [knit_stable_component(alg, args.n, cls) for cls in classes]
    else:
        components = stable_components(alg, args.n)
    if args.dot:
        Path(args.dot).write_text(export_quiver(components, "dot"), encoding="utf-8")
        logger.info(f"Wrote DOT rendering of {len(components)} component(s) to {args.dot}")
    if config.output_format == "dot":
        return CommandResult(export_quiver(components, "dot"))
    reports = [component_report(c) for c in components]
    if config.output_format == "json":
        doc = ComponentList(algebra=alg.name, n=args.n, components=reports)
        return CommandResult(_json(doc))
    lines: List[str] = []
    for comp, report in zip(components, reports):
        period = comp.stable_class.period
        div = report.divisibility
        lines.append(
            f"Component of [{comp.stable_class.representative}] (l = {period}) in S_{report.n}: "
            f"{report.size} vertices ({'exact' if report.exact else 'knitted'})"
        )
        lines.append(
            f"  seed {report.seed}: τ-period {report.seed_tau_period} "
            f"(expected {expected_seed_period(report.n, period)})"
        )
        lines.append(f"  divisibility: {div.divisor} | {div.size}: {_yes(div.passed)}")
        lines.append("  vertices: " + " ".join(report.vertices))
    if not components:
        lines.append("No stable components (every Gorenstein projective is projective)")
    return CommandResult("\n".join(lines) + "\n")


# ----------------------------------------------------------------------
# dynkin
# ----------------------------------------------------------------------

def cmd_dynkin(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    quiver = resolve_quiver(args.quiver)
    report = cm_classification(alg, quiver, include_roots=args.roots)
    if config.output_format == "json":
        return CommandResult(_json(report))
    if config.output_format == "dot":
        _no_dot("dynkin")
    lines = [report.render()]
    if args.roots and report.dynkin:
        lines.append(f"{report.type}: {report.root_count} positive roots")
        t = DynkinType.parse(report.type)
        lines.extend("  " + " ".join(str(c) for c in root) for root in positive_roots(t))
    return CommandResult("\n".join(lines) + "\n")


# ----------------------------------------------------------------------
# lift / verify
# ----------------------------------------------------------------------

def _render_rep(rep: GpRep) -> List[str]:
    data = rep.to_dict()
    lines = []
    for v, summands in data["vertices"].items():
        lines.append(f"  {v}: {' ⊕ '.join(summands) if summands else '0'}")
    for a, rows in data["arrows"].items():
        lines.append(f"  {a}: {rows}")
    return lines


def cmd_lift(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    p = config.prime_for(alg)
    rep = load_stable_rep(alg, args.rep, p)
    lifted = lift(alg, rep)
    dumper = _dumper(config)
    if dumper:
        _dump_rep(dumper, alg, lifted, p)
    roundtrip = stable_isomorphic(psi(lifted, p), rep, config.seed)
    verification = None
    if args.check:
        verification = verify_gp_rep(alg, lifted, p, config.seed, config.ext_bound)
    result = LiftCheck(lifted=lifted.to_dict(), stable_roundtrip=roundtrip, verification=verification)
    code = 0 if roundtrip and (verification is None or verification.valid) else 1
    if config.output_format == "json":
        return CommandResult(_json(result), code)
    if config.output_format == "dot":
        _no_dot("lift")
    lines = ["Lifted representation:"] + _render_rep(lifted)
    lines.append(f"Ψ(lift(R)) ≅ R: {_yes(roundtrip)}")
    if verification is not None:
        lines.append(f"Gorenstein projective representation: {_yes(verification.valid)}")
        if not verification.valid:
            lines.append(f"  failing vertex {verification.failing_vertex}: {verification.reason}")
    return CommandResult("\n".join(lines) + "\n", code)


def cmd_verify(args: Namespace, config: Config) -> CommandResult:
    alg = load_algebra(args.algebra)
    p = config.prime_for(alg)
    if config.output_format == "dot":
        _no_dot("verify")
    if args.rep:
        rep = load_stable_rep(alg, args.rep, p)
        lifted = lift(alg, rep)
        dumper = _dumper(config)
        if dumper:
            _dump_rep(dumper, alg, lifted, p)
        report = verify_gp_rep(alg, lifted, p, config.seed, config.ext_bound)
        code = 0 if report.valid else 1
        if config.output_format == "json":
            return CommandResult(_json(report), code)
        lines = [f"Gorenstein projective representation: {_yes(report.valid)}"]
        for check in report.vertices:
            detail = f" ({', '.join(check.summands)})" if check.summands else ""
            lines.append(
                f"  vertex {check.vertex}: injective {_yes(check.injective)}, "
                f"cokernel {check.cokernel}{detail}"
            )
        return CommandResult("\n".join(lines) + "\n", code)

    if args.random is not None:
        density = density_suite(alg, args.random, p, config.seed, config.ext_bound)
        code = 0 if density.passed == density.trials else 1
        if config.output_format == "json":
            return CommandResult(_json(density), code)
        lines = [f"Density: {density.passed}/{density.trials} trials passed"]
        lines.extend(f"  {failure}" for failure in density.failures)
        return CommandResult("\n".join(lines) + "\n", code)

    suite = verify_algebra(alg, p, config.seed, config.ext_bound)
    code = 0 if suite.passed else 1
    if config.output_format == "json":
        return CommandResult(_json(suite), code)
    lines = [f"Oracle suite over F_{suite.prime} (Ext bound {suite.ext_bound}): {_yes(suite.passed)}"]
    for s in suite.syzygies:
        lines.append(
            f"  Ω({s.arrow}Λ) = {s.syzygy}: {_yes(s.agrees)}; Ext dims {s.ext_dimensions}"
        )
    for seq in suite.sequences:
        lines.append(f"  {seq.sequence}: exact {_yes(seq.exact)}")
    if not suite.syzygies:
        lines.append("  no non-projective Gorenstein projectives")
    return CommandResult("\n".join(lines) + "\n", code)


# ----------------------------------------------------------------------
# schema
# ----------------------------------------------------------------------

def cmd_schema(args: Namespace, config: Config) -> CommandResult:
    model = SCHEMAS.get(args.name)
    if model is None:
        raise ValidationError(f"Unknown schema {args.name!r}; choose from {', '.join(SCHEMAS)}")
    return CommandResult(json.dumps(model.model_json_schema(), indent=2, ensure_ascii=False) + "\n")


COMMANDS: Dict[str, Handler] = {
    "analyze": cmd_analyze,
    "sing": cmd_sing,
    "sn": cmd_sn,
    "ars": cmd_ars,
    "component": cmd_component,
    "dynkin": cmd_dynkin,
    "lift": cmd_lift,
    "verify": cmd_verify,
    "schema": cmd_schema,
}
