"""Batch command-line front end: text I/O for graphs and stabilizers, DOT
export, and one subcommand per library capability."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import classify, graphstate, lulc, orbit, reptheory, subcode
from .errors import GuardExceeded
from .graphstate import Graph
from .pauli import StabilizerGroup


# ---------------------------------------------------------------- file formats

def parse_adjacency_text(text: str) -> list[Graph]:
    """Matrices as n lines of space-separated 0/1; blank line between
    matrices; '#' lines are comments."""
    graphs = []
    block: list[list[int]] = []
    for raw in text.splitlines() + [""]:
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if block:
                n = len(block)
                if any(len(row) != n for row in block):
                    raise ValueError("adjacency matrix is not square")
                graphs.append(Graph.from_dense(np.array(block)))
                block = []
            continue
        try:
            block.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"bad adjacency line {line!r}") from exc
    return graphs


def serialize_graph(g: Graph) -> str:
    dense = g.to_dense()
    return "\n".join(" ".join(str(int(v)) for v in row) for row in dense)


def serialize_graphs(graphs) -> str:
    return "\n\n".join(serialize_graph(g) for g in graphs) + "\n"


def read_graphs(path: str) -> list[Graph]:
    with open(path) as fh:
        graphs = parse_adjacency_text(fh.read())
    if not graphs:
        raise ValueError(f"no adjacency matrices in {path}")
    return graphs


def read_stabilizer(path: str) -> StabilizerGroup:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh
                 if ln.strip() and not ln.strip().startswith("#")]
    return StabilizerGroup.from_strings(lines)


def dot_export(g: Graph, marked=()) -> str:
    """Undirected DOT with 1-based labels; marked vertices filled black."""
    lines = ["graph G {"]
    for v in range(g.n):
        style = (' [style=filled, fillcolor=black, fontcolor=white]'
                 if v in marked else "")
        lines.append(f"  {v + 1}{style};")
    for i, j in g.edges():
        lines.append(f"  {i + 1} -- {j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_vertex_set(spec: str, n: int) -> set[int]:
    """1-based comma-separated vertex list."""
    out = set()
    for tok in spec.split(","):
        v = int(tok) - 1
        if not 0 <= v < n:
            raise ValueError(f"vertex {tok} out of range")
        out.add(v)
    return out


def _parse_irrep(group: str, size: int, label: str):
    kind, _, rest = label.partition(":")
    if group == "dihedral":
        if kind == "chi":
            a, b = (int(t) for t in rest.split(","))
            return reptheory.DihedralIrrep.chi(a, b)
        if kind == "rho":
            return reptheory.DihedralIrrep.rho(size, int(rest))
    else:
        if kind == "chi":
            a, b = (int(t) for t in rest.split(","))
            return reptheory.HeisenbergIrrep.chi(size, a, b)
        if kind == "sigma":
            return reptheory.HeisenbergIrrep.sigma(size, int(rest))
    raise ValueError(f"bad irrep label {label!r} for group {group}")


def _write(path: str | None, text: str, out):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


# ---------------------------------------------------------------- subcommands

def _cmd_stab2graph(args, out):
    s = read_stabilizer(getattr(args, "in"))
    g, record = graphstate.stab_to_graph(s)
    text = serialize_graph(g) + "\n"
    if record.ops:
        text += "# local cliffords: " + " ".join(
            f"{tag}{q + 1}" for tag, q in record.ops) + "\n"
    _write(args.out, text, out)
    if args.dot:
        _write(args.dot, dot_export(g), out)
    return 0


def _cmd_lc(args, out):
    graphs = read_graphs(getattr(args, "in"))
    result = [graphstate.local_complement(g, args.vertex - 1) for g in graphs]
    _write(args.out, serialize_graphs(result), out)
    return 0


def _cmd_measure(args, out):
    graphs = read_graphs(getattr(args, "in"))
    b = args.neighbor - 1 if args.neighbor else None
    result = [graphstate.measure(g, args.vertex - 1, args.basis, b)
              for g in graphs]
    _write(args.out, serialize_graphs(result), out)
    return 0


def _cmd_orbit(args, out):
    graphs = read_graphs(getattr(args, "in"))
    chunks = []
    for g in graphs:
        members = sorted(orbit.lc_orbit(g, guard=args.guard),
                         key=graphstate.upper_triangle_code)
        chunks.append(f"# orbit size {len(members)}\n"
                      + serialize_graphs(members).rstrip("\n"))
    _write(args.out, "\n\n".join(chunks) + "\n", out)
    return 0


def _cmd_representative(args, out):
    graphs = read_graphs(getattr(args, "in"))
    result = [orbit.lc_representative(g, guard=args.guard) for g in graphs]
    _write(args.out, serialize_graphs(result), out)
    return 0


def _cmd_standardise(args, out):
    graphs = read_graphs(getattr(args, "in"))
    kept = [orbit.lc_representative(g, guard=args.guard)
            for g in graphs if orbit.connected(g)]
    _write(args.out, serialize_graphs(kept) if kept else "", out)
    return 0


def _cmd_distance(args, out):
    for g in read_graphs(getattr(args, "in")):
        out.write(f"{classify.distance(g)}\n")
    return 0


def _cmd_classify(args, out):
    graphs = read_graphs(getattr(args, "in"))
    passed, failed = [], []
    for g in graphs:
        verdict = classify.analyze(g)
        record = serialize_graph(g) + f"\n# verdict: {verdict.tag}\n"
        (failed if verdict.tag == "Failed" else passed).append(record)
    with open(args.passed, "w") as fh:
        fh.write("\n".join(passed))
    with open(args.failed, "w") as fh:
        fh.write("\n".join(failed))
    out.write(f"passed {len(passed)} failed {len(failed)}\n")
    return 0


def _cmd_msc(args, out):
    for g in read_graphs(getattr(args, "in")):
        msc = classify.satisfies_msc(g)
        meqs = classify.m_equals_s(g)
        out.write(f"msc={'yes' if msc else 'no'} m_equals_s="
                  f"{'yes' if meqs else 'no'}\n")
        if args.dot:
            marked = set()
            for sup, _ in classify.minimal_elements(
                    graphstate.standard_generators(g)):
                marked |= sup
            _write(args.dot, dot_export(g, marked if args.mark_minimal else ()),
                   out)
    return 0


def _cmd_schmidt(args, out):
    for g in read_graphs(getattr(args, "in")):
        a = _parse_vertex_set(args.set, g.n)
        out.write(f"{graphstate.schmidt_rank(g, a)}\n")
    return 0


def _cmd_entanglement(args, out):
    for g in read_graphs(getattr(args, "in")):
        parts = [_parse_vertex_set(p, g.n) for p in args.partition.split(";")]
        out.write(f"{graphstate.entanglement_measure(g, parts)}\n")
    return 0


def _cmd_partition(args, out):
    for g in read_graphs(getattr(args, "in")):
        p = classify.vertex_partition(g)
        for name, vs in (("V1", p.v1), ("V2", p.v2), ("V3", p.v3), ("V4", p.v4)):
            out.write(f"{name}: "
                      + (",".join(str(v + 1) for v in sorted(vs)) or "-") + "\n")
    return 0


def _cmd_audit(args, out):
    s = read_stabilizer(getattr(args, "in"))
    for i in range(s.n):
        _, index = subcode.single_qubit_subgroup(s, i)
        out.write(f"qubit {i + 1}: index {index}\n")
    pi = subcode.pi_subgroup(s)
    out.write(f"[S:Pi] = {pi.index}\n")
    bells = subcode.detect_bell_pairs(s)
    out.write("bell pairs: "
              + (" ".join(f"({i + 1},{j + 1})" for i, j in bells) or "-") + "\n")
    triv = subcode.trivially_encoded(s)
    out.write("trivially encoded: "
              + (",".join(str(q + 1) for q in sorted(triv)) or "-") + "\n")
    return 0


def _read_local_unitary(path: str) -> lulc.LocalUnitary:
    """One factor per line: four complex entries, row-major."""
    factors = []
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            vals = [complex(tok) for tok in ln.split()]
            if len(vals) != 4:
                raise ValueError("each unitary line needs 4 complex entries")
            factors.append(np.array(vals, dtype=complex).reshape(2, 2))
    return lulc.LocalUnitary(tuple(factors))


def _cmd_lulc_verify(args, out):
    g = read_graphs(args.graph)[0]
    s = read_stabilizer(args.stab)
    u = _read_local_unitary(args.unitary)
    k = lulc.construct_lc_from_lu(g, s, u)
    tags = [lulc.closest_clifford(f) for f in k.factors]
    out.write("success\n")
    out.write("clifford tags: "
              + " ".join(str(t.index) for t in tags) + "\n")
    return 0


def _cmd_cg(args, out):
    size = args.size
    mu1 = _parse_irrep(args.group, size, args.mu1)
    mu2 = _parse_irrep(args.group, size, args.mu2)
    res = reptheory.fuse(args.group, size, mu1, mu2)
    out.write(f"type: {res.type_tag}\n")
    out.write("outputs: " + " ".join(f"{mu.label()}x{mult}"
                                     for mu, mult in res.outputs) + "\n")
    ok = reptheory.verify_decomposition(args.group, size, mu1, mu2,
                                        tol=args.tol)
    out.write(f"verified: {'yes' if ok else 'no'}\n")
    out.write("unitary:\n")
    for row in res.unitary:
        out.write("  " + " ".join(f"{v.real:+.6f}{v.imag:+.6f}j"
                                  for v in row) + "\n")
    return 0


# ---------------------------------------------------------------- driver

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stabgraph")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for randomized data generation (reserved)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("stab2graph", _cmd_stab2graph)
    sp.add_argument("--in", required=True)
    sp.add_argument("--out")
    sp.add_argument("--dot")

    sp = add("lc", _cmd_lc)
    sp.add_argument("--in", required=True)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--out")

    sp = add("measure", _cmd_measure)
    sp.add_argument("--in", required=True)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--basis", choices=("X", "Y", "Z"), required=True)
    sp.add_argument("--neighbor", type=int)
    sp.add_argument("--out")

    for name, fn in (("orbit", _cmd_orbit),
                     ("representative", _cmd_representative),
                     ("standardise", _cmd_standardise)):
        sp = add(name, fn)
        sp.add_argument("--in", required=True)
        sp.add_argument("--out")
        sp.add_argument("--guard", type=int, default=orbit.ORBIT_GUARD_DEFAULT)

    sp = add("distance", _cmd_distance)
    sp.add_argument("--in", required=True)

    sp = add("classify", _cmd_classify)
    sp.add_argument("--in", required=True)
    sp.add_argument("--passed", required=True)
    sp.add_argument("--failed", required=True)

    sp = add("msc", _cmd_msc)
    sp.add_argument("--in", required=True)
    sp.add_argument("--dot")
    sp.add_argument("--mark-minimal", action="store_true")

    sp = add("schmidt", _cmd_schmidt)
    sp.add_argument("--in", required=True)
    sp.add_argument("--set", required=True,
                    help="1-based comma-separated vertex list")

    sp = add("entanglement", _cmd_entanglement)
    sp.add_argument("--in", required=True)
    sp.add_argument("--partition", required=True,
                    help="semicolon-separated 1-based vertex lists")

    sp = add("partition", _cmd_partition)
    sp.add_argument("--in", required=True)

    sp = add("audit", _cmd_audit)
    sp.add_argument("--in", required=True)

    sp = add("lulc-verify", _cmd_lulc_verify)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--stab", required=True)
    sp.add_argument("--unitary", required=True)

    sp = add("cg", _cmd_cg)
    sp.add_argument("--group", choices=("dihedral", "heisenberg"),
                    required=True)
    sp.add_argument("--size", "--n", type=int, required=True, dest="size")
    sp.add_argument("--mu1", required=True)
    sp.add_argument("--mu2", required=True)
    sp.add_argument("--tol", type=float, default=1e-9)

    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.fn(args, out)
    except GuardExceeded as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
