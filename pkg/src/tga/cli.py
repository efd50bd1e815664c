"""Command-line front end: ``tga <command> <graph> ...``.

Exit status: 0 success or true, 1 false (non-member, not equal, oracle
disagreement), 2 usage or data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations_with_replacement

from tga import __version__
from tga.generators import minimal_generators
from tga.graph import Edge, Graph, GraphError, parse_graph
from tga.semigroup import FarkasCertificate, NotMemberError, _frac_str, decompose_to_generators, \
    membership
from tga.spectra import check_laurent, enumerate_admissible, is_admissible, \
    laurent_free_generators
from tga.terms import Word, format_generator, format_weight, parse_weight, parse_word
from tga.toric import RelationIndex, congruence_check, connect, enumerate_relations
from tga.words import equal_words, to_standard_form

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _load(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _emit(args, text_lines: list[str], payload: dict):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _certificate_lines(g: Graph, cert: FarkasCertificate) -> list[str]:
    values = cert.to_json(g)["values"]
    return [f"certificate ({cert.kind}): " + ",".join(f"{k}={v}" for k, v in values.items())]


# -- commands ------------------------------------------------------------------

def cmd_generators(args) -> int:
    g = _load(args.graph)
    tokens = [format_generator(g, x) for x in minimal_generators(g)]
    _emit(args, tokens, {"generators": tokens})
    return 0


def cmd_member(args) -> int:
    g = _load(args.graph)
    f = parse_weight(g, args.weight)
    result = membership(f, g)
    if isinstance(result, FarkasCertificate):
        _emit(args, ["member: false"] + _certificate_lines(g, result),
              {"member": False, "certificate": result.to_json(g)})
        return 1
    weights = {g.edge_name(e): _frac_str(x) for e, x in sorted(result.items())}
    lines = ["member: true"] + [f"{k} {v}" for k, v in weights.items()]
    _emit(args, lines, {"member": True, "weighting": weights})
    return 0


def cmd_decompose(args) -> int:
    g = _load(args.graph)
    f = parse_weight(g, args.weight)
    try:
        d = decompose_to_generators(f, g)
    except NotMemberError as exc:
        cert = exc.certificate
        _emit(args, ["member: false"] + _certificate_lines(g, cert),
              {"member": False, "certificate": cert.to_json(g)})
        return 1
    word = d.as_word(g)
    _emit(args, [word.format()], {"member": True, "word": word.format(),
                                   "weight": format_weight(g, f)})
    return 0


def cmd_normalize(args) -> int:
    g = _load(args.graph)
    w = parse_word(g, args.word)
    std, log = to_standard_form(w)
    lines = [std.format()] + [_log_line(m) for m in log.to_json(g)]
    _emit(args, lines, {"word": w.format(), "standard": std.format(), "log": log.to_json(g)})
    return 0


def _log_line(entry: dict) -> str:
    if entry["kind"] == "cancel":
        return f"  cancel: {entry['common']}"
    support = " ".join(entry["support"])
    return f"  {entry['kind']}: {entry['source']} -> {entry['target']}" + (
        f"  via {support}" if support else "")


def cmd_equal(args) -> int:
    g = _load(args.graph)
    w1, w2 = parse_word(g, args.word1), parse_word(g, args.word2)
    if w1.weight != w2.weight:
        _emit(args, ["not equal: weights differ"], {"equal": False, "reason": "weights differ"})
        return 1
    if w1.pairs() or w2.pairs():
        path = connect(w1, w2, enumerate_relations(g, args.max_walk, args.max_support))
        if path is None:
            _emit(args, ["not connected within the enumerated relations"],
                  {"equal": False, "reason": "no relation chain found"})
            return 1
        steps = []
        current = w1
        for r, nxt in path:
            src, tgt = (r.left, r.right) if current.contains(r.left) and \
                (current - r.left) + r.right == nxt else (r.right, r.left)
            steps.append({"kind": r.kind, "source": src.format(power=False),
                          "target": tgt.format(power=False), "word": nxt.format()})
            current = nxt
        lines = [f"equal: {len(steps)} step(s)"] + [
            f"  {s['kind']}: {s['source']} -> {s['target']}" for s in steps]
        _emit(args, lines, {"equal": True, "log": steps})
        return 0
    log = equal_words(w1, w2)
    entries = log.to_json(g)
    lines = [f"equal: {len(log)} move(s)"] + [_log_line(e) for e in entries]
    _emit(args, lines, {"equal": True, "log": entries})
    return 0


def cmd_relations(args) -> int:
    g = _load(args.graph)
    rels = enumerate_relations(g, args.max_walk, args.max_support)
    lines = [f"[{r.kind}] {r.format(binomial=args.binomial)}" for r in rels]
    payload = {"relations": [dict(r.to_json(), binomial=r.format(binomial=True)) for r in rels]}
    _emit(args, lines, payload)
    return 0


def cmd_admissible(args) -> int:
    g = _load(args.graph)
    subs = enumerate_admissible(g, args.cap)
    if args.format == "dot":
        sys.stdout.write("".join(s.to_dot() for s in subs))
        return 0
    lines = [" ".join(g.edge_name(e) for e in sorted(s.edges)) or "(empty)" for s in subs]
    _emit(args, [f"{len(subs)} admissible subgraphs"] + lines,
          {"count": len(subs), "admissible": [s.to_json() for s in subs]})
    return 0


def _parse_edges(g: Graph, text: str) -> list[Edge]:
    text = text.strip()
    if text in ("all", "*"):
        return list(g.edges)
    out = []
    for item in text.replace(",", " ").split():
        parts = item.split("-")
        if len(parts) != 2:
            raise GraphError(f"malformed edge {item!r}; use u-v")
        out.append(g.edge(g.index(parts[0]), g.index(parts[1])))
    return out


def cmd_laurent(args) -> int:
    g = _load(args.graph)
    k = _parse_edges(g, args.edges)
    if not is_admissible(k, g):
        raise GraphError("edge subset is not admissible")
    basis = laurent_free_generators(k, g)
    independent, spans = check_laurent(k, basis, g)
    names = [g.edge_name(e) for e in basis]
    _emit(args, names, {"generators": names, "independent": independent, "spans": spans})
    return 0 if independent and spans else 1


def _oracle_graphs(args) -> list[Graph]:
    from tga.oracles import graph_family

    if args.graph:
        return [_load(args.graph)]
    return graph_family(args.max_vertices, args.random_count, args.seed)


def cmd_oracle(args) -> int:
    from tga.oracles import BoxOracle
    from tga.terms import generator_weight

    graphs = _oracle_graphs(args)
    failures = []
    checked = 0
    for g in graphs:
        if args.check == "gens":
            ws = {generator_weight(g, x) for x in minimal_generators(g)}
            checked += 1
            if ws != BoxOracle(g).indecomposables():
                failures.append(g.to_text())
        else:
            gens = minimal_generators(g)
            index = RelationIndex(enumerate_relations(g))
            weights = {Word(g, c).weight for k in range(1, args.max_len + 1)
                       for c in combinations_with_replacement(gens, k)}
            for f in sorted(weights):
                checked += 1
                if not congruence_check(f, g, None, index):
                    failures.append(f"{g.to_text()}weight {format_weight(g, f)}")
    lines = [f"seed {args.seed}", f"graphs {len(graphs)}", f"checks {checked}",
             f"failures {len(failures)}"] + failures
    _emit(args, lines, {"seed": args.seed, "graphs": len(graphs), "checks": checked,
                        "failures": failures, "ok": not failures})
    return 0 if not failures else 1


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="same as --format json")

    p = argparse.ArgumentParser(prog="tga", description="Normalized edge algebras of graphs.")
    p.add_argument("--version", action="version", version=f"tga {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("generators", cmd_generators, "minimal generators: edges and exceptional pairs")
    sp.add_argument("graph")
    sp = add("member", cmd_member, "membership with a weighting or a certificate")
    sp.add_argument("graph")
    sp.add_argument("weight", help='vertex weights such as "a=1,c=1"')
    sp = add("decompose", cmd_decompose, "write a member as edges plus exceptional pairs")
    sp.add_argument("graph")
    sp.add_argument("weight")
    sp = add("normalize", cmd_normalize, "standard form of a word, with its move log")
    sp.add_argument("graph")
    sp.add_argument("word")
    sp = add("equal", cmd_equal, "decide equality of two words, with a replayable log")
    sp.add_argument("graph")
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.add_argument("--max-walk", type=int, default=None)
    sp.add_argument("--max-support", type=int, default=None)
    sp = add("relations", cmd_relations, "relations generating the toric ideal")
    sp.add_argument("graph")
    sp.add_argument("--max-walk", type=int, default=None)
    sp.add_argument("--max-support", type=int, default=None)
    sp.add_argument("--binomial", action="store_true", help='emit "LHS - RHS"')
    sp = add("admissible", cmd_admissible, "admissible subgraphs")
    sp.add_argument("graph")
    sp.add_argument("--cap", type=int, default=20, help="largest edge count for subset search")
    sp = add("laurent", cmd_laurent, "Laurent free generators of an admissible subgraph")
    sp.add_argument("graph")
    sp.add_argument("edges", help='edge subset such as "a-b,b-c", or "all"')
    sp = add("oracle", cmd_oracle, "brute-force cross-checks over a graph family")
    sp.add_argument("check", choices=("gens", "congruence"))
    sp.add_argument("graph", nargs="?", default=None)
    sp.add_argument("--max-vertices", type=int, default=3)
    sp.add_argument("--random-count", type=int, default=0)
    sp.add_argument("--max-len", type=int, default=2)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        sys.stderr.write(f"tga: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
