"""Command-line front end: ``opentorus classify "d x y^-1"`` and friends."""

from __future__ import annotations

import argparse
import json
import sys

from . import floer, surgeryoracle
from .floer import LSpaceStatus
from .mcg import dynamics_class, h1_order, open_book_invariants
from .normalform import CanonicalType, canonical_word_text, expand_to_word, normalize
from .tightness import Status, decide, dehn_obstruction, tight_minus_dehn
from .twistword import WordSyntaxError, format_word, parse_word

EXIT_TIGHT, EXIT_OVERTWISTED, EXIT_USAGE = 0, 1, 2


def _canonical_dict(ct: CanonicalType) -> dict:
    out = ct.as_dict()
    out["text"] = canonical_word_text(ct)
    return out


def hopf_invariant(ct: CanonicalType):
    if ct.variant == "B" and ct.d == 0:
        return floer.hopf_invariant_B(ct.a, ct.b)
    return None


def build_report(text: str) -> dict:
    word = parse_word(text)
    ct = normalize(word)
    verdict = decide(ct)
    trace, expsum = open_book_invariants(word)
    hopf = hopf_invariant(ct)
    canon_word = expand_to_word(ct)
    return {
        "word": format_word(word),
        "canonical": _canonical_dict(ct),
        "dynamics": str(dynamics_class(word)),
        "verdict": verdict.status.value,
        "certificate": verdict.certificate.as_dict(),
        "invariants": {
            "trace": trace,
            "exponent_sum": expsum,
            "hopf": None if hopf is None else str(hopf),
            "h1": h1_order(word),
            "lspace": floer.is_l_space(ct).value,
        },
        "dehn": {
            "obstructed": dehn_obstruction(canon_word),
            "tight_minus_dehn": tight_minus_dehn(ct),
        },
    }


def _show(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _quoted(text: str) -> str:
    return f'"{text}"'


def render_report(rep: dict) -> str:
    inv, cert = rep["invariants"], rep["certificate"]
    dehn = "obstructed" if rep["dehn"]["obstructed"] else "inconclusive"
    lines = [
        f"word: {_quoted(rep['word'])}",
        f"canonical: {_describe_canonical(rep['canonical'])}",
        f"dynamics: {rep['dynamics']}",
        f"verdict: {rep['verdict']}",
        f"certificate: {_describe_certificate(cert)}",
        f"trace: {inv['trace']}",
        f"exponent sum: {inv['exponent_sum']}",
        f"hopf invariant: {_show(inv['hopf'])}",
        f"|H1|: {_show(inv['h1']) if inv['h1'] is not None else 'infinite'}",
        f"l-space: {inv['lspace']}",
        f"dehn positivity: {dehn}",
        f"tight but not in Dehn: {_show(rep['dehn']['tight_minus_dehn'])}",
    ]
    return "\n".join(lines)


def _describe_canonical(c: dict) -> str:
    if c["type"] in ("A", "B"):
        params = f"d={c['d']}; a={','.join(map(str, c['a']))}; b={','.join(map(str, c['b']))}"
    else:
        params = f"d={c['d']}; m={c['m']}"
    return f"{c['type']}({params}) = {_quoted(c['text'])}"


def _describe_certificate(cert: dict) -> str:
    kind = cert["kind"]
    if kind == "stein":
        return f"positive word {_quoted(cert['word'])}"
    if kind == "sobering":
        return (f"sobering arc across {cert['curve']}, intersections {tuple(cert['triple'])},"
                f" left-handed form {_quoted(cert['witness'])}")
    text = (f"invariant chain from {_quoted(cert['base'])}: {cert['surgery_steps']} surgery,"
            f" {cert['naturality_steps']} naturality steps")
    if cert["grading_lens"] is not None:
        text += f", grading step via L({cert['grading_lens']},1)"
    return text


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_classify(args) -> int:
    rep = build_report(args.word)
    _emit(args, rep, render_report(rep))
    return EXIT_TIGHT if rep["verdict"] == Status.TIGHT.value else EXIT_OVERTWISTED


def cmd_normalize(args) -> int:
    word = parse_word(args.word)
    ct = normalize(word)
    payload = {"word": format_word(word), "canonical": _canonical_dict(ct)}
    _emit(args, payload, _describe_canonical(payload["canonical"]))
    return 0


def cmd_invariants(args) -> int:
    rep = build_report(args.word)
    payload = {k: rep[k] for k in ("word", "canonical", "dynamics", "invariants", "dehn")}
    inv = rep["invariants"]
    text = "\n".join([
        f"canonical\t{_describe_canonical(rep['canonical'])}",
        f"dynamics\t{rep['dynamics']}",
        f"trace\t{inv['trace']}",
        f"exponent_sum\t{inv['exponent_sum']}",
        f"hopf\t{_show(inv['hopf'])}",
        f"h1\t{_show(inv['h1']) if inv['h1'] is not None else 'infinite'}",
        f"lspace\t{inv['lspace']}",
        f"dehn_obstructed\t{_show(rep['dehn']['obstructed'])}",
    ])
    _emit(args, payload, text)
    return 0


def cmd_h1(args) -> int:
    word = parse_word(args.word)
    ct = normalize(word)
    payload = {"word": format_word(word), "h1": h1_order(word)}
    lines = [f"|H1| from trace\t{_show(payload['h1']) if payload['h1'] else 'infinite'}"]
    if ct.variant == "B" and ct.d == 0:
        b = floer.b_list_for(ct)
        payload["surgery_list"] = list(b)
        payload["linking_det"] = abs(surgeryoracle.det_exact(surgeryoracle.matrix_A(b)))
        payload["closed_form"] = floer.h1_closed_form(b)
        lines += [
            f"surgery list\t{','.join(map(str, b))}",
            f"|det| linking matrix\t{payload['linking_det']}",
            f"closed form\t{payload['closed_form']}",
        ]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_lspace(args) -> int:
    word = parse_word(args.word)
    ct = normalize(word)
    status = floer.is_l_space(ct)
    payload = {"word": format_word(word), "canonical": _canonical_dict(ct), "lspace": status.value}
    text = f"{_describe_canonical(payload['canonical'])}\n{status.value}"
    if status is LSpaceStatus.LSPACE:
        payload["homology_sphere"] = floer.integer_homology_sphere_report(ct)
        text += "\n" + payload["homology_sphere"]
    _emit(args, payload, text)
    return 0


def verify_lines(nmax: int, bmax: int, bound: int, mmax: int):
    """Yield ``(line, counts)`` pairs; ``counts`` is False for informational lines."""
    for name, b, ok in surgeryoracle.sweep(nmax, bmax):
        yield surgeryoracle.format_line(name, b, ok), ok
    for m in range(1, mmax + 1, 2):
        ok = floer.step3_obstruction(m, bound)
        yield surgeryoracle.format_line("step3_obstruction", (m,), ok), ok
    for b in surgeryoracle.b_vectors(nmax, bmax):
        if len(b) >= 2:
            held = surgeryoracle.verify_claim_q(b)
            yield surgeryoracle.format_line("claim_q", b, "info:holds" if held else "info:differs"), None


def cmd_verify(args) -> int:
    for flag in ("nmax", "bmax", "bound", "mmax"):
        if getattr(args, flag) < 1:
            print(f"error: --{flag} must be positive", file=sys.stderr)
            return EXIT_USAGE
    failures, checks, rows = 0, 0, []
    for line, ok in verify_lines(args.nmax, args.bmax, args.bound, args.mmax):
        if ok is not None:
            checks += 1
            failures += not ok
        rows.append(line)
    if args.json:
        print(json.dumps({"checks": checks, "failures": failures,
                          "lines": [r.split("\t") for r in rows]}, sort_keys=True))
    else:
        print("\n".join(rows))
        print(f"summary\t{checks} checks\t{failures} failures")
    return 0 if failures == 0 else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opentorus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_text in [
        ("classify", cmd_classify, "full report; exit 0 tight, 1 overtwisted"),
        ("normalize", cmd_normalize, "canonical type of a word"),
        ("invariants", cmd_invariants, "trace, exponent sum, Hopf invariant, |H1|, L-space status"),
        ("h1", cmd_h1, "order of first homology, with the surgery cross-check for type B"),
        ("lspace", cmd_lspace, "L-space status of the closed manifold"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help='twist word, e.g. "d^-1 * x y^3 x y^-2"')
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=fn)
    p = sub.add_parser("verify", help="sweep the determinant identities and the grading obstruction")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--bmax", type=int, default=4)
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--mmax", type=int, default=99, help="largest odd m for the grading obstruction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
