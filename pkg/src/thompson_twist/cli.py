"""Command-line front end.

Every argument that takes a document accepts inline JSON, a file path, or
``-`` for standard input.  Domain errors exit with status 1 and print
``{"error": code, "detail": ...}`` on stderr; usage errors exit with 2.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import groupf, plmap, zlinalg
from .dyadic import Dyadic
from .errors import FormatError, ThompsonError
from .groupf import REV, AutWord, ConjBy
from .sampling import make_rng, random_fmap, random_tlike
from .zlinalg import INFINITE, IntMatrix

SEED_ENV = "THOMPSON_TWIST_SEED"


def _dumps(doc):
    return json.dumps(doc, separators=(",", ":"))


def _load(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip()[:1] in ("{", "["):
        text = arg
    else:
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise FormatError(f"cannot read {arg!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _element(arg):
    return plmap.element_from_json(_load(arg))


def _fmap(arg):
    return plmap.fmap_from_json(_load(arg))


def _tlike(arg):
    return plmap.tlike_from_json(_load(arg))


def _matrix(arg):
    if arg == "M":
        return groupf.REV_MATRIX
    if arg == "I":
        return IntMatrix.identity(2)
    return zlinalg.matrix_from_json(_load(arg))


def _vector(arg):
    doc = _load(arg)
    if not isinstance(doc, list):
        raise FormatError("vector must be a JSON list of integers")
    return [zlinalg._int(x) for x in doc]


def _element_json(e):
    if isinstance(e, plmap.TLikeMap):
        return plmap.tlike_to_json(e)
    return plmap.fmap_to_json(e)


def _rows_text(a):
    return _dumps(a.to_rows())


# -- subcommands ---------------------------------------------------------------


def cmd_validate(args):
    return _element_json(_element(args.element))


def cmd_eval(args):
    e = _element(args.element)
    return str(e(Dyadic.parse(args.x)))


def cmd_compose(args):
    return plmap.fmap_to_json(plmap.compose_f(_fmap(args.f), _fmap(args.h)))


def cmd_invert(args):
    e = _element(args.element)
    if isinstance(e, plmap.TLikeMap):
        return plmap.tlike_to_json(plmap.invert_tlike(e))
    return plmap.fmap_to_json(plmap.invert_f(e))


def cmd_ab(args):
    p = groupf.ab(_fmap(args.element))
    if args.format == "json":
        return {"l": p.l, "r": p.r}
    return f"({p.l},{p.r})"


def cmd_rev(args):
    return plmap.fmap_to_json(groupf.rev(_fmap(args.element)))


def cmd_conjugate(args):
    return plmap.fmap_to_json(groupf.conj_by_tlike(_fmap(args.f), _tlike(args.g)))


def cmd_aut_apply(args):
    phi = groupf.autword_from_json(_load(args.aut))
    return plmap.fmap_to_json(groupf.apply_aut(phi, _fmap(args.element)))


def cmd_h1_matrix(args):
    m = groupf.h1_matrix(groupf.autword_from_json(_load(args.aut)))
    if args.format == "json":
        return zlinalg.matrix_to_json(m)
    return _rows_text(m)


def cmd_snf(args):
    res = zlinalg.snf(_matrix(args.matrix))
    if args.format == "json":
        return {
            "U": zlinalg.matrix_to_json(res.U),
            "D": zlinalg.matrix_to_json(res.D),
            "V": zlinalg.matrix_to_json(res.V),
            "invariant_factors": [str(d) for d in res.diagonal],
        }
    return "\n".join(
        [f"U = {_rows_text(res.U)}", f"D = {_rows_text(res.D)}", f"V = {_rows_text(res.V)}",
         f"invariant factors = {_dumps(res.diagonal)}"]
    )


def cmd_reidemeister(args):
    value = zlinalg.reidemeister_of_matrix(_matrix(args.matrix))
    if args.format == "json":
        return {"reidemeister": str(value)}
    return str(value)


def cmd_twisted_equiv(args):
    ok = zlinalg.twisted_equiv_abelian(_vector(args.u), _vector(args.v), _matrix(args.matrix))
    if args.format == "json":
        return {"equivalent": ok}
    return "true" if ok else "false"


def cmd_class_rep(args):
    rep = zlinalg.class_rep(_vector(args.v), _matrix(args.matrix))
    if args.format == "json":
        return {"class_rep": [str(x) for x in rep]}
    return _dumps(list(rep))


def cmd_demo_theorem(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, "0"))
    return demo_theorem(args.n, args.samples, seed)


def demo_theorem(n=20, samples=25, seed=0):
    """Text report reproducing R(phi) = infinity for phi = Rev and its twists."""
    out = []
    word = AutWord((REV,))
    m = groupf.h1_matrix(word)
    probes = [groupf.ab(groupf.rev(p)) for p in groupf.PROBES]
    one_minus = IntMatrix.identity(2) - m
    res = zlinalg.snf(one_minus)
    torsion, free = zlinalg.coker_invariants(one_minus)
    out.append("H1(Rev) on H1(F) = Z x Z, columns (f_l, f_r)")
    out.append(f"  M = {_rows_text(m)}")
    out.append(f"  probe x+1          ab (1,1) -> ({probes[0].l},{probes[0].r})")
    out.append(f"  probe slope-2 gen  ab (0,1) -> ({probes[1].l},{probes[1].r})")
    out.append(f"I - M = {_rows_text(one_minus)}")
    out.append(f"det(I - M) = {zlinalg.det(one_minus)}")
    out.append(
        f"Smith form of I - M: diag{tuple(res.diagonal)}; "
        f"Coker(I - M) = Z^{free}" + "".join(f" + Z/{t}" for t in torsion)
    )
    out.append(f"R(H1(Rev)) = {zlinalg.reidemeister_of_matrix(m)}")
    powers = [zlinalg.reidemeister_of_matrix(m ** k) for k in range(11)]
    out.append(
        "R(M^k) for k = 0..10: "
        + ("all INFINITE" if all(p is INFINITE for p in powers) else " ".join(map(str, powers)))
    )
    out.append("")
    out.append(f"Gamma = {{(0,a) : |a| <= {n}}} under x ~ g + x - M g")
    out.append(f"{'a':>5}  {'class_rep':<14}{'equivalent to':>14}")
    reps = {}
    total = equivalent = 0
    values = list(range(-n, n + 1))
    for a in values:
        hits = [b for b in values if b != a and zlinalg.twisted_equiv_abelian((0, a), (0, b), m)]
        rep = zlinalg.class_rep((0, a), m)
        reps[a] = rep
        out.append(f"{a:>5}  {str(list(rep)):<14}{len(hits):>14}")
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            total += 1
            equivalent += zlinalg.twisted_equiv_abelian((0, a), (0, b), m)
    distinct = len(set(reps.values()))
    out.append(f"pairs checked: {total}; equivalent pairs: {equivalent}; distinct reps: {distinct}")
    out.append("")
    rng = make_rng(seed)
    g = random_tlike(rng, window=4, max_breaks=6)
    words = [("[]", AutWord()), ("[Rev]", word), ("[Rev, ConjBy(g)]", AutWord((REV, ConjBy(g))))]
    out.append(f"twisted-conjugation invariance of project_class (seed {seed}, {samples} samples each)")
    out.append(f"  g: T-like map with L={g.L}, R={g.R}, {len(g.core)} core vertices")
    for name, phi in words:
        stable = 0
        for _ in range(samples):
            f = random_fmap(rng, window=4, max_breaks=6)
            h = random_fmap(rng, window=4, max_breaks=6)
            twisted = groupf.twisted_conjugate(h, f, phi)
            stable += groupf.project_class(twisted, phi) == groupf.project_class(f, phi)
        out.append(f"  phi = {name:<18} h1 = {_rows_text(groupf.h1_matrix(phi)):<16} unchanged {stable}/{samples}")
    out.append("")
    out.append("Every automorphism of F induces I or M on H1(F); both have det(I - A) = 0,")
    out.append("so R(H1(phi)) = INFINITE and hence R(phi) = INFINITE.")
    return "\n".join(out)


# -- wiring ---------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="thompson-twist", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "validate an element and print its canonical form").add_argument(
        "--element", required=True)
    sp = add("eval", cmd_eval, "evaluate an element at a dyadic")
    sp.add_argument("--element", required=True)
    sp.add_argument("--x", required=True)
    sp = add("compose", cmd_compose, "composite f o h of two elements of F")
    sp.add_argument("--f", required=True)
    sp.add_argument("--h", required=True)
    add("invert", cmd_invert, "inverse of an element").add_argument("--element", required=True)
    add("ab", cmd_ab, "abelianization (f_l, f_r)").add_argument("--element", required=True)
    add("rev", cmd_rev, "apply Rev").add_argument("--element", required=True)
    sp = add("conjugate", cmd_conjugate, "g o f o g^-1 for f in F and T-like g")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp = add("aut-apply", cmd_aut_apply, "apply an automorphism word")
    sp.add_argument("--aut", required=True)
    sp.add_argument("--element", required=True)
    add("h1-matrix", cmd_h1_matrix, "induced matrix on H1(F)").add_argument("--aut", required=True)
    add("snf", cmd_snf, "Smith normal form").add_argument("--matrix", required=True)
    add("reidemeister", cmd_reidemeister, "#Coker(I - A)").add_argument("--matrix", required=True)
    sp = add("twisted-equiv", cmd_twisted_equiv, "u ~ v modulo Im(I - A)")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp = add("class-rep", cmd_class_rep, "canonical representative of v modulo Im(I - A)")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--v", required=True)
    sp = add("demo-theorem", cmd_demo_theorem, "reproduce R(phi) = infinity at desk scale")
    sp.add_argument("--n", type=int, default=20, help="Gamma range |a| <= N (default 20)")
    sp.add_argument("--samples", type=int, default=25)
    sp.add_argument("--seed", type=int, default=None, help=f"overrides ${SEED_ENV}")
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.func(args)
    except ThompsonError as exc:
        print(_dumps(exc.to_json()), file=stderr)
        return 1
    if isinstance(result, (dict, list)):
        result = _dumps(result)
    print(result, file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
