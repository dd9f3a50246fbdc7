"""Command-line entry point: JSON emission, verification suites, and the
persistent chi-table cache.

Exit codes: 0 success / suite passed, 1 verification or computation
failure, 2 usage and parse errors (diagnostics go to stderr). All reports
are deterministic given flags and seed: JSON is emitted through a canonical
writer (fixed key order, no insignificant whitespace, big integers as
decimal strings, floats with 15 significant digits).
"""

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .coeffs import ONE, RatK
from .cmsop import (AlgebraMembershipError, EigenfunctionError, apply_m,
                    extract_eigenvalue)
from .gauge import (SingularConfigurationError, conjugation_check,
                    first_order_freeness)
from .jack import ChiTable, chi_table, jack_in_monomial
from .oracles import (classical_eigenvalue, hook_schur_twisted,
                      jack_eigenvector_oracle)
from .partitions import Partition, dominance_leq, in_hook, partitions_of, z_factor
from .superjack import eigenvalue, super_jack
from .sympoly import SparsePoly, hall_inner_product, realize, to_powersum

CACHE_ENV = "SUPERJACK_CACHE"
CACHE_FILENAME = "chi_cache.json"
FORMAT_VERSION = 1
CONVENTION = "k-inverse-alpha"

THEOREM1_GRID = [(2, 1), (1, 2), (2, 2), (3, 2)]
HOOKS_GRID = [(1, 1), (2, 1), (1, 2), (2, 2)]
GAUGE_GRID_NM = [(2, 0), (1, 1), (2, 1), (2, 2)]
GAUGE_GRID_LAMBDA = ["", "1", "2", "1,1", "2,1"]
GAUGE_GRID_K = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(7, 3)]


# ---------------------------------------------------------------------------
# canonical JSON

def dumps_canonical(obj):
    out = []
    _write_json(obj, out)
    return "".join(out)


def _write_json(obj, out):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format(obj, ".15g"))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, val) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _write_json(val, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, val in enumerate(obj):
            if i:
                out.append(",")
            _write_json(val, out)
        out.append("]")
    else:
        raise TypeError("cannot serialize %r" % (obj,))


def _partition_sort_key(lam):
    return (lam.weight, tuple(-p for p in lam))


# ---------------------------------------------------------------------------
# chi-table cache

def default_cache_dir():
    return os.path.join(os.path.expanduser("~"), ".cache", "superjack")


def resolve_cache_dir(flag_value):
    env = os.environ.get(CACHE_ENV)
    if env:
        return env
    if flag_value:
        return flag_value
    return default_cache_dir()


class ChiCache:
    """Persistent store of chi tables, written atomically, one complete
    weight class at a time.

    A weight class is trusted only if it is complete and every record
    passes the reconstruction checks (monic at its own partition,
    dominance-triangular, pairwise orthogonal under the deformed Hall
    pairing); those properties pin the whole class uniquely, so a valid
    complete class is byte-for-byte reproducible from scratch. Anything
    else is recomputed and rewritten.
    """

    def __init__(self, directory):
        self.directory = directory
        self.path = os.path.join(directory, CACHE_FILENAME)
        self._validated = {}

    def _read_records(self):
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return {}
        records = data.get("records")
        return records if isinstance(records, dict) else {}

    def _validated_class(self, d):
        if d in self._validated:
            return self._validated[d]
        raw = self._read_records()
        plist = partitions_of(d)
        tables = {}
        try:
            for lam in plist:
                rec = raw.get(lam.to_string())
                if rec is None:
                    raise KeyError(lam)
                table = ChiTable.from_json(rec)
                if table.lam != lam:
                    raise ValueError("mislabeled record")
                if any(mu.weight != d for mu in table.entries):
                    raise ValueError("weight mismatch in record")
                tables[lam] = table
            pvecs = {lam: to_powersum_vec(t) for lam, t in tables.items()}
            for lam in plist:
                mon = _chi_to_monomial(tables[lam])
                if mon.coeffs.get(lam) != ONE:
                    raise ValueError("not monic")
                for mu in mon.coeffs:
                    if not dominance_leq(mu, lam):
                        raise ValueError("not triangular")
            for i, lam in enumerate(plist):
                for mu in plist[i + 1:]:
                    if hall_inner_product(pvecs[lam], pvecs[mu]):
                        raise ValueError("not orthogonal")
        except (KeyError, ValueError, TypeError, ArithmeticError):
            self._validated[d] = None
            return None
        self._validated[d] = tables
        return tables

    def get_class(self, d):
        return self._validated_class(d)

    def put_class(self, d, tables):
        records = self._read_records()
        for lam, table in tables.items():
            records[lam.to_string()] = table.to_json()
        self._write(records)
        self._validated[d] = dict(tables)

    def _write(self, records):
        keys = sorted((Partition.from_string(s) for s in records),
                      key=_partition_sort_key)
        payload = {
            "header": {"format_version": FORMAT_VERSION, "convention": CONVENTION},
            "records": {lam.to_string(): records[lam.to_string()] for lam in keys},
        }
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(dumps_canonical(payload))
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def info(self):
        raw = self._read_records()
        weights = sorted({Partition.from_string(s).weight for s in raw})
        return {
            "path": self.path,
            "records": len(raw),
            "weights": weights,
            "format_version": FORMAT_VERSION,
            "convention": CONVENTION,
        }

    def clear(self):
        self._validated.clear()
        if os.path.exists(self.path):
            os.unlink(self.path)


def to_powersum_vec(table):
    from .sympoly import POWERSUM, SymFuncVec
    return SymFuncVec(POWERSUM, dict(table.entries))


def _chi_to_monomial(table):
    from .sympoly import to_monomial
    return to_monomial(to_powersum_vec(table))


def get_chi_table(lam, cache):
    """Cache-or-compute chi table; complete classes are persisted."""
    lam = Partition(lam)
    if cache is not None:
        tables = cache.get_class(lam.weight)
        if tables is not None:
            return tables[lam]
    tables = {mu: chi_table(mu) for mu in partitions_of(lam.weight)}
    if cache is not None:
        cache.put_class(lam.weight, tables)
    return tables[lam]


# ---------------------------------------------------------------------------
# verification suites

def _hook_partitions(max_weight, n, m):
    for d in range(max_weight + 1):
        for lam in partitions_of(d):
            if in_hook(lam, n, m):
                yield lam


def theorem1_case(lam_string, n, m):
    lam = Partition.from_string(lam_string)
    case = {"lambda": lam_string, "n": n, "m": m}
    try:
        ev = extract_eigenvalue(lam, n, m)
        case["eigenvalue"] = ev.to_json()
        case["matches_formula"] = ev == eigenvalue(lam, n, m)
        case["pass"] = case["matches_formula"]
    except (EigenfunctionError, AlgebraMembershipError, ValueError) as exc:
        case["error"] = str(exc)
        case["pass"] = False
    return case


def hooks_case(lam_string, n, m):
    lam = Partition.from_string(lam_string)
    hook = in_hook(lam, n, m)
    vanishes = super_jack(lam, n, m).poly.is_zero()
    return {
        "lambda": lam_string, "n": n, "m": m,
        "in_hook": hook, "vanishes": vanishes,
        "pass": vanishes == (not hook),
    }


def schur_case(lam_string, n, m):
    lam = Partition.from_string(lam_string)
    sj = super_jack(lam, n, m).specialize(1)
    hs = hook_schur_twisted(lam, n, m).specialize(1)
    return {"lambda": lam_string, "n": n, "m": m, "pass": sj == hs}


def classical_case(lam_string, n):
    lam = Partition.from_string(lam_string)
    case = {"lambda": lam_string, "n": n, "m": 0}
    sj = super_jack(lam, n, 0).poly
    case["reduction_equal"] = sj == realize(jack_in_monomial(lam), n)
    ok = case["reduction_equal"]
    if not sj.is_zero():
        try:
            ev = extract_eigenvalue(lam, n, 0)
            case["spectrum_equal"] = (ev == classical_eigenvalue(lam, n)
                                      and ev == eigenvalue(lam, n, 0))
        except (EigenfunctionError, AlgebraMembershipError) as exc:
            case["error"] = str(exc)
            case["spectrum_equal"] = False
        ok = ok and case["spectrum_equal"]
    case["pass"] = ok
    return case


def classical_oracle_case(lam_string):
    lam = Partition.from_string(lam_string)
    case = {"lambda": lam_string}
    case["oracle_equal"] = jack_eigenvector_oracle(lam) == jack_in_monomial(lam)
    integral = True
    for mu, c in chi_table(lam).entries.items():
        val = c.specialize(1) * z_factor(mu)
        if val.denominator != 1:
            integral = False
            break
    case["chi_integral_at_k1"] = integral
    case["pass"] = case["oracle_equal"] and integral
    return case


def _pool_map(fn, args_list, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_star_apply, [(fn.__name__, a) for a in args_list]))
    return [fn(*a) for a in args_list]


_WORKERS = {}


def _star_apply(packed):
    name, args = packed
    return _WORKERS[name](*args)


def run_theorem1(max_weight, nm_pairs, jobs=0):
    args = [(lam.to_string(), n, m)
            for n, m in nm_pairs for lam in _hook_partitions(max_weight, n, m)]
    cases = _pool_map(theorem1_case, args, jobs)
    return {
        "suite": "theorem1",
        "max_weight": max_weight,
        "grid": [list(p) for p in nm_pairs],
        "cases": cases,
        "pass": all(c["pass"] for c in cases),
    }


def run_hooks(max_weight, nm_pairs, jobs=0):
    args = [(lam.to_string(), n, m)
            for n, m in nm_pairs
            for d in range(max_weight + 1) for lam in partitions_of(d)]
    cases = _pool_map(hooks_case, args, jobs)
    return {
        "suite": "hooks",
        "max_weight": max_weight,
        "grid": [list(p) for p in nm_pairs],
        "cases": cases,
        "pass": all(c["pass"] for c in cases),
    }


def run_schur(max_weight, n, m, jobs=0):
    args = [(lam.to_string(), n, m) for lam in _hook_partitions(max_weight, n, m)]
    cases = _pool_map(schur_case, args, jobs)
    return {
        "suite": "schur",
        "max_weight": max_weight,
        "n": n,
        "m": m,
        "k": "1",
        "cases": cases,
        "pass": all(c["pass"] for c in cases),
    }


def run_classical(max_weight, n_list, jobs=0):
    args = [(lam.to_string(), n)
            for n in n_list
            for d in range(max_weight + 1) for lam in partitions_of(d)]
    cases = _pool_map(classical_case, args, jobs)
    oracle_args = [(lam.to_string(),)
                   for d in range(max_weight + 1) for lam in partitions_of(d)]
    oracle_cases = _pool_map(classical_oracle_case, oracle_args, jobs)
    return {
        "suite": "classical",
        "max_weight": max_weight,
        "n": list(n_list),
        "cases": cases,
        "oracle_cases": oracle_cases,
        "pass": (all(c["pass"] for c in cases)
                 and all(c["pass"] for c in oracle_cases)),
    }


def run_gauge(lam_strings, nm_pairs, k_values, num_points, seed, tol,
              r22_sign=-1, freeness_tol=1e-7):
    cases = []
    for n, m in nm_pairs:
        for lam_string in lam_strings:
            lam = Partition.from_string(lam_string)
            if not in_hook(lam, n, m):
                continue
            for k0 in k_values:
                rep = conjugation_check(lam, n, m, k0, num_points=num_points,
                                        seed=seed, tol=tol, r22_sign=r22_sign)
                cases.append(rep.to_json())
    freeness = []
    for n, m in nm_pairs:
        for k0 in k_values:
            spread, ok = first_order_freeness(n, m, k0, num_points=5,
                                              seed=seed, tol=freeness_tol)
            freeness.append({"n": n, "m": m, "k": str(Fraction(k0)),
                             "spread": spread, "tol": freeness_tol, "pass": ok})
    return {
        "suite": "gauge",
        "points": num_points,
        "seed": seed,
        "tol": tol,
        "cases": cases,
        "freeness": freeness,
        "pass": (all(c["verdict"] == "pass" for c in cases)
                 and all(f["pass"] for f in freeness)),
    }


_WORKERS.update({
    "theorem1_case": theorem1_case,
    "hooks_case": hooks_case,
    "schur_case": schur_case,
    "classical_case": classical_case,
    "classical_oracle_case": classical_oracle_case,
})


# ---------------------------------------------------------------------------
# report rendering

def _render(report, fmt, stream):
    if fmt == "json":
        stream.write(dumps_canonical(report))
        stream.write("\n")
        return
    suite = report.get("suite")
    for case in report.get("cases", []):
        status = "PASS" if case.get("pass", case.get("verdict") == "pass") else "FAIL"
        desc = " ".join("%s=%s" % (key, case[key]) for key in case
                        if key not in ("pass", "points", "residuals"))
        stream.write("%s %s %s\n" % (status, suite, desc))
    for case in report.get("oracle_cases", []):
        stream.write("%s %s-oracle lambda=%s\n"
                     % ("PASS" if case["pass"] else "FAIL", suite, case["lambda"]))
    for case in report.get("freeness", []):
        stream.write("%s %s-freeness n=%d m=%d k=%s spread=%.3g\n"
                     % ("PASS" if case["pass"] else "FAIL", suite,
                        case["n"], case["m"], case["k"], case["spread"]))
    stream.write("suite %s: %s\n" % (suite, "PASS" if report["pass"] else "FAIL"))


# ---------------------------------------------------------------------------
# argument handling

def _parse_k(text):
    if text is None or text == "generic":
        return None
    try:
        k0 = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("cannot parse k value %r" % text)
    if k0 == 0:
        raise argparse.ArgumentTypeError("k must be nonzero")
    return k0


def _parse_lambda(text):
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="superjack",
        description="Exact two-block Jack polynomials and the deformed "
                    "Calogero-Moser-Sutherland operator.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--jobs", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    p_jack = sub.add_parser("jack", parents=[common],
                            help="classical Jack polynomial tables")
    p_jack.add_argument("--lambda", dest="lam", type=_parse_lambda, required=True)
    p_jack.add_argument("--basis", choices=("m", "p"), default="m")

    p_sj = sub.add_parser("superjack", parents=[common],
                          help="two-block Jack polynomial")
    p_sj.add_argument("--lambda", dest="lam", type=_parse_lambda, required=True)
    p_sj.add_argument("-n", dest="n", type=int, required=True)
    p_sj.add_argument("-m", dest="m", type=int, required=True)
    p_sj.add_argument("--k", type=_parse_k, default=None)

    p_am = sub.add_parser("apply-m", parents=[common],
                          help="apply the operator to a polynomial JSON file")
    p_am.add_argument("--input", required=True)
    p_am.add_argument("--literal-eq10", action="store_true",
                      help="use the naive printed mixed term and report the "
                           "division failure")

    p_ei = sub.add_parser("eigen", parents=[common], help="eigenvalue")
    p_ei.add_argument("--lambda", dest="lam", type=_parse_lambda, required=True)
    p_ei.add_argument("-n", dest="n", type=int, required=True)
    p_ei.add_argument("-m", dest="m", type=int, required=True)
    p_ei.add_argument("--method", choices=("formula", "extract"), default="formula")

    p_v = sub.add_parser("verify", parents=[common], help="verification suites")
    p_v.add_argument("suite", choices=("theorem1", "schur", "gauge",
                                       "classical", "hooks"))
    p_v.add_argument("--max-weight", type=int, default=None)
    p_v.add_argument("-n", dest="n", type=int, default=None)
    p_v.add_argument("-m", dest="m", type=int, default=None)
    p_v.add_argument("--k", type=_parse_k, default=None)
    p_v.add_argument("--lambda", dest="lam", type=_parse_lambda, default=None)
    p_v.add_argument("--seed", type=int, default=1)
    p_v.add_argument("--tol", type=float, default=1e-8)
    p_v.add_argument("--points", type=int, default=10)
    p_v.add_argument("--r22-sign", choices=("corrected", "printed"),
                     default="corrected")

    p_c = sub.add_parser("cache", parents=[common], help="chi-table cache")
    p_c.add_argument("action", choices=("info", "clear", "rebuild"))
    p_c.add_argument("--max-weight", type=int, default=6)

    return parser


def _make_cache(args):
    if getattr(args, "no_cache", False):
        return None
    return ChiCache(resolve_cache_dir(getattr(args, "cache_dir", None)))


def _cmd_jack(args, stream):
    cache = _make_cache(args)
    table = get_chi_table(args.lam, cache)
    if args.basis == "p":
        report = table.to_json()
    else:
        mon = _chi_to_monomial(table)
        keys = sorted(mon.coeffs, key=_partition_sort_key)
        report = {
            "lambda": args.lam.to_string(),
            "monomial": {mu.to_string(): mon.coeffs[mu].to_json() for mu in keys},
        }
    if args.format == "json":
        stream.write(dumps_canonical(report) + "\n")
    else:
        basis = "chi" if args.basis == "p" else "monomial"
        for key, val in report[basis].items():
            stream.write("%s\t%s\n" % (key or "()", RatK.from_json(val)))
    return 0


def _cmd_superjack(args, stream):
    if args.n < 0 or args.m < 0:
        print("block sizes must be nonnegative", file=sys.stderr)
        return 2
    sj = super_jack(args.lam, args.n, args.m)
    if args.k is None:
        report = sj.to_json()
    else:
        report = {
            "lambda": sj.lam.to_string(),
            "n": sj.n,
            "m": sj.m,
            "k": str(args.k),
            "poly": sj.specialize(args.k).to_json(),
            "eigenvalue": RatK.from_fraction(
                eigenvalue(sj.lam, sj.n, sj.m).specialize(args.k)).to_json(),
        }
    if args.format == "json":
        stream.write(dumps_canonical(report) + "\n")
    else:
        stream.write("%s\n" % sj.poly)
    return 0


def _cmd_apply_m(args, stream):
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            poly = SparsePoly.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print("cannot read polynomial: %s" % exc, file=sys.stderr)
        return 2
    try:
        image = apply_m(poly, literal_cross=args.literal_eq10)
    except AlgebraMembershipError as exc:
        report = {
            "remainder_checks": "failed",
            "error": str(exc),
            "pair": list(exc.pair[1:]) if exc.pair else None,
            "remainder": exc.remainder.to_json() if exc.remainder is not None else None,
        }
        stream.write(dumps_canonical(report) + "\n")
        return 1
    report = image.to_json()
    report["remainder_checks"] = "ok"
    if args.format == "json":
        stream.write(dumps_canonical(report) + "\n")
    else:
        stream.write("%s\n" % image)
    return 0


def _cmd_eigen(args, stream):
    if args.method == "extract":
        try:
            ev = extract_eigenvalue(args.lam, args.n, args.m)
        except (EigenfunctionError, ValueError) as exc:
            print(str(exc), file=sys.stderr)
            return 1
    else:
        ev = eigenvalue(args.lam, args.n, args.m)
    report = {"eigenvalue": ev.to_json()}
    if args.format == "json":
        stream.write(dumps_canonical(report) + "\n")
    else:
        stream.write("%s\n" % ev)
    return 0


def _cmd_verify(args, stream):
    suite = args.suite
    jobs = args.jobs
    if suite == "theorem1":
        mw = 6 if args.max_weight is None else args.max_weight
        pairs = THEOREM1_GRID
        if args.n is not None or args.m is not None:
            if args.n is None or args.m is None:
                print("give both -n and -m", file=sys.stderr)
                return 2
            pairs = [(args.n, args.m)]
        report = run_theorem1(mw, pairs, jobs)
    elif suite == "hooks":
        mw = 6 if args.max_weight is None else args.max_weight
        pairs = HOOKS_GRID
        if args.n is not None or args.m is not None:
            if args.n is None or args.m is None:
                print("give both -n and -m", file=sys.stderr)
                return 2
            pairs = [(args.n, args.m)]
        report = run_hooks(mw, pairs, jobs)
    elif suite == "schur":
        mw = 5 if args.max_weight is None else args.max_weight
        n = 2 if args.n is None else args.n
        m = 2 if args.m is None else args.m
        report = run_schur(mw, n, m, jobs)
    elif suite == "classical":
        mw = 6 if args.max_weight is None else args.max_weight
        n_list = [2, 3] if args.n is None else [args.n]
        report = run_classical(mw, n_list, jobs)
    else:
        lams = GAUGE_GRID_LAMBDA if args.lam is None else [args.lam.to_string()]
        pairs = GAUGE_GRID_NM
        if args.n is not None or args.m is not None:
            if args.n is None or args.m is None:
                print("give both -n and -m", file=sys.stderr)
                return 2
            pairs = [(args.n, args.m)]
        ks = GAUGE_GRID_K if args.k is None else [args.k]
        sign = -1 if args.r22_sign == "corrected" else +1
        try:
            report = run_gauge(lams, pairs, ks, args.points, args.seed,
                               args.tol, r22_sign=sign)
        except (SingularConfigurationError, ValueError) as exc:
            print(str(exc), file=sys.stderr)
            return 1
    _render(report, args.format, stream)
    return 0 if report["pass"] else 1


def _cmd_cache(args, stream):
    cache = ChiCache(resolve_cache_dir(args.cache_dir))
    if args.action == "info":
        stream.write(dumps_canonical(cache.info()) + "\n")
        return 0
    if args.action == "clear":
        cache.clear()
        stream.write(dumps_canonical({"cleared": True}) + "\n")
        return 0
    cache.clear()
    for d in range(args.max_weight + 1):
        tables = {mu: chi_table(mu) for mu in partitions_of(d)}
        cache.put_class(d, tables)
    stream.write(dumps_canonical({"rebuilt": True,
                                  "max_weight": args.max_weight}) + "\n")
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    stream = sys.stdout
    try:
        if args.command == "jack":
            return _cmd_jack(args, stream)
        if args.command == "superjack":
            return _cmd_superjack(args, stream)
        if args.command == "apply-m":
            return _cmd_apply_m(args, stream)
        if args.command == "eigen":
            return _cmd_eigen(args, stream)
        if args.command == "verify":
            return _cmd_verify(args, stream)
        if args.command == "cache":
            return _cmd_cache(args, stream)
    except BrokenPipeError:
        return 1
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
