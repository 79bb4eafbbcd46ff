"""Property suites run by ``chernpairs verify``.

Each suite returns one or more :class:`SuiteResult`; the CLI prints one
line per result.  Everything is seeded and ordered, so two runs with the same
arguments print the same bytes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import chern as cl
from .generators import CollinearPlus, Generic, OnCurve, gen_points
from .globalgen import is_gg
from .liaison import (
    check_cb_residuel_instance,
    check_exist_gaps_instance,
    check_trou_instance,
    ci_residual,
    make_transverse_ci,
)
from .linalg import FieldSpec, Matrix, kernel_basis, mat_rank
from .luroth import luroth_contains, luroth_gaps
from .points import PointSet, h0_ideal, h1_ideal, hilbert, hilbert_function, is_cb, numerical_character

MAX_C_LIMIT = 500
MIN_VERIFY_PRIME = 13


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    informative: int | None = None
    notes: list[str] = field(default_factory=list)

    def record(self, ok: bool, note: str | None = None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if note and len(self.notes) < 5:
                self.notes.append(note)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


@dataclass
class Config:
    seed: int = 0
    max_c: int = 100
    trials: int = 200
    prime: int = 101

    def sub_seed(self, tag: str, i: int) -> int:
        return random.Random(f"{self.seed}:{tag}:{i}").randrange(2**31)


# -- classification ---------------------------------------------------------


def suite_duality(cfg: Config) -> SuiteResult:
    res = SuiteResult("duality")
    for c in range(cfg.max_c + 1):
        eff = set(cl.effective_set(c))
        cc = c * c
        for y in range(cc + 1):
            res.record((y in eff) == ((cc - y) in eff), f"c={c} y={y}")
    return res


def suite_bounds(cfg: Config) -> SuiteResult:
    res = SuiteResult("range_bounds")
    for c in range(cfg.max_c + 1):
        for y in cl.effective_set(c):
            res.record(y == 0 or y == c * c or c - 1 <= y <= c * c - c + 1, f"c={c} y={y}")
    return res


def suite_stable_range(cfg: Config) -> SuiteResult:
    res = SuiteResult("stable_range")
    for c in range(1, cfg.max_c + 1):
        lo = -(-c * c // 4)
        for y in range(lo, 3 * c * c // 4 + 1):
            res.record(cl.classify(c, y).effective, f"c={c} y={y}")
    return res


def suite_small_c(cfg: Config) -> SuiteResult:
    res = SuiteResult("no_small_gaps")
    for c in range(1, 6):
        res.record(not cl.gap_set(c), f"c={c}")
        window = [y for y in range(c - 1, c * c - c + 2) if not cl.classify(c, y).effective]
        res.record(not window, f"c={c} gaps {window}")
    return res


def suite_golden(cfg: Config) -> SuiteResult:
    res = SuiteResult("golden_tables")

    def gaps(c):
        lo, hi = c - 1, c * c - c + 1
        return [y for y in range(lo, hi + 1) if not cl.classify(c, y).effective]

    res.record(gaps(6) == [7, 29], "gaps(6)")
    res.record(gaps(7) == [8, 9, 40, 41], "gaps(7)")
    res.record(list(cl.gap_set(16)) == [(17, 27), (33, 38), (47, 47)], "gap_set(16)")
    res.record(cl.classify(16, 62).effective and not cl.classify(16, 47).effective, "c=16 regression")
    return res


def suite_window_coverage(cfg: Config) -> SuiteResult:
    res = SuiteResult("window_coverage")
    for c in range(4, cfg.max_c + 1):
        windows = [((t - 1) * (c - t + 1), t * (c - t)) for t in range(2, c // 2 + 1)]
        # closed windows run from c-1 up to the last product, which is >= floor((c^2-1)/4)
        ok = windows[0][0] == c - 1 and (c * c - 1) // 4 <= windows[-1][1] and 4 * windows[-1][1] <= c * c
        ok &= all(a[1] == b[0] for a, b in zip(windows, windows[1:]))
        products = {a * (c - a) for a in range(1, c // 2 + 1)}
        ok &= {w[1] for w in windows} | {windows[0][0]} == products
        res.record(ok, f"c={c}")
    return res


def suite_clipped_g(cfg: Config) -> SuiteResult:
    res = SuiteResult("clipped_g_equivalence")
    for c in range(4, cfg.max_c + 1):
        for t in range(2, c // 2 + 1):
            pieces = [(lo, hi) for _, lo, hi in cl.g_intervals(c, t)]
            for y in range((t - 1) * (c - t + 1) + 1, t * (c - t)):
                in_g = any(lo <= y <= hi for lo, hi in pieces)
                res.record(in_g == (not cl.is_admissible(c, t, y)), f"c={c} t={t} y={y}")
    return res


def suite_large_t(cfg: Config) -> SuiteResult:
    res = SuiteResult("no_gaps_large_t")
    for c in range(4, min(2 * cfg.max_c, MAX_C_LIMIT) + 1):
        gaps = cl.gap_set(c)
        for t in range(2, c // 2 + 1):
            if 3 * t * t > 4 * (c - 2):
                lo, hi = (t - 1) * (c - t + 1) + 1, t * (c - t) - 1
                res.record(not gaps.clip(lo, hi), f"c={c} t={t}")
    return res


def suite_gap_set_strict(cfg: Config) -> SuiteResult:
    res = SuiteResult("gap_set_range")
    for c in range(0, min(2 * cfg.max_c, MAX_C_LIMIT) + 1):
        gaps = cl.gap_set(c)
        res.record(all(c - 1 < lo and 4 * hi < c * c for lo, hi in gaps), f"c={c}")
    return res


def suite_luroth(cfg: Config) -> SuiteResult:
    res = SuiteResult("luroth_semigroup")
    for d in range(3, 13):
        gaps = luroth_gaps(d)
        res.record(all(n in gaps for n in range(1, d - 1)), f"[1,d-2] d={d}")
    for d in range(1, 13):
        members = [n for n in range(3 * d * d + 1) if luroth_contains(d, n)]
        member_set = set(members)
        ok = all(m + n in member_set for i, m in enumerate(members) for n in members[i:] if m + n <= 3 * d * d)
        res.record(ok, f"closure d={d}")
    return res


# -- exact linear algebra ---------------------------------------------------


def _random_matrix(rng: random.Random, field: FieldSpec) -> Matrix:
    r, c = rng.randint(1, 7), rng.randint(1, 8)
    k = rng.randint(0, min(r, c))
    A = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(r)]
    B = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(k)]
    rows = [[sum(A[i][j] * B[j][m] for j in range(k)) for m in range(c)] for i in range(r)]
    return Matrix.from_rows(field, rows)


def suite_linalg(cfg: Config) -> list[SuiteResult]:
    nullity = SuiteResult("rank_nullity")
    exact = SuiteResult("kernel_exact")
    invariance = SuiteResult("rank_invariance")
    fp_le_q = SuiteResult("rank_fp_le_q")
    fields = [FieldSpec.prime(cfg.prime), FieldSpec.rational()]
    for i in range(cfg.trials):
        rng = random.Random(cfg.sub_seed("linalg", i))
        f = fields[i % 2]
        m = _random_matrix(rng, f)
        rk = mat_rank(m)
        ker = kernel_basis(m)
        nullity.record(rk + len(ker) == m.cols, f"trial {i}")
        exact.record(all(all(x == 0 for x in m.apply(v)) for v in ker), f"trial {i}")
        rows = m.to_rows()
        rng.shuffle(rows)
        perm = list(range(m.cols))
        rng.shuffle(perm)
        scaled = []
        for row in rows:
            s = f(rng.randint(1, 9))
            scaled.append([row[j] * s for j in perm])
        invariance.record(mat_rank(Matrix.from_rows(f, scaled)) == rk, f"trial {i}")
        ints = [[rng.randint(-9, 9) for _ in range(m.cols)] for _ in range(m.rows)]
        fp_le_q.record(
            mat_rank(Matrix.from_rows(fields[0], ints)) <= mat_rank(Matrix.from_rows(fields[1], ints)),
            f"trial {i}",
        )
    return [nullity, exact, invariance, fp_le_q]


# -- point schemes ----------------------------------------------------------


def _instance(cfg: Config, i: int) -> PointSet:
    """The i-th seeded point set of the character suite (degree <= 12)."""
    rng = random.Random(cfg.sub_seed("points", i))
    seed = rng.randrange(2**31)
    field = FieldSpec.prime(cfg.prime) if i % 2 == 0 else FieldSpec.rational()
    kind = rng.choice(["generic", "collinear", "curve"] if field.is_prime else ["generic", "collinear"])
    if kind == "generic":
        return gen_points(Generic(rng.randint(1, 12)), field, seed)
    if kind == "collinear":
        k = rng.randint(2, 8)
        return gen_points(CollinearPlus(k, rng.randint(0, 12 - k)), field, seed)
    return gen_points(OnCurve(rng.randint(1, 4), rng.randint(1, 12)), field, seed)


def suite_points(cfg: Config) -> list[SuiteResult]:
    mono = SuiteResult("hilbert_monotone")
    char = SuiteResult("character_consistency")
    cbm = SuiteResult("cb_monotone")
    for i in range(cfg.trials):
        Z = _instance(cfg, i)
        H = [hilbert(Z, n) for n in range(Z.degree + 1)]
        mono.record(
            all(a <= b for a, b in zip(H, H[1:]))
            and all(h <= Z.degree for h in H)
            and all(H[n] == Z.degree for n in range(max(Z.degree - 1, 0), Z.degree + 1)),
            f"instance {i}",
        )
        ch = numerical_character(Z, check=False)
        n0 = ch.entries[0]
        ok = ch.is_valid() and ch.degree == Z.degree
        ok &= all(ch.h1(n) == h1_ideal(Z, n) for n in range(n0 + 2))
        char.record(ok, f"instance {i} character {ch}")
        if i % 4 == 0:
            holds = [is_cb(Z, n).holds for n in range(Z.degree + 1)]
            for n in range(1, Z.degree + 1):
                cbm.record(holds[n - 1] or not holds[n], f"instance {i} n={n}")
    return [mono, char, cbm]


def suite_cb(cfg: Config) -> list[SuiteResult]:
    field = FieldSpec.prime(cfg.prime)
    ci_cb = SuiteResult("ci_cayley_bacharach")
    for a, b in [(1, 3), (2, 2), (2, 3), (3, 3)]:
        for s in range(10):
            ci = make_transverse_ci(a, b, field, cfg.sub_seed(f"ci{a}{b}", s))
            ci_cb.record(is_cb(ci.X, a + b - 3).holds, f"CI({a},{b}) seed {s}")
    generic = SuiteResult("generic_cb_fails")
    for m in range(1, 7):
        for s in range(5):
            Z = gen_points(Generic(m), field, cfg.sub_seed(f"generic{m}", s))
            for n in range(max(m - 1, 1), m + 2):
                generic.record(not is_cb(Z, n).holds, f"m={m} seed {s} n={n}")
    return [ci_cb, generic]


def suite_gg(cfg: Config) -> SuiteResult:
    res = SuiteResult("gg_monotone")
    field = FieldSpec.prime(cfg.prime)
    for i in range(max(10, cfg.trials // 10)):
        rng = random.Random(cfg.sub_seed("gg", i))
        m = rng.randint(1, 8)
        Z = gen_points(rng.choice([Generic(m), CollinearPlus(min(m, 4), max(0, m - 4))]), field, rng.randrange(2**31))
        for n in range(1, 6):
            if h0_ideal(Z, n) == 0 or not is_gg(Z, n).generated:
                continue
            res.record(is_gg(Z, n + 1).generated, f"instance {i} n={n}")
            break
    return res


def _checker_suite(name: str, reports) -> SuiteResult:
    res = SuiteResult(name, informative=0)
    for k, rep in enumerate(reports):
        res.informative += rep.hypotheses_hold and rep.conclusion is not None
        res.record(not rep.violation, f"{name} instance {k}: {json.dumps(rep.as_dict(), sort_keys=True)}")
    return res


def suite_checkers(cfg: Config) -> list[SuiteResult]:
    field = FieldSpec.prime(cfg.prime)
    n_inst = max(25, cfg.trials // 8)

    trou = []
    for i in range(n_inst):
        rng = random.Random(cfg.sub_seed("trou", i))
        k = rng.randint(2, 7)
        trou.append(check_trou_instance(gen_points(CollinearPlus(k, rng.randint(0, 4)), field, rng.randrange(2**31))))

    gaps = []
    for i in range(n_inst):
        rng = random.Random(cfg.sub_seed("gaps", i))
        if i % 2 == 0:
            d, a = 6, 2
        else:
            a = rng.randint(1, 2)
            d = rng.randint(a * a + 2, 7)
        deg = rng.randint((a - 1) * d + 1, a * (d - a) - 1)
        Z = gen_points(Generic(deg), field, rng.randrange(2**31))
        gaps.append(check_exist_gaps_instance(Z, d, a))

    resid = []
    for i in range(n_inst):
        rng = random.Random(cfg.sub_seed("resid", i))
        a, b = rng.choice([(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)])
        ci = make_transverse_ci(a, b, field, rng.randrange(2**31))
        k = rng.randint(1, a * b - 1)
        Y = PointSet(field, sorted(rng.sample(ci.X.points, k)))
        Z = ci_residual(ci.F, ci.G, ci.X, Y)
        resid.append(check_cb_residuel_instance(Y, Z, a, b, ci.F, ci.G))

    return [
        _checker_suite("trou_checker", trou),
        _checker_suite("exist_gaps_checker", gaps),
        _checker_suite("cb_residual_checker", resid),
    ]


def suite_determinism(cfg: Config) -> SuiteResult:
    res = SuiteResult("determinism")
    field = FieldSpec.prime(cfg.prime)
    for i in range(5):
        s = cfg.sub_seed("det", i)

        def run():
            Z = gen_points(CollinearPlus(4, 2), field, s)
            ci = make_transverse_ci(2, 3, field, s)
            return json.dumps(
                [
                    check_trou_instance(Z).as_dict(),
                    [list(map(str, p)) for p in ci.X.points],
                    hilbert_function(gen_points(Generic(7), FieldSpec.rational(), s), 7),
                ],
                sort_keys=True,
            )

        res.record(run() == run(), f"seed {s}")
    return res


SUITES = [
    suite_golden,
    suite_small_c,
    suite_duality,
    suite_bounds,
    suite_stable_range,
    suite_window_coverage,
    suite_clipped_g,
    suite_large_t,
    suite_gap_set_strict,
    suite_luroth,
    suite_linalg,
    suite_points,
    suite_cb,
    suite_gg,
    suite_checkers,
    suite_determinism,
]


def validate(cfg: Config) -> None:
    if not 0 <= cfg.max_c <= MAX_C_LIMIT:
        raise ValueError(f"--max-c must be in [0, {MAX_C_LIMIT}]")
    if cfg.trials < 1:
        raise ValueError("--trials must be positive")
    FieldSpec.prime(cfg.prime)
    if cfg.prime < MIN_VERIFY_PRIME:
        raise ValueError(f"--prime must be at least {MIN_VERIFY_PRIME} for the point-set suites")


def run_all(cfg: Config) -> list[SuiteResult]:
    validate(cfg)
    out: list[SuiteResult] = []
    for suite in SUITES:
        try:
            r = suite(cfg)
        except Exception as exc:  # a crashing suite is a failed suite
            r = SuiteResult(suite.__name__.removeprefix("suite_"))
            r.record(False, f"{type(exc).__name__}: {exc}")
        out.extend(r if isinstance(r, list) else [r])
    return out
