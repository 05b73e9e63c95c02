"""
Verification suites.
Every check is a module-level function of a CheckContext so suites can fan
out to a process pool; results are always reported in name order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from math import comb, factorial
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from .bijection import (
    MAX_BIJECTION_SIZE, correspondence_table, phi, phi_inverse, phi_trace,
    verify_fixed_set_bijection,
)
from .errors import GrammarCalcError
from .grammar import DUMONT, DUMONT_B, eulerian
from .identities import CATALOGUE, get_identity
from .labeling import Variant, label_slots, transition_mismatches, weight_sum
from .models import FAIL, PASS, CheckResult, VerificationReport
from .perms import (
    Permutation, all_permutations, asc_suc_polynomial, class_sizes, derangement_counts,
    eulerian_oracle, exc_drop_fix_polynomial, jump_des_lsuc_polynomial,
    jump_lsuc_polynomial, literal_ascent_counterexamples, roselle_polynomial,
    ascent_decomposition_holds,
)
from .poly import LaurentPolynomial, Monomial, var
from .series import gen_from_grammar, mul_series
from .trees import (
    all_trees, decode, encode, tree_weight, x_leaf_vertices, y_leaf_vertices, z_leaf_vertices,
)

logger = logging.getLogger(__name__)

SUITE_NAMES = ('grammar', 'series', 'identities', 'bijection')

# exhaustive checks whose cost grows faster than n! stop here
STRUCTURE_LIMIT = 7
TREE_ENUMERATION_LIMIT = 6

_a, _b, _x, _y, _z = (var(name) for name in 'abxyz')


@dataclass(frozen=True)
class CheckContext:
    max_n: int
    series_order: int = 8


def _range(lo: int, hi: int) -> str:
    if hi < lo:
        return 'no sizes'
    return f"{lo} <= n <= {hi}" if lo < hi else f"n = {hi}"


def _result(name: str, anchor: str, n_range: str, failures: List[str], ok_detail: str = '') -> CheckResult:
    if failures:
        shown = '; '.join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ''
        return CheckResult(name, anchor, n_range, FAIL, shown + more)
    return CheckResult(name, anchor, n_range, PASS, ok_detail)


def _weight(**exponents: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(Monomial.of(**exponents))


# -- grammar suite --------------------------------------------------------

def check_dumont_exc_drop_fix(ctx: CheckContext) -> CheckResult:
    failures = [f"n={n}" for n in range(ctx.max_n + 1)
                if DUMONT.derive_n(_a, n) != _a * exc_drop_fix_polynomial(n)]
    return _result('dumont-exc-drop-fix', 'D^n(a) = a F_n(x,y,z)', _range(0, ctx.max_n), failures)


def check_dumont_jump_des_lsuc(ctx: CheckContext) -> CheckResult:
    failures = [f"n={n}" for n in range(ctx.max_n + 1)
                if DUMONT.derive_n(_a, n) != _a * jump_des_lsuc_polynomial(n)]
    return _result('dumont-jump-des-lsuc', 'D^n(a) = a L_n(x,y,z)', _range(0, ctx.max_n), failures)


def check_roselle_ab_grammar(ctx: CheckContext) -> CheckResult:
    failures = []
    for n in range(1, ctx.max_n + 1):
        derived = DUMONT_B.derive_n(_a * _b, n - 1).substitute({'a': 1, 'b': 1})
        if derived != roselle_polynomial(n):
            failures.append(f"n={n}")
    return _result('roselle-ab-grammar', 'D^{n-1}(ab)|a=b=1 = R_n(x,y,z)',
                   _range(1, ctx.max_n), failures)


def check_roselle_asc_suc_substitution(ctx: CheckContext) -> CheckResult:
    bindings = {'a': 1, 'y': 1, 'b': _x, 'z': _x * _z}
    failures = []
    for n in range(1, ctx.max_n + 1):
        if DUMONT_B.derive_n(_a * _b, n - 1).substitute(bindings) != asc_suc_polynomial(n):
            failures.append(f"n={n}")
    return _result('roselle-asc-suc-substitution', 'D^{n-1}(ab)|a=1,y=1,b=x,z=xz = P_n(x,z)',
                   _range(1, ctx.max_n), failures)


def check_constant_property(ctx: CheckContext) -> CheckResult:
    failures = []
    for constant in (_z - _y, _x - _y):
        if not DUMONT.is_constant(constant):
            failures.append(f"D({constant}) != 0")
    word = _a * _x ** -1
    for n in range(ctx.max_n + 1):
        if DUMONT.derive_n(word, n) != word * (_z - _y) ** n:
            failures.append(f"D^{n}(a x^-1) != a x^-1 (z - y)^{n}")
    return _result('constant-property', 'D^n(a x^-1) = a x^-1 (z-y)^n', _range(0, ctx.max_n), failures)


def check_eulerian_grammar(ctx: CheckContext) -> CheckResult:
    failures = [f"n={n}" for n in range(ctx.max_n + 1) if eulerian(n) != eulerian_oracle(n)]
    return _result('eulerian-grammar', 'A_n(x,y) = sum x^(exc+1) y^(n-exc)', _range(0, ctx.max_n), failures)


def _labeling_count_failures(p: Permutation) -> List[str]:
    failures = []
    left = label_slots(p, Variant.L)
    right = label_slots(p, Variant.R)
    expected_left = {'a': 1, 'x': p.stat('jump'), 'y': p.stat('des'), 'z': p.stat('lsuc'), 'b': 0}
    starts_with_one = int(p.word[0] == 1)
    expected_right = {'a': 1, 'x': p.stat('jump'), 'y': p.stat('des'), 'z': p.stat('suc'),
                      'b': starts_with_one}
    if left.counts() != expected_left:
        failures.append(f"{p}: L counts {left.counts()}")
    if right.counts() != expected_right:
        failures.append(f"{p}: R counts {right.counts()}")
    if left.a_slot != p.position(p.n) + 1:
        failures.append(f"{p}: a-slot {left.a_slot} does not follow {p.n}")
    if left.count('x', 2, p.n) != p.stat('basc'):
        failures.append(f"{p}: interior x-slots differ from big ascents")
    return failures


def check_labeling_counts(ctx: CheckContext) -> CheckResult:
    failures = []
    for n in range(1, ctx.max_n + 1):
        for p in all_permutations(n):
            failures.extend(_labeling_count_failures(p))
    return _result('labeling-counts', '#x = jump, #y = des, #z = lsuc | suc, #a = 1',
                   _range(1, ctx.max_n), failures)


def check_labeling_coherence(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, STRUCTURE_LIMIT)
    failures = []
    for n in range(1, top + 1):
        for p in all_permutations(n):
            for variant in Variant:
                bad = transition_mismatches(p, variant)
                if bad:
                    failures.append(f"{p} ({variant.value}) slots {bad}")
    return _result('labeling-coherence', 'insertion at a slot applies the rule of its label',
                   _range(1, top), failures)


def check_labeling_weight_sums(ctx: CheckContext) -> CheckResult:
    failures = []
    for n in range(1, ctx.max_n + 1):
        if weight_sum(n, Variant.L) != DUMONT.derive_n(_a, n):
            failures.append(f"L, n={n}")
        if weight_sum(n, Variant.R) != DUMONT_B.derive_n(_a * _b, n - 1):
            failures.append(f"R, n={n}")
    return _result('labeling-weight-sums', 'sum of labeling weights = D^n(a), D^{n-1}(ab)',
                   _range(1, ctx.max_n), failures)


def check_tree_weights(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, STRUCTURE_LIMIT)
    failures = []
    for n in range(1, top + 1):
        for p in all_permutations(n):
            t = encode(p.to_cycles())
            expected = _weight(a=1, x=p.stat('exc'), y=p.stat('drop'), z=p.stat('fix'))
            if tree_weight(t) != expected:
                failures.append(f"{p}: weight {tree_weight(t)}")
            drops = frozenset(i for i, v in enumerate(p.word, 1) if v < i)
            leaf_sets = (x_leaf_vertices(t), y_leaf_vertices(t), z_leaf_vertices(t))
            if leaf_sets != (p.set_stat('Excbar'), drops, p.set_stat('F')):
                failures.append(f"{p}: leaf vertex sets")
    trees_top = min(ctx.max_n, TREE_ENUMERATION_LIMIT)
    for n in range(1, trees_top + 1):
        total = LaurentPolynomial.zero()
        for t in all_trees(n):
            total = total + tree_weight(t)
        if total != _a * exc_drop_fix_polynomial(n):
            failures.append(f"sum of tree weights, n={n}")
    return _result('tree-weights', 'x/y/z leaves = excedance values / drops / fixed points',
                   _range(1, top), failures)


def check_tree_round_trip(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, STRUCTURE_LIMIT)
    failures = []
    for n in range(1, top + 1):
        for p in all_permutations(n):
            cycles = p.to_cycles()
            if decode(encode(cycles)) != cycles:
                failures.append(f"{cycles}")
    for n in range(1, min(ctx.max_n, TREE_ENUMERATION_LIMIT) + 1):
        trees = all_trees(n)
        if len(set(trees)) != factorial(n):
            failures.append(f"{len(set(trees))} distinct trees on [{n}]")
        failures.extend(str(t) for t in trees if encode(decode(t)) != t)
    return _result('tree-round-trip', 'decode . encode = id, encode . decode = id',
                   _range(1, top), failures)


# -- series suite ---------------------------------------------------------

def check_identity(identity_id: str, ctx: CheckContext) -> CheckResult:
    identity = get_identity(identity_id)
    order = ctx.series_order
    failures = [f"grammar source, n={n}" for n in identity.mismatches(order, 'grammar')]
    detail = f"grammar to order {order}"
    if identity.enumeration_source is not None:
        enum_order = min(order, ctx.max_n - identity.size_offset)
        if enum_order >= 0:
            failures.extend(f"enumeration source, n={n}"
                            for n in identity.mismatches(enum_order, 'enumeration'))
            detail += f", enumeration to order {enum_order}"
    return _result(identity_id, identity.formula, _range(0, order), failures, detail)


def check_gen_multiplicative(ctx: CheckContext) -> CheckResult:
    order = ctx.series_order
    failures = []
    word = _a * _x ** -1
    if gen_from_grammar(DUMONT, _a, order) != mul_series(
            gen_from_grammar(DUMONT, _x, order), gen_from_grammar(DUMONT, word, order)):
        failures.append("gen(a) != gen(x) gen(a x^-1)")
    pairs = [(_a, _b), (_x, _y), (_a * _z, _x ** 2), (_y, _z ** -1)]
    for grammar in (DUMONT, DUMONT_B):
        for u, v in pairs:
            product = mul_series(gen_from_grammar(grammar, u, order), gen_from_grammar(grammar, v, order))
            if gen_from_grammar(grammar, u * v, order) != product:
                failures.append(f"{grammar.name}: gen({u} * {v})")
    return _result('gen-multiplicative', 'gen(uv, t) = gen(u, t) gen(v, t)', _range(0, order), failures)


# -- identities suite -----------------------------------------------------

def check_equidistribution(ctx: CheckContext) -> CheckResult:
    failures = [f"n={n}" for n in range(ctx.max_n + 1)
                if exc_drop_fix_polynomial(n) != jump_des_lsuc_polynomial(n)]
    return _result('equidistribution', '(jump, des, lsuc) ~ (exc, drop, fix)', _range(0, ctx.max_n), failures)


def check_ascent_decomposition(ctx: CheckContext) -> CheckResult:
    failures = []
    literal = []
    for n in range(1, ctx.max_n + 1):
        for p in all_permutations(n):
            if p.stat('asc') != p.stat('jump') + p.stat('lsuc'):
                failures.append(f"{p}: asc != jump + lsuc")
            if p.stat('asc') + p.stat('des') != n:
                failures.append(f"{p}: asc + des != n")
            if not ascent_decomposition_holds(p):
                failures.append(f"{p}: asc != [sigma_1 = 1] + jump + suc")
        literal.extend(literal_ascent_counterexamples(n))
    detail = ''
    if literal:
        detail = (f"1 + jump + suc = asc fails for {len(literal)} permutations "
                  f"(e.g. {literal[0]}); asc = [sigma_1 = 1] + jump + suc holds")
    return _result('ascent-decomposition', 'asc = jump + lsuc = [sigma_1 = 1] + jump + suc',
                   _range(1, ctx.max_n), failures, detail)


def check_roselle_star_relation(ctx: CheckContext) -> CheckResult:
    failures = []
    shift = {'z': _x * _z}
    for n in range(1, ctx.max_n + 1):
        expected = (jump_lsuc_polynomial(n).substitute(shift)
                    + _x * (1 - _z) * jump_lsuc_polynomial(n - 1).substitute(shift))
        if asc_suc_polynomial(n) != expected:
            failures.append(f"n={n}")
    return _result('roselle-star-relation', 'P_n(x,z) = P*_n(x,xz) + x(1-z) P*_{n-1}(x,xz)',
                   _range(1, ctx.max_n), failures)


def check_roselle_eulerian_convolution(ctx: CheckContext) -> CheckResult:
    failures = []
    top = ctx.max_n - 1
    for n in range(top + 1):
        expected = jump_des_lsuc_polynomial(n)
        for k in range(1, n + 1):
            expected = expected + comb(n, k) * eulerian(k) * jump_des_lsuc_polynomial(n - k)
        if roselle_polynomial(n + 1) != expected:
            failures.append(f"n={n}")
    return _result('roselle-eulerian-convolution', 'R_{n+1} = L_n + sum_k C(n,k) A_k L_{n-k}',
                   _range(0, top), failures)


def check_relative_derangements(ctx: CheckContext) -> CheckResult:
    failures = []
    for n in range(1, ctx.max_n + 1):
        derangements, relative = derangement_counts(n)
        previous, _ = derangement_counts(n - 1)
        if relative != derangements + previous:
            failures.append(f"n={n}: Q={relative}, D_n + D_(n-1) = {derangements + previous}")
    return _result('relative-derangements', 'Q_n = D_n + D_{n-1}', _range(1, ctx.max_n), failures)


def check_inverse_set_statistics(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, STRUCTURE_LIMIT)
    failures = []
    for n in range(1, top + 1):
        for p in all_permutations(n):
            q = p.inverse()
            if q.set_stat('Mbar') != p.set_stat('M'):
                failures.append(f"{p}: Mbar(inverse) != M")
            for which in ('G', 'F'):
                if q.set_stat(which) != p.set_stat(which):
                    failures.append(f"{p}: {which}(inverse) != {which}")
    return _result('inverse-set-statistics', 'Mbar(s^-1) = M(s), G(s^-1) = G(s), F(s^-1) = F(s)',
                   _range(1, top), failures)


def check_succession_fixed_point_cardinality(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, STRUCTURE_LIMIT)
    failures = []
    for n in range(1, top + 1):
        succession = class_sizes(n, 'M')
        if class_sizes(n, 'Mbar') != succession:
            failures.append(f"n={n}: |Mbar_n(I)| != |M_n(I)|")
        if class_sizes(n, 'G') != succession:
            failures.append(f"n={n}: |G_n(I)| != |M_n(I)|")
    return _result('succession-fixed-point-cardinality', '|M_n(I)| = |Mbar_n(I)| = |G_n(I)|',
                   _range(1, top), failures)


# -- bijection suite ------------------------------------------------------

EXPECTED_TABLE_N3: List[Tuple[str, str, Tuple[int, int]]] = [
    ('2 1 3', '(1 2 3)', (2, 1)),
    ('3 2 1', '(1 3 2)', (1, 2)),
    ('1 3 2', '(1)(2 3)', (1, 1)),
    ('3 1 2', '(1 3)(2)', (1, 1)),
    ('2 3 1', '(1 2)(3)', (1, 1)),
    ('1 2 3', '(1)(2)(3)', (0, 0)),
]

CLOSING_EXAMPLE = ('1 6 3 2 4 5', '1 6 4 2 5 3')

WORKED_TRACE = [
    '0 z 1 a',
    '0 z 1 z 2 a',
    '0 z 1 x 3 a 2 y',
    '0 z 1 x 3 y 2 x 4 a',
    '0 z 1 x 3 y 2 x 4 z 5 a',
    '0 z 1 x 6 a 3 y 2 x 4 z 5 y',
]
WORKED_TREE = '(1 z (2 (3 (6 x y) (4 x y)) (5 z a)))'


def check_fixed_set_bijection(ctx: CheckContext) -> CheckResult:
    top = min(ctx.max_n, MAX_BIJECTION_SIZE)
    failures = []
    checked = 0
    for n in range(1, top + 1):
        report = verify_fixed_set_bijection(n)
        checked += report.checked
        failures.extend(f"n={n}: {v}" for v in report.violations)
    return _result('fixed-set-bijection', 'Lbar(s) = F(phi(s)), (jump,des) -> (exc,drop), Jumpbar -> Excbar',
                   _range(1, top), failures, f"{checked} permutations")


def check_bijection_table_n3(ctx: CheckContext) -> CheckResult:
    rows = [(str(row.source), str(row.image.to_cycles()), row.source_stats)
            for row in correspondence_table(3)]
    failures = []
    if rows != EXPECTED_TABLE_N3:
        failures.append(f"table rows {rows}")
    return _result('bijection-table-n3', 'correspondence table for S_3', 'n = 3', failures)


def check_bijection_closing_example(ctx: CheckContext) -> CheckResult:
    source, target = (Permutation.parse(text) for text in CLOSING_EXAMPLE)
    failures = []
    if phi(source) != target:
        failures.append(f"phi({source}) = {phi(source)}")
    if phi_inverse(target) != source:
        failures.append(f"phi_inverse({target}) = {phi_inverse(target)}")
    if (source.set_stat('Lbar'), source.set_stat('Jumpbar')) != (frozenset({1, 5}), frozenset({4, 6})):
        failures.append("Lbar / Jumpbar of the source")
    return _result('bijection-closing-example', 'phi(1 6 3 2 4 5) = (1)(2 6 3 4)(5)', 'n = 6', failures)


def check_bijection_worked_trace(ctx: CheckContext) -> CheckResult:
    steps = phi_trace(Permutation.parse(CLOSING_EXAMPLE[0]))
    failures = []
    if [step.labeling for step in steps] != WORKED_TRACE:
        failures.append(f"labelings {[step.labeling for step in steps]}")
    if steps[-1].tree != WORKED_TREE:
        failures.append(f"final tree {steps[-1].tree}")
    return _result('bijection-worked-trace', 'step-by-step growth of 1 6 3 2 4 5', 'n = 6', failures)


CheckFn = Callable[..., CheckResult]

SUITES: Dict[str, List[Tuple[CheckFn, tuple]]] = {
    'grammar': [
        (check_dumont_exc_drop_fix, ()),
        (check_dumont_jump_des_lsuc, ()),
        (check_roselle_ab_grammar, ()),
        (check_roselle_asc_suc_substitution, ()),
        (check_constant_property, ()),
        (check_eulerian_grammar, ()),
        (check_labeling_counts, ()),
        (check_labeling_coherence, ()),
        (check_labeling_weight_sums, ()),
        (check_tree_weights, ()),
        (check_tree_round_trip, ()),
    ],
    'series': [(check_identity, (identity_id,)) for identity_id in sorted(CATALOGUE)]
    + [(check_gen_multiplicative, ())],
    'identities': [
        (check_equidistribution, ()),
        (check_ascent_decomposition, ()),
        (check_roselle_star_relation, ()),
        (check_roselle_eulerian_convolution, ()),
        (check_relative_derangements, ()),
        (check_inverse_set_statistics, ()),
        (check_succession_fixed_point_cardinality, ()),
    ],
    'bijection': [
        (check_fixed_set_bijection, ()),
        (check_bijection_table_n3, ()),
        (check_bijection_closing_example, ()),
        (check_bijection_worked_trace, ()),
    ],
}


def _run_check(fn: CheckFn, args: tuple, ctx: CheckContext) -> CheckResult:
    try:
        return fn(*args, ctx)
    except GrammarCalcError as exc:
        name = args[0] if args else fn.__name__[len('check_'):].replace('_', '-')
        return CheckResult(str(name), 'error', f"n <= {ctx.max_n}", FAIL, f"{type(exc).__name__}: {exc}")


def _run_packed(job: Tuple[CheckFn, tuple, CheckContext]) -> CheckResult:
    return _run_check(*job)


class IdentityVerifier:
    def __init__(self, max_n: int = 7, series_order: int = 8, workers: int = 1):
        self.context = CheckContext(max_n=max_n, series_order=series_order)
        self.workers = max(1, workers)

    def jobs(self, suite: str) -> List[Tuple[CheckFn, tuple, CheckContext]]:
        if suite == 'all':
            names = SUITE_NAMES
        elif suite in SUITES:
            names = (suite,)
        else:
            raise ValueError(f"Unknown suite {suite!r}; choose from all, {', '.join(SUITE_NAMES)}")
        return [(fn, args, self.context) for name in names for fn, args in SUITES[name]]

    def run(self, suite: str = 'all') -> VerificationReport:
        jobs = self.jobs(suite)
        logger.info("running %d checks (suite=%s, max_n=%d, workers=%d)",
                    len(jobs), suite, self.context.max_n, self.workers)
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(_run_packed, jobs))
        else:
            results = [_run_packed(job) for job in jobs]

        for result in results:
            log = logger.info if result.passed else logger.error
            log("%s: %s", result.name, result.status)
        results.sort(key=lambda result: result.name)
        return VerificationReport(suite=suite, max_n=self.context.max_n, checks=results)

    @staticmethod
    def save_reports(report: VerificationReport, report_dir: Path) -> Tuple[Path, Path]:
        """Write timestamped text and HTML reports; returns their paths."""
        from ..utils.report import ReportGenerator

        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        report_dir.mkdir(parents=True, exist_ok=True)
        text_path = report_dir / f'verification_{timestamp}.txt'
        html_path = report_dir / f'verification_{timestamp}.html'
        text_path.write_text(ReportGenerator.generate_text_report(report))
        html_path.write_text(ReportGenerator.generate_html_report(report))
        logger.info("reports written to %s and %s", text_path, html_path)
        return text_path, html_path
