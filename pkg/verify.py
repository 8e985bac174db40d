"""Verification suites: each one is a list of exact checks run into a Report."""
import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from tqdm import tqdm

from adams_skein import (P, adams_image, psi2_c2_system, q_c_series, q_d_series, rosso_jones,
                         series_identities, solve_pattern, torus_closure, torus_invariant,
                         Inconsistent, PatternSystem, Solution)
from annulus import Q, closure, e_hat, epsilon_plane, q_hook, theta, theta_diagrams
from chords import ChordDiagram, all_matchings, psi_chords, psi_matching, rotate_partners
from diagram_ring import CPoly, DiagramVector, d, hook_pieri, phi
from hecke import (BraidWord, HeckeElement, a_element, b_element, e_lambda, from_word, left_multiply,
                   mul, ppb_word, right_multiply, tensor)
from models import Report
from partitions import Partition, alpha, alpha_hook, lr_mult, partitions_of, pi_permutation
from scalars import DELTA, S, Scalar, V, X, Z, quantum_factorial, quantum_int

logger = logging.getLogger(__name__)

DEFAULT_MAX = {
    'xbiff': 6,
    'idempotents': 5,
    'cd': 8,
    'hook': 6,
    'rosso-jones': 4,
    'series': 6,
    'hecke': 5,
    'chords': 3,
    'pattern': 4,
}

TORUS_PAIRS = [(2, 1), (3, 1), (4, 1), (2, 3), (2, 5), (3, 2), (3, 4), (4, 3)]


@dataclass
class Check:
    tag: str
    run: object
    params: dict = field(default_factory=dict)


def _diagrams_up_to(n, start=1):
    return [lam for size in range(start, n + 1) for lam in partitions_of(size)]


def adams_image_checks(max_size):
    return [Check('xbiff', lambda m=m: P(m) == adams_image(m), {'m': m}) for m in range(1, max_size + 1)]


def idempotent_checks(max_size):
    checks = []
    for lam in _diagrams_up_to(max_size):
        def idempotent(lam=lam):
            e = e_lambda(lam)
            return mul(e, e) == e.scale(alpha(lam))
        checks.append(Check('idempotent', idempotent, {'partition': lam.display()}))
    for size in range(2, max_size):
        for lam, mu in combinations(partitions_of(size), 2):
            def orthogonal(lam=lam, mu=mu):
                return not mul(e_lambda(lam), e_lambda(mu)) and not mul(e_lambda(mu), e_lambda(lam))
            checks.append(Check('orthogonal', orthogonal, {'pair': f"{lam.display()}{mu.display()}"}))
    return checks


def cd_checks(max_size):
    checks = []
    for m in range(1, max_size + 1):
        def cd_inverse(m=m):
            total = CPoly()
            for k in range(m + 1):
                total = total + (CPoly.c(k) * d(m - k)).scale((-1) ** k)
            return not total
        checks.append(Check('cd-inverse', cd_inverse, {'m': m}))
    for k in range(1, max_size):
        for l in range(1, max_size - k + 1):
            checks.append(Check('pieri', lambda k=k, l=l: phi(CPoly.c(k) * d(l)) == hook_pieri(k, l),
                                {'k': k, 'l': l}))
    for lam in _diagrams_up_to(max_size - 1):
        for mu in _diagrams_up_to(max_size - lam.size):
            if (lam.size, lam.parts) < (mu.size, mu.parts):
                continue

            def symmetric(lam=lam, mu=mu):
                product = lr_mult(lam, mu)
                sizes = all(nu.size == lam.size + mu.size for nu in product)
                return product == lr_mult(mu, lam) and sizes
            checks.append(Check('lr-symmetry', symmetric, {'pair': f"{lam.display()}{mu.display()}"}))
    triple_max = max_size - 2
    diagrams = _diagrams_up_to(triple_max)
    for a in diagrams:
        for b in diagrams:
            for c in diagrams:
                if a.size + b.size + c.size > triple_max:
                    continue

                def associative(a=a, b=b, c=c):
                    va, vb, vc = (DiagramVector.diagram(p) for p in (a, b, c))
                    return (va * vb) * vc == va * (vb * vc)
                checks.append(Check('lr-associativity', associative,
                                    {'triple': f"{a.display()}{b.display()}{c.display()}"}))
    for k in range(1, max_size):
        for l in range(1, max_size - k + 1):
            checks.append(Check('alpha-hook', lambda k=k, l=l: alpha(Partition.hook(k, l)) == alpha_hook(k, l),
                                {'k': k, 'l': l}))
    for lam in _diagrams_up_to(max_size):
        checks.append(Check('pi-transpose',
                            lambda lam=lam: pi_permutation(lam.transpose) == pi_permutation(lam).inverse(),
                            {'partition': lam.display()}))
    return checks


def coefficient_readings(max_size):
    """Compare the A_k coefficient of Q_(1^k) with both closed forms on record."""
    single, factorial = [], []
    for k in range(1, max_size + 1):
        coeff = Q(Partition.column(k)).coefficient((k,))
        sign = (-(X ** -1)) ** (k - 1)
        single.append(coeff == sign / Scalar.coerce(quantum_int(k)))
        factorial.append(coeff == sign / Scalar.coerce(quantum_factorial(k)))
    first_bad = next((k for k, ok in enumerate(factorial, start=1) if not ok), None)
    if all(single) and first_bad is None:
        logger.warning(f"Coefficient of A_k in Q_(1^k) is (-x^-1)^(k-1)/[k] for k <= {max_size}; "
                       "the /[k]! reading agrees as well up to this size")
    elif all(single):
        logger.warning(f"Coefficient of A_k in Q_(1^k) is (-x^-1)^(k-1)/[k] for k <= {max_size}; "
                       f"the /[k]! reading fails from k = {first_bad}")
    else:
        logger.warning(f"Coefficient of A_k in Q_(1^k) does not match (-x^-1)^(k-1)/[k]: {single}")
    return single


def hook_checks(max_size):
    checks = []
    readings = {}

    def leading_coefficient(k):
        if not readings:
            readings['single'] = coefficient_readings(max_size)
        return readings['single'][k - 1]

    for k in range(1, max_size + 1):
        checks.append(Check('column-leading-coefficient', lambda k=k: leading_coefficient(k), {'k': k}))
    for k in range(1, max_size):
        for l in range(1, max_size - k + 1):
            checks.append(Check('hook-product', lambda k=k, l=l: q_hook(k + 1, l) + q_hook(k, l + 1)
                                == q_hook(k, 1) * q_hook(1, l), {'k': k, 'l': l}))

            def hook_closures(k=k, l=l):
                left = e_hat(Partition.hook(k + 1, l)).scale(S ** l * quantum_int(l)) \
                    + e_hat(Partition.hook(k, l + 1)).scale(S ** -k * quantum_int(k))
                right = (e_hat(Partition.hook(1, l)) * e_hat(Partition.hook(k, 1))) \
                    .scale(S ** (l - k) * quantum_int(l + k))
                return left == right
            checks.append(Check('hook-closure-relation', hook_closures, {'k': k, 'l': l}))

    def hook_series():
        product = q_c_series(max_size + 1) * q_d_series(max_size + 1)
        bad = next((i for i, c in enumerate(product.coefficients) if c != (1 if i == 0 else 0)), None)
        return bad is None, '' if bad is None else f"coefficient of X^{bad} is {product.coefficients[bad]}"
    checks.append(Check('hook-series-inverse', hook_series, {'degree': max_size}))
    for l in range(1, max_size + 1):
        checks.append(Check('row-image', lambda l=l: theta(d(l)) == Q(Partition.row(l)), {'l': l}))
    for k in range(1, max_size):
        for l in range(1, max_size - k + 1):
            hook = Partition.hook(k, l)
            checks.append(Check('hook-image', lambda hook=hook: theta_diagrams(DiagramVector.diagram(hook)) == Q(hook),
                                {'k': k, 'l': l}))
    for lam in _diagrams_up_to(max_size - 1):
        checks.append(Check('diagram-image', lambda lam=lam: theta_diagrams(DiagramVector.diagram(lam)) == Q(lam),
                            {'partition': lam.display()}))
    return checks


def rosso_jones_checks(max_size):
    checks = []
    for m, p in TORUS_PAIRS:
        if m > max_size:
            continue
        checks.append(Check('rosso-jones',
                            lambda m=m, p=p: torus_closure(m, p) == rosso_jones(m, p).scale((X * V ** -1) ** -p),
                            {'m': m, 'p': p}))
    trefoil = DELTA * (2 * V ** 2 - V ** 4 + V ** 2 * Z ** 2)
    checks.append(Check('trefoil', lambda: torus_invariant(2, 3, normalize=True) == trefoil,
                        {'m': 2, 'p': 3}))
    checks.append(Check('trefoil-sl2', lambda: torus_invariant(2, 3, N=2, normalize=True, h_order=0)[0] == 2,
                        {'N': 2}))
    return checks


def series_checks(max_size):
    return [Check('series', lambda: series_identities(max_size), {'order': max_size})]


def _decomposition(l, weight, upside_down=False):
    one = HeckeElement.one(1)
    if upside_down:
        block = tensor(one, a_element(l - 1) if weight == 'a' else b_element(l - 1))
    else:
        block = tensor(a_element(l - 1) if weight == 'a' else b_element(l - 1), one)
    factor = X ** -1 * S if weight == 'a' else -(X ** -1) * S ** -1
    total = block
    for i in range(l - 1):
        if upside_down:
            word = BraidWord(l, tuple((i + 1 - t, 1) for t in range(i + 1)))
            term = left_multiply(word, block)
        else:
            word = BraidWord(l, tuple((l - 1 - t, 1) for t in range(i + 1)))
            term = right_multiply(block, word)
        total = total + term.scale(factor ** (i + 1))
    return total


def _random_word(rng, strands, length):
    if strands < 2:
        return BraidWord(strands)
    return BraidWord(strands, tuple((rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)))


def hecke_checks(max_size):
    checks = []
    for n in range(1, max_size + 1):
        def roundtrip(n=n):
            return all(from_word(ppb_word(p)) == HeckeElement.basis(p) for p in permutations(range(n)))
        checks.append(Check('ppb-roundtrip', roundtrip, {'n': n}))
    for n in range(3, max_size + 1):
        for i in range(1, n - 1):
            checks.append(Check('braid-relation', lambda n=n, i=i: from_word(BraidWord.from_ints(n, [i, i + 1, i]))
                                == from_word(BraidWord.from_ints(n, [i + 1, i, i + 1])), {'n': n, 'i': i}))
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                checks.append(Check('far-commute', lambda n=n, i=i, j=j: from_word(BraidWord.from_ints(n, [i, j]))
                                    == from_word(BraidWord.from_ints(n, [j, i])), {'n': n, 'i': i, 'j': j}))
    for n in range(2, max_size + 1):
        for i in range(1, n):
            def eigenvalues(n=n, i=i):
                sigma = BraidWord(n, ((i, 1),))
                a, b = a_element(n), b_element(n)
                return (right_multiply(a, sigma) == a.scale(X * S)
                        and left_multiply(sigma, a) == a.scale(X * S)
                        and right_multiply(b, sigma) == b.scale(-X * S ** -1)
                        and left_multiply(sigma, b) == b.scale(-X * S ** -1))
            checks.append(Check('symmetrizer-eigenvalue', eigenvalues, {'n': n, 'i': i}))
        checks.append(Check('symmetrizer-decomposition', lambda n=n: _decomposition(n, 'a') == a_element(n) and _decomposition(n, 'b') == b_element(n)
                            and _decomposition(n, 'a', upside_down=True) == a_element(n)
                            and _decomposition(n, 'b', upside_down=True) == b_element(n), {'l': n}))
    rng = random.Random(20240611)
    for n in range(2, min(max_size, 4) + 1):
        for trial in range(3):
            u, w = _random_word(rng, n, 3), _random_word(rng, n, 4)

            def conjugation(u=u, w=w):
                g, h = from_word(u), from_word(w)
                return (closure(mul(g, h)) == closure(mul(h, g))
                        and closure(from_word(u + w + u.inverse())) == closure(h))
            checks.append(Check('conjugation', conjugation, {'n': n, 'word': str(w)}))
    for n in range(1, min(max_size, 3) + 1):
        for trial in range(3):
            w = _random_word(rng, n, 3)

            def markov(w=w):
                base = epsilon_plane(closure(from_word(w)))
                stretched = BraidWord(w.strand_count + 1, w.letters)
                positive = epsilon_plane(closure(from_word(stretched + BraidWord(stretched.strand_count,
                                                                                   ((w.strand_count, 1),)))))
                negative = epsilon_plane(closure(from_word(stretched + BraidWord(stretched.strand_count,
                                                                                   ((w.strand_count, -1),)))))
                curl = X * V ** -1
                return positive == curl * base and negative == base / curl
            checks.append(Check('markov', markov, {'n': n, 'word': str(w) or 'id'}))
    return checks


def chord_checks(max_size):
    checks = []
    crossing = ChordDiagram.from_pairs([(1, 3), (2, 4)])
    parallel = ChordDiagram.from_pairs([(1, 2), (3, 4)])

    def example():
        tally = psi_chords(crossing, 2)
        return dict(tally) == {crossing: 8, parallel: 8}
    checks.append(Check('chord-example', example, {'m': 2}))
    for n in range(1, max_size + 1):
        for m in range(1, max_size + 1):
            def total(n=n, m=m):
                return all(sum(psi_matching(partners, m).values()) == m ** (2 * n) for partners in all_matchings(n))
            checks.append(Check('chord-sum', total, {'n': n, 'm': m}))

        def canonical(n=n):
            diagrams = [ChordDiagram(partners) for partners in all_matchings(n)]
            return all(ChordDiagram(D.partners) == D for D in diagrams)
        checks.append(Check('chord-canonical', canonical, {'n': n}))

        def rotation(n=n):
            m = 2
            return all(psi_matching(rotate_partners(partners, r), m) == psi_matching(partners, m)
                       for partners in all_matchings(n) for r in range(2 * n))
        checks.append(Check('chord-rotation', rotation, {'n': n}))
    return checks


def pattern_checks(max_size):
    def consistent():
        patterns = [closure(from_word(BraidWord.from_ints(2, [1]))), closure(from_word(BraidWord.from_ints(2, [-1])))]
        result = solve_pattern(PatternSystem(P(2), patterns))
        return isinstance(result, Solution) and list(result.coefficients) == [X ** -1, X]

    def counterexample(reverse, decoration=Partition((1, 1))):
        result = solve_pattern(psi2_c2_system(decoration, reverse=reverse))
        if not isinstance(result, Inconsistent):
            return False, f"solved with {result}"
        return len(result.first_equations) == 2 and len(result.second_equations) == 2, ''

    return [
        Check('pattern-consistent', consistent, {'target': 'P2'}),
        Check('counterexample', lambda: counterexample(False), {'order': 'forward'}),
        Check('counterexample', lambda: counterexample(True), {'order': 'reversed'}),
        Check('counterexample', lambda: counterexample(False, Partition((2,))),
              {'order': 'forward', 'decoration': '(2)'}),
    ]


SUITES = {
    'xbiff': adams_image_checks,
    'idempotents': idempotent_checks,
    'cd': cd_checks,
    'hook': hook_checks,
    'rosso-jones': rosso_jones_checks,
    'series': series_checks,
    'hecke': hecke_checks,
    'chords': chord_checks,
    'pattern': pattern_checks,
}


def run_checks(name, checks):
    report = Report()
    for check in tqdm(checks, desc=name, disable=None, leave=False):
        try:
            outcome = check.run()
        except Exception as e:
            logger.error(f"Error in {check.tag} {check.params}: {str(e)}")
            report.add(check.tag, False, detail=str(e), **check.params)
            continue
        if isinstance(outcome, Report):
            report.extend(outcome)
        elif isinstance(outcome, tuple):
            report.add(check.tag, outcome[0], detail=outcome[1], **check.params)
        else:
            report.add(check.tag, outcome, **check.params)
    return report


def run_suite(name, max_size=None):
    """Run one suite, or every suite for 'all'; max_size defaults to the acceptance sizes.

    For 'all' the size is clamped to each suite's default.
    """
    if name == 'all':
        report = Report()
        for suite in SUITES:
            size = None if max_size is None else min(max_size, DEFAULT_MAX[suite])
            report.extend(run_suite(suite, size))
        return report
    if name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    default = DEFAULT_MAX[name]
    if max_size is None:
        max_size = default
    if max_size < 1:
        raise ValueError(f"--max must be >= 1, got {max_size}")
    if max_size > default:
        logger.warning(f"Suite {name} at size {max_size} exceeds the default {default}; "
                       f"expect factorial growth in time and memory")
    logger.info(f"Running suite {name} up to size {max_size}")
    report = run_checks(name, SUITES[name](max_size))
    logger.info(f"Suite {name}: {len(report.results) - len(report.failures)} passed, "
                f"{len(report.failures)} failed")
    return report
