r'''
Invariant suites. Each suite checks one family of identities exhaustively at small sizes
against an independent oracle and returns a :obj:`SuiteResult`.
'''
import torch
import inspect
import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from .utils.scalar import is_zero, equal
from .partitions import ONE, STAR, SignPattern, enumerate_partitions
from .partitions import meet, join, meet_inductive, join_inductive, juxtapose, decompose
from .partitions import is_xi_alternating
from .cumulants import Alphabet, CumulantFunctional, MomentFunctional
from .cumulants import moments_from_cumulants, cumulant_table, BDiagonalLaw
from .cumulants import bernoulli_moment, verify_prop_B_part_i
from .model import BDiagonalEntries, SelfAdjointEntries
from .matrix import iota_histogram, count_tuples_blockwise, closed_form_count, closed_form_applies
from .matrix import MixedWordSpec, trace_moment_exact, trace_moment_selfadjoint_exact
from .matrix import limit_mixed, mixed_factorization, limit_selfadjoint
from .matrix import limit_selfadjoint_integral
from .permutation import identity, transpose, partial_transpose, PartialTransposeSpec
from .permutation import theta_condition_count, sharing_pairs, delta_set
from .permutation import partial_transpose_cross_moment, cross_moment_exact


@dataclass
class SuiteResult:
    r'''
    The outcome of a suite.

    Attributes:
        name (str): the suite.
        checks (int): the number of identities checked.
        failures (list): a message per failed identity.
    '''
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, condition, message):
        self.checks = self.checks + 1
        if not condition:
            self.failures.append(message)

    def to_json(self):
        return {'suite': self.name, 'passed': self.passed, 'checks': self.checks,
                'failures': list(self.failures)}

    def __str__(self):
        return '{}: {} ({} checks)'.format(self.name, 'PASS' if self.passed else 'FAIL',
                                           self.checks)


def _rationals(generator, count, low=-5, high=6, den=5):
    nums = torch.randint(low, high, (count,), generator=generator).tolist()
    dens = torch.randint(1, den + 1, (count,), generator=generator).tolist()
    return [Fraction(p, q) for p, q in zip(nums, dens)]


def _patterns(n):
    return (SignPattern(xi) for xi in itertools.product((ONE, STAR), repeat=n))


def lattice(n_max=6):
    r''' Meet and join against their inductive rules, and juxtaposition of restrictions. '''
    result = SuiteResult('lattice')
    for n in range(1, n_max + 1):
        for sigma, omega in itertools.product(list(enumerate_partitions(n)), repeat=2):
            lo, hi = meet(sigma, omega), join(sigma, omega)
            result.check(lo == meet_inductive(sigma, omega), 'meet {} {}'.format(sigma, omega))
            result.check(hi == join_inductive(sigma, omega), 'join {} {}'.format(sigma, omega))
            result.check(lo <= sigma and lo <= omega and sigma <= hi and omega <= hi,
                         'bounds {} {}'.format(sigma, omega))
            result.check(juxtapose(*decompose(sigma, omega)) == lo,
                         'juxtaposed restrictions {} {}'.format(sigma, omega))
    return result


def bc1(order=4, seed=0):
    r''' Cumulants to moments and back for a random rational table of a star pair. '''
    result, generator = SuiteResult('bc1'), torch.Generator().manual_seed(seed)
    A = Alphabet.star_pair('x')
    words = list(A.words(order))
    c = CumulantFunctional(A, dict(zip(words, _rationals(generator, len(words)))), order)
    m = MomentFunctional.from_callable(A, lambda w: moments_from_cumulants(c, w), order)
    table = cumulant_table(m)
    for word in words:
        result.check(table(word) == c(word), 'cumulant of {}'.format(' '.join(word)))
    return result


def counting(n_max=6, N_max=5, budget=None):
    r'''
    Inclusion-exclusion counts against enumeration for every word, the bounds
    :math:`N^{\#\sigma+1}` on :math:`\mathrm{alt}(\vec\xi)` and :math:`N^{\#\sigma}` off it, and
    the closed form on the words that alternate along their whole length.
    '''
    result = SuiteResult('counting')
    for n in range(1, n_max + 1):
        for xi in _patterns(n):
            for N in range(1, N_max + 1):
                histogram = iota_histogram(xi, N, budget=budget)
                result.check(sum(histogram.values()) == N ** n, 'total {} N={}'.format(xi, N))
                for sigma, count in histogram.items():
                    result.check(count_tuples_blockwise(sigma, xi, N).count == count,
                                 'count {} {} N={}'.format(sigma, xi, N))
                    bound = N ** (len(sigma) + is_xi_alternating(sigma, xi))
                    result.check(count <= bound, 'bound {} {} N={}'.format(sigma, xi, N))
                    if closed_form_applies(sigma, xi):
                        result.check(closed_form_count(sigma, xi, N).count == count,
                                     'closed form {} {} N={}'.format(sigma, xi, N))
    return result


def prop_b(order=8, seed=0):
    r''' :math:`X^\ast X` and :math:`XX^\ast` are Boolean independent for a B-diagonal :math:`X`. '''
    result, generator = SuiteResult('prop-b'), torch.Generator().manual_seed(seed)
    pairs = order // 2
    law = BDiagonalLaw(_rationals(generator, pairs), _rationals(generator, pairs), pairs)
    for p in range(1, pairs + 1):
        for m in range(0, order - 2 * p):
            for tail in itertools.product((ONE, STAR), repeat=m):
                result.check(verify_prop_B_part_i(law, p, SignPattern(tail) if m else ()),
                             'p={} tail={}'.format(p, ''.join(tail)))
    return result


def factorization(n_max=5, labels=3, seed=0):
    r''' The mixed limit against the product of single-matrix limits over label windows. '''
    result, generator = SuiteResult('factorization'), torch.Generator().manual_seed(seed)
    pairs = (n_max + 1) // 2
    laws = {k: BDiagonalLaw(_rationals(generator, pairs), _rationals(generator, pairs), pairs)
            for k in range(labels)}
    for n in range(1, n_max + 1):
        for xi in _patterns(n):
            for k in itertools.product(range(labels), repeat=n):
                result.check(equal(limit_mixed(k, xi, laws), mixed_factorization(k, xi, laws)),
                             'labels {} {}'.format(k, xi))
    return result


def oracle(n_max=4, N_max=3, seed=0):
    r''' Exact trace moments by partition sums against brute force, with and without decorations. '''
    result, generator = SuiteResult('oracle'), torch.Generator().manual_seed(seed)
    models = {k: BDiagonalEntries(_rationals(generator, 2), _rationals(generator, 2))
              for k in range(2)}
    for n in range(1, n_max + 1):
        for xi in _patterns(n):
            labels = torch.randint(0, 2, (n,), generator=generator).tolist()
            for N in range(1, N_max + 1):
                decorations = [(None, transpose(N))[d] for d in
                               torch.randint(0, 2, (n,), generator=generator).tolist()]
                for dec in (None, decorations):
                    spec = MixedWordSpec(xi, labels, models, dec)
                    result.check(trace_moment_exact(spec, N, 'brute') ==
                                 trace_moment_exact(spec, N, 'partition'),
                                 'word {} labels {} N={}'.format(xi, labels, N))
    return result


def consequence(sizes=((1, 2), (2, 2), (2, 3), (3, 2)), beta=2):
    r''' The partial transpose: fixed cells, condition counts and the cross moment. '''
    result = SuiteResult('consequence')
    for m, n in sizes:
        spec, gamma = PartialTransposeSpec(m, n), partial_transpose(m, n)
        result.check(sharing_pairs(gamma) == delta_set(spec), 'sharing cells m={} n={}'.format(m, n))
        result.check(len(delta_set(spec)) == m * m * n, 'delta size m={} n={}'.format(m, n))
        result.check(theta_condition_count(gamma, 'share') == 2 * m * m * n - m * n,
                     'share count m={} n={}'.format(m, n))
        result.check(theta_condition_count(gamma, 'swap') == 2 * m * n * n - m * n,
                     'swap count m={} n={}'.format(m, n))
        result.check(cross_moment_exact(beta, m, n) == partial_transpose_cross_moment(0, beta, m, n),
                     'cross moment m={} n={}'.format(m, n))
    for N in range(1, 7):
        result.check(theta_condition_count(identity(N)) == N, 'identity N={}'.format(N))
        result.check(theta_condition_count(transpose(N)) == 2 * N * N - N, 'transpose N={}'.format(N))
    return result


def bernoulli(r_max=5, N_max=4):
    r''' The self-adjoint limit: Bernoulli case, closed form against brute force and the integral. '''
    result = SuiteResult('bernoulli')
    for r in range(1, r_max + 1):
        result.check(limit_selfadjoint(1, 1, 2 * r) == 1, 'alpha=beta=1 n={}'.format(2 * r))
        result.check(limit_selfadjoint(3, 3, 2 * r) == bernoulli_moment(3, 2 * r),
                     'bernoulli moment n={}'.format(2 * r))
        result.check(abs(limit_selfadjoint_integral(2, 1, 2 * r)
                         - float(limit_selfadjoint(2, 1, 2 * r))) < 1e-5,
                     'integral n={}'.format(2 * r))
    result.check(limit_selfadjoint(2, 1, 4) == Fraction(7, 3), 'alpha=2 beta=1 n=4')
    model = SelfAdjointEntries(2, 1)
    for n in range(1, 6):
        result.check(is_zero(limit_selfadjoint(2, 1, 2 * n - 1)), 'odd n={}'.format(2 * n - 1))
        for N in range(1, N_max + 1):
            result.check(trace_moment_selfadjoint_exact(model, n, N, 'closed_form') ==
                         trace_moment_selfadjoint_exact(model, n, N, 'brute'),
                         'closed form n={} N={}'.format(n, N))
    return result


SUITES = {'lattice': lattice, 'bc1': bc1, 'counting': counting, 'prop-b': prop_b,
          'factorization': factorization, 'oracle': oracle, 'consequence': consequence,
          'bernoulli': bernoulli}


def run_suite(name, verbose=False, **options):
    r'''
    Run a suite by name. Options a suite does not take are ignored.

    Args:
        name (str): one of :obj:`SUITES`.
        verbose (bool, optional): print the result line and every failure. Default: ``False``.

    Example:
        >>> br.verify.run_suite('counting', n_max=3, N_max=3, verbose=True)
        counting: PASS (132 checks)
    '''
    if name not in SUITES:
        raise ValueError('unknown suite {!r}; expected one of {}'.format(name, sorted(SUITES)))
    suite = SUITES[name]
    accepted = inspect.signature(suite).parameters
    result = suite(**{k: v for k, v in options.items() if k in accepted and v is not None})
    if verbose:
        print(result)
        for message in result.failures:
            print('  failed: {}'.format(message))
    return result
