import json
import sympy
from .functional import Alphabet, Letter, MomentFunctional, CumulantFunctional
from .boolean import check_boolean_independence
from ..utils.scalar import as_scalar, is_zero, equal, simplify, format_scalar
from ..partitions import ONE, STAR, SignPattern, enumerate_alt


class BDiagonalLaw(object):
    r'''
    The law of a B-diagonal variable :math:`X`, given by its determining sequences.

    All Boolean cumulants of :math:`X, X^\ast` vanish except the alternating ones,

    .. math::
        \alpha_m = b_{2m}(X, X^\ast, \dots, X, X^\ast), \quad
        \beta_m = b_{2m}(X^\ast, X, \dots, X^\ast, X),

    indexed by the number :math:`m` of :math:`(X, X^\ast)` pairs.

    Args:
        alpha (list): :math:`\alpha_1, \alpha_2, \dots`, exact scalars or sympy expressions.
        beta (list): :math:`\beta_1, \beta_2, \dots`.
        max_order (int, optional): the largest pair count covered. Shorter sequences are
            padded with zeros. If ``None``, the longer of the two sequences. Default: ``None``.

    Example:
        >>> law = br.BDiagonalLaw(alpha=[1, 2], beta=[3])
        >>> law.cumulant(br.parse_xi('xx*xx*')), law.cumulant(br.parse_xi('x*x'))
        (Fraction(2, 1), Fraction(3, 1))
    '''
    def __init__(self, alpha, beta, max_order=None):
        alpha, beta = [as_scalar(a) for a in alpha], [as_scalar(b) for b in beta]
        max_order = max(len(alpha), len(beta), 1) if max_order is None else int(max_order)
        assert max_order >= 1, ValueError('max_order has to be positive: {}'.format(max_order))
        if len(alpha) > max_order or len(beta) > max_order:
            raise ValueError('determining sequences are longer than max_order={}'.format(max_order))
        zero = as_scalar(0)
        self.alpha = tuple(alpha) + (zero,) * (max_order - len(alpha))
        self.beta = tuple(beta) + (zero,) * (max_order - len(beta))
        self.max_order = max_order

    @classmethod
    def symbolic(cls, order):
        r'''
        A law with sympy symbols ``alpha_1, ..., alpha_order`` and ``beta_1, ..., beta_order``.
        '''
        alpha = sympy.symbols('alpha_1:{}'.format(order + 1))
        beta = sympy.symbols('beta_1:{}'.format(order + 1))
        return cls(alpha, beta, order)

    def a(self, m):
        self._check_pairs(m)
        return self.alpha[m - 1]

    def b(self, m):
        self._check_pairs(m)
        return self.beta[m - 1]

    def _check_pairs(self, m):
        if m < 1 or m > self.max_order:
            raise ValueError('pair count {} outside 1..{}'.format(m, self.max_order))

    def cumulant(self, xi):
        r'''
        :math:`b_n(X^{\xi_1}, \dots, X^{\xi_n})`: :math:`\alpha_{n/2}` or :math:`\beta_{n/2}`
        for an alternating pattern of even length starting with 1 or :math:`\ast`, else 0.
        '''
        xi = SignPattern(xi)
        n = len(xi)
        if n > 2 * self.max_order:
            raise ValueError('pattern of length {} exceeds order {}'.format(n, 2 * self.max_order))
        if n % 2 or not xi.is_alternating():
            return as_scalar(0)
        return self.a(n // 2) if xi[0] == ONE else self.b(n // 2)

    def alphabet(self):
        return Alphabet.star_pair('x', tag='X')

    def cumulant_functional(self):
        A = self.alphabet()
        return CumulantFunctional.from_callable(A, lambda w: self.cumulant(_signs(w)),
                                                2 * self.max_order)

    def moment_functional(self, order=None):
        order = 2 * self.max_order if order is None else order
        if order > 2 * self.max_order:
            raise ValueError('order {} exceeds {}'.format(order, 2 * self.max_order))
        return MomentFunctional.from_callable(self.alphabet(),
                                              lambda w: bdiag_word_moment(self, _signs(w)), order)

    def to_json(self):
        return {'alpha': [format_scalar(a) for a in self.alpha],
                'beta': [format_scalar(b) for b in self.beta]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls([_parse(a) for a in data.get('alpha', [])],
                   [_parse(b) for b in data.get('beta', [])], data.get('max_order'))

    def __eq__(self, other):
        return isinstance(other, BDiagonalLaw) and self.max_order == other.max_order and \
            all(equal(a, b) for a, b in zip(self.alpha + self.beta, other.alpha + other.beta))

    def __repr__(self):
        return 'BDiagonalLaw(alpha={}, beta={})'.format(
            [format_scalar(a) for a in self.alpha], [format_scalar(b) for b in self.beta])


def _parse(value):
    if isinstance(value, str) and any(c.isalpha() for c in value):
        return sympy.sympify(value)
    return as_scalar(value)


def _signs(word):
    return SignPattern(STAR if a.endswith('*') else ONE for a in word)


def bdiag_word_moment(law, xi):
    r'''
    The moment :math:`\varphi(X^{\xi_1} \cdots X^{\xi_n})` of a B-diagonal variable.

    .. math::
        \varphi(X^{\xi_1} \cdots X^{\xi_n}) = \sum_{\sigma\in\mathrm{alt}(\vec\xi)}
            \prod_{B\in\sigma^-} \alpha_{|B|/2} \prod_{B\in\sigma^+} \beta_{|B|/2},

    where :math:`\sigma^-` holds the blocks starting with 1 and :math:`\sigma^+` those
    starting with :math:`\ast`.

    Example:
        >>> law = br.BDiagonalLaw.symbolic(2)
        >>> br.bdiag_word_moment(law, br.parse_xi('xx*xx*'))
        alpha_1**2 + alpha_2
    '''
    xi = SignPattern(xi)
    if len(xi) > 2 * law.max_order:
        raise ValueError('pattern of length {} exceeds order {}'.format(len(xi), 2 * law.max_order))
    total = as_scalar(0)
    for sigma in enumerate_alt(xi):
        term = as_scalar(1)
        for start, length in sigma.windows:
            term = term * (law.a(length // 2) if xi[start] == ONE else law.b(length // 2))
        total = total + term
    return simplify(total)


def bernoulli_moment(alpha, n):
    r'''
    Moments of the Bernoulli law, the Boolean central limit: :math:`\alpha^{n/2}` for even
    :math:`n` and 0 for odd :math:`n`.
    '''
    if n < 1:
        raise ValueError('moment order has to be positive: {}'.format(n))
    alpha = as_scalar(alpha)
    return as_scalar(0) if n % 2 else simplify(alpha ** (n // 2))


def bernoulli_cumulants(alpha, order):
    r'''
    The Boolean cumulants of the Bernoulli law with variance :math:`\alpha`:
    :math:`b_n = \delta_n^2 \alpha` on the self-adjoint letter ``x``.
    '''
    A = Alphabet([Letter('x', tag='X')])
    alpha = as_scalar(alpha)
    return CumulantFunctional.from_callable(A, lambda w: alpha if len(w) == 2 else 0, order)


def bdiag_product_law(law, order=None):
    r'''
    The joint moments of :math:`u = X^\ast X` and :math:`v = X X^\ast`, both self-adjoint.

    A word in :math:`u, v` is a word in :math:`X, X^\ast` of twice the length and its moment
    is :meth:`bdiag_word_moment` of that pattern.
    '''
    order = law.max_order if order is None else order
    if order > law.max_order:
        raise ValueError('order {} exceeds the law order {}'.format(order, law.max_order))
    A = Alphabet([Letter('u', tag='u'), Letter('v', tag='v')])
    expand = {'u': (STAR, ONE), 'v': (ONE, STAR)}

    def moment(word):
        return bdiag_word_moment(law, SignPattern(s for a in word for s in expand[a]))

    return MomentFunctional.from_callable(A, moment, order)


def verify_prop_B_part_i(law, p, tail, verbose=False):
    r'''
    Check that :math:`X^\ast X` and :math:`X X^\ast` are Boolean independent for a B-diagonal
    :math:`X`.

    Two checks are made: the factorisation

    .. math::
        \varphi\left((XX^\ast)^p\, X^\ast X^{\xi_1} \cdots X^{\xi_m}\right) =
        \varphi\left((XX^\ast)^p\right) \varphi\left(X^\ast X^{\xi_1} \cdots X^{\xi_m}\right),

    and the vanishing of every mixed Boolean cumulant of :math:`u = X^\ast X`,
    :math:`v = XX^\ast` up to order :math:`p + \lceil (m+1)/2 \rceil`, capped by the law.

    Args:
        law (BDiagonalLaw): the law of :math:`X`.
        p (int): the power of :math:`XX^\ast`, at least 1.
        tail (SignPattern): the signs :math:`\xi_1, \dots, \xi_m`, possibly empty.
        verbose (bool, optional): print both sides. Default: ``False``.

    Return:
        bool: ``True`` if both checks pass.
    '''
    assert p >= 1, ValueError('p has to be positive: {}'.format(p))
    head = SignPattern((ONE, STAR)) * p
    rest = SignPattern((STAR,) + tuple(SignPattern(tail) if len(tail) else ()))
    if len(head) + len(rest) > 2 * law.max_order:
        raise ValueError('word of length {} exceeds order {}'
                         .format(len(head) + len(rest), 2 * law.max_order))
    lhs = bdiag_word_moment(law, head + rest)
    rhs = simplify(bdiag_word_moment(law, head) * bdiag_word_moment(law, rest))
    order = min(law.max_order, p + (len(rest) + 1) // 2)
    report = check_boolean_independence(bdiag_product_law(law, order))
    if verbose:
        print('X*X vs XX*: p={} tail={} lhs {} rhs {} --> mixed words {}, nonzero cumulants {}'
              .format(p, SignPattern(tail) if len(tail) else '', format_scalar(lhs),
                      format_scalar(rhs), report.checked, len(report.cumulant_violations)))
    return is_zero(lhs - rhs) and report.independent
