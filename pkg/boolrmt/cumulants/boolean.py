import itertools
from dataclasses import dataclass, field
from .functional import CumulantFunctional
from ..utils.scalar import as_scalar, is_zero, simplify
from ..partitions import enumerate_partitions


def moments_from_cumulants(c, word):
    r'''
    The moment of a word from Boolean cumulants.

    .. math::
        \varphi(a_1 a_2 \cdots a_n) = \sum_{\pi\in\mathcal{I}(n)} b_\pi[a_1, \dots, a_n],

    where :math:`b_\pi` multiplies :math:`b_k(a_{l+1}, \dots, a_{l+k})` over the blocks
    :math:`\{l+1, \dots, l+k\}` of :math:`\pi`.

    Args:
        c (CumulantFunctional): the cumulants.
        word (tuple): the letter names :math:`a_1, \dots, a_n`.

    Return:
        the exact moment.

    Example:
        >>> b = br.bernoulli_cumulants(1, order=4)
        >>> br.moments_from_cumulants(b, ('x',) * 4)
        Fraction(1, 1)
    '''
    word = c.check_word(word)
    total = as_scalar(0)
    for pi in enumerate_partitions(len(word)):
        term = as_scalar(1)
        for start, length in pi.windows:
            term = term * c.value(word[start:start + length])
            if is_zero(term):
                break
        total = total + term
    return simplify(total)


def _cumulant(m, word, memo):
    if word not in memo:
        value = m.value(word)
        for k in range(1, len(word)):
            head = _cumulant(m, word[:k], memo)
            if not is_zero(head):
                value = value - head * m.value(word[k:])
        memo[word] = simplify(value)
    return memo[word]


def cumulants_from_moments(m, word, memo=None):
    r'''
    The Boolean cumulant :math:`b_n(a_1, \dots, a_n)` of a word.

    Splitting off the first block of every interval partition inverts the moment formula as

    .. math::
        b_n(a_1, \dots, a_n) = \varphi(a_1 \cdots a_n)
            - \sum_{k=1}^{n-1} b_k(a_1, \dots, a_k)\, \varphi(a_{k+1} \cdots a_n).

    Args:
        m (MomentFunctional): the moments.
        word (tuple): the letter names.
        memo (dict, optional): a cache of cumulants of prefixes, shared across calls on the
            same functional. Default: ``None``.

    Example:
        >>> A = br.Alphabet.star_pair('x')
        >>> phi = br.MomentFunctional(A, {('x',): 1, ('x', 'x'): 3}, max_order=2)
        >>> br.cumulants_from_moments(phi, ('x', 'x'))
        Fraction(2, 1)
    '''
    return _cumulant(m, m.check_word(word), {} if memo is None else memo)


def cumulant_table(m, order=None):
    r'''
    All Boolean cumulants of words up to ``order`` as a :obj:`CumulantFunctional`.
    '''
    order = m.max_order if order is None else order
    if order > m.max_order:
        raise ValueError('order {} exceeds the maximal order {}'.format(order, m.max_order))
    memo = {}
    values = {w: _cumulant(m, w, memo) for w in m.alphabet.words(order)}
    return CumulantFunctional(m.alphabet, values, max_order=order)


def multilinear(func, slots):
    r'''
    Evaluate a word functional on formal linear combinations of letters.

    Args:
        func (callable): word to scalar, e.g. a :obj:`CumulantFunctional`.
        slots (list): one combination per position, each a dict from letter name to
            coefficient.

    Example:
        >>> b = br.bernoulli_cumulants(2, order=2)
        >>> br.multilinear(b, [{'x': 3}, {'x': '1/2'}])
        Fraction(3, 1)
    '''
    total = as_scalar(0)
    slots = [list(slot.items()) for slot in slots]
    for choice in itertools.product(*slots):
        coef = as_scalar(1)
        for _, c in choice:
            coef = coef * as_scalar(c)
        if not is_zero(coef):
            total = total + coef * func(tuple(a for a, _ in choice))
    return simplify(total)


@dataclass
class IndependenceReport:
    r'''
    Outcome of :meth:`check_boolean_independence`.

    Attributes:
        order (int): the largest word length checked.
        checked (int): the number of mixed words examined.
        cumulant_violations (list): ``(word, value)`` of nonvanishing mixed cumulants.
        product_violations (list): ``(word, moment, product)`` where run factorisation fails.
    '''
    order: int
    checked: int = 0
    cumulant_violations: list = field(default_factory=list)
    product_violations: list = field(default_factory=list)

    @property
    def independent(self):
        return not self.cumulant_violations and not self.product_violations

    def __bool__(self):
        return self.independent


def _group_of(groups, alphabet):
    if isinstance(groups, dict):
        return dict(groups)
    if groups is None:
        return {a.name: a.tag for a in alphabet}
    return {name: g for g, members in enumerate(groups) for name in members}


def check_boolean_independence(m, groups=None, order=None):
    r'''
    Check that groups of letters are Boolean independent up to an order.

    Every word using letters of at least two groups must have a vanishing Boolean cumulant.
    As a cross-check the moment of every such word must factor over its maximal runs of
    letters from one group, :math:`\varphi(w_1 w_2 \cdots) = \varphi(w_1)\varphi(w_2)\cdots`.

    Args:
        m (MomentFunctional): the joint moments.
        groups (dict or list, optional): letter name to group, or a list of lists of letter
            names. If ``None``, the letter tags are used. Default: ``None``.
        order (int, optional): the longest word. If ``None``, ``m.max_order``. Default: ``None``.

    Return:
        IndependenceReport: empty violation lists iff the groups are independent to that order.
    '''
    order = m.max_order if order is None else order
    if order > m.max_order:
        raise ValueError('order {} exceeds the maximal order {}'.format(order, m.max_order))
    group = _group_of(groups, m.alphabet)
    missing = [a for a in m.alphabet.names if a not in group]
    if missing:
        raise ValueError('letters without a group: {}'.format(missing))
    report, memo = IndependenceReport(order=order), {}
    for word in m.alphabet.words(order, min_order=2):
        tags = [group[a] for a in word]
        if len(set(tags)) < 2:
            continue
        report.checked += 1
        value = _cumulant(m, word, memo)
        if not is_zero(value):
            report.cumulant_violations.append((word, value))
        runs = [tuple(a for a, _ in run) for _, run in
                itertools.groupby(zip(word, tags), key=lambda item: item[1])]
        product = as_scalar(1)
        for run in runs:
            product = product * m.value(run)
        moment = m.value(word)
        if not is_zero(moment - product):
            report.product_violations.append((word, moment, simplify(product)))
    return report
