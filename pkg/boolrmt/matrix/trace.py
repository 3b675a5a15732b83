import itertools
from ..utils.config import check_budget
from ..utils.scalar import as_scalar, is_zero, simplify
from ..model import EntryModel, SelfAdjointEntries, TaggedWord
from ..model import boolean_product_moment, selfadjoint_letter
from ..partitions import ONE, SignPattern, LabelTuple, IndexTuple
from ..partitions import enumerate_partitions, omega_of_labels, meet, variable_pairs
from .counting import iota_histogram, count_tuples_blockwise


class MixedWordSpec(object):
    r'''
    A trace word :math:`X(k_1)^{\xi_1} X(k_2)^{\xi_2} \cdots X(k_n)^{\xi_n}`, optionally with
    entry permutations :math:`X(k_s)^{\lceil\alpha_s\rceil}`.

    Args:
        xi (SignPattern): the signs.
        labels (iterable, optional): a matrix label per position. If ``None``, a single
            matrix. Default: ``None``.
        models (EntryModel or dict): the entry law, or a label to law map.
        decorations (list, optional): a :obj:`PermutationSpec` or ``None`` per position. A
            bare string label is accepted by the limits, which only read labels. Default: ``None``.

    Example:
        >>> spec = MixedWordSpec(br.parse_xi('xx*'), models=br.BDiagonalEntries([2]))
        >>> br.trace_moment_exact(spec, N=5)
        Fraction(2, 1)
    '''
    def __init__(self, xi, labels=None, models=None, decorations=None):
        self.xi = SignPattern(xi)
        n = len(self.xi)
        self.labels = LabelTuple((0,) * n if labels is None else labels)
        if len(self.labels) != n:
            raise ValueError('{} labels for a word of length {}'.format(len(self.labels), n))
        if isinstance(models, EntryModel):
            models = {k: models for k in set(self.labels)}
        if not isinstance(models, dict):
            raise TypeError('models has to be an EntryModel or a dict of them')
        missing = set(self.labels) - set(models)
        if missing:
            raise ValueError('no entry model for labels {}'.format(sorted(map(str, missing))))
        self.models = models
        self.decorations = (None,) * n if decorations is None else tuple(decorations)
        if len(self.decorations) != n:
            raise ValueError('{} decorations for a word of length {}'
                             .format(len(self.decorations), n))

    def __len__(self):
        return len(self.xi)

    @property
    def decorated(self):
        return any(d is not None for d in self.decorations)

    def decoration_labels(self):
        return tuple('e' if d is None else d if isinstance(d, str) else d.label()
                     for d in self.decorations)

    def __repr__(self):
        return 'MixedWordSpec(xi={}, labels={})'.format(self.xi, tuple(self.labels))


def _block_values(spec, N, sigma):
    value = as_scalar(1)
    for start, length in sigma.windows:
        model = spec.models[spec.labels[start]]
        value = value * model.word_value(spec.xi[start:start + length], N)
        if is_zero(value):
            break
    return value


def _trace_brute(spec, N, budget):
    n = len(spec)
    check_budget(N ** n, budget)
    functionals = {k: m.at(N, max(n, 1)) for k, m in spec.models.items()}
    models = lambda tag: functionals[tag[0]]
    alphas = list(spec.decorations)
    letters = ['x' if s == ONE else 'x*' for s in spec.xi]
    total = as_scalar(0)
    for idx in itertools.product(range(1, N + 1), repeat=n):
        pairs = variable_pairs(spec.xi, IndexTuple(idx, N), alphas)
        tags = [(k, pair) for k, pair in zip(spec.labels, pairs)]
        total = total + boolean_product_moment(models, TaggedWord.from_letters(tags, letters))
    return simplify(total / N)


def _trace_partition(spec, N, budget):
    n, omega = len(spec), omega_of_labels(spec.labels)
    if spec.decorated:
        counts = iota_histogram(spec.xi, N, spec.decorations, budget)
    else:
        counts = {sigma: count_tuples_blockwise(sigma, spec.xi, N).count
                  for sigma in enumerate_partitions(n)}
    total = as_scalar(0)
    for sigma, count in counts.items():
        if count:
            total = total + count * _block_values(spec, N, meet(sigma, omega))
    return simplify(total / N)


def trace_moment_exact(spec, N, method='partition', budget=None):
    r'''
    The exact moment :math:`\varphi\circ\mathrm{tr}` of a trace word at size :math:`N`.

    .. math::
        \varphi\circ\mathrm{tr}\left(X^{\xi_1}_N \cdots X^{\xi_n}_N\right) =
        \frac{1}{N}\sum_{\vec\imath\in[N]^n}
        \varphi\left(x^{(\xi_1)}_{i_1 i_2} x^{(\xi_2)}_{i_2 i_3} \cdots x^{(\xi_n)}_{i_n i_1}\right).

    With ``method="brute"`` every index tuple is evaluated by run factorisation over the entry
    variables. With ``method="partition"`` the tuples are grouped by their partition
    :math:`\sigma = \iota(\vec\xi, \vec\imath)`, and each group contributes its size times
    :math:`\prod_{B\in\sigma\wedge\omega(\vec k)} v_{\vec\xi,N}(B)`. Sizes come from
    :meth:`count_tuples_blockwise`, or from :meth:`iota_histogram` for decorated words.

    Args:
        spec (MixedWordSpec): the word.
        N (int): the matrix size.
        method (str, optional): ``"partition"`` or ``"brute"``. Default: ``"partition"``.
        budget (int, optional): the enumeration budget. Default: ``None``.

    Return:
        the exact value, a :obj:`Fraction` or a sympy expression.
    '''
    if not isinstance(spec, MixedWordSpec):
        raise TypeError('{} is not a MixedWordSpec'.format(type(spec).__name__))
    if any(isinstance(d, str) for d in spec.decorations):
        raise TypeError('exact moments need PermutationSpec decorations, not labels')
    assert N >= 1, ValueError('N has to be positive: {}'.format(N))
    if method == 'brute':
        return _trace_brute(spec, N, budget)
    if method == 'partition':
        return _trace_partition(spec, N, budget)
    raise ValueError('unknown method {!r}; expected brute or partition'.format(method))


def _selfadjoint_brute(model, n, N, budget):
    check_budget(N ** n, budget)
    models = model.models(N, n)
    total = as_scalar(0)
    for idx in itertools.product(range(1, N + 1), repeat=n):
        word = [selfadjoint_letter(idx[s], idx[(s + 1) % n]) for s in range(n)]
        total = total + boolean_product_moment(models, TaggedWord(word))
    return simplify(total / N)


def _selfadjoint_closed_form(model, n, N):
    if n % 2:
        return as_scalar(0)
    r, alpha, beta = n // 2, model.alpha, model.beta
    total = as_scalar(0)
    for i in range(1, N + 1):
        above, below = N - i, i - 1
        fa, fb = alpha * above, beta * below
        for _ in range(r - 1):
            fa, fb = alpha * ((above - 1) * fa + above * fb), beta * (below * fa + (below - 1) * fb)
        total = total + fa + fb
    return simplify(total / N ** (r + 1))


def trace_moment_selfadjoint_exact(model, n, N, method='closed_form', budget=None):
    r'''
    The exact moment :math:`\varphi\circ\mathrm{tr}(B_N^n)` of a self-adjoint matrix with
    Boolean independent entries.

    Only the runs :math:`b_{ij} b_{ji}` have nonzero moments, so the surviving tuples have
    :math:`i_1 = i_3 = \cdots = i` and :math:`i_2, i_4, \dots` all different from :math:`i`
    with no two neighbours equal. For a fixed row :math:`i` the columns above and below the
    diagonal weigh :math:`\alpha/N` and :math:`\beta/N`, and ``method="closed_form"`` sums
    the neighbour-distinct sequences with a two-state recursion. ``method="brute"`` sums
    every index tuple.

    Args:
        model (SelfAdjointEntries): the entry law.
        n (int): the moment order.
        N (int): the matrix size.
        method (str, optional): ``"closed_form"`` or ``"brute"``. Default: ``"closed_form"``.
        budget (int, optional): the enumeration budget for ``"brute"``. Default: ``None``.

    Example:
        >>> model = br.SelfAdjointEntries(1, 1)
        >>> br.trace_moment_selfadjoint_exact(model, 2, 4)
        Fraction(3, 4)
    '''
    if not isinstance(model, SelfAdjointEntries):
        raise TypeError('{} is not a SelfAdjointEntries model'.format(type(model).__name__))
    assert n >= 1 and N >= 1, ValueError('n and N have to be positive: {}, {}'.format(n, N))
    if method == 'brute':
        return _selfadjoint_brute(model, n, N, budget)
    if method == 'closed_form':
        return _selfadjoint_closed_form(model, n, N)
    raise ValueError('unknown method {!r}; expected brute or closed_form'.format(method))
