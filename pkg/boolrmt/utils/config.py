import os


DEFAULT_BUDGET = 10**8
DEFAULT_CHUNK = 2**18
DENSE_LIMIT = 2**12
BUDGET_ENV = 'BOOLEAN_RMT_BUDGET'


class BudgetExceededError(RuntimeError):
    r'''
    Raised when a brute-force enumeration would evaluate more tuples than allowed.
    '''
    def __init__(self, required, budget):
        super().__init__('enumeration of {} tuples exceeds the budget of {} '
                         '(set {} to raise it)'.format(required, budget, BUDGET_ENV))
        self.required, self.budget = required, budget


def enumeration_budget(budget=None):
    r'''
    Resolve the enumeration budget.

    Args:
        budget (int, optional): an explicit budget. If ``None``, the environment variable
            ``BOOLEAN_RMT_BUDGET`` is read, and :obj:`DEFAULT_BUDGET` is used when it is unset.
            Default: ``None``.

    Return:
        int: the number of tuples a brute-force enumeration may evaluate.

    Example:
        >>> enumeration_budget()
        100000000
        >>> enumeration_budget(500)
        500
    '''
    if budget is None:
        text = os.environ.get(BUDGET_ENV)
        if text is None or text.strip() == '':
            return DEFAULT_BUDGET
        try:
            budget = int(float(text)) if 'e' in text.lower() else int(text)
        except ValueError:
            raise ValueError('{} has to be an integer. Got {!r}'.format(BUDGET_ENV, text))
    if budget <= 0:
        raise ValueError('budget has to be positive: {}'.format(budget))
    return budget


def check_budget(required, budget=None):
    r'''
    Raise :obj:`BudgetExceededError` if ``required`` tuples exceed the resolved budget.
    '''
    limit = enumeration_budget(budget)
    if required > limit:
        raise BudgetExceededError(required, limit)
    return limit
