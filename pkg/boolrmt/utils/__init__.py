from .config import DEFAULT_BUDGET, DEFAULT_CHUNK, DENSE_LIMIT, BUDGET_ENV
from .config import BudgetExceededError, enumeration_budget, check_budget
from .scalar import as_scalar, is_symbolic, is_zero, equal, simplify, to_float, format_scalar
from .export import records_to_frame, dump_records
